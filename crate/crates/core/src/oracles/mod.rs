//! Independent verification paths. Nothing here feeds back into the exact
//! kernel: these functions exist to be compared against it.

mod level_set;
mod montecarlo;
mod numeric;
mod polarization;
mod quasi_triangle;
mod staircase;

pub use level_set::level_set_extreme_points;
pub use montecarlo::{covolume_monte_carlo, McEstimate};
pub use numeric::{directional_lelong_numeric, lojasiewicz_numeric, relative_type_numeric};
pub use polarization::mixed_multiplicity_polarization;
pub use quasi_triangle::{
    quasi_triangle_check, quasi_triangle_check_with_constant, quasi_triangle_violation, QuasiTriangleReport,
};
pub use staircase::covolume_staircase_2d;
