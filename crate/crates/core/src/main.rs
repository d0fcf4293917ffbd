fn main() {
    std::process::exit(lelong::cli::run(std::env::args_os()));
}
