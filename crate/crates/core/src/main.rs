fn main() {
    std::process::exit(theta_forge::cli::run(std::env::args_os()));
}
