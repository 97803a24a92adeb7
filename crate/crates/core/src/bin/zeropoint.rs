fn main() {
    std::process::exit(zeropoint::cli::run_from_args(std::env::args_os()));
}
