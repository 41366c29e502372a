fn main() {
    std::process::exit(qsd::cli::run(std::env::args_os()));
}
