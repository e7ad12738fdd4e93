fn main() {
    std::process::exit(schurcon::cli::run(std::env::args_os()));
}
