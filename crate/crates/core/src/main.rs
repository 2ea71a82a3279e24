fn main() {
    std::process::exit(rossby_resonance::cli::run(std::env::args_os()));
}
