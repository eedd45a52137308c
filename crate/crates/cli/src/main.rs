fn main() {
    std::process::exit(diagram_cli::run(std::env::args_os()));
}
