fn main() {
    std::process::exit(defc::cli::run(std::env::args_os()));
}
