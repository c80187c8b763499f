fn main() {
    std::process::exit(taftknot::cli::run(std::env::args_os()));
}
