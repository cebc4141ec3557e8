fn main() {
    std::process::exit(thresholdkit::cli::run(std::env::args_os()));
}
