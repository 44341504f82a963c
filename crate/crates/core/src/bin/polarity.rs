fn main() {
    std::process::exit(polarity_graphs::cli::run(std::env::args_os()));
}
