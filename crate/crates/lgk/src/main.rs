fn main() {
    std::process::exit(lgk::cli::cli_main(std::env::args()));
}
