fn main() {
    std::process::exit(fnls::cli::run());
}
