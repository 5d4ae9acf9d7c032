fn main() {
    std::process::exit(chern::cli::run());
}
