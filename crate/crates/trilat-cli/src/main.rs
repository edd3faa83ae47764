fn main() {
    std::process::exit(trilat_cli::run());
}
