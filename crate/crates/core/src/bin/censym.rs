fn main() {
    std::process::exit(centrosym::cli::run(std::env::args_os()));
}
