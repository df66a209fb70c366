fn main() {
    std::process::exit(unicwd::cli::run(std::env::args_os()));
}
