fn main() {
    std::process::exit(lensdual::cli::run(std::env::args_os()));
}
