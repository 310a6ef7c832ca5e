fn main() {
    std::process::exit(mgu_cli::run(std::env::args_os()));
}
