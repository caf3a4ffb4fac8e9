fn main() {
    std::process::exit(ltfourier::cli::run(std::env::args_os()));
}
