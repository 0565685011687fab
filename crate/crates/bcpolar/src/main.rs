fn main() {
    let code = bcpolar::cli::run(std::env::args_os());
    std::process::exit(code);
}
