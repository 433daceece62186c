fn main() {
    let mut stdout = std::io::stdout().lock();
    let code = darl::cli::run_cli(std::env::args_os(), &mut stdout);
    std::process::exit(code);
}
