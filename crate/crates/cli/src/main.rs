fn main() {
    let out = colorlie_cli::run(std::env::args_os());
    print!("{}", out.stdout);
    std::process::exit(out.exit_code);
}
