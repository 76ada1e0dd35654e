fn main() {
    let (code, out) = matfin_cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
