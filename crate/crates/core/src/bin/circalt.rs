fn main() {
    let out = circalt::cli::run(std::env::args_os());
    println!("{}", out.output);
    std::process::exit(out.code);
}
