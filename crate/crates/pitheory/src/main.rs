use std::io;

fn main() {
    let env = |k: &str| std::env::var(k).ok();
    let code = pitheory::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock(), &env);
    std::process::exit(code);
}
