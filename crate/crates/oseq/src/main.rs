use std::io::Write;

fn main() {
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = oseq::cli::run(std::env::args(), &mut stdout, &mut stderr);
    let _ = stdout.flush();
    std::process::exit(code);
}
