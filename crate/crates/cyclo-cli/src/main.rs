use std::io::{self, Write};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    let code = cyclo_cli::run(&argv, &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
