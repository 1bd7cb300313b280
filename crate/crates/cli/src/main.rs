use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = ncborel_cli::run(&args);
    std::io::stdout().write_all(outcome.stdout.as_bytes()).expect("stdout");
    std::io::stderr().write_all(outcome.stderr.as_bytes()).expect("stderr");
    std::process::exit(outcome.code);
}
