use std::io::Write;

fn main() {
    let out = framecheck::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", out.stdout.trim_end());
    let _ = stdout.flush();
    std::process::exit(out.exit_code);
}
