use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = std::panic::catch_unwind(|| abalg::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock()))
        .unwrap_or(abalg::cli::EXIT_INTERNAL);
    let _ = stdout.lock().flush();
    std::process::exit(code);
}
