use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = hassett_cubics::cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(result.stdout().as_bytes());
    if let Some(d) = &result.diagnostic {
        eprint!("{d}");
        if !d.ends_with('\n') {
            eprintln!();
        }
    }
    ExitCode::from(result.exit_code as u8)
}
