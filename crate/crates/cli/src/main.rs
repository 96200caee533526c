use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = kac_cli::run(std::env::args_os());
    let text = text.as_bytes();
    let _ = if code != 2 && !text.starts_with(b"error:") {
        std::io::stdout().write_all(text)
    } else {
        std::io::stderr().write_all(text)
    };
    ExitCode::from(code as u8)
}
