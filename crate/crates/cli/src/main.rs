use std::process::ExitCode;

fn main() -> ExitCode {
    let result = quatlat_cli::dispatch(std::env::args_os());
    if result.exit_code == quatlat_cli::EXIT_OK {
        println!("{}", result.payload);
    } else {
        eprintln!("{}", result.payload);
    }
    ExitCode::from(result.exit_code as u8)
}
