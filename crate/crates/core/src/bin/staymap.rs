use clap::Parser;
use staymap_core::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = run(cli, &mut out) {
        eprintln!("{}", e);
        std::process::exit(e.exit_code());
    }
}
