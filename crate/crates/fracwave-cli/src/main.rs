use clap::Parser;
use fracwave_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = fracwave_cli::commands::run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
