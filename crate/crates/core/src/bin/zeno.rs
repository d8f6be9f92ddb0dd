use clap::Parser;
use zeno::cli::Cli;

fn main() {
    let cli = Cli::parse();
    if let Err(err) = cli.execute() {
        eprintln!("zeno: {err}");
        std::process::exit(err.exit_code());
    }
}
