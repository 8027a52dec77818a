use clap::Parser;

fn main() {
    let cli = covercert_cli::Cli::parse();
    std::process::exit(covercert_cli::run(&cli));
}
