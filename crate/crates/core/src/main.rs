use clap::Parser;

fn main() {
    let cli = benford_gaps::cli::Cli::parse();
    std::process::exit(benford_gaps::cli::run(cli));
}
