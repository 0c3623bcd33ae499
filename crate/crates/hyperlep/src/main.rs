use clap::Parser;

fn main() {
    let cli = hyperlep::cli::Cli::parse();
    std::process::exit(hyperlep::cli::run(cli));
}
