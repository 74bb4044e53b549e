use clap::Parser;

fn main() {
    let cli = braidrep::cli::Cli::parse();
    std::process::exit(braidrep::cli::run(cli));
}
