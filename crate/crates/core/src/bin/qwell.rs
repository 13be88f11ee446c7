use clap::Parser;

fn main() {
    let cli = qwell::cli::Cli::parse();
    std::process::exit(qwell::cli::run(cli));
}
