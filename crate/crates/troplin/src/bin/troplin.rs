use clap::Parser;

fn main() {
    let job = troplin::cli::JobSpec::parse();
    std::process::exit(troplin::cli::run_command(&job));
}
