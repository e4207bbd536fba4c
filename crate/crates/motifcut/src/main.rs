use clap::Parser;

fn main() -> std::process::ExitCode {
    motifcut::cli::main_with(motifcut::cli::Cli::parse())
}
