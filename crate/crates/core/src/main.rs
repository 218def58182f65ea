use clap::Parser;
use sl3cat::cli::{main_with, Cli};

fn main() {
    std::process::exit(main_with(Cli::parse()));
}
