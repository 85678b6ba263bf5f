use std::process;

fn main() {
    process::exit(fca::cli::run());
}
