fn main() {
    std::process::exit(jointenum::cli::run(std::env::args()));
}
