fn main() {
    std::process::exit(supercontact::cli::run(std::env::args()));
}
