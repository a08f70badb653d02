fn main() {
    std::process::exit(cyclo_lgraphs::cli::main());
}
