fn main() {
    std::process::exit(cgc::cli::main());
}
