fn main() {
    std::process::exit(fillgraph::cli::main());
}
