fn main() {
    std::process::exit(coherence_lab::cli::main());
}
