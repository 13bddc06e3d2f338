fn main() {
    std::process::exit(loopalg::cli::main_entry());
}
