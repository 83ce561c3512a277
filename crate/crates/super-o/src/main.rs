fn main() {
    std::process::exit(super_o::cli::main_entry());
}
