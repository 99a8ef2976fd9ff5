fn main() {
    std::process::exit(parabolic_moduli::cli::main());
}
