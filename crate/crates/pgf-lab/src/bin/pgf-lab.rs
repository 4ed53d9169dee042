fn main() {
    pgf_lab::cli::main();
}
