//! Placeholder.
pub fn main() {
    eprintln!("pgf-lab: not yet wired");
    std::process::exit(1);
}
