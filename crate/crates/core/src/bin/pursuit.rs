fn main() {
    std::process::exit(grid_pursuit::cli::main());
}
