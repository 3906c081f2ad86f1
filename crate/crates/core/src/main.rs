fn main() {
    std::process::exit(topo_compat::cli::run(std::env::args_os()));
}
