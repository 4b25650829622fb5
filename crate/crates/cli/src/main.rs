fn main() {
    std::process::exit(master_kernels_cli::run(std::env::args_os()));
}
