fn main() {
    std::process::exit(diskops::cli::run(std::env::args_os()));
}
