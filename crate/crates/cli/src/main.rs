fn main() {
    std::process::exit(toric_bdiv_cli::run(std::env::args_os()));
}
