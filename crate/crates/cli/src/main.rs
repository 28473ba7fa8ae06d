fn main() {
    std::process::exit(synthref::run_cli(std::env::args_os()));
}
