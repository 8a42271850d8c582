fn main() {
    std::process::exit(nsq::cli::main_with_args(std::env::args_os()));
}
