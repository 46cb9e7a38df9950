fn main() {
    std::process::exit(hopf_baxter::cli::run(std::env::args_os()));
}
