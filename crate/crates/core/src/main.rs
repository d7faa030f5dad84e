fn main() -> std::process::ExitCode {
    clothoid_fit::cli::run(std::env::args_os())
}
