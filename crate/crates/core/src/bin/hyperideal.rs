fn main() -> std::process::ExitCode {
    hyperideal::cli::main()
}
