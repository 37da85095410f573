fn main() -> std::process::ExitCode {
    dickson_pte::cli::main()
}
