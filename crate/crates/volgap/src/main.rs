fn main() -> std::process::ExitCode {
    volgap::cli::main()
}
