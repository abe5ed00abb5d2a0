fn main() {
    fhalg::cli::main()
}
