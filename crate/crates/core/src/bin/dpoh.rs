use dpo_hypergraphs::cli::dispatch;

fn main() {
    let outcome = dispatch(std::env::args_os());
    print!("{}", outcome.render());
    std::process::exit(outcome.exit_code());
}
