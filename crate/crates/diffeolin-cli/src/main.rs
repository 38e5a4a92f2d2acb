//! Command-line front end: exact computations on finitely generated
//! diffeological vector spaces.

mod cli;
mod commands;
mod doc;
mod probe;
mod render;
mod worked_example;

use cli::{parse_args, registry, usage_text};

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&argv));
}

fn run(argv: &[String]) -> i32 {
    if argv.iter().any(|a| a == "--help" || a == "-h")
        || argv.first().map(String::as_str) == Some("help")
    {
        print!("{}", usage_text());
        return 0;
    }
    let invocation = match parse_args(argv) {
        Ok(invocation) => invocation,
        Err(e) => {
            eprintln!("error: {e}");
            eprint!("{}", usage_text());
            return 2;
        }
    };
    let registry = registry();
    let Some(command) = registry.iter().find(|c| c.name() == invocation.command) else {
        eprintln!("error: unknown command {:?}", invocation.command);
        eprint!("{}", usage_text());
        return 2;
    };
    match command.run(&invocation.opts, &invocation.args) {
        Ok(verdict) => verdict.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
