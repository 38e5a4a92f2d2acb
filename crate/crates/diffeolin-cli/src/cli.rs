//! Command registry and argument handling.
//!
//! Every subcommand implements [`Command`] and is registered by name in
//! [`registry`]; dispatch is a name lookup over the registry. Global flags
//! may appear anywhere on the command line.

use std::fmt;

use diffeolin::exactlin::DEFAULT_TOL;

/// Exit codes: 0 success / verdict true, 1 negative verdict, 2 input or
/// usage error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Success,
    Negative,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Success
        } else {
            Verdict::Negative
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Success => 0,
            Verdict::Negative => 1,
        }
    }
}

/// An input or usage problem; always maps to exit code 2.
#[derive(Debug, Clone)]
pub struct CliError {
    pub message: String,
}

impl CliError {
    pub fn new(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<diffeolin::Error> for CliError {
    fn from(e: diffeolin::Error) -> Self {
        CliError::new(e.to_string())
    }
}

/// Flags shared by all commands.
#[derive(Debug, Clone)]
pub struct GlobalOpts {
    /// Machine-readable output.
    pub json: bool,
    pub seed: u64,
    pub trials: usize,
    /// Jacobi convergence tolerance.
    pub tol: f64,
}

impl Default for GlobalOpts {
    fn default() -> Self {
        GlobalOpts {
            json: false,
            seed: 42,
            trials: 100,
            tol: DEFAULT_TOL,
        }
    }
}

pub trait Command {
    fn name(&self) -> &'static str;
    fn usage(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError>;
}

pub fn registry() -> Vec<Box<dyn Command>> {
    let mut commands = crate::commands::operation_commands();
    commands.push(Box::new(crate::worked_example::ReportCommand));
    commands.push(Box::new(crate::probe::ProbeCommand));
    commands
}

pub fn usage_text() -> String {
    let mut out = String::from("usage: diffeolin <command> [args] [flags]\n\ncommands:\n");
    for command in registry() {
        out.push_str(&format!("  {:<52} {}\n", command.usage(), command.about()));
    }
    out.push_str(
        "\nflags:\n  \
         --json           machine-readable output\n  \
         --seed <u64>     probe seed (default 42)\n  \
         --trials <n>     probe trial count (default 100)\n  \
         --tol <float>    Jacobi tolerance (default 1e-12)\n",
    );
    out
}

/// Parsed command line: command name, positional arguments, global flags.
pub struct Invocation {
    pub command: String,
    pub args: Vec<String>,
    pub opts: GlobalOpts,
}

pub fn parse_args(argv: &[String]) -> Result<Invocation, CliError> {
    let mut opts = GlobalOpts::default();
    let mut positional = Vec::new();
    let mut iter = argv.iter().peekable();
    while let Some(arg) = iter.next() {
        match arg.as_str() {
            "--json" => opts.json = true,
            "--seed" => opts.seed = take_value(&mut iter, "--seed")?,
            "--trials" => {
                opts.trials = take_value(&mut iter, "--trials")?;
                if opts.trials == 0 {
                    return Err(CliError::new("--trials must be at least 1"));
                }
            }
            "--tol" => {
                opts.tol = take_value(&mut iter, "--tol")?;
                if !(opts.tol > 0.0) {
                    return Err(CliError::new("--tol must be positive"));
                }
            }
            flag if flag.starts_with("--") => {
                return Err(CliError::new(format!("unknown flag {flag}")));
            }
            _ => positional.push(arg.clone()),
        }
    }
    let Some((command, args)) = positional.split_first() else {
        return Err(CliError::new("no command given"));
    };
    Ok(Invocation {
        command: command.clone(),
        args: args.to_vec(),
        opts,
    })
}

fn take_value<'a, T: std::str::FromStr>(
    iter: &mut std::iter::Peekable<impl Iterator<Item = &'a String>>,
    flag: &str,
) -> Result<T, CliError> {
    let Some(raw) = iter.next() else {
        return Err(CliError::new(format!("{flag} requires a value")));
    };
    raw.parse()
        .map_err(|_| CliError::new(format!("invalid value {raw:?} for {flag}")))
}

/// Requires exactly the number of positional arguments the usage names.
pub fn expect_args<const N: usize>(
    command: &dyn Command,
    args: &[String],
) -> Result<[String; N], CliError> {
    if args.len() != N {
        return Err(CliError::new(format!(
            "expected {} argument(s): usage: {}",
            N,
            command.usage()
        )));
    }
    let mut out: [String; N] = std::array::from_fn(|_| String::new());
    out.clone_from_slice(args);
    Ok(out)
}

/// Prints either the pretty JSON value or the plain text, ending in a
/// newline either way.
pub fn emit(opts: &GlobalOpts, json: serde_json::Value, text: String) {
    if opts.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json).expect("report values serialize")
        );
    } else {
        let trimmed = text.strip_suffix('\n').unwrap_or(&text);
        println!("{trimmed}");
    }
}
