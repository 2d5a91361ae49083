use std::io::{self, BufRead};
use std::path::PathBuf;
use std::process::ExitCode;
use std::fs;

use clap::{Args, Parser, Subcommand};

use fsrx::apply::{ApplyConfig, Side};
use fsrx::commands;
use fsrx::dot::to_dot;
use fsrx::script::Session;
use fsrx::serialize::{read_text, write_text};
use fsrx::{Error, Fst};

#[derive(Parser)]
#[command(name = "fsrx", version, about = "Compile regular expressions with replace operators to transducers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile an expression and print a summary of the network
    Compile { expr: String },
    /// Apply an expression (or a saved network) to input strings
    Apply(ApplyArgs),
    /// Exit 0 if two expressions compile to equivalent networks, 1 otherwise
    Equiv { first: String, second: String },
    /// Write a Graphviz rendering of an expression
    Dot {
        expr: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a script file
    Script { path: PathBuf },
    /// Compile an expression and save the network in text form
    Save { expr: String, path: PathBuf },
    /// Load a saved network and print its summary
    Load {
        path: PathBuf,
        /// Print the network text instead of the summary
        #[arg(long)]
        print: bool,
    },
}

#[derive(Args)]
struct ApplyArgs {
    /// Apply down: inputs are upper-side strings (the default)
    #[arg(short = 'd', long = "down", conflicts_with = "up")]
    down: bool,
    /// Apply up: inputs are lower-side strings
    #[arg(short = 'u', long = "up")]
    up: bool,
    #[arg(long, default_value_t = 1000)]
    max_outputs: usize,
    #[arg(long = "max-eps", default_value_t = 3)]
    max_eps: usize,
    /// One symbol per character (the default)
    #[arg(long, conflicts_with = "tokens")]
    chars: bool,
    /// Whitespace-separated symbols
    #[arg(long)]
    tokens: bool,
    /// Use a saved network instead of an expression
    #[arg(long)]
    net: Option<PathBuf>,
    /// The expression (unless --net is given) followed by inputs; with no
    /// inputs, each line of stdin is one input
    args: Vec<String>,
}

fn apply(args: ApplyArgs) -> Result<String, Error> {
    let mut rest = args.args.into_iter();
    let net: Fst = match &args.net {
        Some(path) => read_text(&fs::read_to_string(path)?)?,
        None => {
            let expr = rest.next().ok_or_else(|| Error::Unsupported("apply needs an expression or --net".into()))?;
            commands::compile(&expr)?
        }
    };
    let mut inputs: Vec<String> = rest.collect();
    if inputs.is_empty() {
        for line in io::stdin().lock().lines() {
            inputs.push(line?);
        }
    }
    let cfg = ApplyConfig {
        max_outputs: args.max_outputs.max(1),
        max_epsilon_insertions: args.max_eps,
        side: if args.up { Side::Up } else { Side::Down },
    };
    Ok(commands::apply_lines(&net, &inputs, &cfg, !args.tokens))
}

fn run(cli: Cli) -> Result<(String, u8), Error> {
    let out = match cli.command {
        Command::Compile { expr } => commands::summary(&commands::compile(&expr)?),
        Command::Apply(args) => apply(args)?,
        Command::Equiv { first, second } => {
            let (same, report) = commands::equiv(&first, &second)?;
            return Ok((report, if same { 0 } else { 1 }));
        }
        Command::Dot { expr, output } => {
            let dot = to_dot(&commands::compile(&expr)?);
            match output {
                Some(path) => {
                    fs::write(path, dot)?;
                    String::new()
                }
                None => dot,
            }
        }
        Command::Script { path } => {
            let text = fs::read_to_string(&path)?;
            let dir = path.parent().map(PathBuf::from).unwrap_or_default();
            Session::with_base_dir(dir).run(&text)?
        }
        Command::Save { expr, path } => {
            fs::write(path, write_text(&commands::compile(&expr)?))?;
            String::new()
        }
        Command::Load { path, print } => {
            let net = read_text(&fs::read_to_string(path)?)?;
            if print { write_text(&net) } else { commands::summary(&net) }
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or_default().trim_start_matches("error: ");
            eprintln!("error:usage: {first}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error:{}: {e}", e.category());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
