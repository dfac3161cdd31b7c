use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use closure_lab::report::{Entry, Report};
use closure_lab::run::{run_command, run_session, CliError, Environment, Options};
use closure_lab::session::{parse_session, Command, FieldSpec, ParamValue, SpecRef, REPRODUCTIONS};
use closure_lab_core::poly::Field;

#[derive(Parser)]
#[command(
    name = "closure-lab",
    version,
    about = "Module closures on quotient rings: axioms, colon-capturing and rationality"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Append wall-clock time to text output.
    #[arg(long, global = true)]
    timing: bool,
    /// Default field: F<p> or QQ.
    #[arg(long, env = "CLOSURE_LAB_FIELD", global = true)]
    field: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every command in a session file.
    Run {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Reproduce a built-in example.
    Reproduce {
        name: String,
        #[arg(long)]
        d: Option<u32>,
        /// A positive integer or `inf`.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        tmax: Option<u32>,
    },
    /// Check the closure axioms for every module declared in a session file.
    Axioms {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

fn field(cli: &Cli) -> Result<Field, CliError> {
    let default = Options::default().field;
    match &cli.field {
        None => Ok(default),
        Some(w) => FieldSpec::parse_word(w).map(|f| f.resolve(&default)).map_err(CliError::Usage),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse(path: &PathBuf, field: &Field) -> Result<closure_lab::session::Session, CliError> {
    let src = read(path)?;
    parse_session(&src, field).map_err(|error| CliError::Parse { source_name: path.display().to_string(), error })
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let field = field(cli)?;
    match &cli.cmd {
        Cmd::Run { file, seed, samples } => {
            let opts = Options { field: field.clone(), seed: *seed, samples: *samples };
            let session = parse(file, &field)?;
            run_session(&session, &file.display().to_string(), &opts)
        }
        Cmd::Reproduce { name, d, n, i, tmax } => {
            if !REPRODUCTIONS.contains(&name.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown reproduction '{name}', expected one of {}",
                    REPRODUCTIONS.join(", ")
                )));
            }
            let mut params = Vec::new();
            if let Some(d) = d {
                params.push(("d".to_string(), ParamValue::Int(*d)));
            }
            if let Some(n) = n {
                let v = match n.as_str() {
                    "inf" => ParamValue::Infinity,
                    s => ParamValue::Int(
                        s.parse()
                            .map_err(|_| CliError::Usage(format!("--n expects an integer or 'inf', got '{s}'")))?,
                    ),
                };
                params.push(("n".to_string(), v));
            }
            if let Some(i) = i {
                params.push(("i".to_string(), ParamValue::Int(*i)));
            }
            if let Some(t) = tmax {
                params.push(("tmax".to_string(), ParamValue::Int(*t)));
            }
            let opts = Options { field, ..Options::default() };
            let cmd = Command::Reproduce { name: name.clone(), params };
            let entry = run_command(&Environment::default(), &cmd, &opts)?;
            Ok(Report::new(format!("reproduce {name}"), vec![entry]))
        }
        Cmd::Axioms { file, seed, samples } => {
            let session = parse(file, &field)?;
            let env = Environment::build(&session)
                .map_err(|error| CliError::Algebra { command: "declarations".into(), error })?;
            let opts = Options { field, seed: *seed, samples: *samples };
            let mut entries: Vec<Entry> = Vec::new();
            for (module, ring) in env.modules() {
                let cmd = Command::Axioms {
                    ring: ring.clone(),
                    spec: SpecRef::Module(module.clone()),
                    seed: Some(*seed),
                    samples: Some(*samples),
                };
                entries.push(run_command(&env, &cmd, &opts)?);
            }
            if entries.is_empty() {
                return Err(CliError::Usage(format!("{}: no modules declared", file.display())));
            }
            Ok(Report::new(file.display().to_string(), entries))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => {
            if cli.timing {
                report.seconds = Some(start.elapsed().as_secs_f64());
            }
            report.to_text()
        }
    };
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
