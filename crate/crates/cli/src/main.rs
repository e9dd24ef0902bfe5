//! `mediant`: Farey rows, Stern-Brocot paths, Bezout certificates and
//! bounded-denominator approximation from the command line.
//!
//! Exit status: 0 on success, 1 for domain errors (the error name is printed
//! on stderr), 2 for usage errors.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mediant::stern_brocot::Step;
use mediant::{
    best_approximation, bezout_via_euclid, bezout_via_tree, creation_neighbors, decode, locate,
    render_tree, verify_certificate, Decimal, Error, FareyStream, Fraction, Path, RenderFormat,
};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "mediant", version, about = "Farey rows and the Stern-Brocot tree in exact arithmetic")]
struct Cli {
    /// Output format; `dot` is only accepted by `sb tree`.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tree,
    Euclid,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Farey row of order n.
    Farey {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// One fraction per line instead of a single space-separated line.
        #[arg(long)]
        lines: bool,
    },
    /// Stern-Brocot tree queries.
    Sb {
        #[command(subcommand)]
        query: SbQuery,
    },
    /// Print x, y with m*x + n*y = 1.
    Bezout {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Tree)]
        method: Method,
    },
    /// Closest fraction to a decimal in [0, 1] with denominator at most max_den.
    Approx {
        value: Decimal,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        max_den: u64,
    },
}

#[derive(Debug, Subcommand)]
enum SbQuery {
    /// Path (over L and R) of a fraction strictly between 0 and 1.
    Locate { fraction: Fraction },
    /// Fraction at a path; the empty string is the root 1/2.
    Decode { path: Path },
    /// The two bounds whose mediant creates the fraction.
    Neighbors { fraction: Fraction },
    /// Draw the tree down to the given depth.
    Tree { depth: u32 },
}

enum Failure {
    Domain(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let format = cli.format;
    let is_tree = matches!(cli.command, Command::Sb { query: SbQuery::Tree { .. } });
    if format == OutputFormat::Dot && !is_tree {
        return Err(Failure::Usage("--format dot is only valid for `sb tree`".into()));
    }
    match &cli.command {
        Command::Farey { n, lines } => farey(out, *n, *lines, format),
        Command::Sb { query } => sb(out, query, format),
        Command::Bezout { m, n, method } => bezout(out, *m, *n, *method, format),
        Command::Approx { value, max_den } => approx(out, value, *max_den, format),
    }
}

fn farey(out: &mut impl Write, n: u64, lines: bool, format: OutputFormat) -> Result<(), Failure> {
    let terms = FareyStream::new(n)?;
    match format {
        OutputFormat::Json => {
            out.write_all(b"[")?;
            for (i, f) in terms.enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "\"{f}\"")?;
            }
            out.write_all(b"]\n")?;
        }
        _ => {
            let sep: &[u8] = if lines { b"\n" } else { b" " };
            for (i, f) in terms.enumerate() {
                if i > 0 {
                    out.write_all(sep)?;
                }
                write!(out, "{f}")?;
            }
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn sb(out: &mut impl Write, query: &SbQuery, format: OutputFormat) -> Result<(), Failure> {
    let json = format == OutputFormat::Json;
    match query {
        SbQuery::Locate { fraction } => {
            let path = locate(*fraction)?;
            if json {
                let doc = json!({ "fraction": fraction.to_string(), "path": path.to_string() });
                writeln!(out, "{doc}")?;
            } else {
                writeln!(out, "{path}")?;
            }
        }
        SbQuery::Decode { path } => {
            let f = decode(path)?;
            if json {
                writeln!(out, "{}", json!({ "path": path.to_string(), "fraction": f.to_string() }))?;
            } else {
                writeln!(out, "{f}")?;
            }
        }
        SbQuery::Neighbors { fraction } => {
            let pair = creation_neighbors(*fraction)?;
            if json {
                let doc = json!({
                    "fraction": fraction.to_string(),
                    "left": pair.left.to_string(),
                    "right": pair.right.to_string(),
                });
                writeln!(out, "{doc}")?;
            } else {
                writeln!(out, "{} {}", pair.left, pair.right)?;
            }
        }
        SbQuery::Tree { depth } => match format {
            OutputFormat::Plain => out.write_all(render_tree(*depth, RenderFormat::Text)?.as_bytes())?,
            OutputFormat::Dot => out.write_all(render_tree(*depth, RenderFormat::Dot)?.as_bytes())?,
            OutputFormat::Json => {
                // same bound as the other renderings
                render_tree(*depth, RenderFormat::Text)?;
                let mut vertices = Vec::new();
                for len in 0..=*depth {
                    for bits in 0..(1u64 << len) {
                        let path: Path = (0..len)
                            .rev()
                            .map(|i| if bits >> i & 1 == 0 { Step::L } else { Step::R })
                            .collect();
                        let value = decode(&path)?;
                        vertices.push(json!({ "path": path.to_string(), "value": value.to_string() }));
                    }
                }
                writeln!(out, "{}", json!({ "depth": depth, "vertices": vertices }))?;
            }
        },
    }
    Ok(())
}

fn bezout(out: &mut impl Write, m: u64, n: u64, method: Method, format: OutputFormat) -> Result<(), Failure> {
    let tree = bezout_via_tree(m, n)?;
    let euclid = bezout_via_euclid(m, n)?;
    for c in [&tree, &euclid] {
        if !verify_certificate(c)? {
            return Err(Failure::Usage(format!("internal error: certificate {c:?} does not verify")));
        }
    }
    let cert = match method {
        Method::Tree => tree,
        Method::Euclid => euclid,
    };
    if format == OutputFormat::Json {
        writeln!(out, "{}", cert.to_json())?;
    } else {
        writeln!(out, "x={} y={}", cert.x, cert.y)?;
    }
    Ok(())
}

fn approx(out: &mut impl Write, value: &Decimal, max_den: u64, format: OutputFormat) -> Result<(), Failure> {
    let best = best_approximation(value.value(), max_den)?;
    if format == OutputFormat::Json {
        let doc = json!({ "value": value.as_str(), "max_den": max_den, "best": best.to_string() });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "{best}")?;
    }
    Ok(())
}
