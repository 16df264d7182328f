use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use artinder_core::nullindex::NullIndexConfig;
use artinder_core::poly::Presentation;
use artinder_core::report::analyze;
use artinder_core::scan::{scan, ScanConfig, ScanReport};
use artinder_core::ArtinderError;
use clap::{Parser, Subcommand, ValueEnum};

const DEGREE_CAP_VAR: &str = "ARTINDER_DEGREE_CAP";

#[derive(Parser)]
#[command(name = "artinder", version, about = "Derivations and null-index of finite-dimensional local algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one presentation file
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Include a basis of Der(A)
        #[arg(long)]
        basis: bool,
    },
    /// Analyze every monomial algebra up to a size
    Scan {
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        max_vars: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also scan the catalog algebras
        #[arg(long)]
        catalog: bool,
    },
    /// Compare `report --json` output with a golden file
    Check {
        file: PathBuf,
        #[arg(long)]
        expect: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<u8, ArtinderError> {
    match command {
        Command::Report { file, json, basis } => {
            let r = analyze(&load(&file)?, &NullIndexConfig::default())?.report(basis);
            print!("{}", if json { r.to_json() } else { r.to_text() });
            Ok(0)
        }
        Command::Scan { max_dim, max_vars, out, format, catalog } => {
            let mut config = ScanConfig::new(max_dim, max_vars);
            config.include_catalog = catalog;
            let report = scan(&config)?;
            let bytes = match format {
                Format::Json => report.to_json().into_bytes(),
                Format::Csv => to_csv(&report),
            };
            write_atomic(&out, &bytes)?;
            println!(
                "{} rows, min margin {}, {} equality cases",
                report.footer.rows,
                report.footer.min_margin.map_or("-".to_string(), |m| m.to_string()),
                report.footer.equality_cases.len()
            );
            Ok(0)
        }
        Command::Check { file, expect } => {
            let actual = analyze(&load(&file)?, &NullIndexConfig::default())?.report(false).to_json();
            let expected = fs::read_to_string(&expect).map_err(|e| {
                ArtinderError::Usage(format!("cannot read {}: {e}", expect.display()))
            })?;
            if actual == expected {
                println!("ok: {} matches {}", file.display(), expect.display());
                return Ok(0);
            }
            println!("mismatch: {} vs {}", file.display(), expect.display());
            let (a, e): (Vec<&str>, Vec<&str>) = (actual.lines().collect(), expected.lines().collect());
            for i in 0..a.len().max(e.len()) {
                let (x, y) = (a.get(i), e.get(i));
                if x != y {
                    println!("line {}:", i + 1);
                    println!("- {}", y.unwrap_or(&""));
                    println!("+ {}", x.unwrap_or(&""));
                }
            }
            Ok(1)
        }
    }
}

fn load(path: &Path) -> Result<Presentation, ArtinderError> {
    let text = fs::read_to_string(path).map_err(|e| {
        ArtinderError::Usage(format!("cannot read {}: {e}", path.display()))
    })?;
    let p = Presentation::parse(&text)?;
    match std::env::var(DEGREE_CAP_VAR) {
        Ok(v) => {
            let cap = v.trim().parse::<u32>().map_err(|_| {
                ArtinderError::Usage(format!("{DEGREE_CAP_VAR} must be a positive integer, got '{v}'"))
            })?;
            Ok(p.with_degree_cap(cap))
        }
        Err(_) => Ok(p),
    }
}

fn to_csv(report: &ScanReport) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &report.rows {
        w.serialize(row).expect("rows serialize to csv");
    }
    let mut out = w.into_inner().expect("in-memory writer");
    let f = &report.footer;
    writeln!(out, "# rows={}", f.rows).unwrap();
    writeln!(out, "# min_margin={}", f.min_margin.map_or(String::new(), |m| m.to_string())).unwrap();
    writeln!(out, "# equality_cases={}", f.equality_cases.join(" ")).unwrap();
    writeln!(out, "# equality_exactly_at_chains={}", f.equality_exactly_at_chains).unwrap();
    out
}

/// Writes next to the target and renames, so a failed run leaves no partial file.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), ArtinderError> {
    let err = |source| ArtinderError::Output { path: path.to_path_buf(), source };
    let name = path.file_name().ok_or_else(|| err(std::io::Error::other("not a file path")))?;
    let tmp = path.with_file_name(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    if let Err(e) = fs::write(&tmp, bytes).and_then(|_| fs::rename(&tmp, path)) {
        let _ = fs::remove_file(&tmp);
        return Err(err(e));
    }
    Ok(())
}
