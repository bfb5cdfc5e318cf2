//! `fusion`: command-line front end for the fusion-core engine.
//!
//! Exit codes: 0 success or match, 1 usage error, 2 mismatch or failed fit.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use fusion_core::qip::{brute_maximize, cancellation_report, degree_sequence, fit_sequence, scan_row, ScanRow};
use fusion_core::rational::int;
use fusion_core::realopt::maximize_over_p;
use fusion_core::slopes::{js, js_real, lattice_sector, mirror_slope, real_sector};
use fusion_core::statesum::{colored_jones, parse_golden};
use fusion_core::{Error, KnotParams};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "fusion", version, about = "Colored Jones polynomials and Jones slopes of 2-fusion knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct Knot {
    #[arg(long, allow_hyphen_values = true)]
    m1: i64,
    #[arg(long, allow_hyphen_values = true)]
    m2: i64,
}

impl Knot {
    fn params(&self) -> KnotParams {
        KnotParams::new(self.m1, self.m2)
    }
}

/// Inclusive integer range written `A:B`.
#[derive(Clone, Copy, Debug)]
struct Span(i64, i64);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once(':').ok_or("expected A:B")?;
        let a: i64 = a.trim().parse().map_err(|_| format!("bad bound {a:?}"))?;
        let b: i64 = b.trim().parse().map_err(|_| format!("bad bound {b:?}"))?;
        if b < a {
            return Err(format!("empty range {a}:{b}"));
        }
        Ok(Span(a, b))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the colored Jones polynomial J_{K,n}.
    Jones {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        n: u32,
        /// Apply q -> 1/q to the result.
        #[arg(long)]
        mirror: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// CSV table `n,degree` for n = 0..=nmax.
    Degree {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        nmax: u32,
        #[arg(long)]
        mirror: bool,
    },
    /// Closed-form slopes and sectors, as JSON.
    Slope {
        #[command(flatten)]
        knot: Knot,
    },
    /// Lattice maximum of the quadratic Q over nP, as JSON.
    Maximize {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        n: u32,
    },
    /// Compare the fitted slope with the lattice formula.
    Verify {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        nmax: u32,
    },
    /// Fitted slope against the lattice formula over a box of knots.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        m1_range: Span,
        #[arg(long, allow_hyphen_values = true)]
        m2_range: Span,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a fixture file of reference polynomials.
    Golden {
        #[arg(long)]
        fixtures: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> anyhow::Result<u8> {
    match command {
        Command::Jones { knot, n, mirror, format } => {
            let poly = colored_jones(knot.params(), n, mirror)?;
            match format {
                Format::Text => writeln!(out, "{poly}")?,
                Format::Json => {
                    let v = json!({"m1": knot.m1, "m2": knot.m2, "n": n, "mirror": mirror, "poly": poly.to_string()});
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Degree { knot, nmax, mirror } => {
            let seq = degree_sequence(knot.params(), nmax, mirror)?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "degree"])?;
            for (n, d) in seq.iter().enumerate() {
                w.write_record([n.to_string(), d.to_string()])?;
            }
            w.flush()?;
        }
        Command::Slope { knot } => {
            let p = knot.params();
            let (m1, m2) = (int(p.m1), int(p.m2));
            let value = js(p)?;
            let (real, real_label) = match (js_real(&m1, &m2), real_sector(&m1, &m2)) {
                (Ok(v), Ok(s)) => (Some(v.to_string()), Some(s.to_string())),
                (Err(Error::NoSector(..)), _) => (None, None),
                (Err(e), _) | (_, Err(e)) => return Err(e.into()),
            };
            let v = json!({
                "m1": p.m1,
                "m2": p.m2,
                "js": value.to_string(),
                "js4": (int(4) * &value).to_string(),
                "sector": lattice_sector(p)?.to_string(),
                "js_real": real,
                "real_sector": real_label,
                "mirror_slope": mirror_slope(p)?.to_string(),
                "realopt_value": maximize_over_p(&m1, &m2).0.to_string(),
            });
            writeln!(out, "{v}")?;
        }
        Command::Maximize { knot, n } => {
            let r = brute_maximize(knot.params(), n);
            let v = json!({
                "m1": knot.m1,
                "m2": knot.m2,
                "n": n,
                "max_value": r.max_value.to_string(),
                "maximizers": r.maximizers,
                "tie": r.tie,
                "leading_sum_cancels": r.leading_sum_cancels,
            });
            writeln!(out, "{v}")?;
        }
        Command::Verify { knot, nmax } => return verify(knot.params(), nmax, out),
        Command::Scan { m1_range, m2_range, nmax, format, out: path } => {
            let cells: Vec<KnotParams> = (m1_range.0..=m1_range.1)
                .flat_map(|a| (m2_range.0..=m2_range.1).map(move |b| KnotParams::new(a, b)))
                .collect();
            let rows = cells.into_par_iter().map(|p| scan_row(p, nmax)).collect::<Result<Vec<_>, _>>()?;
            let text = render_scan(&rows, format)?;
            match path {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Golden { fixtures } => {
            let text = fs::read_to_string(&fixtures).with_context(|| format!("reading {}", fixtures.display()))?;
            return golden(&text, out);
        }
    }
    Ok(0)
}

fn verify(p: KnotParams, nmax: u32, out: &mut impl Write) -> anyhow::Result<u8> {
    let formula = js(p)?;
    if nmax < 12 {
        writeln!(out, "{p}: fit inconsistent (nmax {nmax} < 12 leaves too short a window)")?;
        return Ok(2);
    }
    let seq = degree_sequence(p, nmax, false)?;
    let fit = match fit_sequence(&seq) {
        Ok(q) => q,
        Err(e @ Error::FitInconsistent { .. }) => {
            writeln!(out, "{p}: fit inconsistent ({e}); formula {formula}")?;
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let fitted = fit.c2();
    let verdict = if *fitted == formula { "match" } else { "mismatch" };
    writeln!(out, "{p}: fitted {fitted} (period {}), formula {formula}: {verdict}", fit.period)?;
    let cancelling: Vec<String> = (1..=nmax)
        .into_par_iter()
        .map(|n| cancellation_report(p, n).map(|r| (n, r)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|(_, r)| r.qip.leading_sum_cancels)
        .map(|(n, r)| format!("{n} (drop {})", r.drop))
        .collect();
    if !cancelling.is_empty() {
        writeln!(out, "tied maximizers with cancelling leading terms at n = {}", cancelling.join(", "))?;
    }
    Ok(if *fitted == formula { 0 } else { 2 })
}

fn render_scan(rows: &[ScanRow], format: TableFormat) -> anyhow::Result<String> {
    Ok(match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        TableFormat::Json => serde_json::to_string_pretty(rows)? + "\n",
    })
}

struct GoldenLine {
    knot: String,
    n: u32,
    status: &'static str,
}

fn golden(text: &str, out: &mut impl Write) -> anyhow::Result<u8> {
    let records = parse_golden(text)?;
    if records.is_empty() {
        bail!("fixture file has no records");
    }
    let results = records
        .par_iter()
        .map(|rec| {
            let status = if rec.suspect {
                "suspect-skipped"
            } else if colored_jones(rec.params, rec.n, false)?.to_string() == rec.poly.to_string() {
                "ok"
            } else {
                "mismatch"
            };
            Ok(GoldenLine { knot: rec.params.to_string(), n: rec.n, status })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    for line in &results {
        writeln!(out, "{} n={}: {}", line.knot, line.n, line.status)?;
    }
    let bad = results.iter().filter(|l| l.status == "mismatch").count();
    writeln!(out, "{} rows, {} mismatches", results.len(), bad)?;
    Ok(if bad == 0 { 0 } else { 2 })
}
