//! Command line front end.
//!
//! Every subcommand prints a single JSON document first (unless
//! `--format text`), optionally followed by a blank line and a human
//! readable layout. Readers only consume the leading JSON document, so
//! output can be piped straight into the next command:
//!
//! ```text
//! boij-soderberg betti --ideal "x^2,x*y,x*z^2" --vars x,y,z | boij-soderberg decompose -
//! ```
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 on domain errors
//! such as a table outside the cone or an invalid chain.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cohomology::{
    coefficient_grid, facet_functional, pairing, truncated_pairing, FacetKind, SupernaturalTable,
    TruncationSpec,
};
use crate::decompose::decompose;
use crate::error::Error;
use crate::hilbert::{
    codimension, hilbert_function, hilbert_numerator, hilbert_polynomial, multiplicity,
    multiplicity_bounds_check,
};
use crate::koszul::{betti_table_with, random_ideal, MonomialIdeal, OracleLimits};
use crate::pure::pure_diagram;
use crate::rational::{self, Rational};
use crate::sequence::{ChainTriple, DegreeSequence};
use crate::table::BettiTable;

#[derive(Debug, Parser)]
#[command(name = "boij-soderberg", version, about = "Exact Boij-Soderberg decompositions and facet functionals")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Both, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose a Betti table into a chain of pure diagrams.
    Decompose {
        /// Table JSON file, or `-` for standard input.
        input: String,
        /// Report coefficients against the ∏ 1/|d_j - d_i| normalization.
        #[arg(long)]
        normalized: bool,
    },
    /// Print the pure diagram of a degree sequence.
    Pure {
        /// Comma separated degrees, e.g. `0,2,3,5`.
        #[arg(allow_hyphen_values = true)]
        degrees: String,
        /// Number of ring variables (defaults to the sequence's last index).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Print a window of a supernatural cohomology table.
    Supernatural {
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Rank as `num/den`; defaults to the smallest integral rank.
        #[arg(long)]
        rank: Option<String>,
        /// Twist range `kmin:kmax`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// Pair a Betti table with a supernatural cohomology table.
    Pair {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        #[arg(long)]
        rank: Option<String>,
        /// Truncation position; gives the truncated pairing.
        #[arg(long)]
        tau: Option<usize>,
        /// Truncation degree (requires --tau; omitted means no cutoff).
        #[arg(long, allow_hyphen_values = true, requires = "tau")]
        kappa: Option<i64>,
    },
    /// Build the facet functional of a chain a > b > c.
    Facet {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        vars: Option<usize>,
        /// Also evaluate the functional on this table.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Betti table of S/I for a monomial ideal I.
    Betti {
        /// Generators such as `x^2,x*y,x*z^2`.
        #[arg(long, conflicts_with = "seed", required_unless_present = "seed")]
        ideal: Option<String>,
        /// Variable names, e.g. `x,y,z`.
        #[arg(long, requires = "ideal")]
        vars: Option<String>,
        /// Use a pseudo-random ideal from this seed instead.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: u32,
        /// Ground field; only the rationals are supported.
        #[arg(long, default_value = "QQ")]
        field: String,
    },
    /// Hilbert numerator, codimension, multiplicity and Hilbert function.
    Hilbert {
        input: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "series")]
        at: Option<i64>,
        /// Print h(0), ..., h(K).
        #[arg(long)]
        series: Option<i64>,
    },
    /// Check the multiplicity and Hilbert series bounds.
    CheckBounds {
        input: String,
        /// Compare Hilbert series on 0..=K.
        #[arg(long)]
        window: Option<i64>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

struct Output {
    json: Value,
    text: String,
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let target: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = execute(&config.command, stdin);
    match result {
        Ok(out) => {
            let mut s = String::new();
            if config.format != Format::Text {
                s.push_str(&serde_json::to_string(&out.json).expect("json output"));
                s.push('\n');
            }
            if config.format == Format::Both {
                s.push('\n');
            }
            if config.format != Format::Json {
                s.push_str(&out.text);
            }
            if stdout.write_all(s.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn read_table(path: &str, stdin: &mut dyn Read) -> Result<BettiTable, Failure> {
    let text = read_input(path, stdin)?;
    BettiTable::from_json_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn parse_usage<T>(r: crate::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_roots(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Usage(format!("bad root {t:?}"))))
        .collect()
}

fn supernatural(roots: &str, rank: &Option<String>) -> Result<SupernaturalTable, Failure> {
    let roots = parse_roots(roots)?;
    parse_usage(match rank {
        Some(q) => rational::parse(q).and_then(|q| SupernaturalTable::new(roots, q)),
        None => SupernaturalTable::integral(roots),
    })
}

fn q(v: &Rational) -> Value {
    Value::String(rational::format(v))
}

fn table_json(t: &BettiTable) -> Value {
    serde_json::to_value(t.to_json()).expect("table json")
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match command {
        Command::Decompose { input, normalized } => {
            let table = read_table(input, stdin)?;
            let d = decompose(&table)?;
            let mut json = serde_json::to_value(d.to_json()).expect("decomposition json");
            json["summary"] = Value::String(d.summary(*normalized));
            let mut text = d.to_string();
            if *normalized {
                text = format!("{}\n\n{}", d.summary(true), text);
            }
            Ok(Output { json, text })
        }
        Command::Pure { degrees, vars } => {
            let d: DegreeSequence = parse_usage(degrees.parse())?;
            let vars = vars.unwrap_or(d.last_index().max(1));
            let p = pure_diagram(&d, vars)?;
            let json = json!({
                "degrees": d.degrees(),
                "scale": q(p.scale()),
                "normalized": table_json(p.normalized()),
                "canonical": table_json(p.canonical()),
            });
            let text = format!(
                "pure diagram {d}, canonical = {} * normalized\n\nnormalized:\n{}\ncanonical:\n{}",
                rational::format(p.scale()),
                p.normalized(),
                p.canonical()
            );
            Ok(Output { json, text })
        }
        Command::Supernatural { roots, rank, window } => {
            let t = supernatural(roots, rank)?;
            let (lo, hi) = window
                .split_once(':')
                .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
                .filter(|(a, b)| a <= b)
                .ok_or_else(|| Failure::Usage(format!("bad window {window:?}, expected kmin:kmax")))?;
            let m = t.roots().len();
            let rows: Vec<Vec<Rational>> = (0..=m)
                .map(|j| (lo..=hi).map(|k| crate::supernatural_gamma(&t, j, k)).collect())
                .collect();
            let json = json!({
                "roots": t.roots(),
                "rank": q(t.rank()),
                "kmin": lo,
                "kmax": hi,
                "h": rows.iter().map(|r| r.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            let mut grid: Vec<Vec<String>> = vec![std::iter::once("k:".to_string())
                .chain((lo..=hi).map(|k| k.to_string()))
                .collect()];
            for j in (0..=m).rev() {
                grid.push(
                    std::iter::once(format!("h^{j}:"))
                        .chain(rows[j].iter().map(rational::format))
                        .collect(),
                );
            }
            let text = format!(
                "supernatural table, roots {:?}, rank {}\n{}",
                t.roots(),
                rational::format(t.rank()),
                render_grid(&grid)
            );
            Ok(Output { json, text })
        }
        Command::Pair {
            input,
            roots,
            rank,
            tau,
            kappa,
        } => {
            let beta = read_table(input, stdin)?;
            let t = supernatural(roots, rank)?;
            let (value, label) = match tau {
                Some(tau) => {
                    let spec = TruncationSpec { tau: *tau, kappa: *kappa };
                    let kappa_s = kappa.map_or("inf".to_string(), |k| k.to_string());
                    (truncated_pairing(&beta, &t, &spec), format!("<beta, gamma>_({tau},{kappa_s})"))
                }
                None => (pairing(&beta, &t), "<beta, gamma>".to_string()),
            };
            let json = json!({
                "roots": t.roots(),
                "rank": q(t.rank()),
                "tau": tau,
                "kappa": kappa,
                "value": q(&value),
            });
            let text = format!("{label} = {}\n", rational::format(&value));
            Ok(Output { json, text })
        }
        Command::Facet { a, b, c, vars, eval } => {
            let seq = |s: &str| parse_usage(s.parse::<DegreeSequence>());
            let chain = ChainTriple::new(seq(a)?, seq(b)?, seq(c)?)?;
            let vars = vars.unwrap_or(chain.c.last_index().max(1));
            let f = facet_functional(&chain, vars)?;
            let on = |d: &DegreeSequence| -> Result<Rational, Failure> {
                Ok(f.evaluate(pure_diagram(d, vars)?.canonical()))
            };
            let values = [on(&chain.a)?, on(&chain.b)?, on(&chain.c)?];
            let evaluated = match eval {
                Some(path) => Some(f.evaluate(&read_table(path, stdin)?)),
                None => None,
            };
            let mut json = json!({
                "chain": {
                    "a": chain.a.degrees(),
                    "b": chain.b.degrees(),
                    "c": chain.c.degrees(),
                },
                "values": { "a": q(&values[0]), "b": q(&values[1]), "c": q(&values[2]) },
            });
            let mut text = format!("facet opposite {} in {chain}\n", chain.b);
            match &f.kind {
                FacetKind::Coordinate { i, j } => {
                    json["kind"] = json!("coordinate");
                    json["position"] = json!([i, j]);
                    let _ = writeln!(text, "functional: beta -> beta_({i},{j})");
                }
                FacetKind::Truncated { table, trunc } => {
                    json["kind"] = json!("truncated");
                    json["roots"] = json!(table.roots());
                    json["rank"] = q(table.rank());
                    json["tau"] = json!(trunc.tau);
                    json["kappa"] = json!(trunc.kappa);
                    let _ = writeln!(
                        text,
                        "functional: truncated pairing, tau = {}, kappa = {}, supernatural roots {:?}, rank {}",
                        trunc.tau,
                        trunc.kappa.expect("facet truncations are finite"),
                        table.roots(),
                        rational::format(table.rank())
                    );
                    let rows_lo = chain.c.degrees().iter().enumerate().map(|(i, d)| d - i as i64).min().unwrap() - 3;
                    let rows_hi = chain.a.degrees().iter().enumerate().map(|(i, d)| d - i as i64).max().unwrap() + 3;
                    let grid = coefficient_grid(table, Some(trunc), vars, rows_lo..=rows_hi);
                    let mut cells = vec![std::iter::once(String::new())
                        .chain((0..=vars).map(|i| i.to_string()))
                        .collect::<Vec<_>>()];
                    for (row, vals) in (rows_lo..=rows_hi).zip(&grid) {
                        cells.push(
                            std::iter::once(format!("{row}:"))
                                .chain(vals.iter().map(rational::format))
                                .collect(),
                        );
                    }
                    let _ = writeln!(text, "coefficients (column i, row k - i):\n{}", render_grid(&cells));
                }
            }
            let _ = writeln!(
                text,
                "values on beta(a), beta(b), beta(c): {}, {}, {}",
                rational::format(&values[0]),
                rational::format(&values[1]),
                rational::format(&values[2])
            );
            if let Some(v) = &evaluated {
                json["eval"] = q(v);
                let _ = writeln!(text, "value on input table: {}", rational::format(v));
            }
            Ok(Output { json, text })
        }
        Command::Betti {
            ideal,
            vars,
            seed,
            nvars,
            max_gens,
            max_deg,
            field,
        } => {
            if !matches!(field.as_str(), "QQ" | "Q" | "0") {
                return Err(Failure::Usage(format!(
                    "field {field:?} is not supported; only QQ (characteristic 0)"
                )));
            }
            let ideal = match (ideal, seed) {
                (Some(gens), _) => {
                    let names = vars.clone().ok_or_else(|| Failure::Usage("--vars is required with --ideal".into()))?;
                    parse_usage(MonomialIdeal::parse(gens, &names))?
                }
                (None, Some(seed)) => {
                    if *nvars == 0 || *max_gens == 0 || *max_deg == 0 {
                        return Err(Failure::Usage("--nvars, --max-gens and --max-deg must be positive".into()));
                    }
                    random_ideal(*seed, *nvars, *max_gens, *max_deg)
                }
                (None, None) => return Err(Failure::Usage("either --ideal or --seed is required".into())),
            };
            let table = betti_table_with(&ideal, OracleLimits::default())?;
            let text = format!("S/I for I = {ideal}\n{table}");
            Ok(Output {
                json: table_json(&table),
                text,
            })
        }
        Command::Hilbert { input, at, series } => {
            let beta = read_table(input, stdin)?;
            let num = hilbert_numerator(&beta);
            let poly = hilbert_polynomial(&beta);
            let mut json = json!({
                "vars": beta.vars(),
                "numerator": num.terms().map(|(e, c)| json!([e, q(c)])).collect::<Vec<_>>(),
                "codimension": codimension(&beta),
                "multiplicity": q(&multiplicity(&beta)),
                "hilbert_polynomial": poly.iter().map(q).collect::<Vec<_>>(),
            });
            let mut text = format!(
                "numerator: {num}  over (1-t)^{}\ncodimension: {}\nmultiplicity: {}\nhilbert polynomial coefficients (ascending): [{}]\n",
                beta.vars(),
                codimension(&beta),
                rational::format(&multiplicity(&beta)),
                poly.iter().map(rational::format).collect::<Vec<_>>().join(", ")
            );
            if let Some(k) = at {
                let v = hilbert_function(&beta, *k);
                json["at"] = json!({ "k": k, "value": q(&v) });
                let _ = writeln!(text, "h({k}) = {}", rational::format(&v));
            }
            if let Some(kmax) = series {
                let vals: Vec<Rational> = (0..=*kmax).map(|k| hilbert_function(&beta, k)).collect();
                json["series"] = json!(vals.iter().map(q).collect::<Vec<_>>());
                let _ = writeln!(
                    text,
                    "h(0..={kmax}) = {}",
                    vals.iter().map(rational::format).collect::<Vec<_>>().join(" ")
                );
            }
            Ok(Output { json, text })
        }
        Command::CheckBounds { input, window } => {
            let beta = read_table(input, stdin)?;
            let report = multiplicity_bounds_check(&beta, *window)?;
            Ok(Output {
                json: serde_json::to_value(&report).expect("report json"),
                text: report.to_string(),
            })
        }
    }
}

fn render_grid(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("boij-soderberg").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn betti_then_decompose_through_stdin() {
        let (code, table, _) = run_with(&["betti", "--ideal", "x^2,x*y,x*z^2", "--vars", "x,y,z"], "");
        assert_eq!(code, 0);
        let (code, out, _) = run_with(&["decompose", "-", "--format", "json"], &table);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["summary"], "1/5·β(0,2,3,5) + 1/10·β(0,2,4,5) + 1/6·β(0,3,4) + 1/3·β(0,3)");
    }

    #[test]
    fn pure_prints_canonical_table() {
        let (code, out, _) = run_with(&["pure", "0,2,3,5", "--vars", "3", "--format", "json"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["canonical"]["entries"], json!([[0, 0, "1"], [1, 2, "5"], [2, 3, "5"], [3, 5, "1"]]));
        let (code, _, _) = run_with(&["pure", "-1,1,2,3,4"], "");
        assert_eq!(code, 0);
    }

    #[test]
    fn exit_codes() {
        let bad = r#"{"vars":2,"entries":[[0,0,"1"],[1,1,"100"]]}"#;
        let (code, _, err) = run_with(&["decompose", "-"], bad);
        assert_eq!(code, 2);
        assert!(err.contains("not in the Boij-Soderberg cone"));
        let (code, _, _) = run_with(&["decompose", "-"], "not json");
        assert_eq!(code, 1);
        let (code, _, _) = run_with(&["frobnicate"], "");
        assert_eq!(code, 1);
        let (code, _, _) = run_with(&["facet", "--a", "0,1,2", "--b", "0,1,2", "--c", "0,1,2"], "");
        assert_eq!(code, 2);
        let (code, out, _) = run_with(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("decompose"));
        let (code, _, _) = run_with(&["betti", "--ideal", "x^9", "--vars", "x"], "");
        assert_eq!(code, 2);
        let (code, _, _) = run_with(&["betti", "--ideal", "x", "--vars", "x", "--field", "GF(2)"], "");
        assert_eq!(code, 1);
    }

    #[test]
    fn facet_and_pair_subcommands() {
        let (code, out, _) = run_with(
            &["facet", "--a", "0,2,3,4", "--b", "0,1,3,4", "--c", "0,1,2,4", "--vars", "4", "--format", "json"],
            "",
        );
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["roots"], json!([0, -4]));
        assert_eq!(v["values"], json!({"a": "0", "b": "6", "c": "0"}));

        let b = r#"{"vars":4,"entries":[[0,0,"2"],[1,1,"4"],[2,3,"4"],[3,4,"2"]]}"#;
        let (_, out, _) = run_with(&["pair", "-", "--roots", "0,-4", "--tau", "1", "--kappa", "1", "--format", "json"], b);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], "12");
        let (_, out, _) = run_with(&["pair", "-", "--roots", "0,-4", "--format", "json"], b);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], "0");
    }

    #[test]
    fn supernatural_grid() {
        let (code, out, _) = run_with(&["supernatural", "--roots", "0,-4", "--window", "-7:-5", "--format", "json"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["h"][2], json!(["21", "12", "5"]));
        assert_eq!(v["rank"], "2");
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["betti", "--seed", "11", "--nvars", "4", "--max-gens", "5", "--max-deg", "4"];
        assert_eq!(run_with(&args, ""), run_with(&args, ""));
    }
}
