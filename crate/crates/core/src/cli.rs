//! Command-line front end. `main` only forwards to [`run`].

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cartan::{CartanMatrix, FiniteType};
use crate::error::{Error, Result};
use crate::hecke::{Coefficient, NilHecke, Row, SCHEMA};
use crate::smoothness::{
    codim1_classification, codim1_contains, codim1_element, codim1_rs_by_weight, codim1_smooth_by_weight,
    point_verdict, rank2_table, singular_locus, RsMode,
};
use crate::verify::{run_suite, Suite};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Parser)]
#[command(name = "nilhecke", version, about = "Nil-Hecke coefficients and Schubert variety smoothness")]
struct Cli {
    /// Finite type such as A3, C2, G2.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    ty: Option<String>,

    /// Cartan matrix file: rank on the first line, then one row per line.
    #[arg(long, global = true, value_name = "FILE")]
    gcm: Option<PathBuf>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Directory for the on-disk row cache.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Root height bound for root enumeration on infinite type.
    #[arg(long, global = true, value_name = "N")]
    max_length: Option<i64>,

    /// Cap on in-memory memo entries.
    #[arg(long, global = true, value_name = "N")]
    memo_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of x_w (or y_w with --b) on delta_v; the whole row without --v.
    Coeff {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        b: bool,
    },
    /// Smoothness verdict for the point v of X_w.
    Smooth {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    /// Rational smoothness verdict for the point v of X_w.
    Rsmooth {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
        /// Decide through the c-coefficients instead of counting S.
        #[arg(long)]
        via_c: bool,
    },
    /// Bruhat-maximal singular points of X_w.
    SingularLocus {
        #[arg(long)]
        w: String,
    },
    /// The root set S(w, v).
    Sset {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
        /// Filter positive roots directly (needs --max-length on infinite type).
        #[arg(long)]
        all_roots: bool,
    },
    /// Elements of the Bruhat interval [v, w].
    Interval {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: Option<String>,
    },
    /// Singular loci of every Schubert variety of a rank-2 group.
    TableRank2,
    /// Codimension-one Schubert varieties X_{w0 r_i}.
    Codim1 {
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        v: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        /// algebra, bridge, rank2, codim1, deodhar, kacmoody or all
        suite: String,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code: 0 on success, 1 for input errors, 2 for invariant
/// violations and failed verification.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(Error::parse("0", "--jobs must be positive")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Invariant(format!("cannot start worker pool: {e}"))),
        },
        None => execute(&cli),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_cartan(cli: &Cli) -> Result<CartanMatrix> {
    match (&cli.ty, &cli.gcm) {
        (Some(_), Some(_)) => Err(Error::parse("--gcm", "give either --type or --gcm, not both")),
        (None, None) => Err(Error::parse("--type", "a group is required: pass --type or --gcm")),
        (Some(t), None) => {
            let ty: FiniteType = t.parse()?;
            CartanMatrix::finite(ty.family, ty.rank)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
            CartanMatrix::from_text(&text)
        }
    }
}

fn hecke(cli: &Cli) -> Result<NilHecke> {
    let group = WeylGroup::new(load_cartan(cli)?).with_memo_cap(cli.memo_cap);
    let mut h = NilHecke::new(Arc::new(group)).with_memo_cap(cli.memo_cap);
    if let Some(dir) = &cli.cache_dir {
        h = h.with_cache_dir(dir);
    }
    Ok(h)
}

fn index(h: &NilHecke, i: usize) -> Result<usize> {
    let rank = h.group().rank();
    if i == 0 || i > rank {
        return Err(Error::parse(i.to_string(), format!("--i must be between 1 and {rank}")));
    }
    Ok(i - 1)
}

fn render_json(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn with_schema(mut value: Value) -> Value {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA));
    }
    value
}

fn row_output<T: Coefficient + std::fmt::Display>(
    cli: &Cli,
    row: &Row<T>,
    w: &WeylElement,
    v: Option<&WeylElement>,
) -> String {
    let entries: Vec<(WeylElement, T)> = match v {
        Some(v) => vec![(v.clone(), row.coefficient(v))],
        None => row.iter().map(|(u, c)| (u.clone(), c.clone())).collect(),
    };
    if cli.json {
        return render_json(json!({
            "schema": SCHEMA,
            "kind": T::KIND,
            "w": w.label(),
            "entries": entries.iter().map(|(u, c)| json!({"v": u.label(), "value": c.to_json()})).collect::<Vec<_>>(),
        }));
    }
    let mut s = String::new();
    for (u, c) in entries {
        let _ = writeln!(s, "{}_{} at {}: {}", T::KIND, w.label(), u.label(), c);
    }
    s
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    if let Command::Verify { suite } = &cli.command {
        let suite: Suite = suite.parse()?;
        let report = run_suite(suite, cli.cache_dir.as_deref())?;
        let code = if report.passed() { 0 } else { 2 };
        let text = if cli.json {
            render_json(report.to_json())
        } else {
            format!("{report}\n")
        };
        return Ok((text, code));
    }

    let h = hecke(cli)?;
    let g = h.group().clone();
    let text = match &cli.command {
        Command::Coeff { w, v, b } => {
            let w = g.parse_word(w)?;
            let v = v.as_deref().map(|s| g.parse_word(s)).transpose()?;
            if *b {
                row_output(cli, &*h.expand_y(&w)?, &w, v.as_ref())
            } else {
                row_output(cli, &*h.expand_x(&w)?, &w, v.as_ref())
            }
        }
        Command::Smooth { w, v } | Command::Rsmooth { w, v, via_c: false } => {
            let verdict = point_verdict(&h, &g.parse_word(w)?, &g.parse_word(v)?, RsMode::Count)?;
            verdict_output(cli, verdict.to_json(), verdict.to_string())
        }
        Command::Rsmooth { w, v, via_c: true } => {
            let verdict = point_verdict(&h, &g.parse_word(w)?, &g.parse_word(v)?, RsMode::ViaC)?;
            verdict_output(cli, verdict.to_json(), verdict.to_string())
        }
        Command::SingularLocus { w } => {
            let report = singular_locus(&h, &g.parse_word(w)?)?;
            verdict_output(cli, report.to_json(), report.line())
        }
        Command::Sset { w, v, all_roots } => {
            let w = g.parse_word(w)?;
            let v = g.parse_word(v)?;
            let set = match (*all_roots, g.is_finite(), cli.max_length) {
                (false, _, _) => g.s_set(&w, &v)?,
                (true, true, _) => g.s_set_by_roots(&w, &v)?,
                (true, false, Some(bound)) => g.s_set_bounded(&w, &v, bound)?,
                (true, false, None) => {
                    return Err(Error::parse(
                        "--all-roots",
                        "infinite type has infinitely many roots; pass --max-length",
                    ))
                }
            };
            let value = json!({
                "w": w.label(),
                "v": v.label(),
                "roots": set.iter().map(|r| r.root.to_string()).collect::<Vec<_>>(),
                "size": set.len(),
                "length": w.length(),
            });
            let line = format!("S({}, {}) = {} ; #S={}, l(w)={}", w.label(), v.label(), set, set.len(), w.length());
            verdict_output(cli, value, line)
        }
        Command::Interval { w, v } => {
            let w = g.parse_word(w)?;
            let v = match v {
                Some(s) => g.parse_word(s)?,
                None => g.identity(),
            };
            let elements = g.interval(&v, &w)?;
            if cli.json {
                render_json(json!({
                    "schema": SCHEMA,
                    "v": v.label(),
                    "w": w.label(),
                    "elements": elements.iter().map(WeylElement::label).collect::<Vec<_>>(),
                }))
            } else {
                elements.iter().map(|u| format!("{}\n", u.label())).collect()
            }
        }
        Command::TableRank2 => {
            let table = rank2_table(&h)?;
            if cli.json {
                render_json(json!({
                    "schema": SCHEMA,
                    "cartan": g.cartan().to_string(),
                    "rows": table.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                }))
            } else {
                table.iter().map(|r| format!("{}\n", r.line())).collect()
            }
        }
        Command::Codim1 { i: Some(i), v: Some(v) } => {
            let i = index(&h, *i)?;
            let v = g.parse_word(v)?;
            if !codim1_contains(&g, i, &v)? {
                return Err(Error::NotBelow {
                    v: v.label(),
                    w: codim1_element(&g, i)?.label(),
                });
            }
            let w = codim1_element(&g, i)?;
            let verdict = point_verdict(&h, &w, &v, RsMode::Count)?;
            let weight_root = codim1_smooth_by_weight(&g, i, &v)?;
            let (weight_rs, _) = codim1_rs_by_weight(&g, i, &v)?;
            let mut value = verdict.to_json();
            value["i"] = json!(i + 1);
            value["weight_is_root"] = json!(weight_root);
            value["weight_rationally_smooth"] = json!(weight_rs);
            let line = format!(
                "X_{} (i={}) {}\nweight test: {}; {}",
                w.label(),
                i + 1,
                verdict,
                if weight_root { "root" } else { "not a root" },
                if weight_rs { "rationally smooth" } else { "not rationally smooth" },
            );
            verdict_output(cli, value, line)
        }
        Command::Codim1 { i, v: None } => {
            let wanted = i.map(|i| index(&h, i)).transpose()?;
            let table: Vec<_> = codim1_classification(&h)?
                .into_iter()
                .filter(|c| wanted.is_none_or(|i| c.i == i))
                .collect();
            if cli.json {
                render_json(json!({
                    "schema": SCHEMA,
                    "cartan": g.cartan().to_string(),
                    "rows": table.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = String::new();
                for c in &table {
                    let w = codim1_element(&g, c.i)?;
                    let _ = writeln!(s, "X_{} = X_{}: {}", c.i + 1, w.label(), c.label());
                }
                s
            }
        }
        Command::Codim1 { i: None, v: Some(_) } => return Err(Error::parse("--v", "codim1 --v needs --i")),
        Command::Verify { .. } => unreachable!("handled above"),
    };
    Ok((text, 0))
}

fn verdict_output(cli: &Cli, value: Value, line: String) -> String {
    if cli.json {
        render_json(with_schema(value))
    } else {
        format!("{line}\n")
    }
}
