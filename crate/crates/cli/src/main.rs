//! `qcheb`: tables, sequences, tilings and the identity verifier.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcheb::chebyshev::{check_q_value, gen_u_family, ChebTables};
use qcheb::moments::{moment, Functional};
use qcheb::qcomb::{fib_luc, FibLucKind, QBinomialTable};
use qcheb::tangent::{genocchi_from_tangent, integral_genocchi, q_tangent, SeidelTriangle};
use qcheb::tiling::{enumerate, fischer_map, oracle_u_total, weight, Block, WeightSpec, DEFAULT_CAP};
use qcheb::verify::{self, Output, QMode, VerifyConfig, MAX_ORACLE_CAP};
use qcheb::{Error, QRational, Rational, XsPoly};

/// Largest index for `table`.
const TABLE_LIMIT: usize = 40;
/// Largest `n` for `series tangent`, `genocchi` and `seidel-triangle`.
const SERIES_LIMIT: usize = 10;
/// Largest moment index for `series moments-*`.
const MOMENT_LIMIT: usize = 48;

#[derive(Parser)]
#[command(name = "qcheb", version, about = "Exact q-Chebyshev tables and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial family for indices 0..=n, one per line.
    Table {
        family: Family,
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the identity catalogue.
    Verify {
        /// Same bound for every selected suite; defaults differ per suite.
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated suite names.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print a sequence.
    Series {
        kind: SeriesKind,
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate the tilings of an n-board.
    Tilings {
        n: usize,
        #[arg(default_value = "list")]
        mode: TilingMode,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// `symbolic`, or a rational value of q.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    at_q: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    #[value(name = "U_r")]
    Ur,
    #[value(name = "F")]
    F,
    #[value(name = "L")]
    L,
    #[value(name = "Fib")]
    Fib,
    #[value(name = "Luc")]
    Luc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Tangent,
    Genocchi,
    SeidelTriangle,
    #[value(name = "moments-L")]
    MomentsL,
    #[value(name = "moments-M")]
    MomentsM,
}

#[derive(Clone, Copy, ValueEnum)]
enum TilingMode {
    List,
    Weight,
    Bijection,
}

/// A command outcome: what to print and the exit code.
struct Done {
    text: String,
    code: u8,
}

impl Done {
    fn ok(text: String) -> Self {
        Done { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(done) => {
            print!("{}", done.text);
            ExitCode::from(done.code)
        }
        Err(e) => {
            eprintln!("qcheb: {e}");
            ExitCode::from(match e {
                Error::Mismatch { .. } => 1,
                _ => 2,
            })
        }
    }
}

fn run(command: Command) -> Result<Done, Error> {
    match command {
        Command::Table { family, n, common } => table(family, n, &common),
        Command::Verify {
            max_n,
            suite,
            oracle_cap,
            inject_fault,
            common,
        } => {
            let mut config = VerifyConfig {
                q_mode: common.at_q.parse()?,
                oracle_cap,
                output: if common.json { Output::Json } else { Output::Text },
                inject_fault,
                ..VerifyConfig::default()
            };
            if !suite.is_empty() {
                config.suites = suite.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            }
            if let Some(n) = max_n {
                for &s in &config.suites {
                    config.max_n.insert(s, n);
                }
            }
            let report = verify::run(&config)?;
            Ok(Done {
                text: report.render(config.output),
                code: report.exit_code() as u8,
            })
        }
        Command::Series { kind, n, common } => series(kind, n, &common),
        Command::Tilings {
            n,
            mode,
            oracle_cap,
            common,
        } => tilings(n, mode, oracle_cap, &common),
    }
}

fn q_value(common: &Common) -> Result<Option<Rational>, Error> {
    match common.at_q.parse()? {
        QMode::Symbolic => Ok(None),
        QMode::At(q) => {
            check_q_value(&q)?;
            Ok(Some(q))
        }
    }
}

fn bound(what: &str, n: usize, limit: usize) -> Result<(), Error> {
    if n > limit {
        Err(Error::Config(format!("{what}: n = {n} exceeds the limit {limit}")))
    } else {
        Ok(())
    }
}

fn poly_at(p: &XsPoly, q: &Option<Rational>) -> Result<String, Error> {
    Ok(match q {
        Some(q) => p.at_q(q)?.to_string(),
        None => p.to_string(),
    })
}

fn qrat_at(v: &QRational, q: &Option<Rational>) -> Result<String, Error> {
    Ok(match q {
        Some(q) => v.eval(q)?.to_string(),
        None => v.to_string(),
    })
}

/// One value per line, or a JSON array of `{label, value}` objects.
fn lines(rows: &[(String, String)], json: bool, labelled: bool) -> String {
    if json {
        let v: Vec<serde_json::Value> = rows
            .iter()
            .map(|(label, value)| serde_json::json!({ "label": label, "value": value }))
            .collect();
        return serde_json::to_string_pretty(&v).expect("strings serialise") + "\n";
    }
    let mut out = String::new();
    for (label, value) in rows {
        if labelled {
            let _ = writeln!(out, "{label} = {value}");
        } else {
            let _ = writeln!(out, "{value}");
        }
    }
    out
}

fn table(family: Family, n: usize, common: &Common) -> Result<Done, Error> {
    bound("table", n, TABLE_LIMIT)?;
    let q = q_value(common)?;
    let (name, values): (&str, Vec<XsPoly>) = match family {
        Family::T | Family::U => {
            let tables = ChebTables::new(n);
            let fam = if matches!(family, Family::T) { &tables.t } else { &tables.u };
            let name = if matches!(family, Family::T) { "T" } else { "U" };
            (name, fam.values()[..=n].to_vec())
        }
        Family::Ur => {
            let fam = gen_u_family(n);
            ("U^(r)", (0..=n as i64).map(|k| fam.get(k).clone()).collect())
        }
        Family::F | Family::L | Family::Fib | Family::Luc => {
            let kind = match family {
                Family::F => FibLucKind::F,
                Family::L => FibLucKind::L,
                Family::Fib => FibLucKind::Fib,
                _ => FibLucKind::Luc,
            };
            let b = QBinomialTable::new(n as u32 + 1);
            (
                match kind {
                    FibLucKind::F => "F",
                    FibLucKind::L => "L",
                    FibLucKind::Fib => "Fib",
                    _ => "Luc",
                },
                (0..=n as u32).map(|k| fib_luc(&b, kind, k)).collect(),
            )
        }
    };
    let rows = values
        .iter()
        .enumerate()
        .map(|(k, p)| Ok((format!("{name}_{k}"), poly_at(p, &q)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Done::ok(lines(&rows, common.json, false)))
}

fn series(kind: SeriesKind, n: usize, common: &Common) -> Result<Done, Error> {
    let q = q_value(common)?;
    let text = match kind {
        SeriesKind::Tangent => {
            bound("series tangent", n, SERIES_LIMIT)?;
            let t = q_tangent(n)?;
            let rows = (0..=n)
                .map(|k| Ok((format!("t_{}", 2 * k + 1), qrat_at(t.get(k), &q)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            lines(&rows, common.json, false)
        }
        SeriesKind::Genocchi => {
            bound("series genocchi", n, SERIES_LIMIT)?;
            genocchi(n, &q, common.json)?
        }
        SeriesKind::SeidelTriangle => {
            bound("series seidel-triangle", n, SERIES_LIMIT)?;
            let tri = SeidelTriangle::build(2 * n + 1);
            match &q {
                None => tri.to_json() + "\n",
                Some(q) => {
                    let rows = tri
                        .rows()
                        .iter()
                        .map(|row| row.iter().map(|v| Ok(v.eval(q)?.to_string())).collect())
                        .collect::<Result<Vec<Vec<String>>, Error>>()?;
                    serde_json::to_string(&rows).expect("strings serialise") + "\n"
                }
            }
        }
        SeriesKind::MomentsL | SeriesKind::MomentsM => {
            bound("series moments", n, MOMENT_LIMIT)?;
            let f = if matches!(kind, SeriesKind::MomentsL) { Functional::L } else { Functional::M };
            let rows = (0..=n)
                .map(|k| Ok((format!("{f}(x^{k})"), poly_at(&moment(f, k), &q)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            lines(&rows, common.json, true)
        }
    };
    Ok(Done::ok(text))
}

/// `G_{2k}` for `1 <= k <= n`, each followed by `(-q^(k+1);q)_(k-1) G_{2k}`.
fn genocchi(n: usize, q: &Option<Rational>, json: bool) -> Result<String, Error> {
    if n == 0 {
        return Ok(if json { "[]\n".into() } else { String::new() });
    }
    let g = genocchi_from_tangent(&q_tangent(n - 1)?);
    let mut rows = Vec::new();
    for k in 1..=n {
        let value = match q {
            None => g.render(k),
            Some(q) => g.get(k).eval(q)?.to_string(),
        };
        let int = integral_genocchi(&g, k)?;
        let int = match q {
            None => int.to_string(),
            Some(q) => int.eval(q).to_string(),
        };
        rows.push((format!("G_{}", 2 * k), value, format!("(-q^{};q)_{} G_{}", k + 1, k - 1, 2 * k), int));
    }
    if json {
        let v: Vec<serde_json::Value> = rows
            .iter()
            .map(|(l, v, il, iv)| serde_json::json!({ "label": l, "value": v, "integral_label": il, "integral": iv }))
            .collect();
        return Ok(serde_json::to_string_pretty(&v).expect("strings serialise") + "\n");
    }
    let mut out = String::new();
    for (l, v, il, iv) in rows {
        let _ = writeln!(out, "{l} = {v}");
        let _ = writeln!(out, "    {il} = {iv}");
    }
    Ok(out)
}

fn tilings(n: usize, mode: TilingMode, cap: usize, common: &Common) -> Result<Done, Error> {
    if cap > MAX_ORACLE_CAP {
        return Err(Error::Config(format!("oracle cap {cap} exceeds {MAX_ORACLE_CAP}")));
    }
    let q = q_value(common)?;
    let all = enumerate(n, cap)?;
    match mode {
        TilingMode::List => {
            let mut words: Vec<String> = all.map(|t| t.word()).collect();
            words.sort();
            let text = if common.json {
                serde_json::to_string_pretty(&words).expect("strings serialise") + "\n"
            } else {
                words.iter().map(|w| format!("{w}\n")).collect()
            };
            Ok(Done::ok(text))
        }
        TilingMode::Weight => {
            let sum = oracle_u_total(n, WeightSpec::W, cap)?;
            let u = ChebTables::new(n).u.get(n as i64).clone();
            let ok = sum == u;
            let (sum_s, u_s) = (poly_at(&sum, &q)?, poly_at(&u, &q)?);
            let text = if common.json {
                let v = serde_json::json!({ "n": n, "weight": sum_s, "expected": u_s, "ok": ok });
                serde_json::to_string_pretty(&v).expect("strings serialise") + "\n"
            } else if ok {
                format!("{sum_s}\n= U_{n}: OK\n")
            } else {
                format!("{sum_s}\n!= U_{n} = {u_s}: MISMATCH\n")
            };
            Ok(Done {
                text,
                code: if ok { 0 } else { 1 },
            })
        }
        TilingMode::Bijection => {
            let mut rows = Vec::new();
            let mut code = 0;
            let mut tilings: Vec<_> = all.collect();
            tilings.sort_by_key(|t| t.word());
            for t in &tilings {
                let (big_t, a, b) = fischer_map(t);
                let (k, l) = (t.count(Block::Domino), t.count(Block::Black));
                let wt = weight(t, WeightSpec::Wr);
                let rhs = (weight(&a, WeightSpec::Wr) * weight(&b, WeightSpec::Wr))
                    .scale(&QRational::q_pow((k * l) as i64));
                let ok = wt == rhs;
                if !ok {
                    code = 1;
                }
                rows.push((t.word(), big_t.word(), a.word(), b.word(), k, l, poly_at(&wt, &q)?, ok));
            }
            let text = if common.json {
                let v: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(t, bt, a, b, k, l, w, ok)| {
                        serde_json::json!({ "t": t, "T": bt, "A": a, "B": b, "k": k, "l": l, "w_r": w, "ok": ok })
                    })
                    .collect();
                serde_json::to_string_pretty(&v).expect("strings serialise") + "\n"
            } else {
                let mut out = String::new();
                for (t, bt, a, b, k, l, w, ok) in rows {
                    let verdict = if ok { "OK" } else { "MISMATCH" };
                    let _ = writeln!(
                        out,
                        "{t} -> T = {bt}, A = {a}, B = {b}; k = {k}, l = {l}; w_r = {w} = q^{} w_r(A) w_r(B): {verdict}",
                        k * l
                    );
                }
                out
            };
            Ok(Done { text, code })
        }
    }
}
