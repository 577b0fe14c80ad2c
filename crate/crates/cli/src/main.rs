use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use domino_core::identities::{imbalance, stanley_rhs, stanley_sum};
use domino_core::insertion::{
    dual_alpha, dual_beta, growth_reverse, insert_colored_word, insert_word, insertion_frames, semistandard_insert,
    semistandard_reverse, GrowthDiagram, SignedPermutationMatrix,
};
use domino_core::partition::Partition;
use domino_core::poly::Var;
use domino_core::render::{render_growth, render_growth_cells, render_tableau, render_with_stats, spin};
use domino_core::series::{g_function, series_s, SeriesConfig};
use domino_core::tableau::{enumerate_sdt, enumerate_ssdt, DominoTableau};
use domino_core::verify::{run_suite, Suite, VerificationReport, VerifyOptions};
use domino_core::words::{format_word, parse_biword, parse_word, BiwordKind, ColoredPermutation, Letter};

#[derive(Parser)]
#[command(name = "domino", version, about = "Domino insertion, growth diagrams, sign-imbalance and domino series")]
struct Cli {
    /// Rank r of the staircase core δ_r.
    #[arg(long, global = true, default_value_t = 0)]
    core: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Accepted for scripting; every command is deterministic.
    #[arg(long, global = true)]
    seed_free: bool,
    /// Worker threads for verification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualMap {
    Alpha,
    Beta,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a colored word (bars as `3'` or `-3`) or, with --biword, a colored biword.
    Insert {
        #[arg(allow_hyphen_values = true)]
        input: String,
        /// Print the insertion tableau after each letter.
        #[arg(long)]
        trace: bool,
        /// Read INPUT as a biword such as "1/2' 1/3" or "1 1 2 ; 2' 3 4".
        #[arg(long)]
        biword: bool,
        /// Apply a dual correspondence to a multiplicity-free biword.
        #[arg(long, value_enum, requires = "biword")]
        dual: Option<DualMap>,
    },
    /// Growth diagram of a colored permutation.
    Growth {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Draw each partition as a small diagram.
        #[arg(long)]
        cells: bool,
    },
    /// Recover the word from the JSON printed by `insert --format json` (path or `-` for stdin).
    Reverse {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Sign-imbalance of a shape, or the full generating polynomial over shapes of size m.
    Imbalance {
        shape: Option<String>,
        #[arg(long, conflicts_with = "shape")]
        all_of: Option<usize>,
    },
    /// Truncated domino series.
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// List domino tableaux or shapes.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Run a verification suite.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        cores: Option<Vec<usize>>,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand)]
enum SeriesAction {
    /// Expand S (or G_λ with --shape) through the given degree.
    Expand {
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        shape: Option<String>,
        /// Parameter values: `a,b,c` or `key=value` pairs over a, b, c, s.
        #[arg(long)]
        params: Option<String>,
    },
    /// Check the series identities.
    Check {
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        cores: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum EnumerateWhat {
    /// Standard domino tableaux of a shape.
    Sdt { shape: String },
    /// Semistandard domino tableaux of a shape with entries at most k.
    Ssdt {
        shape: String,
        #[arg(long, default_value_t = 2)]
        max_value: usize,
    },
    /// Shapes with core δ_r (from --core) and n dominoes.
    Shapes { n: usize },
}

/// Outcome of a command that ran: whether its checks held.
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(&mut out, &cli);
    if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(out: &mut String, cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Insert { input, trace, biword, dual } => cmd_insert(out, input, cli.core, *trace, *biword, *dual, json),
        Command::Growth { word, cells } => cmd_growth(out, word, cli.core, *cells, json),
        Command::Reverse { input } => cmd_reverse(out, input, json),
        Command::Imbalance { shape, all_of } => cmd_imbalance(out, shape.as_deref(), *all_of, json),
        Command::Series { action } => cmd_series(out, action, cli.core, json),
        Command::Enumerate { what } => cmd_enumerate(out, what, cli.core, json),
        Command::Verify { suite, n, max_size, vars, degree, cores, timings } => {
            let mut opts = VerifyOptions { timings: *timings, ..Default::default() };
            if let Some(n) = n {
                opts.max_n = *n;
                opts.biword_len = opts.biword_len.min(*n);
                opts.dual_len = opts.dual_len.min(*n);
            }
            if let Some(m) = max_size {
                opts.max_size = *m;
            }
            if let Some(k) = vars {
                opts.vars = *k;
            }
            if let Some(d) = degree {
                opts.degree = *d;
            }
            if let Some(c) = cores {
                opts.cores = c.clone();
            }
            let suite: Suite = suite.parse()?;
            print_reports(out, &run_suite(suite, &opts), json)
        }
    }
}

fn print_json(out: &mut String, value: &impl serde::Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn print_pair(out: &mut String, p: &DominoTableau, q: &DominoTableau, extra: serde_json::Value, json: bool) -> Result<()> {
    if json {
        let mut obj = json!({
            "P": p,
            "Q": q,
            "shape": p.shape(),
            "spin_p": spin(p.v()),
            "spin_q": spin(q.v()),
        });
        if let (Some(o), Some(e)) = (obj.as_object_mut(), extra.as_object()) {
            o.extend(e.clone());
        }
        print_json(out, &obj)
    } else {
        if let Some(e) = extra.as_object() {
            for (k, v) in e {
                writeln!(out, "{k}: {}", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string()))?;
            }
        }
        write!(out, "{}", render_with_stats("P", p))?;
        write!(out, "{}", render_with_stats("Q", q))?;
        Ok(())
    }
}

fn is_permutation(word: &[Letter]) -> bool {
    let mut values: Vec<u32> = word.iter().map(|l| l.value).collect();
    values.sort_unstable();
    values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
}

fn cmd_insert(out: &mut String, input: &str, r: usize, trace: bool, biword: bool, dual: Option<DualMap>, json: bool) -> Result<Outcome> {
    if biword {
        let kind = if dual == Some(DualMap::Alpha) { BiwordKind::DualColored } else { BiwordKind::Colored };
        let w = parse_biword(input, kind)?;
        let (p, q) = match dual {
            None => semistandard_insert(&w, r)?,
            Some(DualMap::Alpha) => dual_alpha(&w, r)?,
            Some(DualMap::Beta) => dual_beta(&w, r)?,
        };
        let extra = json!({ "biword": w.to_string(), "core": r, "total_color": w.total_color() });
        print_pair(out, &p, &q, extra, json)?;
        return Ok(Outcome::Ok);
    }
    let word = parse_word(input)?;
    let (p, q) = if is_permutation(&word) { insert_word(&word, r)? } else { insert_colored_word(&word, r)? };
    let tc = word.iter().filter(|l| l.barred).count();
    let mut extra = json!({ "word": format_word(&word), "core": r, "total_color": tc });
    if trace {
        let frames = if is_permutation(&word) {
            insertion_frames(&word, r)?
        } else {
            (1..=word.len()).map(|k| insert_colored_word(&word[..k], r).map(|(p, _)| p)).collect::<Result<_, _>>()?
        };
        if json {
            extra["frames"] = serde_json::to_value(&frames)?;
        } else {
            for (k, f) in frames.iter().enumerate() {
                writeln!(out, "after {} ({}):", k + 1, format_word(&word[k..=k]))?;
                write!(out, "{}", render_tableau(f))?;
            }
        }
    }
    print_pair(out, &p, &q, extra, json)?;
    Ok(Outcome::Ok)
}

fn cmd_growth(out: &mut String, word: &str, r: usize, cells: bool, json: bool) -> Result<Outcome> {
    let pi = ColoredPermutation::new(parse_word(word)?)?;
    let g = GrowthDiagram::forward(&SignedPermutationMatrix::from_permutation(pi), r)?;
    if json {
        print_json(out, &g)?;
    } else if cells {
        write!(out, "{}", render_growth_cells(&g))?;
    } else {
        write!(out, "{}", render_growth(&g))?;
    }
    Ok(Outcome::Ok)
}

fn cmd_reverse(out: &mut String, input: &str, json: bool) -> Result<Outcome> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let value: serde_json::Value = serde_json::from_str(&text).context("input is not JSON")?;
    let get = |k: &str| -> Result<DominoTableau> {
        let v = value.get(k).ok_or_else(|| anyhow!("missing field `{k}`"))?;
        serde_json::from_value(v.clone()).with_context(|| format!("field `{k}` is not a domino tableau"))
    };
    let (p, q) = (get("P")?, get("Q")?);
    let text = if p.is_standard() && q.is_standard() {
        growth_reverse(&p, &q)?.to_string()
    } else {
        let w = semistandard_reverse(&p, &q)?;
        if w.top_word().iter().enumerate().all(|(i, l)| l.value as usize == i + 1) {
            format_word(&w.bottom_word())
        } else {
            w.to_string()
        }
    };
    if json {
        print_json(out, &json!({ "word": text }))?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(Outcome::Ok)
}

fn parse_shape(s: &str) -> Result<Partition> {
    Ok(s.trim().trim_start_matches('(').trim_end_matches(')').parse()?)
}

fn cmd_imbalance(out: &mut String, shape: Option<&str>, all_of: Option<usize>, json: bool) -> Result<Outcome> {
    match (shape, all_of) {
        (Some(s), None) => {
            let lambda = parse_shape(s)?;
            let i = imbalance(&lambda);
            if json {
                print_json(out, &json!({ "shape": lambda, "imbalance": i }))?;
            } else {
                writeln!(out, "{i}")?;
            }
            Ok(Outcome::Ok)
        }
        (None, Some(m)) => {
            let (sum, target) = (stanley_sum(m), stanley_rhs(m));
            let equal = sum == target;
            if json {
                print_json(out, &json!({ "m": m, "sum": sum, "target": target, "equal": equal }))?;
            } else {
                writeln!(out, "sum:    {sum}")?;
                writeln!(out, "target: {target}")?;
                writeln!(out, "equal:  {equal}")?;
            }
            Ok(if equal { Outcome::Ok } else { Outcome::Failed })
        }
        _ => bail!("give a shape or --all-of m"),
    }
}

fn parse_params(s: &str) -> Result<Vec<(Var, i64)>> {
    let items: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
    if items.iter().all(|x| !x.contains('=')) {
        if items.len() != 3 {
            bail!("--params takes a,b,c or key=value pairs");
        }
        return [Var::A, Var::B, Var::C]
            .into_iter()
            .zip(&items)
            .map(|(v, x)| Ok((v, x.parse().with_context(|| format!("bad value `{x}`"))?)))
            .collect();
    }
    items
        .iter()
        .map(|item| {
            let (k, v) = item.split_once('=').ok_or_else(|| anyhow!("expected key=value, got `{item}`"))?;
            let var = match k.trim() {
                "a" => Var::A,
                "b" => Var::B,
                "c" => Var::C,
                "s" => Var::S,
                other => bail!("unknown parameter `{other}`"),
            };
            Ok((var, v.trim().parse().with_context(|| format!("bad value `{v}`"))?))
        })
        .collect()
}

fn cmd_series(out: &mut String, action: &SeriesAction, r: usize, json: bool) -> Result<Outcome> {
    match action {
        SeriesAction::Expand { vars, degree, shape, params } => {
            let config = SeriesConfig::x_only(*vars, *degree);
            let mut s = match shape {
                Some(sh) => {
                    let lambda = parse_shape(sh)?;
                    if lambda.core_rank() != r {
                        return Err(domino_core::Error::UnsupportedCore(lambda.to_string(), format!("δ_{r}")).into());
                    }
                    g_function(&lambda, config)
                }
                None => series_s(r, *vars, *degree),
            };
            if let Some(p) = params {
                s = s.specialize(&parse_params(p)?);
            }
            if json {
                print_json(out, &s)?;
            } else {
                write!(out, "{s}")?;
            }
            Ok(Outcome::Ok)
        }
        SeriesAction::Check { vars, degree, cores } => {
            let opts = VerifyOptions { vars: *vars, degree: *degree, cores: cores.clone(), ..Default::default() };
            print_reports(out, &run_suite(Suite::Series, &opts), json)
        }
    }
}

fn cmd_enumerate(out: &mut String, what: &EnumerateWhat, r: usize, json: bool) -> Result<Outcome> {
    let tableaux = match what {
        EnumerateWhat::Sdt { shape } => enumerate_sdt(&parse_shape(shape)?),
        EnumerateWhat::Ssdt { shape, max_value } => enumerate_ssdt(&parse_shape(shape)?, *max_value),
        EnumerateWhat::Shapes { n } => {
            let shapes = Partition::with_core(r, *n);
            if json {
                print_json(out, &shapes)?;
            } else {
                for s in shapes {
                    writeln!(out, "{s}")?;
                }
            }
            return Ok(Outcome::Ok);
        }
    };
    if json {
        print_json(out, &tableaux)?;
    } else {
        writeln!(out, "{} tableaux", tableaux.len())?;
        for t in &tableaux {
            write!(out, "{}", render_tableau(t))?;
        }
    }
    Ok(Outcome::Ok)
}

fn print_reports(out: &mut String, reports: &[VerificationReport], json: bool) -> Result<Outcome> {
    let failed = reports.iter().filter(|r| !r.pass).count();
    if json {
        print_json(out, &reports)?;
    } else {
        for r in reports {
            let time = r.elapsed_ms.map(|t| format!(" ({t:.1} ms)")).unwrap_or_default();
            let status = if r.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {}: {} [{}]{time}", r.suite, r.identity, r.params_string())?;
            if !r.pass {
                writeln!(out, "  lhs: {}", r.lhs.trim_end().replace('\n', "\n       "))?;
                writeln!(out, "  rhs: {}", r.rhs.trim_end().replace('\n', "\n       "))?;
            }
        }
        writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
    }
    Ok(if failed == 0 { Outcome::Ok } else { Outcome::Failed })
}
