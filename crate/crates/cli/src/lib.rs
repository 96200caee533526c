//! Argument parsing and dispatch for the `kac` binary.
//!
//! [`run`] never prints or exits; it returns the exit code and the text to
//! print so the whole front end can be tested in-process.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kac_core::check::run_checks;
use kac_core::kl::{closure_set, default_depth, kl_row, reliable_targets};
use kac_core::osp::osp_structure;
use kac_core::reduction::{check_block_invariance, height_vector};
use kac_core::{
    path_to_code, primitive_weights, OspWeight, PrimitiveWeightGraph, QPoly, Weight, WeightDiagram,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "kac", version, about = "Composition structure of Kac modules")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Depth bound for the KL closure (default 2r+1) or the osp chain (default 6).
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight diagram of a gl(m|n) weight.
    Diagram(WeightArg),
    /// Atypical pairs and degree.
    Atypicality(WeightArg),
    /// Composition factors as left paths.
    Factors(WeightArg),
    /// Jantzen layers.
    Layers(WeightArg),
    /// Primitive weight graph (skeleton).
    Graph(WeightArg),
    /// Jantzen and Kazhdan-Lusztig polynomials of the weight.
    Kl(WeightArg),
    /// Reduction to the gl(r|r) core.
    Reduce(WeightArg),
    /// Code arrays of the left paths.
    Codes(WeightArg),
    /// Kac module structure for osp(2|2n).
    Osp {
        #[arg(long)]
        n: usize,
        /// "eps;d1,...,dn"
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Run the invariant suite on one weight.
    Check(WeightArg),
}

#[derive(Debug, clap::Args)]
pub struct WeightArg {
    /// "l_m,...,l_1|l'_1,...,l'_n", or "rho:..." for rho-shifted values.
    #[arg(allow_hyphen_values = true)]
    pub weight: String,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<kac_core::Error> for Failure {
    fn from(e: kac_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Output = std::result::Result<(i32, String), Failure>;

pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(done) => done,
        Err(Failure::Domain(msg)) => (1, format!("error: {msg}\n")),
        Err(Failure::Usage(msg)) => (2, format!("error: {msg}\n")),
    }
}

fn parse_weight(arg: &WeightArg) -> std::result::Result<Weight, Failure> {
    let w: Weight = arg.weight.parse()?;
    if !w.is_dominant() {
        return Err(kac_core::Error::NotDominant(w.to_string()).into());
    }
    Ok(w)
}

fn dispatch(cli: &Cli) -> Output {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph(_)) {
        return Err(Failure::Usage(
            "--format dot is only supported by `graph`".into(),
        ));
    }
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Diagram(a) => diagram(&parse_weight(a)?, json),
        Command::Atypicality(a) => atypicality(&parse_weight(a)?, json),
        Command::Factors(a) => factors(&parse_weight(a)?, json),
        Command::Layers(a) => layers(&parse_weight(a)?, json),
        Command::Graph(a) => graph(&parse_weight(a)?, cli.format),
        Command::Kl(a) => kl(&parse_weight(a)?, cli.depth, json),
        Command::Reduce(a) => reduce(&parse_weight(a)?, json),
        Command::Codes(a) => codes(&parse_weight(a)?, json),
        Command::Osp { n, weight } => osp(*n, weight, cli.depth.unwrap_or(6), json),
        Command::Check(a) => check(&parse_weight(a)?, cli.seed, json),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k + 1 < row.len() {
                let pad = widths[k] - cell.chars().count();
                write!(line, "{cell}{}  ", " ".repeat(pad)).unwrap();
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn diagram(w: &Weight, json: bool) -> Output {
    let d = WeightDiagram::of(w)?;
    Ok((
        0,
        if json {
            pretty(&json!({ "weight": w, "rho": w.rho_shift().to_string(), "diagram": d }))
        } else {
            format!("{d}\n")
        },
    ))
}

fn atypicality(w: &Weight, json: bool) -> Output {
    let at = w.atypicality()?;
    if json {
        return Ok((0, pretty(&json!({ "weight": w, "atypicality": at }))));
    }
    let pairs: Vec<String> = at.pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
    let values: Vec<String> = at.shared_values.iter().map(|v| v.to_string()).collect();
    Ok((
        0,
        format!(
            "r = {}\npairs (i,j): {}\nshared rho values: {}\n",
            at.r,
            pairs.join(" "),
            values.join(" ")
        ),
    ))
}

/// Path indices sorted by (length, move string).
fn display_order(g: &PrimitiveWeightGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by_cached_key(|&v| (g.path(v).len(), g.path(v).to_string()));
    order
}

fn factors(w: &Weight, json: bool) -> Output {
    let g = PrimitiveWeightGraph::build(w)?;
    let r = g.r();
    let order = display_order(&g);
    if json {
        let paths: Vec<Value> = order
            .iter()
            .map(|&v| {
                let code = path_to_code(g.path(v), r);
                json!({
                    "moves": g.path(v).to_string(),
                    "length": g.path(v).len(),
                    "weight": g.paths().weights()[v],
                    "code": code.entries,
                    "label": code.label,
                })
            })
            .collect();
        return Ok((0, pretty(&json!({ "weight": w, "paths": paths }))));
    }
    let rows: Vec<Vec<String>> = order
        .iter()
        .map(|&v| {
            vec![
                g.path(v).to_string(),
                g.path(v).len().to_string(),
                g.paths().weights()[v].to_string(),
            ]
        })
        .collect();
    Ok((0, table(&["path", "length", "weight"], &rows)))
}

fn layers(w: &Weight, json: bool) -> Output {
    let g = PrimitiveWeightGraph::build(w)?;
    let order = display_order(&g);
    let layers: Vec<Vec<String>> = g
        .jantzen_layers()
        .iter()
        .map(|layer| {
            order
                .iter()
                .filter(|v| layer.contains(v))
                .map(|&v| g.path(v).to_string())
                .collect()
        })
        .collect();
    if json {
        let sizes: Vec<usize> = layers.iter().map(Vec::len).collect();
        return Ok((
            0,
            pretty(&json!({ "weight": w, "layers": layers, "sizes": sizes })),
        ));
    }
    let mut out = String::new();
    for (k, layer) in layers.iter().enumerate() {
        writeln!(out, "{k}: {}", layer.join(", ")).unwrap();
    }
    Ok((0, out))
}

fn graph(w: &Weight, format: Format) -> Output {
    let g = PrimitiveWeightGraph::build(w)?;
    let text = match format {
        Format::Dot => g.export_dot(),
        Format::Json => {
            let mut s = g.export_json();
            s.push('\n');
            s
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = g
                .edges()
                .map(|(u, v)| {
                    let rule = serde_json::to_value(g.edge_rule(u, v)).expect("serializable");
                    vec![
                        g.path(u).to_string(),
                        g.path(v).to_string(),
                        rule.as_str().unwrap_or_default().to_string(),
                    ]
                })
                .collect();
            format!(
                "{} vertices, {} edges\n{}",
                g.len(),
                g.edge_count(),
                table(&["from", "to", "rule"], &rows)
            )
        }
    };
    Ok((0, text))
}

fn kl(w: &Weight, depth: Option<usize>, json: bool) -> Output {
    let r = w.atypicality()?.r;
    let depth = depth.unwrap_or_else(|| default_depth(r));
    let poset = closure_set(w, depth)?;
    let row = kl_row(&poset, 0);
    let reliable = reliable_targets(&poset, 0);
    let lengths: HashMap<Weight, usize> = primitive_weights(w)?.into_iter().collect();
    let mut pairs = Vec::new();
    for (k, mu) in poset.weights().iter().enumerate() {
        let j = lengths
            .get(mu)
            .map_or_else(QPoly::zero, |&len| QPoly::monomial(1, len));
        let p = row.get(&k).cloned().unwrap_or_else(QPoly::zero);
        if reliable[k] && !(j.is_zero() && p.is_zero()) {
            pairs.push((mu, j, p));
        }
    }
    if json {
        let pairs: Vec<Value> = pairs
            .iter()
            .map(|(mu, j, p)| json!({ "mu": mu, "jantzen": j, "kl": p }))
            .collect();
        return Ok((
            0,
            pretty(&json!({
                "weight": w,
                "depth_bound": depth,
                "closure_size": poset.len(),
                "truncated": poset.is_truncated(),
                "pairs": pairs,
            })),
        ));
    }
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|(mu, j, p)| vec![mu.to_string(), j.to_string(), p.to_string()])
        .collect();
    Ok((
        0,
        format!(
            "# closure: {} weights, depth bound {depth}{}; reliable entries only\n{}",
            poset.len(),
            if poset.is_truncated() {
                ", truncated"
            } else {
                ""
            },
            table(&["mu", "J(q)", "p(q)"], &rows)
        ),
    ))
}

fn reduce(w: &Weight, json: bool) -> Output {
    let h = height_vector(w)?;
    let report = check_block_invariance(w)?;
    let code = if report.passed() { 0 } else { 1 };
    if json {
        return Ok((
            code,
            pretty(&json!({
                "weight": w,
                "height_vector": h,
                "core": report.core,
                "core_diagram": report.core_diagram,
                "report": report,
            })),
        ));
    }
    let mut out = String::new();
    let hs: Vec<String> = h.iter().map(|x| x.to_string()).collect();
    writeln!(out, "height vector: {}", hs.join(" ")).unwrap();
    writeln!(out, "core: {}", report.core).unwrap();
    writeln!(out, "core diagram: {}", report.core_diagram).unwrap();
    writeln!(
        out,
        "paths: {} / {}",
        report.path_count.0, report.path_count.1
    )
    .unwrap();
    writeln!(out, "histogram: {:?}", report.histogram.0).unwrap();
    for (name, ok) in [
        ("same moves", report.same_moves),
        ("weights correspond", report.weights_correspond),
        ("skeleton isomorphic", report.skeleton_isomorphic),
        ("jantzen equal", report.jantzen_equal),
    ] {
        writeln!(out, "{name}: {}", if ok { "yes" } else { "no" }).unwrap();
    }
    for m in &report.mismatches {
        writeln!(out, "mismatch: {m}").unwrap();
    }
    Ok((code, out))
}

fn codes(w: &Weight, json: bool) -> Output {
    let g = PrimitiveWeightGraph::build(w)?;
    let r = g.r();
    let order = display_order(&g);
    if json {
        let codes: Vec<Value> = order
            .iter()
            .map(|&v| json!({ "moves": g.path(v).to_string(), "code": path_to_code(g.path(v), r) }))
            .collect();
        return Ok((0, pretty(&json!({ "weight": w, "codes": codes }))));
    }
    let rows: Vec<Vec<String>> = order
        .iter()
        .map(|&v| {
            vec![
                g.path(v).to_string(),
                path_to_code(g.path(v), r).to_string(),
            ]
        })
        .collect();
    Ok((0, table(&["path", "code"], &rows)))
}

fn osp(n: usize, text: &str, depth: usize, json: bool) -> Output {
    let w: OspWeight = text.parse()?;
    if w.n() != n {
        return Err(Failure::Domain(format!(
            "weight {w} has {} delta coordinates, expected {n}",
            w.n()
        )));
    }
    let report = osp_structure(&w, depth)?;
    if json {
        return Ok((
            0,
            pretty(&serde_json::to_value(&report).expect("serializable")),
        ));
    }
    let mut out = String::new();
    writeln!(out, "weight: {w}").unwrap();
    writeln!(
        out,
        "atypical root: {}",
        report.atypical_root.as_deref().unwrap_or("none")
    )
    .unwrap();
    let factors: Vec<String> = report.factors.iter().map(|f| f.to_string()).collect();
    writeln!(out, "factors: {}", factors.join(", ")).unwrap();
    writeln!(out, "jantzen length: {}", report.jantzen_length).unwrap();
    let rows: Vec<Vec<String>> = report
        .chain
        .iter()
        .enumerate()
        .map(|(i, mu)| {
            let a = report.a.get(i).cloned().unwrap_or_else(QPoly::zero);
            vec![
                i.to_string(),
                mu.to_string(),
                a.to_string(),
                report.p[i].to_string(),
            ]
        })
        .collect();
    out.push_str(&table(&["i", "lambda^(i)", "a(q)", "p(q)"], &rows));
    Ok((0, out))
}

fn check(w: &Weight, seed: u64, json: bool) -> Output {
    let results = run_checks(w, seed)?;
    let code = if results.iter().all(|c| c.passed) {
        0
    } else {
        1
    };
    if json {
        return Ok((
            code,
            pretty(&json!({ "weight": w, "seed": seed, "checks": results })),
        ));
    }
    let mut out = String::new();
    for c in &results {
        if c.passed {
            writeln!(out, "PASS  {}", c.name).unwrap();
        } else {
            writeln!(out, "FAIL  {}: {}", c.name, c.detail).unwrap();
        }
    }
    Ok((code, out))
}
