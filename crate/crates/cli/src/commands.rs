//! One function per subcommand. Each returns both renderings of its result.

use indom::enumeration::{
    alpha, di_polynomial, gamma_i, gamma_with_limit, independence_polynomial, is_well_covered,
    ENUMERATION_LIMIT, EXHAUSTIVE_LIMIT,
};
use indom::families::{self, compare_gamma_i_generalized_book, verify_family, VerifyReport, VerifyTarget};
use indom::poly::{
    complex_roots, compound_combine, has_positive_window, is_log_concave, is_real_rooted,
    is_symmetric, is_unimodal, isolate_real_roots, newton_check,
};
use indom::{CliqueCover, Graph, IntPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{ConstructArgs, GraphFormat, InputArgs, PolyKind, ProductArgs, ProductOp, VerifyArgs};
use crate::input::{family_spec, load, read_graph_file, read_text};
use crate::table::Table;
use crate::{CliError, Settings};

pub struct Output {
    pub json: Value,
    pub human: String,
    /// A closed form disagreed with enumeration.
    pub mismatch: bool,
}

impl Output {
    fn new(json: Value, human: String) -> Self {
        Output { json, human, mismatch: false }
    }
}

fn poly_json(p: &IntPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn graph6(g: &Graph) -> Result<String, CliError> {
    Ok(g.to_graph6()?)
}

pub fn poly(input: &InputArgs) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let d = di_polynomial(&loaded.graph)?;
    let mut t = Table::default();
    t.kv("graph", &loaded.label).kv("D_i(G, x)", &d);
    Ok(Output::new(poly_json(&d), t.render()))
}

pub fn ipoly(input: &InputArgs) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let p = independence_polynomial(&loaded.graph)?;
    let mut t = Table::default();
    t.kv("graph", &loaded.label).kv("I(G, x)", &p);
    Ok(Output::new(poly_json(&p), t.render()))
}

pub fn roots(input: &InputArgs, of: PolyKind, settings: &Settings) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let p = match of {
        PolyKind::Di => di_polynomial(&loaded.graph)?,
        PolyKind::I => independence_polynomial(&loaded.graph)?,
    };
    let report = complex_roots(&p, settings.tol)?;
    let mut t = Table::default();
    t.kv("graph", &loaded.label)
        .kv("polynomial", &p)
        .kv("real-rooted", report.real_rooted)
        .kv("converged", report.converged)
        .kv("iterations", report.iterations);
    let mut human = t.render();
    if !report.real_roots.is_empty() {
        let mut real = Table::with_header(&["real root in (lo, hi]", "exact", "multiplicity"]);
        for r in &report.real_roots {
            let where_ = if r.is_exact() { r.lo.to_string() } else { format!("({}, {}]", r.lo, r.hi) };
            real.row([where_, r.is_exact().to_string(), r.multiplicity.to_string()]);
        }
        human.push('\n');
        human.push_str(&real.render());
    }
    if !report.complex_roots.is_empty() {
        let mut cx = Table::with_header(&["re", "im", "|z|", "multiplicity", "residual"]);
        for z in &report.complex_roots {
            cx.row([
                format!("{:.12}", z.re),
                format!("{:.12}", z.im),
                format!("{:.12}", z.modulus()),
                z.multiplicity.to_string(),
                format!("{:.1e}", z.residual),
            ]);
        }
        human.push('\n');
        human.push_str(&cx.render());
    }
    let json = serde_json::to_value(&report).expect("root reports serialize");
    Ok(Output::new(json, human))
}

pub fn analyze(input: &InputArgs, settings: &Settings) -> Result<Output, CliError> {
    let loaded = load(input)?;
    let g = &loaded.graph;
    let d = di_polynomial(g)?;
    let i = independence_polynomial(g)?;
    let gm = gamma_with_limit(g, settings.exhaustive_limit)?;
    let gi = gamma_i(g)?;
    let a = alpha(g)?;
    let well_covered = is_well_covered(g)?;
    let claw_free = g.is_claw_free();
    let unimodal = is_unimodal(&d)?;
    let log_concave = is_log_concave(&d)?;
    let symmetric = is_symmetric(&d)?;
    let newton = newton_check(&d)?;
    let real_rooted = is_real_rooted(&d)?;
    let positive_window = has_positive_window(&d);
    let json = json!({
        "graph6": graph6(g)?,
        "order": g.order(),
        "size": g.size(),
        "gamma": gm,
        "gamma_i": gi,
        "alpha": a,
        "well_covered": well_covered,
        "claw_free": claw_free,
        "di": poly_json(&d),
        "independence": poly_json(&i),
        "positive_window": positive_window,
        "unimodal": unimodal,
        "log_concave": log_concave,
        "symmetric": symmetric,
        "newton": newton,
        "real_rooted": real_rooted,
    });
    let mut t = Table::default();
    t.kv("graph", &loaded.label)
        .kv("order", g.order())
        .kv("size", g.size())
        .kv("gamma", gm)
        .kv("gamma_i", gi)
        .kv("alpha", a)
        .kv("well-covered", well_covered)
        .kv("claw-free", claw_free)
        .kv("D_i(G, x)", &d)
        .kv("I(G, x)", &i)
        .kv("positive window", positive_window)
        .kv("unimodal", unimodal)
        .kv("log-concave", log_concave)
        .kv("symmetric", symmetric)
        .kv("newton", newton)
        .kv("real-rooted", real_rooted);
    Ok(Output::new(json, t.render()))
}

pub fn family(args: &crate::args::FamilyArgs, format: GraphFormat) -> Result<Output, CliError> {
    let spec = family_spec(args)?;
    let g = spec.graph()?;
    let g6 = graph6(&g)?;
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    let json = json!({
        "family": spec.to_string(),
        "order": g.order(),
        "size": g.size(),
        "graph6": g6,
        "edges": edges,
    });
    let human = match format {
        GraphFormat::Graph6 => format!("{g6}\n"),
        GraphFormat::EdgeList => g.to_edge_list(),
    };
    Ok(Output::new(json, human))
}

fn second_factor(args: &ProductArgs) -> Result<Option<Graph>, CliError> {
    if let Some(text) = &args.h_graph6 {
        return Ok(Some(Graph::from_graph6(text)?));
    }
    if let Some(path) = &args.h_file {
        return Ok(Some(read_graph_file(path)?));
    }
    Ok(None)
}

pub fn product(args: &ProductArgs) -> Result<Output, CliError> {
    let loaded = load(&args.input)?;
    let g = &loaded.graph;
    let h = second_factor(args)?;
    let need_h = || h.clone().ok_or_else(|| CliError::Usage("this operation needs --h-graph6 or --h-file".into()));
    let (result, predicted, detail) = match args.op {
        ProductOp::Join => {
            let h = need_h()?;
            let predicted = di_polynomial(g)? + di_polynomial(&h)?;
            (g.join(&h), predicted, "D_i(G) + D_i(H)".to_string())
        }
        ProductOp::Lex => {
            let h = need_h()?;
            let predicted = di_polynomial(g)?.compose(&di_polynomial(&h)?);
            (g.lexicographic(&h)?, predicted, "D_i(G)(D_i(H))".to_string())
        }
        ProductOp::Corona => {
            let h = need_h()?;
            let predicted = compound_combine(&independence_polynomial(g)?, &di_polynomial(&h)?, g.order())?;
            (g.corona(&h), predicted, format!("compound formula, q = {}", g.order()))
        }
        ProductOp::Compound => {
            let h = need_h()?;
            let cover = match &args.cover {
                Some(path) => CliqueCover::parse(g, &read_text(path)?)?,
                None => CliqueCover::greedy(g),
            };
            let predicted = compound_combine(&independence_polynomial(g)?, &di_polynomial(&h)?, cover.len())?;
            (g.compound(&cover, &h)?, predicted, format!("compound formula, q = {}", cover.len()))
        }
        ProductOp::Expansion => {
            let r = args.r.ok_or_else(|| CliError::Usage("expansion needs --r".into()))?;
            let result = g.expansion(r)?;
            let predicted = di_polynomial(g)?.scale_arg(&BigInt::from(r));
            (result, predicted, format!("D_i(G)({r}x)"))
        }
    };
    let oracle = if result.order() <= ENUMERATION_LIMIT { Some(di_polynomial(&result)?) } else { None };
    let matched = oracle.as_ref().map(|o| *o == predicted);
    let json = json!({
        "op": format!("{:?}", args.op).to_lowercase(),
        "graph6": graph6(&result)?,
        "order": result.order(),
        "size": result.size(),
        "predicted": poly_json(&predicted),
        "oracle": oracle.as_ref().map(poly_json),
        "match": matched,
    });
    let mut t = Table::default();
    t.kv("product", graph6(&result)?)
        .kv("order", result.order())
        .kv("size", result.size())
        .kv("predicted", format!("{predicted}   [{detail}]"))
        .kv("enumerated", oracle.as_ref().map_or("skipped (too many vertices)".to_string(), ToString::to_string))
        .kv("match", matched.map_or("-".to_string(), |m| m.to_string()));
    Ok(Output::new(json, t.render()))
}

/// Parses `4`, `2..6`, `2..=6` or comma-separated mixtures of these.
/// Ranges are inclusive.
pub fn parse_values(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("invalid parameter list {text:?}"));
    let mut out = Vec::new();
    for piece in text.split(',').map(str::trim) {
        if let Some((a, b)) = piece.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(piece.parse().map_err(|_| bad())?);
        }
    }
    Ok(out)
}

fn default_values(family: &str, param: &str) -> Vec<usize> {
    let r = |a: usize, b: usize| (a..=b).collect::<Vec<_>>();
    match (family, param) {
        ("path", "n") => r(1, 18),
        ("book", "n") => r(2, 6),
        ("generalized_book" | "gamma_i_generalized_book", "n") => r(2, 4),
        ("generalized_book" | "gamma_i_generalized_book", "m") => r(3, 9),
        ("friendship", "n") => r(1, 6),
        ("generalized_friendship_paper", "q") | ("generalized_friendship", "q") => r(3, 6),
        ("generalized_friendship_paper", "n") => r(2, 3),
        ("generalized_friendship", "n") => r(1, 3),
        ("complete_multipartite_special", "m") => r(2, 5),
        ("complete_multipartite_special", "n") => r(1, 4),
        ("h_graph", "n") => r(1, 10),
        _ => Vec::new(),
    }
}

fn param_grid(args: &VerifyArgs, names: &[&str]) -> Result<Vec<Vec<usize>>, CliError> {
    let mut axes = Vec::new();
    for &name in names {
        let given = match name {
            "n" => &args.n,
            "m" => &args.m,
            "q" => &args.q,
            _ => unreachable!("parameter names are n, m, q"),
        };
        let values = match given {
            Some(text) => parse_values(text)?,
            None => default_values(&args.family, name),
        };
        axes.push(values);
    }
    let mut grid = vec![Vec::new()];
    for axis in axes {
        grid = grid
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(grid)
}

fn format_params(names: &[&str], values: &[usize]) -> String {
    names.iter().zip(values).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(" ")
}

pub fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    if args.family == "gamma_i_generalized_book" {
        return verify_gamma_i(args);
    }
    let target = VerifyTarget::from_name(&args.family).ok_or_else(|| {
        let names: Vec<&str> = VerifyTarget::ALL.iter().map(|t| t.name()).collect();
        CliError::Usage(format!(
            "unknown verify family {:?}; expected one of {}, gamma_i_generalized_book",
            args.family,
            names.join(", ")
        ))
    })?;
    let names = target.param_names();
    let reports = verify_family(target, &param_grid(args, names)?)?;
    let mut t = Table::with_header(&["family", "params", "closed form", "oracle", "match", "note"]);
    for r in &reports {
        t.row([
            r.family.clone(),
            format_params(names, &r.params),
            r.closed_form.to_string(),
            r.oracle.as_ref().map_or("-".to_string(), ToString::to_string),
            if r.skipped { "skipped".to_string() } else { r.matched.to_string() },
            r.note.clone(),
        ]);
    }
    let mismatch = reports.iter().any(VerifyReport::is_mismatch);
    let json = serde_json::to_value(&reports).expect("reports serialize");
    Ok(Output { json, human: t.render(), mismatch })
}

/// Comparison only: a disagreement is reported but is not a mismatch.
fn verify_gamma_i(args: &VerifyArgs) -> Result<Output, CliError> {
    let names = ["n", "m"];
    let mut rows = Vec::new();
    let mut t = Table::with_header(&["family", "params", "formula", "oracle", "match"]);
    for p in param_grid(args, &names)? {
        let c = compare_gamma_i_generalized_book(p[0], p[1])?;
        t.row([
            c.family.clone(),
            format_params(&names, &c.params),
            c.formula.to_string(),
            c.oracle.to_string(),
            c.matched.to_string(),
        ]);
        rows.push(c);
    }
    let json = serde_json::to_value(&rows).expect("comparisons serialize");
    Ok(Output::new(json, t.render()))
}

pub fn construct(args: &ConstructArgs) -> Result<Output, CliError> {
    if let Some(n) = args.alternating_sum {
        let g = families::construct_alternating_sum_graph(n);
        let d = di_polynomial(&g)?;
        let value = d.evaluate_int(&BigInt::from(-1));
        let json = json!({
            "construction": "alternating_sum",
            "n": n,
            "graph6": graph6(&g)?,
            "order": g.order(),
            "size": g.size(),
            "di": poly_json(&d),
            "value_at_minus_one": value.to_string(),
        });
        let mut t = Table::default();
        t.kv("graph6", graph6(&g)?)
            .kv("order", g.order())
            .kv("size", g.size())
            .kv("D_i(G, x)", &d)
            .kv("D_i(G, -1)", &value);
        return Ok(Output::new(json, t.render()));
    }
    let n = args.integer_root.expect("clap requires one construction");
    let g = families::construct_integer_root_graph(n)?;
    let d = di_polynomial(&g)?;
    let roots = isolate_real_roots(&d)?;
    let json = json!({
        "construction": "integer_root",
        "n": n,
        "graph6": graph6(&g)?,
        "order": g.order(),
        "size": g.size(),
        "di": poly_json(&d),
        "real_roots": serde_json::to_value(&roots).expect("roots serialize"),
    });
    let listed: Vec<String> = roots
        .iter()
        .map(|r| if r.is_exact() { r.lo.to_string() } else { format!("({}, {}]", r.lo, r.hi) })
        .collect();
    let mut t = Table::default();
    t.kv("graph6", graph6(&g)?)
        .kv("order", g.order())
        .kv("size", g.size())
        .kv("D_i(G, x)", &d)
        .kv("real roots", listed.join(", "));
    Ok(Output::new(json, t.render()))
}

/// Limit for exhaustive searches given `--max-n`.
pub fn exhaustive_limit(max_n: Option<usize>) -> usize {
    max_n.unwrap_or(EXHAUSTIVE_LIMIT)
}
