use std::fmt::Write;

use reeskit_core::geometry::default_names;
use reeskit_core::summation::{CounterexampleReport, SandwichReport, SummationReport};
use reeskit_core::summation::Verdict;
use reeskit_core::{BigInt, Diagram, Hyperplane, MatrixFamily, Rational};
use serde_json::Value;
use serde::Serialize;

/// Output shapes for `--format text` and `--format latex`; JSON comes from
/// `Serialize`.
pub trait Render {
    fn text(&self) -> String;

    /// Hyperplane lists in subscript notation; reports without any fall back
    /// to text.
    fn latex(&self) -> Option<String> {
        None
    }
}

/// A hyperplane with the variable names it is rendered against.
#[derive(Serialize)]
pub struct Facet {
    #[serde(flatten)]
    pub hyperplane: Hyperplane,
    pub equation: String,
    #[serde(skip)]
    latex: String,
}

impl Facet {
    pub fn new(hyperplane: Hyperplane, names: &Names) -> Self {
        let equation = hyperplane.render(&names.text);
        let latex = hyperplane.render(&names.latex);
        Facet { hyperplane, equation, latex }
    }
}

pub struct Names {
    text: Vec<String>,
    latex: Vec<String>,
}

impl Names {
    /// `v1, v2, …` / `v_{1}, v_{2}, …`.
    pub fn single(stem: &str, dim: usize) -> Self {
        let tex_stem = if stem == "gamma" { "\\gamma" } else { stem };
        Names {
            text: default_names(stem, dim),
            latex: (1..=dim).map(|i| format!("{tex_stem}_{{{i}}}")).collect(),
        }
    }

    /// Left coordinates `X1, …`, right coordinates `Y1, …`; in LaTeX the
    /// block-indexed `X_{1,i}`, `X_{2,j}`.
    pub fn joined(left: usize, right: usize) -> Self {
        let mut text = default_names("X", left);
        text.extend(default_names("Y", right));
        let latex = (1..=left).map(|i| format!("X_{{1,{i}}}")).chain((1..=right).map(|j| format!("X_{{2,{j}}}"))).collect();
        Names { text, latex }
    }
}

fn family_name(f: &MatrixFamily) -> String {
    match *f {
        MatrixFamily::Generic { m, n } => format!("generic {m}x{n}"),
        MatrixFamily::Symmetric { n } => format!("symmetric {n}x{n}"),
        MatrixFamily::Pfaffian { n } => format!("pfaffian {n}x{n}"),
        MatrixFamily::Hankel { n } => format!("hankel, {n} entries"),
    }
}

/// JSON with one object field per line and every array of scalars or
/// arrays kept on a single line.
pub fn layout(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(depth + 1), Value::String(k.clone()));
                write_value(out, v, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(depth));
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, v, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(depth));
        }
        _ => out.push_str(&value.to_string()),
    }
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn tuples(vs: &[Vec<i64>]) -> String {
    if vs.is_empty() {
        return "(none)".into();
    }
    vs.iter().map(|v| tuple(v)).collect::<Vec<_>>().join(" ")
}

fn rationals(rs: &[Rational]) -> String {
    rs.iter().map(Rational::to_string).collect::<Vec<_>>().join(", ")
}

fn facet_lines(out: &mut String, facets: &[Facet]) {
    for f in facets {
        let _ = writeln!(out, "  {}", f.equation);
    }
}

fn latex_lines(facets: &[Facet]) -> String {
    facets.iter().map(|f| format!("${}$\n", f.latex)).collect()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Source {
    Monomial { cone_valuations: Vec<Vec<i64>> },
    Diagram { family: MatrixFamily, lambda: Vec<Diagram> },
}

#[derive(Serialize)]
pub struct PackageReport {
    #[serde(flatten)]
    pub source: Source,
    pub ambient_dim: usize,
    pub facets: Vec<Facet>,
    #[serde(with = "reeskit_core::io::bigint")]
    pub denominator_bound: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical_valuations: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valuations_match_largest_part: Option<bool>,
}

impl Render for PackageReport {
    fn text(&self) -> String {
        let mut out = String::new();
        match &self.source {
            Source::Monomial { cone_valuations } => {
                let _ = writeln!(out, "cone valuations: {}", tuples(cone_valuations));
            }
            Source::Diagram { family, lambda } => {
                let shapes: Vec<String> = lambda.iter().map(Diagram::to_string).collect();
                let _ = writeln!(out, "family: {}", family_name(family));
                let _ = writeln!(out, "shapes: {}", shapes.join(" "));
            }
        }
        let _ = writeln!(out, "ambient dimension: {}", self.ambient_dim);
        let _ = writeln!(out, "facets:");
        facet_lines(&mut out, &self.facets);
        let _ = writeln!(out, "denominator bound: {}", self.denominator_bound);
        if let Some(idx) = &self.canonical_valuations {
            let names: Vec<String> = idx.iter().map(|t| format!("gamma{t}")).collect();
            let _ = writeln!(out, "rees valuations: {}", names.join(", "));
        }
        if let Some(b) = self.valuations_match_largest_part {
            let _ = writeln!(out, "valuations are gamma1..gamma(largest part): {}", yes(b));
        }
        out
    }

    fn latex(&self) -> Option<String> {
        Some(latex_lines(&self.facets))
    }
}

#[derive(Serialize)]
pub struct GeneratorsReport {
    pub w: Rational,
    pub stabilized: Rational,
    pub generators: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shapes: Option<Vec<Diagram>>,
}

impl Render for GeneratorsReport {
    fn text(&self) -> String {
        let mut out = format!("w = {} (stabilized {})\n", self.w, self.stabilized);
        match &self.shapes {
            Some(shapes) => {
                let s: Vec<String> = shapes.iter().map(Diagram::to_string).collect();
                let _ = writeln!(out, "generating shapes: {}", s.join(" "));
            }
            None => {
                let _ = writeln!(out, "generators: {}", tuples(&self.generators));
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct MembershipReport {
    pub w: Rational,
    pub point: Vec<i64>,
    pub member: bool,
}

impl Render for MembershipReport {
    fn text(&self) -> String {
        format!("{} at w = {}: {}\n", tuple(&self.point), self.w, if self.member { "member" } else { "not a member" })
    }
}

#[derive(Serialize)]
pub struct SymbolicReport {
    pub w: Rational,
    pub exponents: Vec<Vec<i64>>,
}

impl Render for SymbolicReport {
    fn text(&self) -> String {
        format!("w = {}\nsymbolic exponents: {}\n", self.w, tuples(&self.exponents))
    }
}

#[derive(Serialize)]
pub struct Pairing {
    pub left: usize,
    pub right: usize,
    #[serde(flatten)]
    pub facet: Facet,
}

#[derive(Serialize)]
pub struct JoinReport {
    pub left_dim: usize,
    pub right_dim: usize,
    pub left_facets: usize,
    pub right_facets: usize,
    pub paired: Vec<Pairing>,
    pub facet_count: usize,
    pub stars_are_facets: bool,
}

impl JoinReport {
    pub fn holds(&self) -> bool {
        self.stars_are_facets && self.facet_count == self.left_facets * self.right_facets
    }
}

impl Render for JoinReport {
    fn text(&self) -> String {
        let mut out = format!("dimensions: {} + {}\n", self.left_dim, self.right_dim);
        let _ = writeln!(out, "paired facets:");
        for p in &self.paired {
            let _ = writeln!(out, "  [{} * {}] {}", p.left, p.right, p.facet.equation);
        }
        let _ = writeln!(
            out,
            "facets of the join: {} = {} x {}: {}",
            self.facet_count,
            self.left_facets,
            self.right_facets,
            yes(self.holds())
        );
        out
    }

    fn latex(&self) -> Option<String> {
        Some(self.paired.iter().map(|p| format!("$H_{{{}}}\\star H'_{{{}}}\\colon {}$\n", p.left + 1, p.right + 1, p.facet.latex)).collect())
    }
}

#[derive(Serialize)]
pub struct StarReport {
    pub products: Vec<Pairing>,
}

impl Render for StarReport {
    fn text(&self) -> String {
        self.products.iter().map(|p| format!("[{} * {}] {}\n", p.left, p.right, p.facet.equation)).collect()
    }

    fn latex(&self) -> Option<String> {
        Some(self.products.iter().map(|p| format!("${}$\n", p.facet.latex)).collect())
    }
}

impl Render for SummationReport {
    fn text(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Equal => "EQUAL",
            Verdict::LhsNotInRhs => "LHS_NOT_IN_RHS",
            Verdict::RhsNotInLhs => "RHS_NOT_IN_LHS",
        };
        let mut out = format!("verdict: {verdict}\n");
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {}", tuple(w));
        }
        let _ = writeln!(out, "alpha terms: {}", rationals(&self.alpha_terms));
        let _ = writeln!(out, "closure of the sum: {}", tuples(&self.lhs));
        let _ = writeln!(out, "sum of products: {}", tuples(&self.rhs));
        let _ = writeln!(out, "status: {}", self.status);
        out
    }
}

impl Render for SandwichReport {
    fn text(&self) -> String {
        let mut out = format!("w = {}, tau = {}\n", self.w, self.tau);
        let _ = writeln!(out, "left inclusion: {}", yes(self.left_inclusion));
        let _ = writeln!(out, "right inclusion: {}", yes(self.right_inclusion));
        let _ = writeln!(out, "right inclusion on the whole grid: {}", yes(self.right_inclusion_all_grid));
        if let Some(w0) = &self.w0 {
            let _ = writeln!(out, "w0: {w0}");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {}", tuple(w));
        }
        out
    }
}

impl Render for CounterexampleReport {
    fn text(&self) -> String {
        format!(
            "n = {}\nwitness: {}\nin closure of (I + J)^{}: {}\nin the sum of products: {}\n",
            self.n,
            tuple(&self.witness),
            2 * self.n + 1,
            yes(self.in_closure),
            yes(self.in_sum)
        )
    }
}

#[derive(Serialize)]
pub struct ResurgenceReport {
    pub m: u32,
    pub t: u32,
    pub resurgence: Rational,
}

impl Render for ResurgenceReport {
    fn text(&self) -> String {
        format!("asymptotic resurgence of the {}-minors, m = {}: {}\n", self.t, self.m, self.resurgence)
    }

    fn latex(&self) -> Option<String> {
        let r = &self.resurgence;
        let value = if r.is_integer() { r.to_string() } else { format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom()) };
        Some(format!("$\\hat\\rho(I_{{{}}}) = {value}$\n", self.t))
    }
}
