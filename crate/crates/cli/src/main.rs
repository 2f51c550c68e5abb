mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reeskit_core::diagram::{canonical_valuation_indices, det_asymptotic_resurgence, symbolic_intersection_exponents};
use reeskit_core::geometry::polyhedron_membership;
use reeskit_core::oracle::{closure_generators_bruteforce, closure_membership_bruteforce, facets_fourier_motzkin, ClosureVerdict, DEFAULT_M_CAP, MAX_FM_DIM};
use reeskit_core::package::DEFAULT_CAP;
use reeskit_core::random::rng;
use reeskit_core::semigroup::{rational_power_generators, rational_power_membership};
use reeskit_core::summation::{
    asymptotic_sandwich_check, check_summation, join_packages, same_ring_counterexample, JoinedPackage, Verdict,
};
use reeskit_core::{Diagram, Error, PositivePolyhedron, Rational, ReesPackage};
use serde::Serialize;

use input::{parse_hyperplanes, parse_ideal, parse_pair, random_ideal, read_json, Ideal};
use report::*;

#[derive(Parser)]
#[command(name = "reeskit", version, about = "Rees packages, rational powers and summation checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// JSON input file, `-` for stdin.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for a random instance when no input is given.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Bound on enumerated semigroup elements.
    #[arg(long, global = true, env = "REESKIT_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Cross-check the result against brute-force oracles.
    #[arg(long, global = true, hide = true)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Facets, Rees valuations and denominator bound of an ideal.
    Package,
    /// Rational power at level w: generators, membership of a point, or
    /// symbolic exponents for a diagram ideal.
    Ratpow {
        #[arg(long)]
        w: Rational,
        #[arg(long, conflicts_with_all = ["point", "symbolic"])]
        generators: bool,
        /// Exponent vector, or shape parts for a diagram ideal.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Option<Vec<i64>>,
        #[arg(long, conflicts_with = "point")]
        symbolic: bool,
    },
    /// Joined package of a pair and the pairing of its valuations.
    Join,
    /// Compares the closure of the sum against the sum of products at level w.
    SumCheck {
        #[arg(long)]
        w: Rational,
    },
    /// The same-ring counterexample at parameter n.
    Counterexample {
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Both sides of the asymptotic inclusion at (w, tau), with a w0 search.
    Sandwich {
        #[arg(long)]
        w: Rational,
        /// Defaults to w/2.
        #[arg(long)]
        tau: Option<Rational>,
    },
    /// Asymptotic resurgence of the ideal of t-minors of a generic m-row matrix.
    Resurgence {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: u32,
    },
    /// Star products of two hyperplane lists.
    Star,
}

#[derive(Debug)]
pub enum Failure {
    /// A verdict came out false; the report is still printed.
    Verdict(String),
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verdict(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

struct Output {
    body: String,
    verdict: Result<(), Failure>,
}

fn emit<R: Render + Serialize>(format: Format, report: &R) -> String {
    match format {
        Format::Json => layout(&serde_json::to_value(report).expect("reports serialize")),
        Format::Text => report.text(),
        Format::Latex => report.latex().unwrap_or_else(|| report.text()),
    }
}

fn verdict(ok: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verdict(msg()))
    }
}

impl Common {
    fn ideal(&self) -> Result<Ideal, Failure> {
        match (&self.input, self.seed) {
            (Some(path), _) => parse_ideal(read_json(path)?),
            (None, Some(seed)) => Ok(random_ideal(&mut rng(seed))),
            (None, None) => Err(Failure::Input("--input or --seed is required".into())),
        }
    }

    fn pair(&self) -> Result<(Ideal, Ideal), Failure> {
        match (&self.input, self.seed) {
            (Some(path), _) => parse_pair(read_json(path)?),
            (None, Some(seed)) => {
                let mut r = rng(seed);
                Ok((random_ideal(&mut r), random_ideal(&mut r)))
            }
            (None, None) => Err(Failure::Input("--input or --seed is required".into())),
        }
    }

    fn joined(&self) -> Result<JoinedPackage, Failure> {
        let (left, right) = self.pair()?;
        let jp = join_packages(&left.package()?, &right.package()?)?;
        if self.oracle {
            oracle_facets(jp.omega(), jp.omega_facets())?;
        }
        Ok(jp)
    }
}

fn oracle_facets(p: &PositivePolyhedron, facets: &[reeskit_core::Hyperplane]) -> Result<(), Failure> {
    if p.dim() > MAX_FM_DIM {
        return Ok(());
    }
    let fm = facets_fourier_motzkin(p)?;
    verdict(fm == facets, || format!("oracle: Fourier-Motzkin facets differ: {fm:?}"))
}

fn package_report(ideal: &Ideal, pkg: &ReesPackage) -> PackageReport {
    let names = Names::single(pkg.value_map().stem(), pkg.ambient_dim());
    let facets = pkg.facets().iter().map(|h| Facet::new(h.clone(), &names)).collect();
    let (source, canonical, largest) = match ideal {
        Ideal::Monomial(i) => {
            let cone = i.semigroup().valuations().iter().map(|v| v.normal().to_vec()).collect();
            (Source::Monomial { cone_valuations: cone }, None, None)
        }
        Ideal::Diagram(d) => {
            let canonical = canonical_valuation_indices(pkg);
            let largest = d.family().is_hankel().then(|| {
                let s1 = d.lambda()[0].largest_part() as usize;
                canonical.as_ref().is_some_and(|idx| {
                    let mut idx = idx.clone();
                    idx.sort_unstable();
                    idx == (1..=s1).collect::<Vec<_>>()
                })
            });
            (Source::Diagram { family: *d.family(), lambda: d.lambda().to_vec() }, canonical, largest)
        }
    };
    PackageReport {
        source,
        ambient_dim: pkg.ambient_dim(),
        facets,
        denominator_bound: pkg.denominator_bound(),
        canonical_valuations: canonical,
        valuations_match_largest_part: largest,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let c = &cli.common;
    let f = c.format;
    let out = |body: String| Ok(Output { body, verdict: Ok(()) });
    match &cli.command {
        Command::Package => {
            let ideal = c.ideal()?;
            let pkg = ideal.package()?;
            if c.oracle {
                oracle_facets(pkg.polyhedron(), pkg.facets())?;
            }
            let report = package_report(&ideal, &pkg);
            let ok = report.valuations_match_largest_part != Some(false);
            Ok(Output {
                body: emit(f, &report),
                verdict: verdict(ok, || "Hankel valuations differ from gamma1..gamma(largest part)".into()),
            })
        }
        Command::Ratpow { w, point: Some(point), .. } => {
            let ideal = c.ideal()?;
            let member = match &ideal {
                Ideal::Monomial(i) => {
                    let member = rational_power_membership(i, w, point)?;
                    if c.oracle {
                        oracle_membership(i, w, point, member)?;
                    }
                    member
                }
                Ideal::Diagram(d) => {
                    let parts = point
                        .iter()
                        .map(|&p| u32::try_from(p).map_err(|_| Failure::Input(format!("invalid part {p}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    reeskit_core::diagram::rational_power_shape_membership(d, w, &Diagram::new(parts)?)?
                }
            };
            out(emit(f, &MembershipReport { w: w.clone(), point: point.clone(), member }))
        }
        Command::Ratpow { w, symbolic: true, .. } => {
            let Ideal::Diagram(d) = c.ideal()? else {
                return Err(Failure::Input("--symbolic needs a diagram ideal".into()));
            };
            let exponents = symbolic_intersection_exponents(&d, w, c.cap)?;
            out(emit(f, &SymbolicReport { w: w.clone(), exponents }))
        }
        Command::Ratpow { w, .. } => {
            let ideal = c.ideal()?;
            let pkg = ideal.package()?;
            let stabilized = pkg.stabilize(w);
            let report = match &ideal {
                Ideal::Monomial(i) => {
                    let generators = rational_power_generators(i, w, c.cap)?;
                    if c.oracle {
                        oracle_generators(i, w, &generators)?;
                    }
                    GeneratorsReport { w: w.clone(), stabilized, generators, shapes: None }
                }
                Ideal::Diagram(_) => {
                    let elements = pkg.minimal_generators(w, c.cap)?;
                    let mut shapes = elements.iter().map(|e| Diagram::from_multiplicities(&e.label)).collect::<Result<Vec<_>, _>>()?;
                    shapes.sort();
                    let generators = shapes.iter().map(|s| s.parts().iter().map(|&p| i64::from(p)).collect()).collect();
                    GeneratorsReport { w: w.clone(), stabilized, generators, shapes: Some(shapes) }
                }
            };
            out(emit(f, &report))
        }
        Command::Join => {
            let jp = c.joined()?;
            let names = Names::joined(jp.left_dim(), jp.right_dim());
            let paired = jp
                .paired_facets()
                .iter()
                .map(|p| Pairing { left: p.left, right: p.right, facet: Facet::new(p.hyperplane.clone(), &names) })
                .collect();
            let report = JoinReport {
                left_dim: jp.left_dim(),
                right_dim: jp.right_dim(),
                left_facets: jp.left().facets().len(),
                right_facets: jp.right().facets().len(),
                paired,
                facet_count: jp.omega_facets().len(),
                stars_are_facets: jp.star_products_are_facets(),
            };
            let ok = report.holds();
            Ok(Output { body: emit(f, &report), verdict: verdict(ok, || "facets of the join are not the star products".into()) })
        }
        Command::SumCheck { w } => {
            let jp = c.joined()?;
            let report = check_summation(&jp, w, c.cap)?;
            let ok = report.verdict == Verdict::Equal;
            Ok(Output { body: emit(f, &report), verdict: verdict(ok, || format!("summation verdict {:?}", report.verdict)) })
        }
        Command::Counterexample { n } => {
            let report = same_ring_counterexample(*n)?;
            if c.oracle {
                oracle_counterexample(*n, report.in_closure)?;
            }
            let ok = report.in_closure && !report.in_sum;
            Ok(Output { body: emit(f, &report), verdict: verdict(ok, || "witness does not separate the two sides".into()) })
        }
        Command::Sandwich { w, tau } => {
            let jp = c.joined()?;
            let tau = tau.clone().unwrap_or_else(|| w * &Rational::new(1, 2).expect("nonzero denominator"));
            let report = asymptotic_sandwich_check(&jp, w, &tau, c.cap)?;
            let ok = report.left_inclusion && report.right_inclusion;
            Ok(Output { body: emit(f, &report), verdict: verdict(ok, || "an inclusion is violated".into()) })
        }
        Command::Resurgence { m, t } => {
            let resurgence = det_asymptotic_resurgence(*m, *t)?;
            out(emit(f, &ResurgenceReport { m: *m, t: *t, resurgence }))
        }
        Command::Star => {
            let path = c.input.as_ref().ok_or_else(|| Failure::Input("star needs --input".into()))?;
            let (left, right) = parse_hyperplanes(read_json(path)?)?;
            let (l, r) = match (left.first(), right.first()) {
                (Some(a), Some(b)) => (a.dim(), b.dim()),
                _ => return Err(Failure::Input("both hyperplane lists must be nonempty".into())),
            };
            if left.iter().any(|h| h.dim() != l) || right.iter().any(|h| h.dim() != r) {
                return Err(Failure::Input("hyperplanes on one side must share a dimension".into()));
            }
            let names = Names::joined(l, r);
            let mut products = Vec::new();
            for (i, a) in left.iter().enumerate() {
                for (j, b) in right.iter().enumerate() {
                    products.push(Pairing { left: i, right: j, facet: Facet::new(a.star(b), &names) });
                }
            }
            out(emit(f, &StarReport { products }))
        }
    }
}

fn orthant_point(point: &[i64]) -> Vec<Rational> {
    point.iter().map(|&x| Rational::from_int(x)).collect()
}

fn integer_level(w: &Rational) -> Option<u32> {
    if w.is_integer() {
        w.to_i64_pair().and_then(|(n, _)| u32::try_from(n).ok())
    } else {
        None
    }
}

fn is_orthant(i: &reeskit_core::MonomialIdeal) -> bool {
    let s = i.semigroup();
    *s == reeskit_core::AffineSemigroup::orthant(s.rank())
}

fn oracle_membership(i: &reeskit_core::MonomialIdeal, w: &Rational, point: &[i64], member: bool) -> Result<(), Failure> {
    let Some(p) = integer_level(w).filter(|_| is_orthant(i)) else {
        return Ok(());
    };
    let lp = polyhedron_membership(&i.newton_polyhedron(), w, &orthant_point(point))?;
    match closure_membership_bruteforce(i, p, point, DEFAULT_M_CAP)? {
        ClosureVerdict::Inconclusive => Ok(()),
        brute => verdict(brute.as_bool() == Some(member) && lp == member, || format!("oracle: brute force says {brute:?}")),
    }
}

fn oracle_generators(i: &reeskit_core::MonomialIdeal, w: &Rational, generators: &[Vec<i64>]) -> Result<(), Failure> {
    let Some(p) = integer_level(w).filter(|&p| p > 0 && is_orthant(i)) else {
        return Ok(());
    };
    let rank = i.semigroup().rank();
    let top = i.exponents().iter().flatten().copied().max().unwrap_or(0) * i64::from(p);
    let mut brute = closure_generators_bruteforce(i, p, &vec![top; rank], DEFAULT_M_CAP)?;
    let mut ours = generators.to_vec();
    brute.sort();
    ours.sort();
    verdict(brute == ours, || format!("oracle: brute-force generators {brute:?}"))
}

fn oracle_counterexample(n: u32, in_closure: bool) -> Result<(), Failure> {
    let sum = reeskit_core::MonomialIdeal::in_polynomial_ring(2, vec![vec![1, 3], vec![3, 1]])?;
    let c = 4 * i64::from(n) + 2;
    match closure_membership_bruteforce(&sum, 2 * n + 1, &[c, c], DEFAULT_M_CAP)? {
        ClosureVerdict::Inconclusive => Ok(()),
        brute => verdict(brute.as_bool() == Some(in_closure), || format!("oracle: brute force says {brute:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output { body, verdict }) => {
            print!("{body}");
            match verdict {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => report_failure(&e),
            }
        }
        Err(e) => report_failure(&e),
    }
}

fn report_failure(e: &Failure) -> ExitCode {
    let (Failure::Verdict(msg) | Failure::Input(msg) | Failure::Cap(msg)) = e;
    eprintln!("error: {msg}");
    ExitCode::from(e.code())
}
