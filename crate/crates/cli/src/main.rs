//! `m11`: command-line front end. Records go to stdout as JSON lines, a short
//! summary goes to stderr. Exit status is 0 when every check passes, 1 when a
//! check fails and 2 on an error, which is also printed as a JSON object.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use m11::cm_points::{
    density_diagnostic, lambda_search, locate_cm_points, q_det, q_eval, Form, LambdaCandidate, QuadForm,
};
use m11::cyclotomic::klein_j_q;
use m11::reduction_lab::{
    classify_np, count_points_rational, counts_for, lehr_criterion, newton_polygon, scan_basic, st_predict,
    theorem_hypotheses, val5_j, CountCache, LPolynomial, NpLabel,
};
use m11::ring_f0::{F0Elem, Q};
use m11::triangle_group::{angle_at, certify_relations, generators, special_points, svg, triangle_area};
use m11::{Error, Result};

pub const CACHE_ENV: &str = "M11_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "m11", version, about = "Triangle group, CM points and reductions of y^5 = x(x-1)(x-t)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Decimal places for floating-point output.
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,
    /// Search box for norm-equation solving (default: derived from the target).
    #[arg(long = "box", global = true)]
    box_bound: Option<f64>,
    /// Upper bound (exclusive) on primes for scans.
    #[arg(long, global = true, default_value_t = 60)]
    pmax: u64,
    /// Bound on N(λ) for λ-searches.
    #[arg(long, global = true, default_value_t = 10_000)]
    norm_bound: u64,
    /// Count cache directory; overrides $M11_CACHE_DIR. No cache when neither is set.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Machine output only: suppress the summary on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact relations of A_P, A_Q, A_R.
    CertifyGroup,
    /// Fixed points P~, Q~, R~ and the triangle they span.
    FixedPoints,
    /// The forms q_QP, q_QR, q_PR; optionally evaluated at (x, y).
    Forms {
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Admissible λ with N(λ) ≤ --norm-bound.
    SearchLambda {
        /// Primes of F₀ that must split in F₀(√−λ).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        split: Vec<String>,
    },
    /// CM points on G_QP for one λ, or for every λ up to --norm-bound.
    CmLocate {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// #C_t(F_{p^k}).
    Count {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// L-polynomial of C_t at p.
    Lpoly {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        p: u64,
    },
    /// Newton polygon and its classification at p.
    Newton {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        p: u64,
    },
    /// Classification at every good prime below --pmax.
    ScanBasic {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Behaviour at 5 and the hypotheses for basic reduction; with --lambda and
    /// --prime also the Shimura–Taniyama prediction.
    Hypotheses {
        /// J as an element of F₀.
        #[arg(long, allow_hyphen_values = true)]
        j: Option<String>,
        /// Rational t; J(t) is used.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        prime: Option<String>,
    },
    /// Histogram of CM parameters of the first --count candidates.
    Density {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        bins: usize,
    },
    /// SVG figures.
    Plot {
        #[arg(long)]
        triangle: bool,
        #[arg(long)]
        geodesic: bool,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

struct Out {
    quiet: bool,
    precision: usize,
    ok: bool,
}

impl Out {
    fn emit(&self, v: Value) {
        println!("{}", serde_json::to_string(&v).expect("JSON values serialize"));
    }

    fn say(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }

    fn check(&mut self, holds: bool) {
        self.ok &= holds;
    }

    fn round(&self, x: f64) -> Value {
        let s = format!("{:.*}", self.precision, x);
        json!(s.parse::<f64>().unwrap_or(x))
    }
}

fn parse_q(s: &str) -> Result<Q> {
    s.parse::<Q>().map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

fn parse_f0(s: &str) -> Result<F0Elem> {
    s.parse::<F0Elem>()
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn cache_dir(flag: &Option<PathBuf>) -> Option<PathBuf> {
    flag.clone().or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

fn run(cli: &Cli, out: &mut Out) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::CertifyGroup => {
            let rels = certify_relations(&generators());
            for r in &rels {
                out.emit(json!({"kind": "relation", "name": r.name, "holds": r.holds}));
                out.check(r.holds);
            }
            let n = rels.iter().filter(|r| r.holds).count();
            out.say(format!("{n}/{} relations hold", rels.len()));
        }
        Command::FixedPoints => {
            let pts = special_points()?;
            for (name, p) in ["P~", "Q~", "R~"].iter().zip(&pts) {
                out.emit(json!({"kind": "fixed_point", "name": name, "re": out.round(p.re), "im": out.round(p.im)}));
                out.say(format!("{name} = {:.*} + {:.*}i", g.precision, p.re, g.precision, p.im));
            }
            let area = triangle_area(&pts[0], &pts[1], &pts[2]);
            let angle_r = angle_at(&pts[2], &pts[0], &pts[1]);
            out.emit(json!({
                "kind": "triangle",
                "area": out.round(area),
                "pi_over_15": out.round(std::f64::consts::PI / 15.0),
                "angle_r": out.round(angle_r),
            }));
            out.check((area - std::f64::consts::PI / 15.0).abs() < m11::tolerance::GEOMETRY);
            out.say(format!("area {area:.12}"));
        }
        Command::Forms { x, y } => {
            for form in Form::all() {
                let qf = QuadForm::new(form);
                out.emit(json!({"kind": "form", "form": to_value(&qf)}));
                out.say(format!("{form:?}: discriminant {}", qf.discriminant));
            }
            if let (Some(x), Some(y)) = (x, y) {
                let (x, y) = (parse_f0(x)?, parse_f0(y)?);
                for form in Form::all() {
                    let v = q_eval(form, &x, &y);
                    let d = q_det(form, &x, &y)?;
                    out.check(v == d);
                    out.emit(json!({"kind": "value", "form": to_value(&form), "value": v.to_string(), "det": d.to_string()}));
                }
            }
        }
        Command::SearchLambda { split } => {
            let s = split.iter().map(|x| parse_f0(x)).collect::<Result<Vec<_>>>()?;
            let found = lambda_search(g.norm_bound, &s)?;
            for c in &found {
                out.check(c.accepted());
                out.emit(json!({"kind": "lambda", "candidate": to_value(c)}));
            }
            out.say(format!("{} admissible λ with N(λ) ≤ {}", found.len(), g.norm_bound));
        }
        Command::CmLocate { lambda } => {
            let cands: Vec<LambdaCandidate> = match lambda {
                Some(l) => vec![LambdaCandidate::evaluate(&parse_f0(l)?, &[], g.box_bound)?],
                None => lambda_search(g.norm_bound, &[])?,
            };
            for c in &cands {
                let pts = locate_cm_points(c, g.box_bound)?;
                out.check(pts.len() == 2 && pts[0].order_tag != pts[1].order_tag);
                for p in &pts {
                    out.emit(json!({
                        "kind": "cm_point",
                        "lambda": c.lambda.to_string(),
                        "t": p.t.to_string(),
                        "t_real": out.round(p.t.tau1()),
                        "re": out.round(p.point.re),
                        "im": out.round(p.point.im),
                        "order": to_value(&p.order_tag),
                    }));
                }
                out.say(format!("λ = {}: {} points", c.lambda, pts.len()));
            }
        }
        Command::Count { t, p, k } => {
            let tq = parse_q(t)?;
            let n = count_points_rational(&tq, *p, *k)?;
            out.emit(json!({"kind": "count", "t": tq.to_string(), "p": p, "k": k, "count": n}));
            out.say(format!("#C_{tq}(F_{p}^{k}) = {n}"));
        }
        Command::Lpoly { t, p } => {
            let tq = parse_q(t)?;
            let counts = counts_for(&tq, *p)?;
            let l = LPolynomial::from_counts(*p, &counts)?;
            let dev = l.root_modulus_deviation();
            out.check(l.functional_equation_holds() && dev <= m11::tolerance::ROOT_MODULUS);
            out.emit(json!({
                "kind": "lpoly", "t": tq.to_string(), "p": p, "counts": counts,
                "coeffs": l.coeffs, "root_modulus_deviation": dev,
            }));
            out.say(format!("L(T) coefficients {:?}", l.coeffs));
        }
        Command::Newton { t, p } => {
            let tq = parse_q(t)?;
            let l = LPolynomial::from_counts(*p, &counts_for(&tq, *p)?)?;
            let np = newton_polygon(&l);
            let cl = classify_np(&np, *p);
            out.check(np.check().is_ok() && cl.label != NpLabel::Other);
            out.emit(json!({
                "kind": "newton", "t": tq.to_string(), "p": p, "p_mod5": cl.p_mod5,
                "slopes": np.slopes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "label": to_value(&cl.label),
            }));
            out.say(format!("p = {p}: {} {:?}", np.display(), cl.label));
        }
        Command::ScanBasic { t } => {
            let tq = parse_q(t)?;
            let mut cache = match cache_dir(&g.cache_dir) {
                Some(dir) => Some(CountCache::open(&dir)?),
                None => None,
            };
            let r = scan_basic(&tq, g.pmax, cache.as_mut())?;
            for row in &r.rows {
                out.emit(json!({"kind": "prime", "row": to_value(row)}));
            }
            for s in &r.skipped {
                out.emit(json!({"kind": "skipped", "p": s.p, "reason": s.reason}));
            }
            out.emit(json!({
                "kind": "summary", "schema": r.schema, "t": r.t, "j": r.j, "p_bound": r.p_bound,
                "basic_primes": r.basic_primes, "mu_ordinary": r.mu_ordinary, "basic": r.basic, "other": r.other,
            }));
            out.check(r.other == 0);
            out.say(format!(
                "t = {}: {} μ-ordinary, {} basic, {} other; basic at {:?}",
                r.t, r.mu_ordinary, r.basic, r.other, r.basic_primes
            ));
        }
        Command::Hypotheses { j, t, lambda, prime } => {
            let jb = match (j, t) {
                (Some(j), None) => Some(parse_f0(j)?),
                (None, Some(t)) => Some(F0Elem::from_rational(klein_j_q(&parse_q(t)?)?)),
                (None, None) => None,
                _ => return Err(Error::Precondition("give --j or --t, not both".into())),
            };
            if let Some(jb) = jb {
                let h = theorem_hypotheses(&jb);
                out.emit(json!({
                    "kind": "hypotheses", "J": jb.to_string(), "val_j": val5_j(&jb),
                    "lehr": to_value(&lehr_criterion(&jb)),
                    "h1": h.h1, "h2": h.h2, "h3": h.h3, "h2_literal": h.h2_literal,
                }));
                out.say(format!(
                    "J = {jb}: h1 {} h2 {} h3 {} (literal h2 {})",
                    h.h1, h.h2, h.h3, h.h2_literal
                ));
            }
            match (lambda, prime) {
                (Some(l), Some(p)) => {
                    let (l, p) = (parse_f0(l)?, parse_f0(p)?);
                    let pred = st_predict(&l, &p)?;
                    out.emit(json!({"kind": "st_predict", "lambda": l.to_string(), "prime": p.to_string(), "prediction": to_value(&pred)}));
                    out.say(format!("λ = {l}, 𝔭 = {p}: {pred:?}"));
                }
                (None, None) => {}
                _ => return Err(Error::Precondition("--lambda and --prime go together".into())),
            }
        }
        Command::Density { count, bins } => {
            let found = lambda_search(g.norm_bound, &[])?;
            let take = (*count).min(found.len());
            let d = density_diagnostic(&found[..take], *bins)?;
            out.check(d.both_sides());
            out.emit(json!({
                "kind": "density", "candidates": take,
                "edges": d.edges.iter().map(|e| out.round(*e)).collect::<Vec<_>>(),
                "counts": d.counts, "left": d.left_of_midpoint, "right": d.right_of_midpoint,
            }));
            out.say(format!("{take} candidates: {} left, {} right", d.left_of_midpoint, d.right_of_midpoint));
        }
        Command::Plot { triangle, geodesic, out: dir } => {
            if !triangle && !geodesic {
                return Err(Error::Precondition("choose --triangle and/or --geodesic".into()));
            }
            std::fs::create_dir_all(dir)?;
            let mut jobs = Vec::new();
            if *triangle {
                jobs.push(("triangle.svg", svg::fundamental_triangle_svg()?));
            }
            if *geodesic {
                jobs.push(("geodesic.svg", svg::marked_points_svg()?));
            }
            for (name, body) in jobs {
                let path = dir.join(name);
                std::fs::write(&path, body.as_bytes())?;
                out.emit(json!({"kind": "plot", "path": path.display().to_string(), "bytes": body.len()}));
                out.say(format!("wrote {}", path.display()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("thread pool: {e}");
        }
    }
    let mut out = Out { quiet: cli.global.json, precision: cli.global.precision, ok: true };
    match run(&cli, &mut out) {
        Ok(()) if out.ok => ExitCode::SUCCESS,
        Ok(()) => {
            out.say("some checks failed");
            ExitCode::from(1)
        }
        Err(e) => {
            out.emit(json!({"error": e.kind(), "message": e.to_string()}));
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
