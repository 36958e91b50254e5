use cubix_core::ball::{self, BallPoint, HyperplaneNormal};
use cubix_core::e6_weyl::{self, LineConfiguration};
use cubix_core::hermitian::{enumerate_vectors, Isometry, LatticeVector};
use cubix_core::milnor::{self, ExponentVector};
use cubix_core::{Error, F3Vector};
use serde_json::{json, Value};

use crate::report::{Report, Status};
use crate::suites::{self, Options, SuiteName};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const RESOURCE_CAP: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const BAD_INPUT: i32 = 65;
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn bad_input(e: impl std::fmt::Display) -> Self {
        Self {
            code: exit::BAD_INPUT,
            message: e.to_string(),
        }
    }

    /// Cap overruns get their own code; anything else during a computation
    /// means a check could not be completed.
    pub fn computation(e: Error) -> Self {
        let code = match e {
            Error::ResourceCap { .. } => exit::RESOURCE_CAP,
            _ => exit::VERIFY_FAILED,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub type Outcome = std::result::Result<Report, Failure>;

pub fn verify(suite: SuiteName, opts: &Options) -> Outcome {
    let outcome = suites::run(suite, opts).map_err(Failure::computation)?;
    let status = if outcome.passed() { Status::Ok } else { Status::Fail };
    let inputs = json!({
        "suite": suite,
        "height": opts.height,
        "tol": opts.tol,
        "cap": opts.cap,
        "seed": opts.seed,
    });
    let mut result = json!({ "checks": outcome.checks });
    if !outcome.findings.is_empty() {
        result["findings"] = Value::Object(outcome.findings.clone());
    }
    let mut r = Report::ok(format!("verify {}", suite.as_str()), inputs, result).with_counts(outcome.counts);
    r.status = status;
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EnumKind {
    Roots,
    Lines,
    Tritangents,
    DoubleSixes,
    Cusps,
    Hyperplanes,
}

impl EnumKind {
    fn as_str(&self) -> &'static str {
        match self {
            Self::Roots => "roots",
            Self::Lines => "lines",
            Self::Tritangents => "tritangents",
            Self::DoubleSixes => "double-sixes",
            Self::Cusps => "cusps",
            Self::Hyperplanes => "hyperplanes",
        }
    }
}

fn f3_text(v: &F3Vector) -> String {
    let parts: Vec<String> = v.0.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn enumerate(kind: EnumKind, height: i64) -> Outcome {
    let (items, count): (Vec<Value>, usize) = match kind {
        EnumKind::Roots => {
            let rs = e6_weyl::roots();
            let n = rs.len();
            (rs.iter().enumerate().map(|(i, r)| json!({"index": i, "vector": r.0})).collect(), n)
        }
        EnumKind::Lines => {
            let cfg = LineConfiguration::new();
            let adj = cfg.adjacency_lists();
            let items = cfg
                .lines()
                .iter()
                .enumerate()
                .map(|(i, l)| json!({"index": i, "vector": l.0, "meets": adj[i]}))
                .collect();
            (items, cfg.lines().len())
        }
        EnumKind::Tritangents => {
            let cfg = LineConfiguration::new();
            let t = cfg.tritangents();
            let n = t.len();
            (t.iter().map(|x| json!({"lines": x})).collect(), n)
        }
        EnumKind::DoubleSixes => {
            let cfg = LineConfiguration::new();
            let d = cfg.double_sixes();
            let n = d.len();
            (d.iter().map(|(a, b)| json!({"a": a, "b": b})).collect(), n)
        }
        EnumKind::Cusps => {
            let lifts = suites::cusp_classes(height).map_err(Failure::computation)?;
            let nulls = cubix_core::finite_orthogonal::null_points();
            let items = nulls
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    json!({
                        "index": i,
                        "point": f3_text(p),
                        "lift": lifts.get(p).map(|v| v.to_string()),
                    })
                })
                .collect();
            (items, nulls.len())
        }
        EnumKind::Hyperplanes => {
            if height < 1 {
                return Err(Failure::usage("enum hyperplanes needs --height >= 1"));
            }
            let vs = enumerate_vectors(1, height);
            let n = vs.len();
            (vs.iter().map(|v| json!(v.to_string())).collect(), n)
        }
    };
    let key = kind.as_str().replace('-', "_");
    Ok(Report::ok(
        format!("enum {}", kind.as_str()),
        json!({"kind": kind.as_str(), "height": height}),
        json!({ "items": items }),
    )
    .with_counts([(key, count as u64)]))
}

/// Twelve decimals, as printed and as a JSON number.
fn rounded(x: f64) -> (String, f64) {
    let s = format!("{x:.12}");
    let v = s.parse().unwrap_or(x);
    (s, v)
}

fn point_json(p: &BallPoint) -> Value {
    json!(p.coords().iter().map(|z| ball::format_complex(*z, 12)).collect::<Vec<_>>())
}

fn parse_normal(s: &str) -> std::result::Result<HyperplaneNormal, Failure> {
    let body = s.trim().strip_prefix("normal=").unwrap_or(s);
    let v: LatticeVector = body.parse().map_err(Failure::bad_input)?;
    HyperplaneNormal::new(v).map_err(Failure::bad_input)
}

#[derive(Debug, Clone, PartialEq, clap::Subcommand)]
pub enum BallCommand {
    /// Distance between two ball points.
    Dist { x: String, y: String },
    /// Distance from a point to the hyperplane of a norm-1 lattice vector.
    Gap {
        x: String,
        /// Lattice vector, optionally prefixed with `normal=`.
        normal: String,
    },
    /// Image of a point under a lattice isometry (five rows).
    Apply { matrix: String, x: String },
    /// Null point of F3^5 attached to a primitive null lattice vector.
    CuspClass { vector: String },
    /// First height-bounded hyperplane passing within --tol of a point.
    Member { x: String },
}

pub fn ball_command(cmd: &BallCommand, height: i64, tol: f64) -> Outcome {
    let point = |s: &str| s.parse::<BallPoint>().map_err(Failure::bad_input);
    match cmd {
        BallCommand::Dist { x, y } => {
            let (px, py) = (point(x)?, point(y)?);
            let (text, value) = rounded(ball::dist(&px, &py));
            Ok(Report::ok(
                "ball dist",
                json!({"x": point_json(&px), "y": point_json(&py)}),
                json!({"distance": value, "text": text}),
            ))
        }
        BallCommand::Gap { x, normal } => {
            let px = point(x)?;
            let n = parse_normal(normal)?;
            let (text, value) = rounded(ball::hyperplane_gap(&px, &n));
            Ok(Report::ok(
                "ball gap",
                json!({"x": point_json(&px), "normal": n.vector().to_string()}),
                json!({"gap": value, "text": text}),
            ))
        }
        BallCommand::Apply { matrix, x } => {
            let m: Isometry = matrix.parse().map_err(Failure::bad_input)?;
            let px = point(x)?;
            let y = ball::apply(&m, &px).map_err(Failure::bad_input)?;
            let rows: Vec<String> = m.entries().iter().map(|r| LatticeVector(*r).to_string()).collect();
            Ok(Report::ok(
                "ball apply",
                json!({"matrix": rows, "x": point_json(&px)}),
                json!({"point": point_json(&y), "text": y.to_string()}),
            ))
        }
        BallCommand::CuspClass { vector } => {
            let v: LatticeVector = vector.parse().map_err(Failure::bad_input)?;
            let c = ball::cusp_class(&v).map_err(Failure::bad_input)?;
            Ok(Report::ok(
                "ball cusp-class",
                json!({"vector": v.to_string()}),
                json!({"class": c, "text": f3_text(&c)}),
            ))
        }
        BallCommand::Member { x } => {
            let px = point(x)?;
            let hit = ball::in_arrangement(&px, height, tol);
            Ok(Report::ok(
                "ball member",
                json!({"x": point_json(&px), "height": height, "tol": tol}),
                json!({
                    "member": hit.is_some(),
                    "normal": hit.map(|n| n.vector().to_string()),
                    "semi_decision": true,
                }),
            ))
        }
    }
}

pub fn milnor_command(exponents: &str) -> Outcome {
    let e: ExponentVector = exponents.parse().map_err(Failure::bad_input)?;
    let eig: Vec<String> = milnor::monodromy_eigenvalues(&e).iter().map(|z| z.to_string()).collect();
    let mu = milnor::milnor_number(&e);
    let order = milnor::monodromy_order(&e);
    Ok(Report::ok(
        "milnor",
        json!({"exponents": e.exponents()}),
        json!({"milnor_number": mu, "eigenvalues": eig, "order": order}),
    )
    .with_counts([("milnor_number", mu), ("order", order)]))
}
