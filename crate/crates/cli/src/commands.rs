use std::fmt;
use std::fs;
use std::path::Path;

use apolar::figure::render_svg;
use apolar::g2::compatibility_scalar;
use apolar::invariants::transvectant_coeffs;
use apolar::json::{
    coeffs_to_json, moebius_to_json, parse_points, parse_quantic, parse_roots, point_to_json,
    quantic_from_value, quantic_to_json, roots_to_json, JsonScalar,
};
use apolar::{
    catalectant, classify_quartic, fifth_point, from_roots, is_maximally_separated,
    quadratic_invariant, roots_of, self_apolar_sample, verify_theorem1, x_points, BinaryQuantic,
    FifthPointSolutions, GaussianRational, PointCP1, Theorem1Report, C64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::text::{self, Show};
use crate::{Cli, Command, Format};

pub struct Output {
    pub text: String,
    pub status: u8,
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Input(String),
    /// Well-formed input that violates a mathematical precondition.
    Math(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Math(m) => write!(f, "{m}"),
        }
    }
}

impl From<apolar::Error> for CliError {
    fn from(e: apolar::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Math(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed input: {e}"))
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(format: Format, value: Value, text: String) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("serialisable")
        ),
        Format::Text => text,
    }
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, status: 0 })
}

pub fn run(cli: &Cli) -> Result<Output> {
    let (f, tol) = (cli.format, cli.tol);
    match &cli.command {
        Command::Invariant { file, catalectant } => {
            let input = read(file)?;
            if cli.exact {
                invariant::<GaussianRational>(f, &input, *catalectant)
            } else {
                invariant::<C64>(f, &input, *catalectant)
            }
        }
        Command::Transvect { p, q, k } => {
            let (p, q) = (read(p)?, read(q)?);
            if cli.exact {
                transvect::<GaussianRational>(f, &p, &q, *k)
            } else {
                transvect::<C64>(f, &p, &q, *k)
            }
        }
        Command::Roots { file } => roots(f, &read(file)?, tol),
        Command::FromRoots { file } => {
            let input = read(file)?;
            if cli.exact {
                quantic_from_roots::<GaussianRational>(f, &input)
            } else {
                quantic_from_roots::<C64>(f, &input)
            }
        }
        Command::Xpoints { file, split } => xpoints(f, &read(file)?, *split, tol),
        Command::VerifyTheorem1 { file } => theorem1(f, &read(file)?, tol),
        Command::FifthPoint { file } => {
            let input = read(file)?;
            if cli.exact {
                fifth::<GaussianRational>(f, &input, tol)
            } else {
                fifth::<C64>(f, &input, tol)
            }
        }
        Command::MaxSeparated { file } => max_separated(f, &read(file)?, tol),
        Command::SampleSelfapolar {
            count,
            seed,
            radius,
        } => ok(sample(*count, *seed, *radius)),
        Command::ClassifyQuartic { file } => {
            let input = read(file)?;
            if cli.exact {
                classify::<GaussianRational>(f, &input, tol)
            } else {
                classify::<C64>(f, &input, tol)
            }
        }
        Command::G2Check { file } => {
            let input = read(file)?;
            if cli.exact {
                g2_check::<GaussianRational>(f, &input, tol)
            } else {
                g2_check::<C64>(f, &input, tol)
            }
        }
        Command::Plot { file, pole, output } => plot(&read(file)?, pole, output.as_deref()),
    }
}

fn invariant<T: Show>(f: Format, input: &str, with_catalectant: bool) -> Result<Output> {
    let q: BinaryQuantic<T> = parse_quantic(input)?;
    if q.degree() % 2 == 1 {
        return Err(CliError::Math(format!(
            "𝓘 needs even degree, got {}",
            q.degree()
        )));
    }
    let i = quadratic_invariant(&q);
    let j = if with_catalectant {
        Some(catalectant(&q)?)
    } else {
        None
    };
    let mut text = format!("{}\n", i.show());
    if let Some(j) = &j {
        text.push_str(&format!("{}\n", j.show()));
    }
    let mut value = json!({ "invariant": i.to_json() });
    if let Some(j) = &j {
        value["catalectant"] = j.to_json();
    }
    ok(emit(f, value, text))
}

fn transvect<T: Show>(f: Format, p: &str, q: &str, k: usize) -> Result<Output> {
    let (p, q): (BinaryQuantic<T>, BinaryQuantic<T>) = (parse_quantic(p)?, parse_quantic(q)?);
    let t = transvectant_coeffs(p.coeffs(), q.coeffs(), k)?;
    ok(emit(f, coeffs_to_json(&t), format!("{}\n", text::list(&t))))
}

fn roots(f: Format, input: &str, tol: f64) -> Result<Output> {
    let q: BinaryQuantic = parse_quantic(input)?;
    let r = roots_of(&q, tol);
    let text: String = r
        .points()
        .iter()
        .map(|(p, m)| match m {
            1 => format!("{}\n", text::point(p)),
            m => format!("{} (multiplicity {m})\n", text::point(p)),
        })
        .collect();
    ok(emit(f, roots_to_json(&r), text))
}

fn quantic_from_roots<T: Show>(f: Format, input: &str) -> Result<Output> {
    let q = from_roots(&parse_roots::<T>(input)?)?;
    ok(emit(
        f,
        quantic_to_json(&q),
        format!("{}\n", text::list(q.coeffs())),
    ))
}

fn xpoints(f: Format, input: &str, split: Option<usize>, tol: f64) -> Result<Output> {
    let q: BinaryQuantic = parse_quantic(input)?;
    let which: Vec<usize> = match split {
        Some(i) => vec![i],
        None => (0..q.degree()).collect(),
    };
    let mut records = Vec::new();
    let mut text = String::new();
    for i in which {
        let r = x_points(&q, i, tol)?;
        let pts: Vec<String> = r
            .xpoints
            .expanded()
            .iter()
            .map(text::point)
            .collect();
        text.push_str(&format!(
            "split {i} at {}: delta {}; X-points {}\n",
            text::point(&r.split_root),
            text::list(r.quartic.coeffs()),
            pts.join(", ")
        ));
        records.push(json!({
            "split": i,
            "split_root": point_to_json(&r.split_root, false),
            "others": r.others.iter().map(|p| point_to_json(p, false)).collect::<Vec<_>>(),
            "delta_coeffs": quantic_to_json(&r.quartic),
            "xpoints": roots_to_json(&r.xpoints),
        }));
    }
    let value = match split {
        Some(_) => records.pop().expect("one record"),
        None => Value::Array(records),
    };
    ok(emit(f, value, text))
}

fn report_json(r: &Theorem1Report) -> Value {
    let splits: Vec<Value> = r
        .splits
        .iter()
        .map(|s| {
            json!({
                "split": s.result.split,
                "split_root": point_to_json(&s.result.split_root, false),
                "I": quadratic_invariant(&s.result.quartic).to_json(),
                "delta_coeffs": quantic_to_json(&s.result.quartic),
                "class": s.class.to_string(),
                "tetrahedral": s.tetrahedral,
                "centroid_checks": s.centroid_checks,
            })
        })
        .collect();
    json!({
        "invariant": r.invariant.to_json(),
        "self_apolar": r.self_apolar,
        "root_pattern": r.root_pattern,
        "splits": splits,
        "consistent": r.consistent(),
        "centroids_hold": r.centroids_hold(),
        "verified": r.verified(),
    })
}

fn report_text(r: &Theorem1Report) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut out = format!(
        "I = {} (self-apolar: {})\n",
        r.invariant.show(),
        yes(r.self_apolar)
    );
    for s in &r.splits {
        let passed = s
            .centroid_checks
            .iter()
            .filter(|c| **c == Some(true))
            .count();
        out.push_str(&format!(
            "split {} at {}: {}, centroid checks {passed}/{}\n",
            s.result.split,
            text::point(&s.result.split_root),
            s.class,
            s.centroid_checks.len()
        ));
    }
    out.push_str(if r.verified() {
        "verdict: verified\n"
    } else {
        "verdict: FAILED\n"
    });
    out
}

fn theorem1(f: Format, input: &str, tol: f64) -> Result<Output> {
    let value: Value = serde_json::from_str(input)?;
    let (items, many) = match value {
        Value::Array(items) => (items, true),
        other => (vec![other], false),
    };
    let mut reports = Vec::with_capacity(items.len());
    for item in &items {
        let q: BinaryQuantic = quantic_from_value(item)?;
        reports.push(verify_theorem1(&q, tol)?);
    }
    let all = reports.iter().all(Theorem1Report::verified);
    let value = if many {
        Value::Array(reports.iter().map(report_json).collect())
    } else {
        report_json(&reports[0])
    };
    let text = if many {
        reports
            .iter()
            .enumerate()
            .map(|(n, r)| format!("sextic {n}\n{}", report_text(r)))
            .collect()
    } else {
        report_text(&reports[0])
    };
    Ok(Output {
        text: emit(f, value, text),
        status: if all { 0 } else { 1 },
    })
}

fn fifth<T: Show>(f: Format, input: &str, tol: f64) -> Result<Output> {
    let pts: Vec<PointCP1<T>> = parse_points(input)?;
    if pts.len() != 4 {
        return Err(CliError::Input(format!(
            "need four points, got {}",
            pts.len()
        )));
    }
    let mut xs = Vec::with_capacity(4);
    for (i, p) in pts.iter().enumerate() {
        xs.push(p.affine_coordinate().finite().ok_or_else(|| {
            CliError::Math(format!(
                "point {i} is at infinity; the fifth-point quadratic needs finite points"
            ))
        })?);
    }
    let res = fifth_point(
        &[xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone()],
        tol,
    )?;
    let (solutions, text) = match &res.solutions {
        FifthPointSolutions::Points(p) => (
            json!(p.iter().map(|z| z.to_json()).collect::<Vec<_>>()),
            p.iter().map(|z| format!("{}\n", z.show())).collect(),
        ),
        FifthPointSolutions::AllValuesFail => {
            (json!("AllValuesFail"), "AllValuesFail\n".to_string())
        }
        FifthPointSolutions::AnyValue => (json!("AnyValue"), "AnyValue\n".to_string()),
    };
    let value = json!({
        "a": res.a.to_json(),
        "b": res.b.to_json(),
        "c": res.c.to_json(),
        "solutions": solutions,
    });
    ok(emit(f, value, text))
}

fn max_separated(f: Format, input: &str, tol: f64) -> Result<Output> {
    let pts: Vec<PointCP1> = parse_points(input)?;
    let res = is_maximally_separated(&pts, tol)?;
    let mut text = format!("separated: {}\n", if res.separated { "yes" } else { "no" });
    if let (Some(apex), Some(w)) = (res.apex, &res.witness) {
        text.push_str(&format!(
            "apex: {apex}\nwitness: [[{}, {}], [{}, {}]]\n",
            w.a.show(),
            w.b.show(),
            w.c.show(),
            w.d.show()
        ));
    }
    let value = json!({
        "separated": res.separated,
        "apex": res.apex,
        "witness": res.witness.as_ref().map(moebius_to_json),
    });
    ok(emit(f, value, text))
}

/// Uniform on the disc of radius `r`.
fn disc(rng: &mut ChaCha8Rng, r: f64) -> C64 {
    let rho = r * rng.random::<f64>().sqrt();
    C64::from_polar(rho, rng.random_range(0.0..std::f64::consts::TAU))
}

fn sample(count: usize, seed: u64, radius: f64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forms: Vec<Value> = (0..count)
        .map(|_| {
            let (b, c) = (disc(&mut rng, radius), disc(&mut rng, radius));
            quantic_to_json(&self_apolar_sample(b, c))
        })
        .collect();
    format!(
        "{}\n",
        serde_json::to_string_pretty(&forms).expect("serialisable")
    )
}

fn classify<T: Show>(f: Format, input: &str, tol: f64) -> Result<Output> {
    let q: BinaryQuantic<T> = parse_quantic(input)?;
    let class = classify_quartic(&q, tol)?;
    ok(emit(
        f,
        json!({ "class": class.to_string() }),
        format!("{class}\n"),
    ))
}

fn g2_check<T: Show>(f: Format, input: &str, tol: f64) -> Result<Output> {
    let q: BinaryQuantic<T> = parse_quantic(input)?;
    if q.degree() != 6 {
        return Err(CliError::Math(format!(
            "g2-check needs a sextic, got degree {}",
            q.degree()
        )));
    }
    let s = compatibility_scalar(q.coeffs())?;
    let i = quadratic_invariant(&q);
    let norm2 = q.bombieri_norm().powi(2);
    let scale = apolar::calibration::G2_SCALE.to_f64();
    let s_zero = s.is_negligible(scale * norm2, tol);
    let i_zero = i.is_negligible(norm2, tol);
    let ratio = (!i_zero).then(|| s.to_c64() / i.to_c64());
    let mut text = format!("scalar: {}\nI: {}\n", s.show(), i.show());
    if let Some(r) = ratio {
        text.push_str(&format!("ratio: {}\n", r.show()));
    }
    text.push_str(&format!(
        "compatible: {}\n",
        if s_zero == i_zero { "yes" } else { "no" }
    ));
    let value = json!({
        "scalar": s.to_json(),
        "invariant": i.to_json(),
        "ratio": ratio.map(|r| r.to_json()),
        "compatible": s_zero == i_zero,
    });
    Ok(Output {
        text: emit(f, value, text),
        status: if s_zero == i_zero { 0 } else { 1 },
    })
}

fn plot(input: &str, pole: &str, output: Option<&Path>) -> Result<Output> {
    let pts: Vec<PointCP1> = parse_points(input)?;
    let pole: PointCP1 = if pole.trim().eq_ignore_ascii_case("inf") {
        PointCP1::infinity()
    } else {
        apolar::json::parse_point(pole)?
    };
    let svg = render_svg(&pts, &pole);
    match output {
        Some(path) => {
            fs::write(path, svg)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            ok(String::new())
        }
        None => ok(svg),
    }
}
