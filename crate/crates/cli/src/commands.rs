use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde_json::{json, Value};
use vertexlab::exactmath::{
    det_exact, format_rational, parse_rational, FieldScalar, Matrix, Rational,
};
use vertexlab::exec::{check_cap, Exec};
use vertexlab::puzzles::{default_box, enumerate_puzzles, lr_oracle, product_rule, LRResult};
use vertexlab::random::ParamSampler;
use vertexlab::representations::{
    domino_oracle, dt_weighted_count, link_counts, rook_structure, AsmMatrix, BumplessPipeDream,
    Fpl, HeightFunction, LatticePaths, MonotoneTriangle,
};
use vertexlab::schur::{
    asm_product_formula, cauchy_check, cauchy_telescoping, five_vertex_z, schur_bialternant,
    schur_jacobi_trudi, schur_ssyt, Partition,
};
use vertexlab::sixvertex::{
    check_ybe, collect_configs, count_configs, fold_configs, free_fermion_z, izergin,
    lambda_determinant, partition_function_brute, BoundarySpec, EdgeBoundary, SixVertexConfig,
    WeightSystem,
};
use vertexlab::verify::{run_all, run_check, Level, CHECK_NAMES};

use crate::report::Report;

/// Largest size for which `--emit-diagram` draws every configuration.
const DIAGRAM_LIMIT: usize = 4;
/// Largest order handed to the direct domino tiler.
const TILER_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Asm,
    Dwbc,
    Dt,
    FplByLink,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Config,
    Asm,
    Height,
    Monotone,
    Paths,
    ColumnTriangle,
    Bpd,
    Rook,
    Fpl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchurMethod {
    Bialternant,
    Jt,
    Ssyt,
    Lattice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LrMethod {
    Puzzle,
    Oracle,
    Both,
}

pub fn parse_scalars(s: &str) -> Result<Vec<FieldScalar>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| Ok(t.parse::<FieldScalar>()?))
        .collect()
}

fn parse_scalar(s: &str) -> Result<FieldScalar> {
    Ok(s.parse::<FieldScalar>()?)
}

fn scalar_strings(v: &[FieldScalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn asm_text(a: &AsmMatrix) -> String {
    a.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| format!("{v:>2}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn count(kind: CountKind, n: usize, exec: Exec, diagrams: bool) -> Result<Report> {
    check_cap(n)?;
    let mut r = Report::new("count");
    let b = EdgeBoundary::dwbc(n);
    r.set("n", n);
    match kind {
        CountKind::Asm | CountKind::Dwbc => {
            let enumerated = if kind == CountKind::Dwbc {
                count_configs(&b, exec)
            } else {
                fold_configs(
                    &b,
                    exec,
                    0u64,
                    |acc, c| *acc += AsmMatrix::from_config(c).is_ok() as u64,
                    |a, b| a + b,
                )
            };
            let formula = asm_product_formula(n);
            let agree = formula == enumerated.into();
            r.ok = agree;
            let label = if kind == CountKind::Asm {
                "asm"
            } else {
                "dwbc"
            };
            r.set("kind", label);
            r.set("enumerated", enumerated);
            r.set("formula", formula.to_string());
            r.set("agree", agree);
            r.columns(&["kind", "n", "enumerated", "formula", "agree"]);
            r.row(vec![
                label.into(),
                n.to_string(),
                enumerated.to_string(),
                formula.to_string(),
                agree.to_string(),
            ]);
            r.line(format!(
                "{label} n={n}: enumerated {enumerated}, formula {formula}, agree {agree}"
            ));
            if diagrams {
                if n > DIAGRAM_LIMIT {
                    r.line(format!("diagrams omitted for n > {DIAGRAM_LIMIT}"));
                } else {
                    for c in collect_configs(&b, exec) {
                        r.diagrams.push(match kind {
                            CountKind::Asm => asm_text(&AsmMatrix::from_config(&c)?),
                            _ => c.render_ascii(),
                        });
                    }
                }
            }
        }
        CountKind::Dt => {
            let weighted = dt_weighted_count(n, exec)?;
            let formula = 1u128 << (n * (n + 1) / 2);
            let tiler = (n <= TILER_LIMIT).then(|| domino_oracle(n));
            let agree = weighted == formula && tiler.is_none_or(|t| t as u128 == formula);
            r.ok = agree;
            r.set("kind", "dt");
            r.set("enumerated", weighted.to_string());
            r.set("tiler", tiler.map(|t| t.to_string()));
            r.set("formula", formula.to_string());
            r.set("agree", agree);
            r.columns(&["kind", "n", "enumerated", "tiler", "formula", "agree"]);
            let tiler_s = tiler.map_or("-".to_string(), |t| t.to_string());
            r.row(vec![
                "dt".into(),
                n.to_string(),
                weighted.to_string(),
                tiler_s.clone(),
                formula.to_string(),
                agree.to_string(),
            ]);
            r.line(format!(
                "dt n={n}: weighted ASM sum {weighted}, direct tilings {tiler_s}, formula {formula}, agree {agree}"
            ));
        }
        CountKind::FplByLink => {
            let lc = link_counts(n, exec)?;
            let formula = asm_product_formula(n);
            let total = lc.total();
            let invariant = lc.rotation_invariant();
            let agree = formula == total.into() && invariant;
            r.ok = agree;
            let sorted = lc.sorted_values();
            r.set("kind", "fpl-by-link");
            r.set(
                "counts",
                lc.counts
                    .iter()
                    .map(|(lp, c)| json!({"pattern": lp, "count": c}))
                    .collect::<Vec<_>>(),
            );
            r.set("sorted", sorted.clone());
            r.set("total", total);
            r.set("formula", formula.to_string());
            r.set("rotation_invariant", invariant);
            r.set("agree", agree);
            r.columns(&["pattern", "count"]);
            for (lp, c) in &lc.counts {
                r.row(vec![lp.to_string(), c.to_string()]);
                r.line(format!("{lp}  {c}"));
            }
            let tuple: Vec<String> = sorted.iter().map(u64::to_string).collect();
            r.line(format!("sorted ({})", tuple.join(",")));
            r.line(format!(
                "total {total}, formula {formula}, rotation invariant {invariant}, agree {agree}"
            ));
        }
    }
    Ok(r)
}

fn to_hub(from: Repr, input: &str) -> Result<HeightFunction> {
    let bad = |what: &str| format!("input is not a valid {what}");
    let h = match from {
        Repr::Config => {
            let c: SixVertexConfig =
                serde_json::from_str(input).with_context(|| bad("configuration"))?;
            HeightFunction::from_config(&c)?
        }
        Repr::Asm => {
            let a: AsmMatrix = serde_json::from_str(input).with_context(|| bad("ASM"))?;
            HeightFunction::from_asm(&a)
        }
        Repr::Height => serde_json::from_str(input).with_context(|| bad("height function"))?,
        Repr::Monotone => {
            let t: MonotoneTriangle =
                serde_json::from_str(input).with_context(|| bad("monotone triangle"))?;
            HeightFunction::from_config(&t.to_config())?
        }
        Repr::Paths => {
            let p: LatticePaths =
                serde_json::from_str(input).with_context(|| bad("path family"))?;
            HeightFunction::from_config(&p.to_config()?)?
        }
        other => bail!(
            "{} is an output-only representation",
            other.to_possible_value().expect("named").get_name()
        ),
    };
    Ok(h)
}

pub fn convert(from: Repr, to: Repr, input: &str, diagrams: bool) -> Result<Report> {
    let h = to_hub(from, input)?;
    let c = h.to_config();
    let mut r = Report::new("convert");
    let (value, text) = match to {
        Repr::Config => (json!(c), c.render_ascii()),
        Repr::Asm => {
            let a = h.to_asm();
            (json!(a), asm_text(&a))
        }
        Repr::Height => {
            let text = h
                .grid()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| format!("{v:>2}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            (json!(h), text)
        }
        Repr::Monotone | Repr::ColumnTriangle => {
            let t = if to == Repr::Monotone {
                MonotoneTriangle::from_config(&c)?
            } else {
                MonotoneTriangle::column_triangle(&c)?
            };
            let text = t
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            (json!(t), text)
        }
        Repr::Paths => {
            let p = LatticePaths::from_config(&c)?;
            let text = p.paths.join("\n");
            (json!(p), text)
        }
        Repr::Bpd => {
            let p = BumplessPipeDream::from_config(&c)?.permutation();
            (json!(p), p.to_string())
        }
        Repr::Rook => {
            let p = rook_structure(&c)?;
            let text = p
                .as_ref()
                .map_or("not a permutation matrix".to_string(), |p| p.to_string());
            (json!(p), text)
        }
        Repr::Fpl => {
            let f = Fpl::from_config(&c)?;
            let lp = f.link_pattern()?;
            (
                json!({"fpl": f, "link_pattern": lp}),
                format!("link pattern {lp}"),
            )
        }
    };
    r.columns(&["row", "value"]);
    for (i, l) in text.lines().enumerate() {
        r.row(vec![i.to_string(), l.to_string()]);
    }
    r.line(text);
    if diagrams {
        r.diagrams.push(c.render_ascii());
    }
    r.bare_json = Some(value);
    Ok(r)
}

pub struct IzerginArgs {
    pub n: usize,
    pub q: Option<String>,
    pub xs: Option<String>,
    pub ys: Option<String>,
}

pub fn izergin_cmd(a: &IzerginArgs, seed: u64, exec: Exec) -> Result<Report> {
    let mut s = ParamSampler::new(seed);
    let q = match &a.q {
        Some(t) => parse_scalar(t)?,
        None => s.scalar(),
    };
    let given = |o: &Option<String>| o.as_deref().map(parse_scalars).transpose();
    let (gx, gy) = (given(&a.xs)?, given(&a.ys)?);
    let n = gx.as_ref().or(gy.as_ref()).map_or(a.n, Vec::len);
    check_cap(n)?;
    let (xs, ys) = if let (Some(x), Some(y)) = (&gx, &gy) {
        (x.clone(), y.clone())
    } else {
        s.sample_until(
            |s| {
                let xs = gx.clone().unwrap_or_else(|| s.distinct_scalars(n));
                let ys = gy.clone().unwrap_or_else(|| s.distinct_scalars(n));
                (xs, ys)
            },
            |(xs, ys)| izergin(&q, xs, ys).is_ok(),
        )
    };
    let det = izergin(&q, &xs, &ys)?;
    let w = WeightSystem::SixSymbolic {
        q: q.clone(),
        xs: xs.clone(),
        ys: ys.clone(),
    };
    let brute = partition_function_brute(&w, &BoundarySpec::Dwbc(n), exec)?;
    let mut agree = det == brute;
    let mut r = Report::new("izergin");
    r.set("n", n);
    r.set("q", json!(q));
    r.set("xs", json!(xs));
    r.set("ys", json!(ys));
    r.set("rejected_draws", s.rejected());
    r.set("determinant", json!(det));
    r.set("brute_force", json!(brute));
    r.line(format!("n={n} q={q}"));
    r.line(format!("xs = [{}]", scalar_strings(&xs).join(", ")));
    r.line(format!("ys = [{}]", scalar_strings(&ys).join(", ")));
    if s.rejected() > 0 {
        r.line(format!("rejected {} degenerate draws", s.rejected()));
    }
    r.line(format!("determinant  {det}"));
    r.line(format!("brute force  {brute}"));
    r.columns(&["quantity", "value"]);
    r.row(vec!["determinant".into(), det.to_string()]);
    r.row(vec!["brute_force".into(), brute.to_string()]);
    if q == FieldScalar::i() {
        let ff = free_fermion_z(&xs, &ys)?;
        agree &= ff == brute;
        r.set("free_fermion", json!(ff));
        r.line(format!("free fermion {ff}"));
        r.row(vec!["free_fermion".into(), ff.to_string()]);
    }
    r.set("agree", agree);
    r.line(format!("agree {agree}"));
    r.row(vec!["agree".into(), agree.to_string()]);
    r.ok = agree;
    Ok(r)
}

pub fn ybe_cmd(params: [Option<&str>; 4], seed: u64) -> Result<Report> {
    let mut s = ParamSampler::new(seed);
    let mut v = Vec::with_capacity(4);
    for p in params {
        v.push(match p {
            Some(t) => parse_scalar(t)?,
            None => s.scalar(),
        });
    }
    let rep = check_ybe(&v[0], &v[1], &v[2], &v[3])?;
    let mut r = Report::new("ybe");
    for (k, x) in ["q", "x", "y", "z"].iter().zip(&v) {
        r.set(k, json!(x));
    }
    r.line(format!("q={} x={} y={} z={}", v[0], v[1], v[2], v[3]));
    let bits = |b: &[bool; 3]| {
        b.iter()
            .map(|&x| if x { '1' } else { '0' })
            .collect::<String>()
    };
    r.columns(&["in", "out", "lhs", "rhs", "holds"]);
    for e in &rep.entries {
        r.row(vec![
            bits(&e.input),
            bits(&e.output),
            e.lhs.to_string(),
            e.rhs.to_string(),
            e.holds.to_string(),
        ]);
    }
    let all = rep.all_hold();
    r.set("entries_holding", rep.holding());
    r.set("entries_total", rep.entries.len());
    r.set("holds", all);
    r.line(format!(
        "{} of {} entries agree; equation holds {all}",
        rep.holding(),
        rep.entries.len()
    ));
    r.ok = all;
    Ok(r)
}

fn parse_matrix(s: &str) -> Result<Matrix<Rational>> {
    let v: Vec<Vec<Value>> =
        serde_json::from_str(s).context("matrix must be a JSON array of rows")?;
    let rows = v
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    Value::Number(n) => Ok(parse_rational(&n.to_string())?),
                    Value::String(t) => Ok(parse_rational(&t)?),
                    other => bail!("bad matrix entry {other}"),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows)?)
}

pub fn ldet_cmd(
    matrix: Option<&str>,
    n: usize,
    at: Option<&str>,
    seed: u64,
    exec: Exec,
) -> Result<Report> {
    let m = match matrix {
        Some(s) => parse_matrix(s)?,
        None => {
            let mut smp = ParamSampler::new(seed);
            Matrix::from_fn(n, n, |_, _| smp.rational())
        }
    };
    let size = m.square_size()?;
    check_cap(size)?;
    let p = lambda_determinant(&m, exec)?;
    let det = det_exact(&m)?;
    let minus_one = p.eval(&Rational::from_integer((-1).into()));
    let agree = minus_one == det;
    let mut r = Report::new("ldet");
    r.set(
        "matrix",
        m.to_rows()
            .iter()
            .map(|row| row.iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    r.set(
        "coefficients",
        p.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
    );
    r.set("polynomial", p.to_string());
    r.set("det", format_rational(&det));
    r.set("at_minus_one", format_rational(&minus_one));
    r.line(format!("λ-determinant = {p}"));
    r.line(format!("det = {det}, value at λ=-1 = {minus_one}"));
    r.columns(&["power", "coefficient"]);
    for (k, c) in p.coeffs().iter().enumerate() {
        r.row(vec![k.to_string(), c.to_string()]);
    }
    if let Some(t) = at {
        let x = parse_rational(t)?;
        let v = p.eval(&x);
        r.set(
            "at",
            json!({"lambda": format_rational(&x), "value": format_rational(&v)}),
        );
        r.line(format!("value at λ={x}: {v}"));
    }
    r.set("agree", agree);
    r.line(format!("agree {agree}"));
    r.ok = agree;
    Ok(r)
}

pub fn schur_eval(
    shape: &Partition,
    vars: &[FieldScalar],
    methods: &[SchurMethod],
    exec: Exec,
) -> Result<Report> {
    let all = [
        SchurMethod::Bialternant,
        SchurMethod::Jt,
        SchurMethod::Ssyt,
        SchurMethod::Lattice,
    ];
    let methods = if methods.is_empty() {
        &all[..]
    } else {
        methods
    };
    let n = vars.len();
    if shape.len() > n {
        bail!(vertexlab::Error::InvalidArgument(format!(
            "shape {shape} has more than {n} parts"
        )));
    }
    let mut values = Vec::new();
    for &m in methods {
        let v = match m {
            SchurMethod::Bialternant => schur_bialternant(shape, vars)?,
            SchurMethod::Jt => schur_jacobi_trudi(shape, vars)?,
            SchurMethod::Ssyt => schur_ssyt(shape, vars)?,
            SchurMethod::Lattice => {
                check_cap(n)?;
                let p = shape.first() as usize + n;
                five_vertex_z(shape, n, p, vars, &FieldScalar::int(0), exec)?
            }
        };
        values.push((
            m.to_possible_value().expect("named").get_name().to_string(),
            v,
        ));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut r = Report::new("schur eval");
    r.set("shape", shape.to_string());
    r.set("vars", json!(vars));
    r.set(
        "values",
        values
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect::<serde_json::Map<_, _>>(),
    );
    r.set("agree", agree);
    r.line(format!(
        "s_({shape}) at ({})",
        scalar_strings(vars).join(", ")
    ));
    r.columns(&["method", "value"]);
    for (k, v) in &values {
        r.line(format!("{k:<12} {v}"));
        r.row(vec![k.clone(), v.to_string()]);
    }
    r.line(format!("agree {agree}"));
    r.ok = agree;
    Ok(r)
}

pub fn cauchy_cmd(m: usize, n: usize, degree: u32, telescoping: Option<u32>) -> Result<Report> {
    check_cap(m.max(n))?;
    let holds = cauchy_check(m, n, degree)?;
    let mut r = Report::new("cauchy");
    r.set("m", m);
    r.set("n", n);
    r.set("degree", degree);
    r.set("holds", holds);
    r.columns(&["identity", "holds"]);
    r.row(vec![
        format!("cauchy m={m} n={n} |λ|<={degree}"),
        holds.to_string(),
    ]);
    r.line(format!(
        "Σ s_λ(w)s_λ(z) = ∏ 1/(1-w_i z_j) with {m}+{n} variables, |λ| ≤ {degree}: {holds}"
    ));
    let mut ok = holds;
    if let Some(p) = telescoping {
        let t = cauchy_telescoping(p)?;
        ok &= t;
        r.set("telescoping", json!({"p": p, "holds": t}));
        r.row(vec![format!("telescoping p={p}"), t.to_string()]);
        r.line(format!("telescoping sum to p={p}: {t}"));
    }
    r.ok = ok;
    Ok(r)
}

pub fn lr_cmd(
    lambda: &Partition,
    mu: &Partition,
    method: LrMethod,
    exec: Exec,
    diagrams: bool,
    emit: Option<&std::path::Path>,
) -> Result<Report> {
    let puzzle = matches!(method, LrMethod::Puzzle | LrMethod::Both)
        .then(|| product_rule(lambda, mu, exec))
        .transpose()?;
    let oracle = matches!(method, LrMethod::Oracle | LrMethod::Both)
        .then(|| lr_oracle(lambda, mu))
        .transpose()?;
    let agree = match (&puzzle, &oracle) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let main: &LRResult = puzzle.as_ref().or(oracle.as_ref()).expect("one method ran");
    let mut r = Report::new("lr");
    r.set("lambda", lambda.to_string());
    r.set("mu", mu.to_string());
    r.set("expansion", json!(main.expansion));
    r.set("agree", agree);
    r.line(format!("s_({lambda}) · s_({mu}) ="));
    r.columns(&["nu", "coefficient"]);
    for (nu, c) in &main.expansion {
        r.row(vec![nu.to_string(), c.to_string()]);
        r.line(format!("  {c} × s_({nu})"));
    }
    let total: u64 = main.expansion.values().sum();
    r.line(format!(
        "{} shapes, {total} puzzles, agree {agree}",
        main.expansion.len()
    ));
    if diagrams || emit.is_some() {
        let (size, k) = default_box(lambda, mu);
        let mut all = Vec::new();
        for nu in main.expansion.keys() {
            for z in enumerate_puzzles(lambda, mu, nu, size, k)? {
                if diagrams {
                    r.diagrams.push(format!("ν = ({nu})\n{}", z.render_ascii()));
                }
                all.push(json!({"nu": nu, "puzzle": z}));
            }
        }
        if let Some(path) = emit {
            let body = serde_json::to_string(&json!({
                "lambda": lambda,
                "mu": mu,
                "N": size,
                "puzzles": all,
            }))?;
            std::fs::write(path, body + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
            r.set("emitted", path.display().to_string());
        }
    }
    r.ok = agree;
    Ok(r)
}

pub fn selftest(level: Level, only: Option<usize>, seed: u64, exec: Exec) -> Result<Report> {
    let outcomes = match only {
        Some(id) if (1..=CHECK_NAMES.len()).contains(&id) => vec![run_check(id, level, seed, exec)],
        Some(id) => bail!(vertexlab::Error::InvalidArgument(format!(
            "no check numbered {id}"
        ))),
        None => run_all(level, seed, exec),
    };
    let mut r = Report::new("selftest");
    r.set("level", if level == Level::Fast { "fast" } else { "full" });
    r.set("checks", json!(outcomes));
    r.columns(&["id", "name", "passed", "seconds", "detail"]);
    let mut passed = 0;
    for o in &outcomes {
        passed += o.passed as usize;
        let secs = o.elapsed.as_secs_f64();
        r.row(vec![
            o.id.to_string(),
            o.name.to_string(),
            o.passed.to_string(),
            format!("{secs:.3}"),
            o.detail.clone(),
        ]);
        r.line(format!(
            "{:>2} {:<22} {}  {secs:>8.3}s  {}",
            o.id,
            o.name,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        ));
    }
    let summary: BTreeMap<&str, usize> = [("passed", passed), ("total", outcomes.len())]
        .into_iter()
        .collect();
    r.set("summary", json!(summary));
    r.line(format!("{passed}/{} checks passed", outcomes.len()));
    r.ok = passed == outcomes.len();
    Ok(r)
}
