//! The twelve end-to-end identity checks, shared by the `acceptance`
//! test target and the command-line self test.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::exactmath::{det_exact, FieldScalar, Matrix, Ring, UniPoly};
use crate::exec::{map_collect, Exec};
use crate::puzzles::{enumerate_puzzles, lr_oracle, product_rule, Label, Puzzle};
use crate::random::ParamSampler;
use crate::representations::{
    bruhat_leq, domino_oracle, dt_weighted_count, link_counts, rook_structure, AsmMatrix,
    HeightFunction, LatticePaths, MonotoneTriangle,
};
use crate::schur::{
    asm_count, asm_product_formula, cauchy_check, cauchy_telescoping, extended_five_vertex_z,
    five_vertex_z, ice_point_rhs, lgv_determinant, schur_bialternant, schur_jacobi_trudi,
    schur_ssyt, Partition,
};
use crate::sixvertex::{
    check_recurrence, check_ybe, collect_configs, config_weight, count_configs, free_fermion_z,
    izergin, izergin_cleared, lambda_determinant, EdgeBoundary, RecurrenceOracle, SixVertexConfig,
    WeightSystem,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Sizes up to 4 and fewer random points.
    Fast,
    /// The full acceptance sizes.
    Full,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

pub const CHECK_NAMES: [&str; 12] = [
    "asm-counts",
    "izergin-vs-brute",
    "free-fermion",
    "ice-point",
    "lambda-determinant",
    "domino-tilings",
    "bijections",
    "fpl-link-patterns",
    "schur-four-way",
    "cauchy",
    "littlewood-richardson",
    "yang-baxter",
];

struct Ctx {
    level: Level,
    seed: u64,
    exec: Exec,
}

impl Ctx {
    fn pick<T>(&self, fast: T, full: T) -> T {
        match self.level {
            Level::Fast => fast,
            Level::Full => full,
        }
    }

    fn sampler(&self, id: usize) -> ParamSampler {
        ParamSampler::new(self.seed.wrapping_mul(1000).wrapping_add(id as u64))
    }
}

type Verdict = Result<(bool, String)>;

/// Runs check `id` (1-based).
pub fn run_check(id: usize, level: Level, seed: u64, exec: Exec) -> CheckOutcome {
    let ctx = Ctx { level, seed, exec };
    let start = Instant::now();
    let res = match id {
        1 => asm_counts(&ctx),
        2 => izergin_vs_brute(&ctx),
        3 => free_fermion(&ctx),
        4 => ice_point(&ctx),
        5 => lambda_det(&ctx),
        6 => domino(&ctx),
        7 => bijections(&ctx),
        8 => fpl(&ctx),
        9 => schur_four_way(&ctx),
        10 => cauchy(&ctx),
        11 => littlewood_richardson(&ctx),
        12 => yang_baxter(&ctx),
        _ => Ok((false, format!("no check numbered {id}"))),
    };
    let (passed, detail) = res.unwrap_or_else(|e| (false, format!("error: {e}")));
    let name = CHECK_NAMES
        .get(id.wrapping_sub(1))
        .copied()
        .unwrap_or("unknown");
    CheckOutcome {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(level: Level, seed: u64, exec: Exec) -> Vec<CheckOutcome> {
    (1..=CHECK_NAMES.len())
        .map(|id| run_check(id, level, seed, exec))
        .collect()
}

fn sum_weights(configs: &[SixVertexConfig], table: &[[FieldScalar; 6]]) -> FieldScalar {
    configs
        .iter()
        .fold(FieldScalar::int(0), |acc, c| acc + config_weight(c, table))
}

fn brute_six(
    configs: &[SixVertexConfig],
    q: &FieldScalar,
    xs: &[FieldScalar],
    ys: &[FieldScalar],
) -> Result<FieldScalar> {
    let w = WeightSystem::SixSymbolic {
        q: q.clone(),
        xs: xs.to_vec(),
        ys: ys.to_vec(),
    };
    Ok(sum_weights(configs, &w.site_table(xs.len(), ys.len())?))
}

fn dwbc(n: usize, exec: Exec) -> Vec<SixVertexConfig> {
    collect_configs(&EdgeBoundary::dwbc(n), exec)
}

fn asm_counts(ctx: &Ctx) -> Verdict {
    let expected: [u64; 6] = [1, 2, 7, 42, 429, 7436];
    let top = ctx.pick(4, 6);
    let mut got = Vec::new();
    let mut ok = true;
    for n in 1..=top {
        crate::exec::check_cap(n)?;
        let c = count_configs(&EdgeBoundary::dwbc(n), ctx.exec);
        ok &= c == expected[n - 1] && asm_product_formula(n) == BigInt::from(c);
        got.push(c.to_string());
    }
    Ok((ok, format!("n=1..{top}: {}", got.join(" "))))
}

fn izergin_vs_brute(ctx: &Ctx) -> Verdict {
    let mut s = ctx.sampler(2);
    let (top, reps) = ctx.pick((4, 5), (5, 20));
    let mut ok = true;
    for n in 1..=top {
        let configs = dwbc(n, ctx.exec);
        let mut points = Vec::new();
        while points.len() < reps {
            let q = s.scalar();
            let xs = s.distinct_scalars(n);
            let ys = s.distinct_scalars(n);
            match izergin(&q, &xs, &ys) {
                Ok(z) => points.push((q, xs, ys, z)),
                Err(_) => continue,
            }
        }
        let agree = map_collect(&points, ctx.exec, |(q, xs, ys, z)| {
            brute_six(&configs, q, xs, ys).map(|b| &b == z)
        });
        for a in agree {
            ok &= a?;
        }
    }
    Ok((
        ok,
        format!(
            "n=1..{top}, {reps} points each, {} degenerate draws rejected",
            s.rejected()
        ),
    ))
}

fn free_fermion(ctx: &Ctx) -> Verdict {
    let mut s = ctx.sampler(3);
    let (top, reps) = ctx.pick((4, 3), (5, 5));
    let q = FieldScalar::i();
    let mut ok = true;
    for n in 1..=top {
        for k in 0..reps {
            let (xs, ys, z) = loop {
                let xs = s.distinct_scalars(n);
                let ys = s.distinct_scalars(n);
                if let Ok(z) = izergin(&q, &xs, &ys) {
                    break (xs, ys, z);
                }
            };
            let ff = free_fermion_z(&xs, &ys)?;
            ok &= z == ff;
            if k == 0 && n <= 3 {
                ok &= brute_six(&dwbc(n, ctx.exec), &q, &xs, &ys)? == ff;
            }
        }
    }
    Ok((ok, format!("q=i over Q(i), n=1..{top}, {reps} points each")))
}

fn ice_point(ctx: &Ctx) -> Verdict {
    let mut s = ctx.sampler(4);
    let (top, reps) = ctx.pick((3, 5), (4, 10));
    let w = FieldScalar::omega();
    let mut ok = true;
    for n in 1..=top {
        let configs = if n <= 3 {
            Some(dwbc(n, ctx.exec))
        } else {
            None
        };
        for _ in 0..reps {
            let v = s.distinct_scalars(2 * n);
            let (xs, ys) = v.split_at(n);
            let rhs = ice_point_rhs(xs, ys)?;
            ok &= izergin(&w, xs, ys)? == rhs;
            if let Some(c) = &configs {
                ok &= brute_six(c, &w, xs, ys)? == rhs;
            }
        }
    }
    let formula_ok = (1..=12).all(|n| asm_count(n) == asm_product_formula(n));
    Ok((
        ok && formula_ok,
        format!("q=ω, n=1..{top}, {reps} points each; Schur dimension count = product formula for n=1..12"),
    ))
}

fn lambda_det(ctx: &Ctx) -> Verdict {
    let mut s = ctx.sampler(5);
    let (top, reps) = ctx.pick((4, 20), (5, 50));
    let mut ok = true;
    for n in 1..=top {
        let ones = Matrix::from_fn(n, n, |_, _| crate::exactmath::rat(1, 1));
        let want = UniPoly::from_ints(&[1, 1]).pow((n * (n - 1) / 2) as u32);
        ok &= lambda_determinant(&ones, ctx.exec)? == want;
    }
    for _ in 0..reps {
        let n = s.int_in(1, 4) as usize;
        let m = Matrix::from_fn(n, n, |_, _| s.rational());
        let p = lambda_determinant(&m, ctx.exec)?;
        ok &= p.eval(&crate::exactmath::rat(-1, 1)) == det_exact(&m)?;
    }
    Ok((
        ok,
        format!("all-ones n=1..{top}; {reps} random matrices at λ=-1"),
    ))
}

fn domino(ctx: &Ctx) -> Verdict {
    let top = ctx.pick(4, 6);
    let mut ok = true;
    let mut got = Vec::new();
    for n in 1..=top {
        let w = dt_weighted_count(n, ctx.exec)?;
        let want = 1u128 << (n * (n + 1) / 2);
        ok &= w == want;
        if n <= 4 {
            ok &= domino_oracle(n) as u128 == want;
        }
        got.push(w.to_string());
    }
    Ok((
        ok,
        format!("n=1..{top}: {}; direct tiler n<=4", got.join(" ")),
    ))
}

fn bijections(ctx: &Ctx) -> Verdict {
    let (top, lattice_top) = ctx.pick((4, 3), (5, 4));
    let mut ok = true;
    for n in 1..=top {
        let configs = dwbc(n, ctx.exec);
        let each = map_collect(&configs, ctx.exec, |c| -> Result<bool> {
            let a = AsmMatrix::from_config(c)?;
            let h = HeightFunction::from_config(c)?;
            let m = MonotoneTriangle::from_config(c)?;
            let p = LatticePaths::from_config(c)?;
            Ok(&a.to_config() == c
                && &h.to_config() == c
                && HeightFunction::from_asm(&a) == h
                && h.to_asm() == a
                && &m.to_config() == c
                && &p.to_config()? == c)
        });
        for e in each {
            ok &= e?;
        }
        let distinct: HashSet<_> = configs
            .iter()
            .map(|c| AsmMatrix::from_config(c).map(|a| a.rows().to_vec()))
            .collect::<Result<_>>()?;
        ok &= distinct.len() == configs.len();
        if n <= lattice_top {
            let hs: Vec<HeightFunction> = configs
                .iter()
                .map(HeightFunction::from_config)
                .collect::<Result<_>>()?;
            let set: HashSet<Vec<Vec<i32>>> = hs.iter().map(|h| h.grid().to_vec()).collect();
            for a in &hs {
                for b in &hs {
                    ok &= set.contains(a.meet(b)?.grid()) && set.contains(a.join(b)?.grid());
                }
            }
        }
        if (3..=4).contains(&n) {
            let mut perms = Vec::new();
            for c in &configs {
                if let Some(p) = rook_structure(c)? {
                    perms.push((p, HeightFunction::from_config(c)?));
                }
            }
            ok &= perms.len() == (1..=n).product::<usize>();
            for (p, hp) in &perms {
                for (q, hq) in &perms {
                    ok &= hp.le(hq) == bruhat_leq(p, q);
                }
            }
        }
    }
    Ok((
        ok,
        format!("round trips n=1..{top}; meet/join closure n<={lattice_top}; rook order = Bruhat at n=3,4"),
    ))
}

fn fpl(ctx: &Ctx) -> Verdict {
    let top = ctx.pick(4, 5);
    let three = link_counts(3, ctx.exec)?.sorted_values();
    let mut ok = three == [2, 2, 1, 1, 1];
    for n in 1..=top {
        let lc = link_counts(n, ctx.exec)?;
        ok &= lc.rotation_invariant() && BigInt::from(lc.total()) == asm_product_formula(n);
    }
    let shown: Vec<String> = three.iter().map(u64::to_string).collect();
    Ok((
        ok,
        format!(
            "n=3 counts ({}); rotation invariance n=1..{top}",
            shown.join(",")
        ),
    ))
}

fn pair_product(zs: &[FieldScalar], alpha: &FieldScalar, ordered: bool) -> FieldScalar {
    let mut r = FieldScalar::int(1);
    for i in 0..zs.len() {
        for j in (if ordered { 0 } else { i })..zs.len() {
            r = r * (FieldScalar::int(1) + alpha * &zs[i] * &zs[j]);
        }
    }
    r
}

fn schur_four_way(ctx: &Ctx) -> Verdict {
    let mut s = ctx.sampler(9);
    let (max_size, reps) = ctx.pick((4, 4), (6, 10));
    let zero = FieldScalar::int(0);
    let mut ok = true;
    let mut shapes = 0;
    for n in 1..=3usize {
        for size in 0..=max_size {
            for lam in Partition::all_of(size, n, size) {
                shapes += 1;
                let p = n + lam.first() as usize;
                let configs = collect_configs(&EdgeBoundary::partial_dwbc(&lam, n, p)?, ctx.exec);
                let points: Vec<Vec<FieldScalar>> =
                    (0..reps).map(|_| s.distinct_scalars(n)).collect();
                let each = map_collect(&points, ctx.exec, |zs| -> Result<bool> {
                    let bi = schur_bialternant(&lam, zs)?;
                    let table = WeightSystem::FiveVertex {
                        zs: zs.clone(),
                        alpha: zero.clone(),
                    }
                    .site_table(n, p)?;
                    Ok(schur_jacobi_trudi(&lam, zs)? == bi
                        && schur_ssyt(&lam, zs)? == bi
                        && sum_weights(&configs, &table) == bi)
                });
                for e in each {
                    ok &= e?;
                }
                let zs = s.distinct_scalars(n);
                let alpha = s.scalar();
                let sl = schur_bialternant(&lam, &zs)?;
                let z = five_vertex_z(&lam, n, p, &zs, &alpha, ctx.exec)?;
                ok &= z == pair_product(&zs, &alpha, false) * &sl;
                ok &= five_vertex_z(&lam, n, p + 2, &zs, &alpha, ctx.exec)? == z;
                if n <= 2 || size <= 4 {
                    let ext = extended_five_vertex_z(&lam, n, p, &zs, &alpha, ctx.exec)?;
                    ok &= ext == pair_product(&zs, &alpha, true) * &sl;
                    ok &= lgv_determinant(&lam, &zs, &alpha)? == ext;
                }
            }
        }
    }
    Ok((
        ok,
        format!("{shapes} (shape, n) pairs, |λ|<={max_size}, n<=3, {reps} points each; lattice prefactor and width independence"),
    ))
}

fn cauchy(ctx: &Ctx) -> Verdict {
    let pairs: &[(usize, usize)] =
        ctx.pick(&[(1, 1), (1, 2), (2, 2)], &[(1, 1), (1, 2), (2, 2), (2, 3)]);
    let mut ok = true;
    for &(m, n) in pairs {
        ok &= cauchy_check(m, n, 4)?;
    }
    ok &= cauchy_telescoping(6)?;
    let shown: Vec<String> = pairs.iter().map(|(m, n)| format!("({m},{n})")).collect();
    Ok((
        ok,
        format!("{} to total degree 8; telescoping at p=6", shown.join(" ")),
    ))
}

/// Reads rows of edge labels written with `T` for `10`.
fn puzzle_rows(rows: &[&str]) -> Vec<Vec<Label>> {
    rows.iter()
        .map(|r| {
            r.chars()
                .map(|ch| match ch {
                    '0' => Label::Zero,
                    '1' => Label::One,
                    _ => Label::Ten,
                })
                .collect()
        })
        .collect()
}

/// The two puzzles drawn for the square of a single box.
fn displayed_square_puzzles() -> Result<Vec<Puzzle>> {
    let first = Puzzle::new(
        4,
        puzzle_rows(&["1", "01", "100", "011T"]),
        puzzle_rows(&["0", "01", "0T0", "0111"]),
        puzzle_rows(&["", "T", "01", "T10", "0110"]),
    )?;
    let second = Puzzle::new(
        4,
        puzzle_rows(&["1", "01", "1T1", "0001"]),
        puzzle_rows(&["0", "01", "110", "T001"]),
        puzzle_rows(&["", "T", "01", "10T", "1001"]),
    )?;
    Ok(vec![first, second])
}

fn littlewood_richardson(ctx: &Ctx) -> Verdict {
    let side = ctx.pick(2, 3);
    let shapes = Partition::in_box(side, side as u32);
    let pairs: Vec<(Partition, Partition)> = shapes
        .iter()
        .flat_map(|l| shapes.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let each = map_collect(&pairs, ctx.exec, |(l, m)| -> Result<bool> {
        Ok(product_rule(l, m, Exec::Sequential)? == lr_oracle(l, m)?)
    });
    let mut ok = true;
    for e in each {
        ok &= e?;
    }
    let one: Partition = "1".parse()?;
    let mut found = Vec::new();
    let mut expansion = BTreeMap::new();
    for nu in ["2", "1,1"] {
        let nu: Partition = nu.parse()?;
        let ps = enumerate_puzzles(&one, &one, &nu, 4, 2)?;
        expansion.insert(nu.to_string(), ps.len());
        found.extend(ps);
    }
    let shown = displayed_square_puzzles()?;
    let same = found.len() == 2 && shown.iter().all(|p| found.contains(p));
    Ok((
        ok && same,
        format!("{} pairs in a {side}x{side} box; square of a box gives {expansion:?}, matching the drawn puzzles: {same}", pairs.len()),
    ))
}

fn yang_baxter(ctx: &Ctx) -> Verdict {
    let mut s = ctx.sampler(12);
    let reps = ctx.pick(30, 100);
    let mut ok = true;
    let mut entries = 0;
    for _ in 0..reps {
        let q = s.scalar();
        let v = s.distinct_scalars(3);
        let r = check_ybe(&q, &v[0], &v[1], &v[2])?;
        entries += r.entries.len();
        ok &= r.all_hold() && r.entries.len() == 64;
    }
    for n in 2..=4usize {
        let configs = dwbc(n, ctx.exec);
        let (q, xs, ys) = loop {
            let q = s.scalar();
            let xs = s.distinct_scalars(n);
            let ys = s.distinct_scalars(n);
            if izergin(&q, &xs, &ys).is_ok() {
                let mut sub = xs.clone();
                sub[n - 1] = ys[n - 1].clone();
                if izergin_cleared(&q, &sub, &ys).is_ok() {
                    break (q, xs, ys);
                }
            }
        };
        let z = brute_six(&configs, &q, &xs, &ys)?;
        for i in 0..n - 1 {
            let mut sw = ys.clone();
            sw.swap(i, i + 1);
            ok &= brute_six(&configs, &q, &xs, &sw)? == z;
        }
        ok &= check_recurrence(&q, &xs, &ys, RecurrenceOracle::Determinant)?;
        ok &= check_recurrence(&q, &xs, &ys, RecurrenceOracle::BruteForce(ctx.exec))?;
    }
    Ok((ok, format!("{reps} parameter sets, {entries} entries; column symmetry and x_n=y_n recurrence n=2..4")))
}
