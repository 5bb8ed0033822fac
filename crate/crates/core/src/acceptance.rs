//! The acceptance suite: ten exact checks over every module, runnable from
//! the library, the `gl11 accept` subcommand and the `acceptance` test
//! target.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::gl11::{Gl11, LoopOperator, SeriesKind};
use crate::invariant_basis::{
    coefficients_invariant, expand_y_product, factorization_check, A_series, SeriesCaps, Y,
};
use crate::qseries::{
    aux_identity_check, chi_mn, chi_recurrence_holds, count_hook_diagrams, enumerate_pp, f_mn,
    fermionic_series, hp_from_basis, ids_check, planep_series,
};
use crate::schur::{lr_expand, Partition};
use crate::ss_vectors::{series, symbol, Family};
use crate::superpoly::{ExactRational, Parity, SuperPoly, Truncation, VarId};
use crate::susy::{
    affine_generators_ac, cancellation_check, chevalley, injectivity_spotcheck, products_of_degree,
    D_apply, SusyAlphabet,
};

pub const DEFAULT_SEED: u64 = 0x6c31_3176;
pub const CASES_PER_LAW: usize = 200;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<24} {:>8.2}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// `Ok(detail)` on success, `Err(detail)` on failure.
type Check = std::result::Result<String, String>;

fn fail(e: Error) -> String {
    format!("error: {e}")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "invariance"),
    (2, "series-vs-translation"),
    (3, "y-cross-check"),
    (4, "a-series"),
    (5, "hilbert-poincare"),
    (6, "ids-identity"),
    (7, "chi-and-f-series"),
    (8, "chevalley"),
    (9, "cancellation"),
    (10, "properties"),
];

/// Criterion ids for a suite name: `all`, a group name, a criterion name or
/// its number.
pub fn suite(name: &str) -> Option<Vec<u8>> {
    let ids = match name {
        "all" => (1..=10).collect(),
        "ssvec" => vec![1, 2],
        "basis" => vec![3, 4],
        "qseries" => vec![5, 6, 7],
        "susy" => vec![8, 9],
        _ => {
            let id = name
                .parse::<u8>()
                .ok()
                .or_else(|| CRITERIA.iter().find(|(_, n)| *n == name).map(|(i, _)| *i))?;
            if !(1..=10).contains(&id) {
                return None;
            }
            vec![id]
        }
    };
    Some(ids)
}

pub fn run_criterion(g: &Gl11, id: u8, seed: u64) -> CriterionOutcome {
    let start = Instant::now();
    let result = match id {
        1 => invariance(g),
        2 => series_vs_translation(g),
        3 => y_cross_check(g),
        4 => a_series(g),
        5 => hilbert_poincare(),
        6 => ids_identity(),
        7 => chi_and_f(),
        8 => chevalley_suite(g),
        9 => cancellation(g),
        10 => properties(g, seed, CASES_PER_LAW),
        _ => Err(format!("no criterion {id}")),
    };
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("unknown");
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run(g: &Gl11, ids: &[u8], seed: u64) -> Vec<CriterionOutcome> {
    ids.iter().map(|&id| run_criterion(g, id, seed)).collect()
}

fn invariance(g: &Gl11) -> Check {
    let mut checked = 0;
    for family in Family::ALL {
        for k in 1..=5 {
            let sym = symbol(g, family, k).map_err(fail)?;
            for r in 0..=3 {
                let p = g.translate_n(&sym, r).map_err(fail)?;
                let rep = g.is_invariant(&p);
                ensure(rep.invariant, || {
                    let (op, img) = rep.witness.clone().expect("witness");
                    format!("T^{r} {family}_{k}: {op} gives {img}")
                })?;
                checked += 1;
            }
            let s = series(g, family, k, 6).map_err(fail)?;
            for (e, coeff) in s.collect_in(&[g.z(1)]) {
                ensure(g.is_invariant(&coeff).invariant, || {
                    format!("{family}_{k}: z^{} coefficient not invariant", e[0])
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} elements annihilated"))
}

fn series_vs_translation(g: &Gl11) -> Check {
    let z = g.z(1);
    for k in 1..=5 {
        let sym = symbol(g, Family::H, k).map_err(fail)?;
        let s = series(g, Family::H, k, 6).map_err(fail)?;
        for r in 0..=6 {
            let expect = g
                .translate_n(&sym, r)
                .map_err(fail)?
                .scale(&ExactRational::inv_factorial(r));
            ensure(s.coefficient_in(&[z], &[r]) == expect, || {
                format!("h_{k}: z^{r} coefficient differs from T^{r}/{r}!")
            })?;
        }
    }
    Ok("k <= 5, r <= 6".into())
}

fn y_cross_check(g: &Gl11) -> Check {
    let expanded = expand_y_product(g, 2, 8).map_err(fail)?;
    let mut count = 0;
    for d in 0..=6 {
        for lambda in Partition::all(d, Some(2), None) {
            let lhs = expanded.get(&lambda).cloned().unwrap_or_else(|| g.zero());
            let rhs = Y(g, 2, &lambda).map_err(fail)?;
            ensure(lhs == rhs, || format!("Y(2, {lambda}) differs"))?;
            count += 1;
        }
    }
    // partitions with three or more parts never occur for n = 2
    ensure(expanded.keys().all(|l| l.len() <= 2), || "long partition in expansion".into())?;
    Ok(format!("{count} partitions"))
}

fn a_series(g: &Gl11) -> Check {
    let z = g.z(1);
    let tr = Truncation::vars(&[z], 5);
    let a1 = A_series(g, 1, &SeriesCaps::new(5, 4)).map_err(fail)?;
    let az = g.generator_series(SeriesKind::A, z, 5).map_err(fail)?;
    let cz = g.generator_series(SeriesKind::C, z, 5).map_err(fail)?;
    let yz = g.generator_series(SeriesKind::Y, z, 5).map_err(fail)?;
    for k in 1..=5u32 {
        let mut expect = az.pow(k - 1, &tr).multiply(&cz, &tr).map_err(fail)?;
        if k >= 2 {
            let tail = az
                .pow(k - 2, &tr)
                .multiply(&yz, &tr)
                .map_err(fail)?
                .scale(&ExactRational::from_int(k as i64 - 1));
            expect = &expect + &tail;
        }
        let expect = expect.scale(&ExactRational::inv_factorial(k - 1));
        ensure(a1.coefficient_in(&[g.t(0)], &[k - 1]) == expect, || {
            format!("n = 1: t0^{} coefficient", k - 1)
        })?;
    }
    let rep = factorization_check(g, 2, &SeriesCaps::new(6, 3)).map_err(fail)?;
    ensure(rep.holds, || format!("factorization fails: {:?}", rep.mismatch))?;
    let a2 = A_series(g, 2, &SeriesCaps::for_internal_degree(2, 10)).map_err(fail)?;
    if let Some(e) = coefficients_invariant(g, 2, &a2) {
        return Err(format!("A(2) coefficient {e:?} not invariant"));
    }
    Ok(format!("t0 coefficients for k <= 5, factorization (6, 3), {} terms of A(2) invariant", a2.len()))
}

fn hilbert_poincare() -> Check {
    let order = 10;
    let planep = planep_series(order);
    let ferm = fermionic_series(order);
    let hp = hp_from_basis(order);
    for d in 0..=order {
        let brute = BigInt::from(enumerate_pp(1, 1, d));
        ensure(
            &brute == planep.coeff(d) && &brute == ferm.coeff(d) && &brute == hp.coeff(d),
            || format!("q^{d}: pp {brute}, product {}, fermionic {}, basis {}", planep.coeff(d), ferm.coeff(d), hp.coeff(d)),
        )?;
    }
    let head: Vec<i64> = planep.to_i64_vec().expect("small")[..8].to_vec();
    ensure(head == [1, 1, 3, 6, 12, 21, 38, 63], || format!("head {head:?}"))?;
    Ok(format!("{:?}", planep.to_i64_vec().expect("small")))
}

fn ids_identity() -> Check {
    for s in 0..=4 {
        ensure(ids_check(s, 30), || format!("ids fails at s = {s}"))?;
        ensure(aux_identity_check(s, 30), || format!("auxiliary identity fails at s = {s}"))?;
    }
    Ok("s <= 4 to q^30".into())
}

fn chi_and_f() -> Check {
    for m in 0..=3 {
        for n in 0..=3 {
            let chi = chi_mn(m, n, 12);
            for d in 0..=12 {
                ensure(*chi.coeff(d) == BigInt::from(count_hook_diagrams(m, n, d)), || {
                    format!("chi({m},{n}) at q^{d}")
                })?;
            }
            if m >= 1 && n >= 1 {
                ensure(chi_recurrence_holds(m, n, 12), || format!("recurrence at ({m},{n})"))?;
            }
        }
    }
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        let f = f_mn(m, n, 8).map_err(fail)?;
        for d in 0..=8 {
            ensure(*f.coeff(d) == BigInt::from(enumerate_pp(m, n, d)), || {
                format!("f({m},{n}) at q^{d}")
            })?;
        }
    }
    Ok("chi for m, n <= 3 to q^12; f to q^8".into())
}

fn chevalley_suite(g: &Gl11) -> Check {
    let s = SusyAlphabet::for_gl11(g);
    let u = s.poly(s.u(1, 0));
    let uv = &u + &s.poly(s.v(1, 0));
    for k in 1..=5 {
        let h = symbol(g, Family::H, k).map_err(fail)?;
        let expect = &u.pow(k - 1, &Truncation::none()) * &uv;
        ensure(chevalley(g, &s, &h).map_err(fail)? == expect, || format!("h_{k}"))?;
    }
    let rep = injectivity_spotcheck(g, 6).map_err(fail)?;
    let ranks: Vec<usize> = rep.per_degree.iter().map(|r| r.2).collect();
    ensure(rep.full_rank && ranks == rep.expected, || {
        format!("ranks {ranks:?}, expected {:?}", rep.expected)
    })?;
    Ok(format!("ranks {ranks:?}"))
}

fn cancellation(g: &Gl11) -> Check {
    let gens = affine_generators_ac(g, 8).map_err(fail)?;
    let mut count = 0;
    for d in 0..=8 {
        for p in products_of_degree(&gens, d, &g.one()) {
            ensure(cancellation_check(g, &p).map_err(fail)?, || {
                format!("negative power of c0 in degree {d}")
            })?;
            count += 1;
        }
    }
    let z = g.z(1);
    let tr = Truncation::vars(&[z], 6);
    let az = g.generator_series(SeriesKind::A, z, 6).map_err(fail)?;
    let cz = g.generator_series(SeriesKind::C, z, 6).map_err(fail)?;
    for k in 0..=4u32 {
        let lhs = az.pow(k, &tr).multiply(&cz, &tr).map_err(fail)?;
        let rhs = match k {
            0 => g.zero(),
            _ => az.pow(k - 1, &tr).scale(&ExactRational::from_int(k as i64)),
        };
        for r in 0..=6 {
            let d = D_apply(g, &lhs.coefficient_in(&[z], &[r])).map_err(fail)?;
            ensure(d.to_poly() == Some(rhs.coefficient_in(&[z], &[r])), || {
                format!("D(a^{k} c) at z^{r}")
            })?;
        }
    }
    Ok(format!("{count} products of degree <= 8"))
}

/// Random polynomial in `a_0..a_3`, `c_0..c_3`, `phi_0..phi_3`,
/// `psi_0..psi_3` with up to four terms and small rational coefficients.
pub fn random_poly(g: &Gl11, rng: &mut impl Rng, odd: bool) -> SuperPoly {
    let mut p = g.zero();
    for _ in 0..rng.gen_range(1..=4) {
        let mut factors: Vec<(VarId, u32)> = Vec::new();
        for _ in 0..rng.gen_range(0..=3) {
            let i = rng.gen_range(0..4);
            let v = match rng.gen_range(0..4) {
                0 => g.a(i),
                1 => g.c(i),
                2 => g.phi(i),
                _ => g.psi(i),
            };
            let e = if odd { 1 } else { rng.gen_range(1..=2) };
            factors.push((v, e));
        }
        let num = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let den = rng.gen_range(1..=3);
        let c = ExactRational::new(num, den).expect("nonzero");
        // repeated odd factors vanish, which is fine
        p = &p + &SuperPoly::from_factors(g.alphabet(), c, &factors);
    }
    p
}

/// Random element of fixed parity.
pub fn random_homogeneous(g: &Gl11, rng: &mut impl Rng, parity: Parity) -> SuperPoly {
    let odd = rng.gen_bool(0.3);
    random_poly(g, rng, odd).filter_terms(|m| m.parity() == parity)
}

fn random_parity(rng: &mut impl Rng) -> Parity {
    if rng.gen_bool(0.5) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn koszul(p: Parity, q: Parity) -> ExactRational {
    ExactRational::from_int(if p.is_odd() && q.is_odd() { -1 } else { 1 })
}

/// Polynomial in `a_0..a_3`, `c_0..c_3` only.
fn random_even_ac(g: &Gl11, rng: &mut impl Rng) -> SuperPoly {
    let p = random_poly(g, rng, false);
    p.filter_terms(|m| m.odd_factors().is_empty())
}

/// Skew semistandard tableaux of shape `lambda / mu` and content `nu` whose
/// reverse row reading word is a lattice word.
pub fn lr_tableau_count(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    let rows = lambda.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu.part(i + 1) as usize..lambda.part(i + 1) as usize).map(move |j| (i, j)))
        .collect();
    // fill row by row, each row right to left, which is the reading order
    let order: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| {
            let mut row: Vec<_> = cells.iter().copied().filter(|c| c.0 == i).collect();
            row.reverse();
            row
        })
        .collect();
    let mut grid: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut used = vec![0u32; nu.len() + 1];
    fn rec(
        k: usize,
        order: &[(usize, usize)],
        nu: &Partition,
        grid: &mut BTreeMap<(usize, usize), u32>,
        used: &mut Vec<u32>,
    ) -> u64 {
        if k == order.len() {
            return 1;
        }
        let (i, j) = order[k];
        let mut total = 0;
        for x in 1..=nu.len() as u32 {
            if used[x as usize] >= nu.part(x as usize) {
                continue;
            }
            // lattice condition
            if x > 1 && used[x as usize] + 1 > used[x as usize - 1] {
                continue;
            }
            // rows weakly increase left to right: right neighbour already set
            if let Some(&r) = grid.get(&(i, j + 1)) {
                if x > r {
                    continue;
                }
            }
            // columns strictly increase downward
            if i > 0 {
                if let Some(&above) = grid.get(&(i - 1, j)) {
                    if x <= above {
                        continue;
                    }
                }
            }
            grid.insert((i, j), x);
            used[x as usize] += 1;
            total += rec(k + 1, order, nu, grid, used);
            used[x as usize] -= 1;
            grid.remove(&(i, j));
        }
        total
    }
    rec(0, &order, nu, &mut grid, &mut used)
}

fn random_partition(rng: &mut impl Rng, max_size: u32) -> Partition {
    let size = rng.gen_range(0..=max_size);
    let all = Partition::all(size, None, None);
    all[rng.gen_range(0..all.len())].clone()
}

/// The randomized laws, `cases` draws each, from a fixed seed.
pub fn properties(g: &Gl11, seed: u64, cases: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let none = Truncation::none();
    let mut laws = 0;

    for _ in 0..cases {
        let (pp, pq) = (random_parity(&mut rng), random_parity(&mut rng));
        let p = random_homogeneous(g, &mut rng, pp);
        let q = random_homogeneous(g, &mut rng, pq);
        ensure(&p * &q == (&q * &p).scale(&koszul(pp, pq)), || format!("koszul: {p} / {q}"))?;
    }
    laws += 1;

    for _ in 0..cases {
        let (p, q, r) = (
            random_poly(g, &mut rng, false),
            random_poly(g, &mut rng, true),
            random_poly(g, &mut rng, false),
        );
        ensure(&(&p * &q) * &r == &p * &(&q * &r), || format!("associativity: {p} / {q} / {r}"))?;
        ensure(&p * &(&q + &r) == &(&p * &q) + &(&p * &r), || format!("distributivity: {p}"))?;
    }
    laws += 1;

    // left derivatives by odd variables, derivatives by even ones, T
    for _ in 0..cases {
        let pp = random_parity(&mut rng);
        let p = random_homogeneous(g, &mut rng, pp);
        let q = random_poly(g, &mut rng, false);
        let i = rng.gen_range(0..4);
        let odd = if rng.gen_bool(0.5) { g.phi(i) } else { g.psi(i) };
        let lhs = (&p * &q).derive_odd_left(odd).map_err(fail)?;
        let rhs = &(&p.derive_odd_left(odd).map_err(fail)? * &q)
            + &(&p * &q.derive_odd_left(odd).map_err(fail)?).scale(&koszul(pp, Parity::Odd));
        ensure(lhs == rhs, || format!("odd Leibniz: {p} / {q}"))?;
        let even = if rng.gen_bool(0.5) { g.a(i) } else { g.c(i) };
        let lhs = (&p * &q).derive_even(even).map_err(fail)?;
        let rhs = &(&p.derive_even(even).map_err(fail)? * &q) + &(&p * &q.derive_even(even).map_err(fail)?);
        ensure(lhs == rhs, || format!("even Leibniz: {p} / {q}"))?;
        let lhs = g.translate(&(&p * &q)).map_err(fail)?;
        let rhs = &(&g.translate(&p).map_err(fail)? * &q) + &(&p * &g.translate(&q).map_err(fail)?);
        ensure(lhs == rhs, || format!("translation Leibniz: {p} / {q}"))?;
    }
    laws += 1;

    // loop operators act by super-derivations
    for _ in 0..cases {
        let pp = random_parity(&mut rng);
        let p = random_homogeneous(g, &mut rng, pp);
        let q = random_poly(g, &mut rng, false);
        let op = LoopOperator::new(rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(0..=3));
        let lhs = g.act(&op, &(&p * &q));
        let rhs = &(&g.act(&op, &p) * &q) + &(&p * &g.act(&op, &q)).scale(&koszul(op.parity(), pp));
        ensure(lhs == rhs, || format!("{op} Leibniz: {p} / {q}"))?;
    }
    laws += 1;

    // [X, Y] acts as the supercommutator of the actions
    for _ in 0..cases {
        let odd = rng.gen_bool(0.5);
        let p = random_poly(g, &mut rng, odd);
        let x = LoopOperator::new(rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(0..=2));
        let y = LoopOperator::new(rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(0..=2));
        let lhs = &g.act(&x, &g.act(&y, &p))
            - &g.act(&y, &g.act(&x, &p)).scale(&koszul(x.parity(), y.parity()));
        let rhs = g.act_combination(&x.bracket(&y), &p);
        ensure(lhs == rhs, || format!("bracket [{x}, {y}] on {p}"))?;
    }
    laws += 1;

    // D is a derivation on polynomials in a, c
    for _ in 0..cases {
        let p = random_even_ac(g, &mut rng);
        let q = random_even_ac(g, &mut rng);
        let lhs = D_apply(g, &(&p * &q)).map_err(fail)?;
        let rhs = D_apply(g, &p)
            .map_err(fail)?
            .scale_poly(&q)
            .add(&D_apply(g, &q).map_err(fail)?.scale_poly(&p));
        ensure(lhs == rhs, || format!("D Leibniz: {p} / {q}"))?;
    }
    laws += 1;

    // the projection is an algebra map commuting with T
    let s = SusyAlphabet::for_gl11(g);
    for _ in 0..cases {
        let p = random_poly(g, &mut rng, false);
        let q = random_poly(g, &mut rng, false);
        let cp = chevalley(g, &s, &p).map_err(fail)?;
        let cq = chevalley(g, &s, &q).map_err(fail)?;
        ensure(chevalley(g, &s, &(&p * &q)).map_err(fail)? == &cp * &cq, || {
            format!("projection multiplicative: {p} / {q}")
        })?;
        let tp = chevalley(g, &s, &g.translate(&p).map_err(fail)?).map_err(fail)?;
        ensure(tp == s.translate(&cp).map_err(fail)?, || format!("projection and T: {p}"))?;
    }
    laws += 1;

    // text and JSON round trips, exact division
    for _ in 0..cases {
        let odd = rng.gen_bool(0.5);
        let p = random_poly(g, &mut rng, odd);
        ensure(g.parse(&p.to_string()).map_err(fail)? == p, || format!("text round trip: {p}"))?;
        let back = SuperPoly::from_json(g.alphabet(), &p.to_json()).map_err(fail)?;
        ensure(back == p, || format!("json round trip: {p}"))?;
        let d = random_even_ac(g, &mut rng);
        if !d.is_zero() {
            let prod = p.multiply(&d, &none).map_err(fail)?;
            ensure(prod.exact_divide(&d).map_err(fail)? == p, || format!("division: {p} / {d}"))?;
        }
    }
    laws += 1;

    // Littlewood-Richardson against tableau counting
    for _ in 0..cases {
        let mu = random_partition(&mut rng, 4);
        let nu = random_partition(&mut rng, 4);
        let table = lr_expand(&mu, &nu);
        for lambda in Partition::all(mu.weight() + nu.weight(), None, None) {
            let fast = table.get(&lambda).copied().unwrap_or(0);
            ensure(fast == lr_tableau_count(&mu, &nu, &lambda), || {
                format!("c^{lambda}_{{{mu},{nu}}}")
            })?;
        }
    }
    laws += 1;

    Ok(format!("{laws} laws x {cases} cases, seed {seed:#x}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_oracle_small_cases() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(lr_tableau_count(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr_tableau_count(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_tableau_count(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_tableau_count(&p("2"), &p("1"), &p("1,1,1")), 0);
    }

    #[test]
    fn suite_names() {
        assert_eq!(suite("qseries"), Some(vec![5, 6, 7]));
        assert_eq!(suite("cancellation"), Some(vec![9]));
        assert_eq!(suite("3"), Some(vec![3]));
        assert_eq!(suite("nosuch"), None);
        assert_eq!(suite("11"), None);
    }

    #[test]
    fn properties_small_run() {
        let g = Gl11::standard();
        assert!(properties(g, 7, 20).is_ok());
    }
}
