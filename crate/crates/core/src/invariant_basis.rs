//! The elements `Y(n, lambda)`, decomposition of `S°` (the subalgebra
//! generated by `a_i, c_i, y_i`) over `H = C[a_i, c_i]`, and the generating
//! series `F` and `A` whose coefficients give a basis of invariants.
//!
//! Series conventions: `z1..zn` and `t0..t{n-1}` are the auxiliary variables
//! of the [`Gl11`] alphabet, so `n` is limited by [`Gl11::n_aux`].
//!
//! Degrees: giving `z` degree `-1` and `t_i` degree `-(i+1)` makes `A`
//! homogeneous of degree `n`, so the coefficient of `z^alpha t^beta` has
//! internal degree `n + |alpha| + sum (i+1) beta_i`. The same bookkeeping
//! bounds the product defining `F`: the factor indexed by `j` involves
//! `a_{n+j}` (degree `n+j+1`) and hook Schur polynomials of `z`-degree at
//! least `j+1`, so only `j < min(z_cap, D - n)` contribute at internal
//! degree `D`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl11::{GeneratorKind, Gl11, LoopOperator, SeriesKind};
use crate::schur::{elementary_in, lr_coefficient, schur_expand, schur_in, Partition};
use crate::superpoly::{ExactRational, JsonTerm, SuperPoly, Truncation, VarId};

/// Truncation caps for the `F` and `A` series: total `z`-degree, total
/// `t`-degree, and optionally internal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesCaps {
    pub z: u32,
    pub t: u32,
    pub internal: Option<u32>,
}

impl SeriesCaps {
    pub fn new(z: u32, t: u32) -> Self {
        SeriesCaps { z, t, internal: None }
    }

    pub fn with_internal(self, d: u32) -> Self {
        SeriesCaps {
            internal: Some(d),
            ..self
        }
    }

    /// Smallest caps covering every coefficient of internal degree `<= d`.
    pub fn for_internal_degree(n: u32, d: u32) -> Self {
        let room = d.saturating_sub(n);
        SeriesCaps {
            z: room,
            t: room,
            internal: Some(d),
        }
    }

    /// Internal degree implied by the `z` and `t` caps when none is given.
    fn internal_bound(&self, n: u32) -> u32 {
        self.internal.unwrap_or(n + self.z + n * self.t)
    }

    fn truncation(&self, g: &Gl11, n: u32, z_cap: u32) -> Truncation {
        Truncation::vars(&g.zs(n), z_cap)
            .with_vars(&g.ts(n), self.t)
            .with_internal(self.internal_bound(n))
    }
}

fn check_n(g: &Gl11, n: u32) -> Result<()> {
    if n > g.n_aux() {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the {} auxiliary variable sets",
            g.n_aux()
        )));
    }
    Ok(())
}

/// A polynomial numerator over a product of factors `(z_i - z_j)`, `i < j`.
///
/// The numerator may be a truncated series in the `z` variables; `valid` is
/// the `z`-degree through which it is exact (`u32::MAX` when exact), and
/// `low` the lowest `z`-degree present.
#[derive(Clone, PartialEq)]
pub struct RationalFunctionZ {
    num: SuperPoly,
    den: BTreeMap<(VarId, VarId), u32>,
    zvars: Vec<VarId>,
    valid: u32,
    low: u32,
}

impl RationalFunctionZ {
    pub fn from_poly(p: SuperPoly, zvars: &[VarId], valid: u32) -> Self {
        let low = p
            .terms()
            .map(|(m, _)| m.degree_in(zvars))
            .min()
            .unwrap_or(u32::MAX);
        RationalFunctionZ {
            num: p,
            den: BTreeMap::new(),
            zvars: zvars.to_vec(),
            valid,
            low,
        }
    }

    /// `p / prod (x_i - x_j)^m`; pairs must be in increasing variable order.
    pub fn new(p: SuperPoly, den: &[((VarId, VarId), u32)], zvars: &[VarId], valid: u32) -> Result<Self> {
        let mut r = RationalFunctionZ::from_poly(p, zvars, valid);
        for &((i, j), m) in den {
            if i >= j || !zvars.contains(&i) || !zvars.contains(&j) {
                return Err(Error::InvalidArgument("denominator pairs must be z_i - z_j, i < j".into()));
            }
            if m > 0 {
                *r.den.entry((i, j)).or_default() += m;
            }
        }
        Ok(r)
    }

    pub fn numerator(&self) -> &SuperPoly {
        &self.num
    }

    pub fn denominator(&self) -> impl Iterator<Item = ((VarId, VarId), u32)> + '_ {
        self.den.iter().map(|(k, v)| (*k, *v))
    }

    pub fn den_degree(&self) -> u32 {
        self.den.values().sum()
    }

    pub fn valid(&self) -> u32 {
        self.valid
    }

    fn den_poly(&self, den: &BTreeMap<(VarId, VarId), u32>) -> SuperPoly {
        let alpha = self.num.alphabet();
        let mut out = SuperPoly::one(alpha);
        for (&(i, j), &m) in den {
            let f = &SuperPoly::var(alpha, i) - &SuperPoly::var(alpha, j);
            for _ in 0..m {
                out = &out * &f;
            }
        }
        out
    }

    fn with_den(&self, target: &BTreeMap<(VarId, VarId), u32>, trunc: &Truncation) -> RationalFunctionZ {
        let extra: BTreeMap<(VarId, VarId), u32> = target
            .iter()
            .map(|(k, &m)| (*k, m - self.den.get(k).copied().unwrap_or(0)))
            .filter(|(_, m)| *m > 0)
            .collect();
        if extra.is_empty() {
            return self.clone();
        }
        let f: u32 = extra.values().sum();
        let num = self
            .num
            .multiply(&self.den_poly(&extra), trunc)
            .expect("one alphabet");
        RationalFunctionZ {
            num,
            den: target.clone(),
            zvars: self.zvars.clone(),
            valid: self.clamp(self.valid.saturating_add(f), trunc),
            low: self.low.saturating_add(f),
        }
    }

    /// Truncating the numerator at `z`-degree `K` keeps it exact through `K`
    /// at most.
    fn clamp(&self, valid: u32, trunc: &Truncation) -> u32 {
        trunc.vars_cap(&self.zvars).map_or(valid, |k| valid.min(k))
    }

    pub fn add(&self, other: &RationalFunctionZ, trunc: &Truncation) -> RationalFunctionZ {
        let mut den = self.den.clone();
        for (k, &m) in &other.den {
            let e = den.entry(*k).or_default();
            *e = (*e).max(m);
        }
        let x = self.with_den(&den, trunc);
        let y = other.with_den(&den, trunc);
        RationalFunctionZ::from_poly(&x.num + &y.num, &self.zvars, x.valid.min(y.valid))
            .with_den_exact(den)
    }

    fn with_den_exact(mut self, den: BTreeMap<(VarId, VarId), u32>) -> Self {
        self.den = den;
        self
    }

    pub fn mul(&self, other: &RationalFunctionZ, trunc: &Truncation) -> RationalFunctionZ {
        let num = self.num.multiply(&other.num, trunc).expect("one alphabet");
        let valid = self.clamp(
            self.valid
                .saturating_add(other.low)
                .min(other.valid.saturating_add(self.low)),
            trunc,
        );
        let mut den = self.den.clone();
        for (k, &m) in &other.den {
            *den.entry(*k).or_default() += m;
        }
        let mut r = RationalFunctionZ::from_poly(num, &self.zvars, valid);
        r.den = den;
        r
    }

    pub fn mul_poly(&self, p: &SuperPoly, p_valid: u32, trunc: &Truncation) -> RationalFunctionZ {
        self.mul(&RationalFunctionZ::from_poly(p.clone(), &self.zvars, p_valid), trunc)
    }

    /// Divides out the denominator. Returns the polynomial and the
    /// `z`-degree through which it is exact.
    pub fn collapse(&self) -> Result<(SuperPoly, u32)> {
        let mut pairs = Vec::new();
        for (&(i, j), &m) in &self.den {
            for _ in 0..m {
                pairs.push((i, j));
            }
        }
        let q = self.num.exact_divide_differences(&pairs).map_err(|e| match e {
            Error::InexactDivision(s) => Error::ResidualDenominator(s),
            e => e,
        })?;
        let valid = if self.valid == u32::MAX {
            u32::MAX
        } else {
            self.valid.saturating_sub(self.den_degree())
        };
        Ok((q, valid))
    }

    /// Collapses and truncates to `z`-degree `z_cap`, failing if the
    /// numerator was not computed far enough.
    pub fn collapse_to(&self, z_cap: u32) -> Result<SuperPoly> {
        let (q, valid) = self.collapse()?;
        if valid < z_cap {
            return Err(Error::InsufficientCaps(format!(
                "result exact through z-degree {valid}, {z_cap} requested"
            )));
        }
        Ok(q.truncate(&Truncation::vars(&self.zvars, z_cap)))
    }
}

impl fmt::Debug for RationalFunctionZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunctionZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let alpha = self.num.alphabet();
        write!(f, "({})/(", self.num)?;
        for (k, (&(i, j), &m)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "({} - {})", alpha.name(i), alpha.name(j))?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, ")")
    }
}

fn sign(odd: bool) -> ExactRational {
    ExactRational::from_int(if odd { -1 } else { 1 })
}

fn lr_pairs(n: usize, lambda: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for s in 0..=lambda.weight() {
        for mu in Partition::all(s, Some(n), None) {
            if !lambda.contains(&mu) {
                continue;
            }
            for nu in Partition::all(lambda.weight() - s, Some(n), None) {
                if !lambda.contains(&nu) {
                    continue;
                }
                let c = lr_coefficient(&mu, &nu, lambda);
                if c != 0 {
                    out.push((mu.clone(), nu, c));
                }
            }
        }
    }
    out
}

/// `Y(n, lambda) = sum c^lambda_{mu nu} phi_{mu_1+n-1} .. phi_{mu_n}
/// psi_{nu_1+n-1} .. psi_{nu_n}`, factors multiplied in the displayed order.
#[allow(non_snake_case)]
pub fn Y(g: &Gl11, n: u32, lambda: &Partition) -> Result<SuperPoly> {
    if lambda.len() > n as usize {
        return Err(Error::InvalidArgument(format!("l({lambda}) > {n}")));
    }
    let n = n as usize;
    let top = lambda.part(1) as usize + n;
    if top > g.modes() as usize {
        return Err(Error::ModeOutOfRange {
            index: top as u32 - 1,
            modes: g.modes(),
        });
    }
    let mut out = g.zero();
    for (mu, nu, c) in lr_pairs(n, lambda) {
        let mut factors = Vec::with_capacity(2 * n);
        for (i, m) in mu.padded(n).iter().enumerate() {
            factors.push((g.phi(m + (n - 1 - i) as u32), 1));
        }
        for (i, m) in nu.padded(n).iter().enumerate() {
            factors.push((g.psi(m + (n - 1 - i) as u32), 1));
        }
        out = &out + &SuperPoly::from_factors(g.alphabet(), ExactRational::from_int(c as i64), &factors);
    }
    Ok(out)
}

/// Schur coefficients of `y(z1)..y(zn) / prod_{i != j} (z_i - z_j)` for
/// `|lambda| <= z_cap`, computed by exact division.
pub fn expand_y_product(g: &Gl11, n: u32, z_cap: u32) -> Result<BTreeMap<Partition, SuperPoly>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    check_n(g, n)?;
    let zs = g.zs(n);
    let k = z_cap + n * (n - 1);
    let trunc = Truncation::vars(&zs, k);
    let mut prod = g.one();
    for &z in &zs {
        prod = prod.multiply(&g.generator_series(SeriesKind::Y, z, k)?, &trunc)?;
    }
    let mut pairs = Vec::new();
    for i in 0..zs.len() {
        for j in i + 1..zs.len() {
            pairs.push((zs[i], zs[j]));
        }
    }
    let twice: Vec<_> = pairs.iter().chain(&pairs).copied().collect();
    let q = prod
        .exact_divide_differences(&twice)
        .map_err(|e| Error::ResidualDenominator(e.to_string()))?
        .scale(&sign((n * (n - 1) / 2) % 2 == 1));
    Ok(schur_expand(&q, &zs)
        .into_iter()
        .filter(|(l, _)| l.weight() <= z_cap)
        .collect())
}

/// `n` and `lambda` of a `Y(n, lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YIndex {
    pub n: u32,
    pub lambda: Partition,
}

impl YIndex {
    pub fn degree(&self) -> u32 {
        self.lambda.weight() + self.n * (self.n + 1)
    }
}

impl fmt::Display for YIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y({}, {})", self.n, self.lambda)
    }
}

/// `p = sum coefficient * Y(n, lambda)` with coefficients in the `a_i, c_i`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HDecomposition {
    pub terms: BTreeMap<YIndex, SuperPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTermJson {
    pub n: u32,
    pub lambda: Partition,
    pub coefficient: Vec<JsonTerm>,
}

impl HDecomposition {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, n: u32, lambda: &Partition) -> Option<&SuperPoly> {
        self.terms.get(&YIndex {
            n,
            lambda: lambda.clone(),
        })
    }

    pub fn reconstruct(&self, g: &Gl11) -> Result<SuperPoly> {
        let mut out = g.zero();
        for (idx, c) in &self.terms {
            out = &out + &(c * &Y(g, idx.n, &idx.lambda)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<HTermJson> = self
            .terms
            .iter()
            .map(|(k, v)| HTermJson {
                n: k.n,
                lambda: k.lambda.clone(),
                coefficient: v.to_json_terms(),
            })
            .collect();
        serde_json::to_value(rows).expect("serializable")
    }
}

/// Decomposes an element of `S°` over `H`.
///
/// The coefficient of `Y(m, mu)` equals, up to the sign `(-1)^{m(m-1)/2}`
/// of reordering, the coefficient of `phi_{mu+delta} psi_delta` in `p`: no
/// other `Y` contains that odd monomial. The reconstruction is checked, and
/// a mismatch means `p` is not in `S°`.
pub fn decompose(g: &Gl11, p: &SuperPoly) -> Result<HDecomposition> {
    let w = g.weight(p)?;
    if w != 0 {
        return Err(Error::NotInSubalgebra(format!("weight {w}")));
    }
    let mut terms: BTreeMap<YIndex, SuperPoly> = BTreeMap::new();
    for (mono, c) in p.terms() {
        let mut phis = Vec::new();
        let mut psis = Vec::new();
        for &v in mono.odd_factors() {
            let id = g.generator(v).expect("odd generators only");
            match id.kind {
                GeneratorKind::Phi => phis.push(id.index),
                _ => psis.push(id.index),
            }
        }
        for &(v, _) in mono.even_factors() {
            if !matches!(
                g.generator(v).map(|id| id.kind),
                Some(GeneratorKind::A | GeneratorKind::C)
            ) {
                return Err(Error::NotInSubalgebra(format!(
                    "variable {} outside a, c, phi, psi",
                    g.alphabet().name(v)
                )));
            }
        }
        let m = psis.len();
        // psis come out in canonical order: descending index
        if phis.len() != m || psis.iter().enumerate().any(|(i, &j)| j as usize != m - 1 - i) {
            continue;
        }
        // phis ascending; mu_i = phi index at position m-i minus (m-i)
        let mu: Vec<u32> = (0..m).map(|i| phis[m - 1 - i] - (m - 1 - i) as u32).collect();
        let Ok(mu) = Partition::new(mu) else { continue };
        let even = SuperPoly::from_factors(
            g.alphabet(),
            c * &sign((m * m.saturating_sub(1) / 2) % 2 == 1),
            mono.even_factors(),
        );
        let key = YIndex {
            n: m as u32,
            lambda: mu,
        };
        let slot = terms.entry(key).or_insert_with(|| g.zero());
        *slot = &*slot + &even;
    }
    terms.retain(|_, v| !v.is_zero());
    let out = HDecomposition { terms };
    let back = out.reconstruct(g)?;
    if &back != p {
        return Err(Error::NotInSubalgebra(format!(
            "residual {}",
            p - &back
        )));
    }
    Ok(out)
}

/// `T_n^(k) = [t_{n-1} - t_{n-2} e_1(z^) + ... + (-1)^{n-1} t_0 e_{n-1}(z^)]
/// / prod_{l != k} (z_k - z_l)`, with `z_k` omitted from the `e_m`.
#[allow(non_snake_case)]
pub fn T_rational(g: &Gl11, n: u32, k: u32) -> Result<RationalFunctionZ> {
    check_n(g, n)?;
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} not in 1..={n}")));
    }
    let zs = g.zs(n);
    let hat: Vec<VarId> = zs.iter().copied().filter(|&z| z != g.z(k)).collect();
    let mut num = g.zero();
    for m in 0..n {
        let e = elementary_in(g.alphabet(), &hat, m as usize);
        let term = e
            .times_even_monomial(&[g.t(n - 1 - m)], &[1])
            .scale(&sign(m % 2 == 1));
        num = &num + &term;
    }
    // (z_k - z_l) = -(z_l - z_k) for l < k
    num = num.scale(&sign((k - 1) % 2 == 1));
    let den: Vec<_> = (1..=n)
        .filter(|&l| l != k)
        .map(|l| ((g.z(k.min(l)), g.z(k.max(l))), 1))
        .collect();
    RationalFunctionZ::new(num, &den, &zs, u32::MAX)
}

/// `sum_{m=1..n} (-1)^{m-1} t_{n-m} s_{(j+1, 1^{m-1})}(z)`: the coefficient
/// multiplying `a_{n+j}` in `F`.
pub fn hook_combination(g: &Gl11, n: u32, j: u32) -> Result<SuperPoly> {
    check_n(g, n)?;
    let zs = g.zs(n);
    let mut out = g.zero();
    for m in 1..=n {
        let s = schur_in(g.alphabet(), &zs, &Partition::hook(j, m - 1));
        out = &out + &s.times_even_monomial(&[g.t(n - m)], &[1]).scale(&sign(m % 2 == 0));
    }
    Ok(out)
}

/// `X_i = z_1^i T^(1) + ... + z_n^i T^(n)`, collapsed to a polynomial.
pub fn x_coefficient(g: &Gl11, n: u32, i: u32) -> Result<SuperPoly> {
    let zs = g.zs(n);
    let trunc = Truncation::none();
    let mut acc = RationalFunctionZ::from_poly(g.zero(), &zs, u32::MAX);
    for k in 1..=n {
        let zk = g.one().times_even_monomial(&[g.z(k)], &[i]);
        acc = acc.add(&T_rational(g, n, k)?.mul_poly(&zk, u32::MAX, &trunc), &trunc);
    }
    Ok(acc.collapse()?.0)
}

/// Checks `X_i = t_i` for `i < n` and `X_i` equals the hook combination of
/// index `i - n` otherwise, for `i <= i_max`.
pub fn t_system_check(g: &Gl11, n: u32, i_max: u32) -> Result<bool> {
    for i in 0..=i_max {
        let x = x_coefficient(g, n, i)?;
        let expect = if i < n {
            g.poly(g.t(i))
        } else {
            hook_combination(g, n, i - n)?
        };
        if x != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

fn exp_series(x: &SuperPoly, trunc: &Truncation) -> Result<SuperPoly> {
    let one = SuperPoly::one(x.alphabet()).truncate(trunc);
    let mut acc = one.clone();
    let mut power = one;
    for p in 1u32.. {
        power = power.multiply(x, trunc)?.scale(&ExactRational::new(1, p as i64)?);
        if power.is_zero() {
            break;
        }
        if p > 4096 {
            return Err(Error::InsufficientCaps("exponential does not terminate".into()));
        }
        acc = &acc + &power;
    }
    Ok(acc)
}

fn f_from_x(g: &Gl11, n: u32, caps: &SeriesCaps, z_cap: u32, x: impl Fn(u32) -> Result<SuperPoly>) -> Result<SuperPoly> {
    let trunc = caps.truncation(g, n, z_cap);
    let d = caps.internal_bound(n);
    let mut out = g.one().truncate(&trunc);
    let mut i = 0u32;
    loop {
        // factor i needs a_i (degree i+1) and, for i >= n, z-degree i-n+1
        if i + 1 > d || (i >= n && i - n + 1 > z_cap) {
            break;
        }
        if i >= g.modes() {
            return Err(Error::InsufficientCaps(format!("needs a_{i}")));
        }
        let arg = x(i)?.multiply(&g.poly(g.a(i)), &trunc)?;
        out = out.multiply(&exp_series(&arg, &trunc)?, &trunc)?;
        i += 1;
    }
    Ok(out)
}

/// `F(z1..zn; t0..t{n-1}) = prod_{i<n} exp(a_i t_i) prod_j exp(a_{n+j} H_j)`
/// with `H_j` the hook combination; `(1 - d_i^{-1} x)^{-1} 1 = exp(a_i x)`.
#[allow(non_snake_case)]
pub fn F_series(g: &Gl11, n: u32, caps: &SeriesCaps) -> Result<SuperPoly> {
    check_n(g, n)?;
    f_from_x(g, n, caps, caps.z, |i| {
        if i < n {
            Ok(g.poly(g.t(i)))
        } else {
            hook_combination(g, n, i - n)
        }
    })
}

/// `F` computed from `prod_i exp(a_i X_i)` with `X_i` obtained by collapsing
/// `sum_k z_k^i T^(k)`.
#[allow(non_snake_case)]
pub fn F_series_via_T(g: &Gl11, n: u32, caps: &SeriesCaps) -> Result<SuperPoly> {
    check_n(g, n)?;
    f_from_x(g, n, caps, caps.z, |i| x_coefficient(g, n, i))
}

/// `prod_k (c(z_k) + y(z_k) T^(k))` as a rational function, numerator
/// computed through `z`-degree `k_cap`.
fn cy_factor(g: &Gl11, n: u32, k_cap: u32, trunc: &Truncation) -> Result<RationalFunctionZ> {
    let zs = g.zs(n);
    let mut acc = RationalFunctionZ::from_poly(g.one(), &zs, u32::MAX);
    for k in 1..=n {
        let z = g.z(k);
        let c = g.generator_series(SeriesKind::C, z, k_cap)?;
        let y = g.generator_series(SeriesKind::Y, z, k_cap)?;
        let yt = T_rational(g, n, k)?.mul_poly(&y, k_cap, trunc);
        let f = RationalFunctionZ::from_poly(c, &zs, k_cap).add(&yt, trunc);
        acc = acc.mul(&f, trunc);
    }
    Ok(acc)
}

/// `A = prod_k (c(z_k) + y(z_k) T^(k)) F`, collapsed to a polynomial.
#[allow(non_snake_case)]
pub fn A_series(g: &Gl11, n: u32, caps: &SeriesCaps) -> Result<SuperPoly> {
    check_n(g, n)?;
    if n == 0 {
        return Ok(g.one());
    }
    let k_cap = caps.z + n * (n - 1);
    let trunc = caps.truncation(g, n, k_cap);
    let f = F_series(
        g,
        n,
        &SeriesCaps {
            z: k_cap,
            ..*caps
        },
    )?;
    let f = f.truncate(&trunc);
    cy_factor(g, n, k_cap, &trunc)?
        .mul_poly(&f, k_cap, &trunc)
        .collapse_to(caps.z)
}

/// `A(z; T) = (c(z) + y(z) T) exp(a(z) T)` for one variable, as a
/// rational function in `T = T^(k)`.
fn a_single(g: &Gl11, n: u32, k: u32, k_cap: u32, t_cap: u32, trunc: &Truncation) -> Result<RationalFunctionZ> {
    let zs = g.zs(n);
    let z = g.z(k);
    let c = g.generator_series(SeriesKind::C, z, k_cap)?;
    let y = g.generator_series(SeriesKind::Y, z, k_cap)?;
    let a = g.generator_series(SeriesKind::A, z, k_cap)?;
    let t = T_rational(g, n, k)?;
    let mut out = RationalFunctionZ::from_poly(g.zero(), &zs, u32::MAX);
    let mut t_pow = RationalFunctionZ::from_poly(g.one(), &zs, u32::MAX);
    // sum_p [c a^p / p! + y a^{p-1} / (p-1)!] T^p
    let mut a_prev = g.zero();
    let mut a_pow = g.one();
    for p in 0..=t_cap {
        if p > 0 {
            t_pow = t_pow.mul(&t, trunc);
            a_prev = a_pow.clone();
            a_pow = a_pow.multiply(&a, trunc)?.scale(&ExactRational::new(1, p as i64)?);
        }
        let coef = &c.multiply(&a_pow, trunc)? + &y.multiply(&a_prev, trunc)?;
        out = out.add(&t_pow.mul_poly(&coef, k_cap, trunc), trunc);
    }
    Ok(out)
}

/// First coefficient (in `z`, `t`) where two series differ.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMismatch {
    pub exponents: Vec<u32>,
    pub left: SuperPoly,
    pub right: SuperPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorizationReport {
    pub holds: bool,
    pub mismatch: Option<CoefficientMismatch>,
}

fn first_mismatch(vars: &[VarId], l: &SuperPoly, r: &SuperPoly) -> Option<CoefficientMismatch> {
    let lc = l.collect_in(vars);
    let rc = r.collect_in(vars);
    let mut keys: Vec<&Vec<u32>> = lc.keys().chain(rc.keys()).collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        let zero = SuperPoly::zero(l.alphabet());
        let a = lc.get(k).unwrap_or(&zero);
        let b = rc.get(k).unwrap_or(&zero);
        if a != b {
            return Some(CoefficientMismatch {
                exponents: k.clone(),
                left: a.clone(),
                right: b.clone(),
            });
        }
    }
    None
}

/// Compares `A(z1..zn; t)` with `A(z1; T^(1)) .. A(zn; T^(n))` through the
/// caps.
pub fn factorization_check(g: &Gl11, n: u32, caps: &SeriesCaps) -> Result<FactorizationReport> {
    check_n(g, n)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let lhs = A_series(g, n, caps)?;
    let k_cap = caps.z + n * (n - 1) * caps.t.max(1);
    let trunc = caps.truncation(g, n, k_cap);
    let mut acc = RationalFunctionZ::from_poly(g.one(), &g.zs(n), u32::MAX);
    for k in 1..=n {
        acc = acc.mul(&a_single(g, n, k, k_cap, caps.t, &trunc)?, &trunc);
    }
    let rhs = acc.collapse_to(caps.z)?.truncate(&caps.truncation(g, n, caps.z));
    let vars: Vec<VarId> = g.zs(n).into_iter().chain(g.ts(n)).collect();
    let mismatch = first_mismatch(&vars, &lhs, &rhs);
    Ok(FactorizationReport {
        holds: mismatch.is_none(),
        mismatch,
    })
}

/// Coefficients of a series in the `z1..zn`, `t0..t{n-1}` variables, keyed
/// by the exponent vector `(z1..zn, t0..t{n-1})`.
pub fn series_coefficients(g: &Gl11, n: u32, p: &SuperPoly) -> BTreeMap<Vec<u32>, SuperPoly> {
    let vars: Vec<VarId> = g.zs(n).into_iter().chain(g.ts(n)).collect();
    p.collect_in(&vars)
}

/// The coefficient of `t_0^{k_0} .. t_{n-1}^{k_{n-1} + n} s_lambda(z)` in
/// `A(z1..zn; t)`.
pub fn basis_element(g: &Gl11, n: u32, lambda: &Partition, k: &[u32]) -> Result<SuperPoly> {
    check_n(g, n)?;
    if lambda.len() > n as usize {
        return Err(Error::InvalidArgument(format!("l({lambda}) > {n}")));
    }
    if k.len() != n as usize {
        return Err(Error::InvalidArgument(format!("need {n} exponents, got {}", k.len())));
    }
    if n == 0 {
        return Ok(g.one());
    }
    let mut t_exp = k.to_vec();
    t_exp[n as usize - 1] += n;
    let degree = basis_degree(n, lambda, k);
    let caps = SeriesCaps {
        z: lambda.weight(),
        t: t_exp.iter().sum(),
        internal: Some(degree),
    };
    let a = A_series(g, n, &caps)?;
    let coeff = a.coefficient_in(&g.ts(n), &t_exp);
    let zs = g.zs(n);
    let component = coeff.filter_terms(|m| m.degree_in(&zs) == lambda.weight());
    Ok(schur_expand(&component, &zs)
        .remove(lambda)
        .unwrap_or_else(|| g.zero()))
}

/// Internal degree of [`basis_element`]: `n(n+1) + |lambda| + sum (i+1) k_i`.
pub fn basis_degree(n: u32, lambda: &Partition, k: &[u32]) -> u32 {
    n * (n + 1)
        + lambda.weight()
        + k.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum::<u32>()
}

/// `a_0^{k_0} .. a_{n-1}^{k_{n-1}} / (k_0! .. k_{n-1}!)`.
pub fn a_monomial(g: &Gl11, k: &[u32]) -> SuperPoly {
    let mut c = ExactRational::one();
    let mut factors = Vec::new();
    for (i, &e) in k.iter().enumerate() {
        c = &c * &ExactRational::inv_factorial(e);
        if e > 0 {
            factors.push((g.a(i as u32), e));
        }
    }
    SuperPoly::from_factors(g.alphabet(), c, &factors)
}

/// Checks the structure of a basis element's decomposition: no `Y(m, mu)`
/// with `m > n`, none with `m = n` and `|mu| > |lambda|`, and the
/// coefficient of `Y(n, lambda)` free of `a_i` with `i >= n`.
pub fn leading_component_check(g: &Gl11, n: u32, lambda: &Partition, element: &SuperPoly) -> Result<bool> {
    let dec = decompose(g, element)?;
    for (idx, c) in &dec.terms {
        if idx.n > n || (idx.n == n && idx.lambda.weight() > lambda.weight()) {
            return Ok(false);
        }
        if idx.n == n && &idx.lambda == lambda {
            let bad = c.variables().into_iter().any(|v| {
                matches!(g.generator(v), Some(id) if id.kind == GeneratorKind::A && id.index >= n)
            });
            if bad {
                return Ok(false);
            }
        }
    }
    Ok(dec.get(n, lambda).is_some())
}

/// Checks every `z`/`t` coefficient of a series for invariance; returns
/// the exponent vector of the first failure.
pub fn coefficients_invariant(g: &Gl11, n: u32, p: &SuperPoly) -> Option<Vec<u32>> {
    series_coefficients(g, n, p)
        .into_iter()
        .find(|(_, c)| !g.is_invariant(c).invariant)
        .map(|(k, _)| k)
}

/// `E12[0]` applied to a series termwise.
pub fn e12_annihilates(g: &Gl11, p: &SuperPoly) -> bool {
    g.act(&LoopOperator::new(1, 2, 0), p).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> &'static Gl11 {
        Gl11::standard()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn y_examples() {
        let g = g();
        assert_eq!(Y(g, 0, &p("")).unwrap(), g.one());
        for i in 0..4 {
            assert_eq!(Y(g, 1, &Partition::new(vec![i]).unwrap()).unwrap(), g.y(i));
        }
        assert_eq!(
            Y(g, 2, &p("")).unwrap(),
            g.parse("phi1*phi0*psi1*psi0").unwrap()
        );
        assert!(Y(g, 1, &p("1,1")).is_err());
    }

    #[test]
    fn y_degree() {
        let g = g();
        let idx = YIndex { n: 2, lambda: p("2,1") };
        let y = Y(g, 2, &idx.lambda).unwrap();
        assert_eq!(y.internal_degrees(), vec![idx.degree()]);
    }

    #[test]
    fn expansion_matches_lr_formula() {
        let g = g();
        let e1 = expand_y_product(g, 1, 4).unwrap();
        for i in 0..=4 {
            assert_eq!(e1[&Partition::new(vec![i]).unwrap()], g.y(i));
        }
        let e2 = expand_y_product(g, 2, 3).unwrap();
        for d in 0..=3 {
            for l in Partition::all(d, Some(2), None) {
                let y = Y(g, 2, &l).unwrap();
                assert_eq!(e2.get(&l).cloned().unwrap_or_else(|| g.zero()), y, "{l}");
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let g = g();
        let d = decompose(g, &g.y(0)).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.get(1, &p("")).unwrap(), &g.one());
        assert!(decompose(g, &(&g.y(0) * &g.y(1))).unwrap().is_empty());
        // y0 y2 = phi0 phi1 psi1 psi0 = -phi1 phi0 psi1 psi0
        let d = decompose(g, &(&g.y(0) * &g.y(2))).unwrap();
        assert_eq!(d.get(2, &p("")).unwrap(), &g.int(-1));
        assert!(decompose(g, &g.poly(g.phi(0))).is_err());
        assert!(decompose(g, &g.parse("phi0*psi1 - phi1*psi0").unwrap()).is_err());
    }

    #[test]
    fn decompose_round_trip() {
        let g = g();
        let r = g.parse("a0^2*c1 - 3*a2 + c0").unwrap();
        let y = Y(g, 2, &p("2,1")).unwrap();
        let d = decompose(g, &(&r * &y)).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.get(2, &p("2,1")).unwrap(), &r);
        let json = d.to_json();
        assert_eq!(json[0]["n"], 2);
        assert_eq!(json[0]["lambda"], serde_json::json!([2, 1]));
    }

    #[test]
    fn t_rational_examples() {
        let g = g();
        assert_eq!(T_rational(g, 1, 1).unwrap().to_string(), "t0");
        assert_eq!(T_rational(g, 2, 1).unwrap().to_string(), "(-z2*t0 + t1)/((z1 - z2))");
        assert_eq!(T_rational(g, 2, 2).unwrap().to_string(), "(z1*t0 - t1)/((z1 - z2))");
        assert!(t_system_check(g, 2, 6).unwrap());
        assert!(t_system_check(g, 3, 5).unwrap());
    }

    #[test]
    fn f_series_forms_agree() {
        let g = g();
        let caps = SeriesCaps::new(3, 2);
        assert_eq!(F_series(g, 2, &caps).unwrap(), F_series_via_T(g, 2, &caps).unwrap());
        assert_eq!(F_series(g, 2, &SeriesCaps::new(3, 0)).unwrap(), g.one());
        // n = 1: exp(t0 a(z))
        let f1 = F_series(g, 1, &SeriesCaps::new(3, 3)).unwrap();
        let a = g.generator_series(SeriesKind::A, g.z(1), 3).unwrap();
        let tr = Truncation::vars(&[g.z(1)], 3);
        let a2 = a.multiply(&a, &tr).unwrap();
        assert_eq!(
            f1.coefficient_in(&[g.t(0)], &[2]),
            a2.scale(&ExactRational::new(1, 2).unwrap())
        );
    }

    #[test]
    fn a_series_n1() {
        let g = g();
        let a = A_series(g, 1, &SeriesCaps::new(3, 4)).unwrap();
        let z = g.z(1);
        let tr = Truncation::vars(&[z], 3);
        let az = g.generator_series(SeriesKind::A, z, 3).unwrap();
        let cz = g.generator_series(SeriesKind::C, z, 3).unwrap();
        let yz = g.generator_series(SeriesKind::Y, z, 3).unwrap();
        assert_eq!(a.coefficient_in(&[g.t(0)], &[0]), cz);
        for k in 2..=5u32 {
            let lead = az.pow(k - 1, &tr).multiply(&cz, &tr).unwrap();
            let tail = az
                .pow(k - 2, &tr)
                .multiply(&yz, &tr)
                .unwrap()
                .scale(&ExactRational::from_int(k as i64 - 1));
            let expect = (&lead + &tail).scale(&ExactRational::inv_factorial(k - 1));
            assert_eq!(a.coefficient_in(&[g.t(0)], &[k - 1]), expect, "k = {k}");
        }
        assert_eq!(A_series(g, 0, &SeriesCaps::new(3, 3)).unwrap(), g.one());
    }

    #[test]
    fn a_series_n2_invariant_low_degree() {
        let g = g();
        let a = A_series(g, 2, &SeriesCaps::for_internal_degree(2, 7)).unwrap();
        assert!(!a.is_zero());
        assert_eq!(coefficients_invariant(g, 2, &a), None);
        assert!(e12_annihilates(g, &a));
    }

    #[test]
    fn factorization_small() {
        let g = g();
        assert!(factorization_check(g, 1, &SeriesCaps::new(3, 3)).unwrap().holds);
        assert!(factorization_check(g, 2, &SeriesCaps::new(2, 2)).unwrap().holds);
    }

    #[test]
    fn basis_elements() {
        let g = g();
        assert_eq!(basis_element(g, 0, &p(""), &[]).unwrap(), g.one());
        for k in 2..=4u32 {
            let b = basis_element(g, 1, &p(""), &[k - 2]).unwrap();
            let h = crate::ss_vectors::symbol(g, crate::ss_vectors::Family::H, k).unwrap();
            assert_eq!(b, h.scale(&ExactRational::inv_factorial(k - 1)));
        }
        let b = basis_element(g, 1, &p("1"), &[0]).unwrap();
        assert!(g.is_invariant(&b).invariant);
        assert!(leading_component_check(g, 1, &p("1"), &b).unwrap());
        assert_eq!(decompose(g, &b).unwrap().get(1, &p("1")).unwrap(), &g.one());
        let b = basis_element(g, 2, &p("1"), &[1, 0]).unwrap();
        assert!(g.is_invariant(&b).invariant);
        assert!(leading_component_check(g, 2, &p("1"), &b).unwrap());
        assert_eq!(decompose(g, &b).unwrap().get(2, &p("1")).unwrap(), &a_monomial(g, &[1, 0]));
    }
}
