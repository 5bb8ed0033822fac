//! Supersymmetric polynomials `Λ(m|n)`, affine supersymmetric polynomials
//! `Λ^aff(m|n)`, the Chevalley projection from the `gl(1|1)` symmetric
//! algebra, and the cancellation operator `D = sum_r d_r d/da_r` with
//! `d(z) = c(z)^{-1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl11::{GeneratorKind, Gl11, SeriesKind};
use crate::invariant_basis::basis_element;
use crate::qseries::{chi_mn, f_mn, hp_from_basis};
use crate::schur::Partition;
use crate::superpoly::linalg::{EchelonBasis, MonomialIndex};
use crate::superpoly::{Alphabet, ExactRational, Monomial, SuperPoly, Truncation, VarId, VarSpec};

/// Commuting variables `u{i}_{r}` (`1 <= i <= m`) and `v{j}_{r}`
/// (`1 <= j <= n`), `0 <= r < modes`, of degree `r + 1`, plus auxiliary
/// `w` (for substitutions) and `z1..z4`.
#[derive(Debug, Clone)]
pub struct SusyAlphabet {
    alphabet: Arc<Alphabet>,
    m: u32,
    n: u32,
    modes: u32,
}

impl SusyAlphabet {
    pub fn new(m: u32, n: u32, modes: u32) -> Self {
        let mut vars = Vec::new();
        for i in 1..=m {
            for r in 0..modes {
                vars.push(VarSpec::even(format!("u{i}_{r}"), r + 1, 0));
            }
        }
        for j in 1..=n {
            for r in 0..modes {
                vars.push(VarSpec::even(format!("v{j}_{r}"), r + 1, 0));
            }
        }
        vars.push(VarSpec::aux("w"));
        for k in 1..=4 {
            vars.push(VarSpec::aux(format!("z{k}")));
        }
        SusyAlphabet {
            alphabet: Alphabet::new(vars).expect("distinct names"),
            m,
            n,
            modes,
        }
    }

    /// The `(1|1)` alphabet with as many modes as `g`.
    pub fn for_gl11(g: &Gl11) -> Self {
        SusyAlphabet::new(1, 1, g.modes())
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modes(&self) -> u32 {
        self.modes
    }

    pub fn u(&self, i: u32, r: u32) -> VarId {
        assert!((1..=self.m).contains(&i) && r < self.modes, "u{i}_{r} out of range");
        VarId(((i - 1) * self.modes + r) as u16)
    }

    pub fn v(&self, j: u32, r: u32) -> VarId {
        assert!((1..=self.n).contains(&j) && r < self.modes, "v{j}_{r} out of range");
        VarId(((self.m + j - 1) * self.modes + r) as u16)
    }

    pub fn w(&self) -> VarId {
        VarId(((self.m + self.n) * self.modes) as u16)
    }

    pub fn z(&self, k: u32) -> VarId {
        assert!((1..=4).contains(&k));
        VarId(((self.m + self.n) * self.modes + k) as u16)
    }

    pub fn poly(&self, v: VarId) -> SuperPoly {
        SuperPoly::var(&self.alphabet, v)
    }

    pub fn parse(&self, text: &str) -> Result<SuperPoly> {
        SuperPoly::parse(&self.alphabet, text)
    }

    /// `(is_u, index, mode)` of a `u`/`v` variable.
    fn decode(&self, v: VarId) -> Option<(bool, u32, u32)> {
        let k = v.0 as u32;
        if k >= (self.m + self.n) * self.modes {
            return None;
        }
        let (block, r) = (k / self.modes, k % self.modes);
        Some(if block < self.m {
            (true, block + 1, r)
        } else {
            (false, block - self.m + 1, r)
        })
    }

    /// `T: u_{ir} -> (r+1) u_{i,r+1}`, `v_{jr} -> (r+1) v_{j,r+1}`.
    pub fn translate(&self, p: &SuperPoly) -> Result<SuperPoly> {
        let top = p
            .variables()
            .into_iter()
            .filter_map(|v| self.decode(v))
            .map(|(_, _, r)| r)
            .max();
        if let Some(r) = top {
            if r + 1 >= self.modes {
                return Err(Error::ModeOutOfRange {
                    index: r + 1,
                    modes: self.modes,
                });
            }
        }
        Ok(p.apply_derivation(|v| {
            let (is_u, i, r) = self.decode(v)?;
            let next = if is_u { self.u(i, r + 1) } else { self.v(i, r + 1) };
            Some(self.poly(next).scale(&ExactRational::from_int(r as i64 + 1)))
        }))
    }
}

/// Symmetric in `u1_0..um_0`, symmetric in `v1_0..vn_0`, and constant in
/// `w` after `um_0 -> w`, `vn_0 -> -w`.
pub fn is_supersymmetric(s: &SusyAlphabet, p: &SuperPoly) -> bool {
    let alpha = s.alphabet();
    let swap = |a: VarId, b: VarId| {
        p.map_homomorphism(
            alpha,
            |v| {
                if v == a {
                    s.poly(b)
                } else if v == b {
                    s.poly(a)
                } else {
                    s.poly(v)
                }
            },
            &Truncation::none(),
        )
    };
    for i in 1..s.m() {
        if &swap(s.u(i, 0), s.u(i + 1, 0)) != p {
            return false;
        }
    }
    for j in 1..s.n() {
        if &swap(s.v(j, 0), s.v(j + 1, 0)) != p {
            return false;
        }
    }
    if s.m() == 0 || s.n() == 0 {
        return true;
    }
    let (um, vn, w) = (s.u(s.m(), 0), s.v(s.n(), 0), s.w());
    let sub = p.map_homomorphism(
        alpha,
        |v| {
            if v == um {
                s.poly(w)
            } else if v == vn {
                -s.poly(w)
            } else {
                s.poly(v)
            }
        },
        &Truncation::none(),
    );
    let free = sub.terms().all(|(m, _)| m.exponent(w) == 0);
    free
}

/// `u_1^k + .. + u_m^k - (-1)^k (v_1^k + .. + v_n^k)` in the mode-0
/// variables.
pub fn power_sum_susy(s: &SusyAlphabet, k: u32) -> Result<SuperPoly> {
    affine_generator(s, k, 0)
}

/// `sum_i sum_{r_1+..+r_k=r} u_{i r_1}..u_{i r_k} - (-1)^k (same for v)`.
pub fn affine_generator(s: &SusyAlphabet, k: u32, r: u32) -> Result<SuperPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if r >= s.modes() {
        return Err(Error::ModeOutOfRange {
            index: r,
            modes: s.modes(),
        });
    }
    let alpha = s.alphabet();
    // coefficient of z^r in x(z)^k, built up one factor at a time
    let compositions = |var: &dyn Fn(u32) -> VarId| -> SuperPoly {
        let mut layer: Vec<SuperPoly> = (0..=r).map(|q| s.poly(var(q))).collect();
        for _ in 1..k {
            layer = (0..=r)
                .map(|q| {
                    (0..=q).fold(SuperPoly::zero(alpha), |acc, a| {
                        &acc + &(&s.poly(var(a)) * &layer[(q - a) as usize])
                    })
                })
                .collect();
        }
        layer[r as usize].clone()
    };
    let mut out = SuperPoly::zero(alpha);
    for i in 1..=s.m() {
        out = &out + &compositions(&|q| s.u(i, q));
    }
    let mut vs = SuperPoly::zero(alpha);
    for j in 1..=s.n() {
        vs = &vs + &compositions(&|q| s.v(j, q));
    }
    Ok(if k % 2 == 0 { &out - &vs } else { &out + &vs })
}

/// Projection killing `phi_i`, `psi_i`, with `a_r -> u1_r` and
/// `c_r -> u1_r + v1_r` (so `E22[-r-1] = c_r - a_r -> v1_r`). The `z`
/// variables are carried along by name.
pub fn chevalley(g: &Gl11, s: &SusyAlphabet, p: &SuperPoly) -> Result<SuperPoly> {
    if s.m() != 1 || s.n() != 1 {
        return Err(Error::InvalidArgument("the projection lands in the (1|1) alphabet".into()));
    }
    for v in p.variables() {
        match g.generator(v) {
            Some(id) if id.index >= s.modes() => {
                return Err(Error::ModeOutOfRange {
                    index: id.index,
                    modes: s.modes(),
                })
            }
            Some(_) => {}
            None => {
                s.alphabet().var(g.alphabet().name(v))?;
            }
        }
    }
    let zero = SuperPoly::zero(s.alphabet());
    Ok(p.map_homomorphism(
        s.alphabet(),
        |v| match g.generator(v) {
            Some(id) => match id.kind {
                GeneratorKind::A => s.poly(s.u(1, id.index)),
                GeneratorKind::C => &s.poly(s.u(1, id.index)) + &s.poly(s.v(1, id.index)),
                GeneratorKind::Phi | GeneratorKind::Psi => zero.clone(),
            },
            None => {
                let w = s.alphabet().var(g.alphabet().name(v)).expect("checked");
                s.poly(w)
            }
        },
        &Truncation::none(),
    ))
}

/// `num * c0^shift` with `num` a polynomial; normalized so that `num` is
/// not divisible by `c0` (and `shift = 0` for zero).
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentC0Poly {
    num: SuperPoly,
    shift: i64,
    c0: VarId,
}

impl LaurentC0Poly {
    pub fn new(g: &Gl11, num: SuperPoly, shift: i64) -> Self {
        LaurentC0Poly { num, shift, c0: g.c(0) }.normalized()
    }

    pub fn from_poly(g: &Gl11, p: SuperPoly) -> Self {
        LaurentC0Poly::new(g, p, 0)
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.shift = 0;
            return self;
        }
        let low = self
            .num
            .terms()
            .map(|(m, _)| m.exponent(self.c0))
            .min()
            .expect("nonzero");
        if low > 0 {
            let c0 = self.c0;
            let mut out = SuperPoly::zero(self.num.alphabet());
            for (e, coeff) in self.num.collect_in(&[c0]) {
                out = &out + &coeff.times_even_monomial(&[c0], &[e[0] - low]);
            }
            self.num = out;
            self.shift += low as i64;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &SuperPoly {
        &self.num
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Lowest power of `c0` occurring; `None` for zero.
    pub fn lowest_c0_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    /// The polynomial, if no negative power of `c0` occurs.
    pub fn to_poly(&self) -> Option<SuperPoly> {
        if self.shift < 0 && !self.is_zero() {
            return None;
        }
        Some(self.num.times_even_monomial(&[self.c0], &[self.shift.max(0) as u32]))
    }

    fn aligned(&self, shift: i64) -> SuperPoly {
        let up = (self.shift - shift) as u32;
        self.num.times_even_monomial(&[self.c0], &[up])
    }

    pub fn add(&self, other: &LaurentC0Poly) -> LaurentC0Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        LaurentC0Poly {
            num: &self.aligned(s) + &other.aligned(s),
            shift: s,
            c0: self.c0,
        }
        .normalized()
    }

    pub fn mul(&self, other: &LaurentC0Poly) -> LaurentC0Poly {
        LaurentC0Poly {
            num: &self.num * &other.num,
            shift: self.shift + other.shift,
            c0: self.c0,
        }
        .normalized()
    }

    pub fn scale_poly(&self, p: &SuperPoly) -> LaurentC0Poly {
        LaurentC0Poly {
            num: &self.num * p,
            shift: self.shift,
            c0: self.c0,
        }
        .normalized()
    }

    /// Terms with a negative total power of `c0`, keyed by the monomial
    /// with `c0` removed and that power.
    fn negative_terms(&self) -> Vec<((Monomial, i64), ExactRational)> {
        let c0 = self.c0;
        let mut out = Vec::new();
        for (e, coeff) in self.num.collect_in(&[c0]) {
            let p = e[0] as i64 + self.shift;
            if p < 0 {
                for (m, c) in coeff.terms() {
                    out.push(((m.clone(), p), c.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentC0Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "{}", self.num),
            s if self.num == SuperPoly::one(self.num.alphabet()) => write!(f, "c0^{s}"),
            s => write!(f, "({})*c0^{s}", self.num),
        }
    }
}

impl fmt::Debug for LaurentC0Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `d_0, .., d_D` from
/// `d_r = c0^{-1} sum_{a_1 + 2a_2 + .. + r a_r = r} (|a|)! / (a_1! .. a_r!)
/// prod (-c_i / c0)^{a_i}`.
pub fn d_series(g: &Gl11, order: u32) -> Result<Vec<LaurentC0Poly>> {
    if order >= g.modes() {
        return Err(Error::ModeOutOfRange {
            index: order,
            modes: g.modes(),
        });
    }
    let mut out = Vec::new();
    for r in 0..=order {
        let mut acc = LaurentC0Poly::from_poly(g, g.zero());
        for lambda in Partition::all(r, None, None) {
            // multiplicities a_i of part i
            let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
            for &p in lambda.parts() {
                *mult.entry(p).or_default() += 1;
            }
            let total: u32 = mult.values().sum();
            let mut c = ExactRational::factorial(total);
            let mut factors = Vec::new();
            for (&i, &a) in &mult {
                c = &c * &ExactRational::inv_factorial(a);
                factors.push((g.c(i), a));
            }
            if total % 2 == 1 {
                c = -c;
            }
            let term = SuperPoly::from_factors(g.alphabet(), c, &factors);
            acc = acc.add(&LaurentC0Poly::new(g, term, -1 - total as i64));
        }
        out.push(acc);
    }
    Ok(out)
}

/// `d_r` from `c_0 d_r = -sum_{s=1}^{r} c_s d_{r-s}`.
pub fn d_series_recursive(g: &Gl11, order: u32) -> Vec<LaurentC0Poly> {
    let inv_c0 = LaurentC0Poly::new(g, g.one(), -1);
    let mut out: Vec<LaurentC0Poly> = vec![inv_c0.clone()];
    for r in 1..=order {
        let mut acc = LaurentC0Poly::from_poly(g, g.zero());
        for s in 1..=r {
            acc = acc.add(&out[(r - s) as usize].scale_poly(&g.poly(g.c(s))));
        }
        out.push(acc.mul(&inv_c0).scale_poly(&g.int(-1)));
    }
    out
}

/// `sum_r d_r dp/da_r` for `p` a polynomial in the `a_r`, `c_r`.
#[allow(non_snake_case)]
pub fn D_apply(g: &Gl11, p: &SuperPoly) -> Result<LaurentC0Poly> {
    let mut top = None;
    for v in p.variables() {
        match g.generator(v) {
            Some(id) if id.kind == GeneratorKind::A => top = top.max(Some(id.index)),
            Some(id) if id.kind == GeneratorKind::C => {}
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{} is not an a or c variable",
                    g.alphabet().name(v)
                )))
            }
        }
    }
    let Some(top) = top else {
        return Ok(LaurentC0Poly::from_poly(g, g.zero()));
    };
    let d = d_series(g, top)?;
    let mut acc = LaurentC0Poly::from_poly(g, g.zero());
    for (r, dr) in d.iter().enumerate() {
        let da = p.derive_even(g.a(r as u32))?;
        if !da.is_zero() {
            acc = acc.add(&dr.scale_poly(&da));
        }
    }
    Ok(acc)
}

/// `D p` has no negative powers of `c0`.
pub fn cancellation_check(g: &Gl11, p: &SuperPoly) -> Result<bool> {
    Ok(D_apply(g, p)?.lowest_c0_exponent().is_none_or(|e| e >= 0))
}

/// Coefficients of `a(z)^k c(z)`, `k >= 0`: the generators of
/// `Λ^aff(1|1)` written in `a_r`, `c_r`. Returned with their degrees
/// `k + r + 1`, for degrees up to `max_degree`.
pub fn affine_generators_ac(g: &Gl11, max_degree: u32) -> Result<Vec<(u32, SuperPoly)>> {
    let z = g.z(1);
    let cap = max_degree.saturating_sub(1);
    let tr = Truncation::vars(&[z], cap);
    let a = g.generator_series(SeriesKind::A, z, cap)?;
    let c = g.generator_series(SeriesKind::C, z, cap)?;
    let mut out = Vec::new();
    let mut series = c;
    for k in 0..max_degree {
        for r in 0..max_degree - k {
            let coeff = series.coefficient_in(&[z], &[r]);
            if !coeff.is_zero() {
                out.push((k + r + 1, coeff));
            }
        }
        series = series.multiply(&a, &tr)?;
    }
    Ok(out)
}

/// All products of the given graded generators with total degree exactly
/// `degree`.
pub fn products_of_degree(generators: &[(u32, SuperPoly)], degree: u32, one: &SuperPoly) -> Vec<SuperPoly> {
    fn rec(gens: &[(u32, SuperPoly)], start: usize, left: u32, acc: &SuperPoly, out: &mut Vec<SuperPoly>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..gens.len() {
            let (d, p) = &gens[i];
            if *d <= left && *d > 0 {
                rec(gens, i, left - d, &(acc * p), out);
            }
        }
    }
    let mut out = Vec::new();
    rec(generators, 0, degree, one, &mut out);
    out
}

/// Per-degree dimensions of the span of products of the generators of
/// `Λ^aff(m|n)` (degrees `0..=max_degree`).
pub fn affine_dimensions(m: u32, n: u32, max_degree: u32) -> Result<Vec<usize>> {
    let s = SusyAlphabet::new(m, n, max_degree.max(1));
    let mut gens = Vec::new();
    for k in 1..=max_degree {
        for r in 0..=max_degree - k {
            gens.push((k + r, affine_generator(&s, k, r)?));
        }
    }
    let one = SuperPoly::one(s.alphabet());
    Ok((0..=max_degree)
        .map(|d| crate::superpoly::linalg::rank(&products_of_degree(&gens, d, &one)))
        .collect())
}

/// `dim Λ(m|n)` in degree `N`: bisymmetric polynomials (spanned by
/// `m_alpha(u) m_beta(v)`) whose substitution `u_m = w`, `v_n = -w` is free
/// of `w`.
pub fn susy_dimension(m: u32, n: u32, degree: u32) -> usize {
    let s = SusyAlphabet::new(m, n, 1);
    let alpha = s.alphabet();
    let monomial_symmetric = |vars: &[VarId], lambda: &Partition| -> SuperPoly {
        let mut exps = lambda.padded(vars.len());
        exps.sort_unstable();
        let mut out = SuperPoly::zero(alpha);
        // distinct permutations in lexicographic order
        loop {
            out = &out + &SuperPoly::one(alpha).times_even_monomial(vars, &exps);
            let Some(i) = (0..exps.len().saturating_sub(1)).rev().find(|&i| exps[i] < exps[i + 1]) else {
                break;
            };
            let j = (i + 1..exps.len()).rev().find(|&j| exps[j] > exps[i]).expect("exists");
            exps.swap(i, j);
            exps[i + 1..].reverse();
        }
        out
    };
    let us: Vec<VarId> = (1..=m).map(|i| s.u(i, 0)).collect();
    let vs: Vec<VarId> = (1..=n).map(|j| s.v(j, 0)).collect();
    let mut basis = Vec::new();
    for du in 0..=degree {
        for a in Partition::all(du, Some(m as usize), None) {
            for b in Partition::all(degree - du, Some(n as usize), None) {
                basis.push(&monomial_symmetric(&us, &a) * &monomial_symmetric(&vs, &b));
            }
        }
    }
    if m == 0 || n == 0 {
        return basis.len();
    }
    let (um, vn, w) = (s.u(m, 0), s.v(n, 0), s.w());
    let mut index = MonomialIndex::new();
    let mut ech = EchelonBasis::new();
    let mut rows = Vec::new();
    for p in &basis {
        let sub = p.map_homomorphism(
            alpha,
            |v| {
                if v == um {
                    s.poly(w)
                } else if v == vn {
                    -s.poly(w)
                } else {
                    s.poly(v)
                }
            },
            &Truncation::none(),
        );
        rows.push(sub.filter_terms(|mono| mono.exponent(w) > 0));
    }
    // kernel dimension of the map p -> (w-dependent part of the substitution)
    for r in &rows {
        ech.insert(index.row(r));
    }
    basis.len() - ech.rank()
}

/// Chevalley images of the invariant basis, degree by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReport {
    /// `(degree, number of basis elements, rank of their images)`.
    pub per_degree: Vec<(u32, usize, usize)>,
    /// Expected counts from the Hilbert-Poincare series.
    pub expected: Vec<usize>,
    pub full_rank: bool,
}

/// Invariant basis elements (as a module over `C[c_i]`) of degree at most
/// `max_degree`, tagged with their degree.
pub fn invariant_module_basis(g: &Gl11, max_degree: u32) -> Result<Vec<(u32, SuperPoly)>> {
    let mut out = Vec::new();
    for n in 0u32.. {
        if n * (n + 1) > max_degree {
            break;
        }
        let room = max_degree - n * (n + 1);
        for lw in 0..=room {
            for lambda in Partition::all(lw, Some(n as usize), None) {
                // exponent vectors k with sum (i+1) k_i <= room - lw
                let mut ks: Vec<Vec<u32>> = vec![vec![]];
                for i in 0..n {
                    let mut next = Vec::new();
                    for k in &ks {
                        let used: u32 = k.iter().enumerate().map(|(j, &e)| (j as u32 + 1) * e).sum();
                        for e in 0..=(room - lw - used) / (i + 1) {
                            let mut k2 = k.clone();
                            k2.push(e);
                            next.push(k2);
                        }
                    }
                    ks = next;
                }
                for k in ks {
                    let d = crate::invariant_basis::basis_degree(n, &lambda, &k);
                    out.push((d, basis_element(g, n, &lambda, &k)?));
                }
            }
        }
    }
    Ok(out)
}

/// Products of the invariant module basis with monomials in the `c_i`,
/// grouped by degree `0..=max_degree`.
pub fn invariant_basis_by_degree(g: &Gl11, max_degree: u32) -> Result<Vec<Vec<SuperPoly>>> {
    let module = invariant_module_basis(g, max_degree)?;
    let cs: Vec<(u32, SuperPoly)> = (0..max_degree).map(|i| (i + 1, g.poly(g.c(i)))).collect();
    let mut out = vec![Vec::new(); max_degree as usize + 1];
    for (d, b) in &module {
        for cd in 0..=max_degree - d {
            for cm in products_of_degree(&cs, cd, &g.one()) {
                out[(d + cd) as usize].push(&cm * b);
            }
        }
    }
    Ok(out)
}

/// Ranks of the Chevalley images of the invariant basis in each degree,
/// compared with the Hilbert-Poincare coefficients.
pub fn injectivity_spotcheck(g: &Gl11, max_degree: u32) -> Result<InjectivityReport> {
    let s = SusyAlphabet::for_gl11(g);
    let by_degree = invariant_basis_by_degree(g, max_degree)?;
    let hp = hp_from_basis(max_degree);
    let mut per_degree = Vec::new();
    let mut expected = Vec::new();
    let mut full = true;
    for (d, elems) in by_degree.iter().enumerate() {
        let images = elems
            .iter()
            .map(|e| chevalley(g, &s, e))
            .collect::<Result<Vec<_>>>()?;
        let rank = crate::superpoly::linalg::rank(&images);
        let want = hp.coeff(d as u32).try_into().unwrap_or(usize::MAX);
        full &= rank == elems.len() && rank == want;
        per_degree.push((d as u32, elems.len(), rank));
        expected.push(want);
    }
    Ok(InjectivityReport {
        per_degree,
        expected,
        full_rank: full,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureKind {
    /// Cancellation characterizes `Λ^aff(1|1)`.
    Canc34,
    /// `dim Λ^aff(m|n)^N` counts plane partitions over the hook.
    Hp32,
    /// The Chevalley projection maps invariants onto `Λ^aff`.
    Chev44,
}

impl std::str::FromStr for ConjectureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canc_3_4" => Ok(ConjectureKind::Canc34),
            "hp_3_2" => Ok(ConjectureKind::Hp32),
            "chev_4_4" => Ok(ConjectureKind::Chev44),
            _ => Err(Error::InvalidArgument(format!("unknown conjecture `{s}`"))),
        }
    }
}

impl fmt::Display for ConjectureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureKind::Canc34 => "canc_3_4",
            ConjectureKind::Hp32 => "hp_3_2",
            ConjectureKind::Chev44 => "chev_4_4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeParams {
    pub m: u32,
    pub n: u32,
    pub max_degree: u32,
}

/// Evidence gathered by [`conjecture_probe`]; never a proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub conjecture: String,
    pub params: ProbeParams,
    pub checked_range: String,
    pub counterexamples: Vec<String>,
}

/// Dimension of `{p in degree N : D p has no negative power of c0}` inside
/// the polynomials in `a_r`, `c_r`.
pub fn cancellation_kernel_dimension(g: &Gl11, degree: u32) -> Result<usize> {
    let vars: Vec<(u32, SuperPoly)> = (0..degree)
        .flat_map(|r| [(r + 1, g.poly(g.a(r))), (r + 1, g.poly(g.c(r)))])
        .collect();
    let monomials = products_of_degree(&vars, degree, &g.one());
    let mut cols: HashMap<(Monomial, i64), usize> = HashMap::new();
    let mut ech = EchelonBasis::new();
    for p in &monomials {
        let mut row = BTreeMap::new();
        for (key, c) in D_apply(g, p)?.negative_terms() {
            let n = cols.len();
            let col = *cols.entry(key).or_insert(n);
            row.insert(col, c);
        }
        ech.insert(row);
    }
    Ok(monomials.len() - ech.rank())
}

pub fn conjecture_probe(g: &Gl11, kind: ConjectureKind, params: ProbeParams) -> Result<ProbeReport> {
    let d = params.max_degree;
    let mut counterexamples = Vec::new();
    match kind {
        ConjectureKind::Canc34 => {
            if (params.m, params.n) != (1, 1) {
                return Err(Error::InvalidArgument("canc_3_4 is stated for (m, n) = (1, 1)".into()));
            }
            let gens = affine_generators_ac(g, d)?;
            for deg in 1..=d {
                let span = crate::superpoly::linalg::rank(&products_of_degree(&gens, deg, &g.one()));
                let kernel = cancellation_kernel_dimension(g, deg)?;
                if kernel != span {
                    counterexamples.push(format!(
                        "degree {deg}: cancellation subspace has dimension {kernel}, affine span {span}"
                    ));
                }
            }
        }
        ConjectureKind::Hp32 => {
            let dims = affine_dimensions(params.m, params.n, d)?;
            let f = f_mn(params.m, params.n, d)?;
            for (deg, dim) in dims.iter().enumerate() {
                let want = f.coeff(deg as u32);
                if num_bigint::BigInt::from(*dim) != *want {
                    counterexamples.push(format!("degree {deg}: dimension {dim}, plane partitions {want}"));
                }
            }
        }
        ConjectureKind::Chev44 => {
            if (params.m, params.n) != (1, 1) {
                return Err(Error::InvalidArgument("only the (1|1) projection is implemented".into()));
            }
            let s = SusyAlphabet::for_gl11(g);
            let by_degree = invariant_basis_by_degree(g, d)?;
            let mut gens = Vec::new();
            for k in 1..=d.max(1) {
                for r in 0..=d.saturating_sub(k) {
                    gens.push((k + r, affine_generator(&s, k, r)?));
                }
            }
            let one = SuperPoly::one(s.alphabet());
            for (deg, elems) in by_degree.iter().enumerate() {
                let images = elems
                    .iter()
                    .map(|e| chevalley(g, &s, e))
                    .collect::<Result<Vec<_>>>()?;
                let target = products_of_degree(&gens, deg as u32, &one);
                let r_img = crate::superpoly::linalg::rank(&images);
                let r_target = crate::superpoly::linalg::rank(&target);
                let r_both = crate::superpoly::linalg::rank(&[images, target].concat());
                if r_img != r_target || r_both != r_target {
                    counterexamples.push(format!(
                        "degree {deg}: image rank {r_img}, affine rank {r_target}, joint rank {r_both}"
                    ));
                }
            }
        }
    }
    Ok(ProbeReport {
        conjecture: kind.to_string(),
        params,
        checked_range: format!("degrees 0..={d}"),
        counterexamples,
    })
}

/// `chi_{m,n}` coefficients against [`susy_dimension`].
pub fn susy_dimensions_match_chi(m: u32, n: u32, max_degree: u32) -> bool {
    let chi = chi_mn(m, n, max_degree);
    (0..=max_degree).all(|d| num_bigint::BigInt::from(susy_dimension(m, n, d)) == *chi.coeff(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ss_vectors::{symbol, Family};

    fn g() -> &'static Gl11 {
        Gl11::standard()
    }

    #[test]
    fn supersymmetry_examples() {
        let s = SusyAlphabet::new(1, 1, 3);
        assert!(is_supersymmetric(&s, &s.parse("u1_0 + v1_0").unwrap()));
        assert!(!is_supersymmetric(&s, &s.parse("u1_0").unwrap()));
        assert!(is_supersymmetric(&s, &s.parse("u1_0^2 - v1_0^2").unwrap()));
        let s2 = SusyAlphabet::new(2, 2, 1);
        for k in 1..=6 {
            assert!(is_supersymmetric(&s2, &power_sum_susy(&s2, k).unwrap()), "k = {k}");
        }
        assert!(!is_supersymmetric(&s2, &s2.parse("u1_0 + v1_0").unwrap()));
    }

    #[test]
    fn generator_examples() {
        let s = SusyAlphabet::new(1, 1, 4);
        assert_eq!(affine_generator(&s, 1, 2).unwrap(), s.parse("u1_2 + v1_2").unwrap());
        assert_eq!(affine_generator(&s, 2, 0).unwrap(), s.parse("u1_0^2 - v1_0^2").unwrap());
        assert_eq!(
            affine_generator(&s, 2, 1).unwrap(),
            s.parse("2*u1_0*u1_1 - 2*v1_0*v1_1").unwrap()
        );
        let gk = affine_generator(&s, 3, 2).unwrap();
        assert_eq!(gk.internal_degrees(), vec![5]);
    }

    #[test]
    fn chevalley_examples() {
        let g = g();
        let s = SusyAlphabet::for_gl11(g);
        for k in 1..=5 {
            let h = symbol(g, Family::H, k).unwrap();
            let expect = &s.parse("u1_0").unwrap().pow(k - 1, &Truncation::none())
                * &s.parse("u1_0 + v1_0").unwrap();
            assert_eq!(chevalley(g, &s, &h).unwrap(), expect);
        }
        assert!(chevalley(g, &s, &g.y(0)).unwrap().is_zero());
        assert_eq!(chevalley(g, &s, &g.poly(g.c(3))).unwrap(), s.parse("u1_3 + v1_3").unwrap());
        assert!(chevalley(g, &s, &g.poly(g.t(0))).is_err());
    }

    #[test]
    fn d_series_examples() {
        let g = g();
        let d = d_series(g, 5).unwrap();
        assert_eq!(d[0], LaurentC0Poly::new(g, g.one(), -1));
        assert_eq!(d[1], LaurentC0Poly::new(g, -g.poly(g.c(1)), -2));
        assert_eq!(d, d_series_recursive(g, 5));
        // c(z) d(z) = 1
        for r in 0..=5u32 {
            let mut acc = LaurentC0Poly::from_poly(g, g.zero());
            for s in 0..=r {
                acc = acc.add(&d[(r - s) as usize].scale_poly(&g.poly(g.c(s))));
            }
            let expect = if r == 0 { g.one() } else { g.zero() };
            assert_eq!(acc.to_poly().unwrap(), expect, "r = {r}");
        }
    }

    #[test]
    fn d_apply_examples() {
        let g = g();
        assert!(D_apply(g, &g.poly(g.c(2))).unwrap().is_zero());
        assert_eq!(D_apply(g, &g.poly(g.a(0))).unwrap(), LaurentC0Poly::new(g, g.one(), -1));
        assert!(!cancellation_check(g, &g.poly(g.a(0))).unwrap());
        assert!(cancellation_check(g, &g.one()).unwrap());
        assert!(cancellation_check(g, &g.parse("a0*c0").unwrap()).unwrap());
        assert!(D_apply(g, &g.y(0)).is_err());
    }

    #[test]
    fn laurent_normalization() {
        let g = g();
        let p = LaurentC0Poly::new(g, g.parse("c0^2*a1 + c0^3").unwrap(), -3);
        assert_eq!(p.shift(), -1);
        assert_eq!(p.numerator(), &g.parse("a1 + c0").unwrap());
        assert_eq!(p.to_poly(), None);
        assert_eq!(p.to_string(), "(a1 + c0)*c0^-1");
    }

    #[test]
    fn susy_dimension_matches_chi() {
        for m in 0..=2 {
            for n in 0..=2 {
                assert!(susy_dimensions_match_chi(m, n, 6), "({m}, {n})");
            }
        }
    }

    #[test]
    fn translation_commutes_with_projection() {
        let g = g();
        let s = SusyAlphabet::for_gl11(g);
        let p = g.parse("a0^2*c1 + phi0*psi2 - 3*c0*a2").unwrap();
        let lhs = chevalley(g, &s, &g.translate(&p).unwrap()).unwrap();
        let rhs = s.translate(&chevalley(g, &s, &p).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn injectivity_low_degree() {
        let g = g();
        let rep = injectivity_spotcheck(g, 4).unwrap();
        assert!(rep.full_rank, "{rep:?}");
        assert_eq!(rep.expected, vec![1, 1, 3, 6, 12]);
    }

    #[test]
    fn probes() {
        let g = g();
        let p = ProbeParams { m: 1, n: 1, max_degree: 4 };
        for kind in [ConjectureKind::Canc34, ConjectureKind::Hp32, ConjectureKind::Chev44] {
            let rep = conjecture_probe(g, kind, p).unwrap();
            assert!(rep.counterexamples.is_empty(), "{rep:?}");
        }
        let j = serde_json::to_value(conjecture_probe(g, ConjectureKind::Hp32, p).unwrap()).unwrap();
        assert_eq!(j["conjecture"], "hp_3_2");
        assert!(j["counterexamples"].as_array().unwrap().is_empty());
    }
}
