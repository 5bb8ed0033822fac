//! The `gl(1|1)[t]`-module structure on the symmetric algebra of negative
//! modes.
//!
//! Generators: `a_i = E11[-i-1]`, `c_i = E11[-i-1] + E22[-i-1]` (central),
//! `phi_i = E21[-i-1]`, `psi_i = E12[-i-1]`, all of degree `i + 1`. The loop
//! operators `E_ij[r]` with `r >= 0` act by super-derivations computed from
//! the loop bracket, with every nonnegative mode sent to zero.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::superpoly::{Alphabet, ExactRational, Parity, SuperPoly, Truncation, VarId, VarSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    A,
    C,
    Phi,
    Psi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub kind: GeneratorKind,
    pub index: u32,
}

/// Kinds accepted by [`Gl11::generator_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    A,
    C,
    Phi,
    Psi,
    Y,
}

/// `E_ij[r]` with `i, j` in `{1, 2}` and `r >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopOperator {
    pub i: u8,
    pub j: u8,
    pub r: u32,
}

impl LoopOperator {
    pub fn new(i: u8, j: u8, r: u32) -> Self {
        assert!((1..=2).contains(&i) && (1..=2).contains(&j), "indices are 1 or 2");
        LoopOperator { i, j, r }
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count((index_parity(self.i) + index_parity(self.j)) as usize)
    }

    /// `[X, Y]` as a combination of loop operators (no central term: the
    /// level only enters when modes cancel to zero with a factor `r = 0`).
    pub fn bracket(&self, other: &LoopOperator) -> Vec<(i64, LoopOperator)> {
        let (i, j, k, l) = (self.i, self.j, other.i, other.j);
        let r = self.r + other.r;
        let mut out = Vec::new();
        if k == j {
            out.push((1, LoopOperator::new(i, l, r)));
        }
        if i == l {
            out.push((-koszul(i, j, k, l), LoopOperator::new(k, j, r)));
        }
        out
    }

    /// The eight operators of mode `r` and below, in the fixed order used by
    /// invariance checks: `(1,1), (1,2), (2,1), (2,2)` for each mode.
    pub fn all_up_to(max_mode: u32) -> Vec<LoopOperator> {
        (0..=max_mode)
            .flat_map(|r| {
                [(1, 1), (1, 2), (2, 1), (2, 2)]
                    .into_iter()
                    .map(move |(i, j)| LoopOperator::new(i, j, r))
            })
            .collect()
    }
}

impl fmt::Display for LoopOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}[{}]", self.i, self.j, self.r)
    }
}

fn index_parity(i: u8) -> u8 {
    u8::from(i == 2)
}

/// `(-1)^{(i+j)(k+l)}` on index parities.
fn koszul(i: u8, j: u8, k: u8, l: u8) -> i64 {
    if (index_parity(i) + index_parity(j)) * (index_parity(k) + index_parity(l)) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Result of [`Gl11::is_invariant`].
#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub witness: Option<(LoopOperator, SuperPoly)>,
}

/// The `gl(1|1)` alphabet: modes `0..modes` of `a, c, phi, psi`, plus
/// auxiliary commuting variables `z1..zN`, `t0..t{N-1}`, `u` and `q`.
///
/// Odd variables are laid out so that the canonical order is
/// `phi_0 < phi_1 < ... < psi_max < ... < psi_1 < psi_0`.
#[derive(Debug, Clone)]
pub struct Gl11 {
    alphabet: Arc<Alphabet>,
    modes: u32,
    n_aux: u32,
}

impl Gl11 {
    pub fn new(modes: u32, n_aux: u32) -> Self {
        assert!(modes >= 1);
        let m = modes;
        let mut vars = Vec::with_capacity((4 * m + 2 * n_aux + 2) as usize);
        for i in 0..m {
            vars.push(VarSpec::even(format!("a{i}"), i + 1, 0));
        }
        for i in 0..m {
            vars.push(VarSpec::even(format!("c{i}"), i + 1, 0));
        }
        for i in 0..m {
            vars.push(VarSpec::odd(format!("phi{i}"), i + 1, 0));
        }
        for i in (0..m).rev() {
            vars.push(VarSpec::odd(format!("psi{i}"), i + 1, 0));
        }
        for k in 1..=n_aux {
            vars.push(VarSpec::aux(format!("z{k}")));
        }
        for i in 0..n_aux {
            vars.push(VarSpec::aux(format!("t{i}")));
        }
        vars.push(VarSpec::aux("u"));
        vars.push(VarSpec::aux("q"));
        Gl11 {
            alphabet: Alphabet::new(vars).expect("distinct names"),
            modes,
            n_aux,
        }
    }

    /// Shared instance with 24 modes and four auxiliary `z`/`t` variables.
    pub fn standard() -> &'static Gl11 {
        static STD: OnceLock<Gl11> = OnceLock::new();
        STD.get_or_init(|| Gl11::new(24, 4))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn modes(&self) -> u32 {
        self.modes
    }

    pub fn n_aux(&self) -> u32 {
        self.n_aux
    }

    fn check_mode(&self, i: u32) -> Result<()> {
        if i < self.modes {
            Ok(())
        } else {
            Err(Error::ModeOutOfRange {
                index: i,
                modes: self.modes,
            })
        }
    }

    pub fn a(&self, i: u32) -> VarId {
        assert!(i < self.modes, "mode {i} out of range");
        VarId(i as u16)
    }

    pub fn c(&self, i: u32) -> VarId {
        assert!(i < self.modes, "mode {i} out of range");
        VarId((self.modes + i) as u16)
    }

    pub fn phi(&self, i: u32) -> VarId {
        assert!(i < self.modes, "mode {i} out of range");
        VarId((2 * self.modes + i) as u16)
    }

    pub fn psi(&self, i: u32) -> VarId {
        assert!(i < self.modes, "mode {i} out of range");
        VarId((3 * self.modes + self.modes - 1 - i) as u16)
    }

    /// `z_k`, `k` starting at 1.
    pub fn z(&self, k: u32) -> VarId {
        assert!((1..=self.n_aux).contains(&k), "z{k} out of range");
        VarId((4 * self.modes + k - 1) as u16)
    }

    /// `t_i`, `i` starting at 0.
    pub fn t(&self, i: u32) -> VarId {
        assert!(i < self.n_aux, "t{i} out of range");
        VarId((4 * self.modes + self.n_aux + i) as u16)
    }

    pub fn u(&self) -> VarId {
        VarId((4 * self.modes + 2 * self.n_aux) as u16)
    }

    pub fn q(&self) -> VarId {
        VarId((4 * self.modes + 2 * self.n_aux + 1) as u16)
    }

    pub fn zs(&self, n: u32) -> Vec<VarId> {
        (1..=n).map(|k| self.z(k)).collect()
    }

    pub fn ts(&self, n: u32) -> Vec<VarId> {
        (0..n).map(|i| self.t(i)).collect()
    }

    pub fn var_id(&self, g: GeneratorId) -> Result<VarId> {
        self.check_mode(g.index)?;
        Ok(match g.kind {
            GeneratorKind::A => self.a(g.index),
            GeneratorKind::C => self.c(g.index),
            GeneratorKind::Phi => self.phi(g.index),
            GeneratorKind::Psi => self.psi(g.index),
        })
    }

    /// Inverse of [`Gl11::var_id`]; `None` for auxiliary variables.
    pub fn generator(&self, v: VarId) -> Option<GeneratorId> {
        let m = self.modes;
        let k = v.0 as u32;
        let (kind, index) = match k / m {
            0 => (GeneratorKind::A, k % m),
            1 => (GeneratorKind::C, k % m),
            2 => (GeneratorKind::Phi, k % m),
            3 => (GeneratorKind::Psi, m - 1 - k % m),
            _ => return None,
        };
        Some(GeneratorId { kind, index })
    }

    pub fn poly(&self, v: VarId) -> SuperPoly {
        SuperPoly::var(&self.alphabet, v)
    }

    pub fn zero(&self) -> SuperPoly {
        SuperPoly::zero(&self.alphabet)
    }

    pub fn one(&self) -> SuperPoly {
        SuperPoly::one(&self.alphabet)
    }

    pub fn int(&self, c: i64) -> SuperPoly {
        SuperPoly::int(&self.alphabet, c)
    }

    pub fn parse(&self, text: &str) -> Result<SuperPoly> {
        SuperPoly::parse(&self.alphabet, text)
    }

    /// `y_i = sum_{a+b=i} phi_a psi_b`.
    pub fn y(&self, i: u32) -> SuperPoly {
        let mut out = self.zero();
        for a in 0..=i {
            out = &out
                + &SuperPoly::from_factors(
                    &self.alphabet,
                    ExactRational::one(),
                    &[(self.phi(a), 1), (self.psi(i - a), 1)],
                );
        }
        out
    }

    /// `E_kl[-index-1]` written in the `a, c, phi, psi` dictionary.
    pub fn e_mode(&self, k: u8, l: u8, index: u32) -> Result<SuperPoly> {
        self.check_mode(index)?;
        Ok(match (k, l) {
            (1, 1) => self.poly(self.a(index)),
            (2, 2) => &self.poly(self.c(index)) - &self.poly(self.a(index)),
            (1, 2) => self.poly(self.psi(index)),
            (2, 1) => self.poly(self.phi(index)),
            _ => return Err(Error::InvalidArgument(format!("E{k}{l}"))),
        })
    }

    /// Largest mode index among the generators occurring in `p`.
    pub fn max_mode(&self, p: &SuperPoly) -> Option<u32> {
        p.variables()
            .into_iter()
            .filter_map(|v| self.generator(v))
            .map(|g| g.index)
            .max()
    }

    /// `[op, g]` for a single generator `g`, in the quotient by `g[t]`.
    fn bracket_generator(&self, op: &LoopOperator, g: GeneratorId) -> Option<SuperPoly> {
        let s = g.index;
        // g as a combination of E_kl[-s-1]
        let parts: &[(i64, u8, u8)] = match g.kind {
            GeneratorKind::A => &[(1, 1, 1)],
            GeneratorKind::C => &[(1, 1, 1), (1, 2, 2)],
            GeneratorKind::Phi => &[(1, 2, 1)],
            GeneratorKind::Psi => &[(1, 1, 2)],
        };
        if op.r > s {
            return None;
        }
        let idx = s - op.r;
        let (i, j) = (op.i, op.j);
        let mut out = self.zero();
        for &(coef, k, l) in parts {
            if k == j {
                let e = self.e_mode(i, l, idx).expect("lower mode in range");
                out = &out + &e.scale(&ExactRational::from_int(coef));
            }
            if i == l {
                let e = self.e_mode(k, j, idx).expect("lower mode in range");
                out = &out + &e.scale(&ExactRational::from_int(-coef * koszul(i, j, k, l)));
            }
        }
        (!out.is_zero()).then_some(out)
    }

    /// Action of `E_ij[r]` as a super-derivation of parity `i + j`.
    pub fn act(&self, op: &LoopOperator, p: &SuperPoly) -> SuperPoly {
        p.apply_derivation(|v| {
            self.generator(v)
                .and_then(|g| self.bracket_generator(op, g))
        })
    }

    /// Action of a linear combination of loop operators.
    pub fn act_combination(&self, ops: &[(i64, LoopOperator)], p: &SuperPoly) -> SuperPoly {
        ops.iter().fold(self.zero(), |acc, (c, op)| {
            &acc + &self.act(op, p).scale(&ExactRational::from_int(*c))
        })
    }

    /// `-sum_j psi_j d/da_j + sum_r c_r d/dphi_r` (left derivatives).
    pub fn e12_zero_operator(&self, p: &SuperPoly) -> SuperPoly {
        p.apply_derivation(|v| match self.generator(v)? {
            GeneratorId {
                kind: GeneratorKind::A,
                index,
            } => Some(-self.poly(self.psi(index))),
            GeneratorId {
                kind: GeneratorKind::Phi,
                index,
            } => Some(self.poly(self.c(index))),
            _ => None,
        })
    }

    /// Translation `T`: the even derivation `g_i -> (i+1) g_{i+1}`.
    pub fn translate(&self, p: &SuperPoly) -> Result<SuperPoly> {
        if let Some(m) = self.max_mode(p) {
            self.check_mode(m + 1)?;
        }
        Ok(p.apply_derivation(|v| {
            let g = self.generator(v)?;
            let next = self
                .var_id(GeneratorId {
                    kind: g.kind,
                    index: g.index + 1,
                })
                .expect("checked");
            Some(self.poly(next).scale(&ExactRational::from_int(g.index as i64 + 1)))
        }))
    }

    pub fn translate_n(&self, p: &SuperPoly, r: u32) -> Result<SuperPoly> {
        let mut out = p.clone();
        for _ in 0..r {
            out = self.translate(&out)?;
        }
        Ok(out)
    }

    /// Truncation of `a(z)`, `c(z)`, `phi(z)`, `psi(z)` or
    /// `y(z) = phi(z) psi(z)` to `z`-degree `<= cap`.
    pub fn generator_series(&self, kind: SeriesKind, z: VarId, cap: u32) -> Result<SuperPoly> {
        self.check_mode(cap)?;
        let mut out = self.zero();
        for i in 0..=cap {
            let coeff = match kind {
                SeriesKind::A => self.poly(self.a(i)),
                SeriesKind::C => self.poly(self.c(i)),
                SeriesKind::Phi => self.poly(self.phi(i)),
                SeriesKind::Psi => self.poly(self.psi(i)),
                SeriesKind::Y => self.y(i),
            };
            out = &out + &coeff.times_even_monomial(&[z], &[i]);
        }
        Ok(out)
    }

    /// Checks `E_ij[r] p = 0` for all `i, j` and `0 <= r <= M`, `M` the
    /// largest mode in `p`; higher modes act by zero. Reports the first
    /// nonzero result.
    pub fn is_invariant(&self, p: &SuperPoly) -> InvarianceReport {
        let Some(max) = self.max_mode(p) else {
            return InvarianceReport {
                invariant: true,
                witness: None,
            };
        };
        for op in LoopOperator::all_up_to(max) {
            let image = self.act(&op, p);
            if !image.is_zero() {
                return InvarianceReport {
                    invariant: false,
                    witness: Some((op, image)),
                };
            }
        }
        InvarianceReport {
            invariant: true,
            witness: None,
        }
    }

    /// `E22[0]` eigenvalue: `#phi - #psi` on each monomial (`a`, `c` and
    /// auxiliary variables have weight 0).
    pub fn weight(&self, p: &SuperPoly) -> Result<i64> {
        let mut weights: Vec<i64> = p
            .terms()
            .map(|(m, _)| {
                m.odd_factors()
                    .iter()
                    .map(|&v| match self.generator(v).map(|g| g.kind) {
                        Some(GeneratorKind::Phi) => 1,
                        Some(GeneratorKind::Psi) => -1,
                        _ => 0,
                    })
                    .sum()
            })
            .collect();
        weights.sort_unstable();
        weights.dedup();
        match weights.len() {
            0 => Ok(0),
            1 => Ok(weights[0]),
            _ => Err(Error::MixedWeight(weights)),
        }
    }

    /// Truncation by internal degree.
    pub fn internal_cap(&self, d: u32) -> Truncation {
        Truncation::internal(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> &'static Gl11 {
        Gl11::standard()
    }

    #[test]
    fn layout_round_trips() {
        let g = g();
        for i in [0, 3, 23] {
            for kind in [GeneratorKind::A, GeneratorKind::C, GeneratorKind::Phi, GeneratorKind::Psi] {
                let id = GeneratorId { kind, index: i };
                assert_eq!(g.generator(g.var_id(id).unwrap()), Some(id));
            }
        }
        assert_eq!(g.generator(g.z(1)), None);
        assert!(g.phi(0) < g.phi(5));
        assert!(g.phi(23) < g.psi(23));
        assert!(g.psi(5) < g.psi(0));
        assert_eq!(g.alphabet().name(g.t(2)), "t2");
    }

    #[test]
    fn e22_lowers_modes() {
        let g = g();
        for r in 0..4 {
            let op = LoopOperator::new(2, 2, r);
            for i in 0..4 {
                let phi = g.act(&op, &g.poly(g.phi(i)));
                let psi = g.act(&op, &g.poly(g.psi(i)));
                if i >= r {
                    assert_eq!(phi, g.poly(g.phi(i - r)));
                    assert_eq!(psi, -g.poly(g.psi(i - r)));
                } else {
                    assert!(phi.is_zero() && psi.is_zero());
                }
            }
        }
    }

    #[test]
    fn e12_zero_on_generators() {
        let g = g();
        let op = LoopOperator::new(1, 2, 0);
        for j in 0..5 {
            assert_eq!(g.act(&op, &g.poly(g.a(j))), -g.poly(g.psi(j)));
            assert_eq!(g.act(&op, &g.poly(g.phi(j))), g.poly(g.c(j)));
        }
        let y0 = g.y(0);
        assert_eq!(g.act(&op, &y0), g.parse("c0*psi0").unwrap());
    }

    #[test]
    fn c_is_central() {
        let g = g();
        for op in LoopOperator::all_up_to(6) {
            assert!(g.act(&op, &g.poly(g.c(5))).is_zero(), "{op}");
        }
    }

    #[test]
    fn translate_basics() {
        let g = g();
        assert_eq!(g.translate(&g.poly(g.c(0))).unwrap(), g.poly(g.c(1)));
        assert_eq!(
            g.translate(&g.parse("a0*c0").unwrap()).unwrap(),
            g.parse("a1*c0 + a0*c1").unwrap()
        );
        assert!(g.translate(&g.poly(g.a(23))).is_err());
    }

    #[test]
    fn series_of_translates() {
        let g = g();
        let z = g.z(1);
        let mut sum = g.zero();
        let mut fact = ExactRational::one();
        for r in 0..5u32 {
            if r > 0 {
                fact = &fact * &ExactRational::from_int(r as i64);
            }
            let tr = g.translate_n(&g.poly(g.a(0)), r).unwrap();
            sum = &sum + &tr.scale(&fact.recip().unwrap()).times_even_monomial(&[z], &[r]);
        }
        assert_eq!(sum, g.generator_series(SeriesKind::A, z, 4).unwrap());
    }

    #[test]
    fn y_series_low_order() {
        let g = g();
        let y = g.generator_series(SeriesKind::Y, g.z(1), 1).unwrap();
        assert_eq!(y, g.parse("phi0*psi0 + phi0*psi1*z1 + phi1*psi0*z1").unwrap());
        let psi = g.generator_series(SeriesKind::Psi, g.z(1), 5).unwrap();
        assert!((&psi * &psi).is_zero());
        assert_eq!(g.generator_series(SeriesKind::C, g.z(1), 0).unwrap(), g.poly(g.c(0)));
    }

    #[test]
    fn invariance_examples() {
        let g = g();
        assert!(g.is_invariant(&g.parse("a0*c0 + phi0*psi0").unwrap()).invariant);
        let rep = g.is_invariant(&g.poly(g.a(0)));
        assert!(!rep.invariant);
        let (op, w) = rep.witness.unwrap();
        assert_eq!(op, LoopOperator::new(1, 2, 0));
        assert_eq!(w, -g.poly(g.psi(0)));
        assert!(g.is_invariant(&g.parse("c0^3*c4 - 2*c1").unwrap()).invariant);
    }

    #[test]
    fn weights() {
        let g = g();
        assert_eq!(g.weight(&g.parse("phi0*psi3").unwrap()).unwrap(), 0);
        assert_eq!(g.weight(&g.poly(g.phi(0))).unwrap(), 1);
        assert_eq!(g.weight(&g.one()).unwrap(), 0);
        assert!(matches!(
            g.weight(&g.parse("phi0 + psi0").unwrap()),
            Err(Error::MixedWeight(_))
        ));
    }

    #[test]
    fn loop_operator_parity() {
        assert_eq!(LoopOperator::new(1, 1, 0).parity(), Parity::Even);
        assert_eq!(LoopOperator::new(2, 2, 3).parity(), Parity::Even);
        assert_eq!(LoopOperator::new(1, 2, 0).parity(), Parity::Odd);
        assert_eq!(LoopOperator::new(2, 1, 1).parity(), Parity::Odd);
    }
}
