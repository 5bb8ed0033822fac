use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::alphabet::{same_alphabet, Alphabet, Parity, VarId};
use super::monomial::Monomial;
use super::rational::ExactRational;
use crate::error::{Error, Result};

/// Which linear grading a truncation bound measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grading {
    Internal,
    Aux,
    /// Plain degree in the listed variables.
    Vars(Vec<VarId>),
}

/// A set of upper bounds on gradings; a term survives only if it satisfies
/// all of them. Every grading is nonnegative and additive, so truncating
/// after each product is exact below the caps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Truncation {
    bounds: Vec<(Grading, u32)>,
}

impl Truncation {
    pub fn none() -> Self {
        Truncation::default()
    }

    pub fn internal(cap: u32) -> Self {
        Truncation::none().with_internal(cap)
    }

    pub fn aux(cap: u32) -> Self {
        Truncation::none().with_aux(cap)
    }

    /// The optional (internal, aux) bidegree cap.
    pub fn bidegree(internal: Option<u32>, aux: Option<u32>) -> Self {
        let mut t = Truncation::none();
        if let Some(d) = internal {
            t = t.with_internal(d);
        }
        if let Some(d) = aux {
            t = t.with_aux(d);
        }
        t
    }

    pub fn vars(vars: &[VarId], cap: u32) -> Self {
        Truncation::none().with_vars(vars, cap)
    }

    pub fn with_internal(mut self, cap: u32) -> Self {
        self.bounds.push((Grading::Internal, cap));
        self
    }

    pub fn with_aux(mut self, cap: u32) -> Self {
        self.bounds.push((Grading::Aux, cap));
        self
    }

    pub fn with_vars(mut self, vars: &[VarId], cap: u32) -> Self {
        self.bounds.push((Grading::Vars(vars.to_vec()), cap));
        self
    }

    /// Intersection of two truncations.
    pub fn and(mut self, other: &Truncation) -> Self {
        self.bounds.extend(other.bounds.iter().cloned());
        self
    }

    pub fn is_none(&self) -> bool {
        self.bounds.is_empty()
    }

    /// Tightest cap on the plain degree in exactly `vars`, if any.
    pub fn vars_cap(&self, vars: &[VarId]) -> Option<u32> {
        self.bounds
            .iter()
            .filter(|(g, _)| matches!(g, Grading::Vars(v) if v == vars))
            .map(|(_, c)| *c)
            .min()
    }

    fn weights(&self, alphabet: &Alphabet, m: &Monomial) -> SmallVec<[u32; 4]> {
        self.bounds
            .iter()
            .map(|(g, _)| match g {
                Grading::Internal => m.internal_degree(alphabet),
                Grading::Aux => m.aux_degree(alphabet),
                Grading::Vars(vs) => m.degree_in(vs),
            })
            .collect()
    }

    fn admits(&self, w: &[u32]) -> bool {
        self.bounds.iter().zip(w).all(|((_, cap), x)| x <= cap)
    }

    pub fn admits_monomial(&self, alphabet: &Alphabet, m: &Monomial) -> bool {
        self.admits(&self.weights(alphabet, m))
    }
}

/// Sparse polynomial over a supercommutative alphabet with exact rational
/// coefficients. Zero coefficients are never stored, so equality is
/// structural.
#[derive(Clone)]
pub struct SuperPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Monomial, ExactRational>,
}

impl PartialEq for SuperPoly {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for SuperPoly {}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl SuperPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        SuperPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        SuperPoly::constant(alphabet, ExactRational::one())
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: ExactRational) -> Self {
        SuperPoly::monomial(alphabet, Monomial::one(), c)
    }

    pub fn int(alphabet: &Arc<Alphabet>, c: i64) -> Self {
        SuperPoly::constant(alphabet, ExactRational::from_int(c))
    }

    pub fn var(alphabet: &Arc<Alphabet>, v: VarId) -> Self {
        SuperPoly::monomial(alphabet, Monomial::var(alphabet, v), ExactRational::one())
    }

    pub fn monomial(alphabet: &Arc<Alphabet>, m: Monomial, c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperPoly {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    /// Product of factors given in the written order (odd factors may be out
    /// of canonical order; the sign is absorbed).
    pub fn from_factors(alphabet: &Arc<Alphabet>, c: ExactRational, factors: &[(VarId, u32)]) -> Self {
        match Monomial::from_factors(alphabet, factors) {
            None => SuperPoly::zero(alphabet),
            Some((m, neg)) => SuperPoly::monomial(alphabet, m, if neg { -c } else { c }),
        }
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        terms: impl IntoIterator<Item = (Monomial, ExactRational)>,
    ) -> Self {
        let mut p = SuperPoly::zero(alphabet);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, ExactRational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn constant_term(&self) -> ExactRational {
        self.coefficient(&Monomial::one())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &SuperPoly) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn try_add(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SuperPoly) -> Result<SuperPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactRational) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero(&self.alphabet);
        }
        SuperPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Supercommutative product, dropping terms outside `trunc`.
    pub fn multiply(&self, other: &SuperPoly, trunc: &Truncation) -> Result<SuperPoly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other, trunc))
    }

    fn mul_unchecked(&self, other: &SuperPoly, trunc: &Truncation) -> SuperPoly {
        if self.is_zero() || other.is_zero() {
            return SuperPoly::zero(&self.alphabet);
        }
        let alpha = &*self.alphabet;
        let lhs: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m, c, trunc.weights(alpha, m)))
            .filter(|(_, _, w)| trunc.admits(w))
            .collect();
        let rhs: Vec<_> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c, trunc.weights(alpha, m)))
            .filter(|(_, _, w)| trunc.admits(w))
            .collect();
        let mut acc: FxHashMap<Monomial, ExactRational> = FxHashMap::default();
        let mut w = SmallVec::<[u32; 4]>::new();
        for (mp, cp, wp) in &lhs {
            for (mq, cq, wq) in &rhs {
                w.clear();
                w.extend(wp.iter().zip(wq.iter()).map(|(a, b)| a + b));
                if !trunc.admits(&w) {
                    continue;
                }
                let Some((m, neg)) = mp.mul(mq) else { continue };
                let c = *cp * *cq;
                let slot = acc.entry(m).or_default();
                if neg {
                    *slot -= &c;
                } else {
                    *slot += &c;
                }
            }
        }
        SuperPoly {
            alphabet: self.alphabet.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32, trunc: &Truncation) -> SuperPoly {
        let mut out = SuperPoly::one(&self.alphabet).truncate(trunc);
        for _ in 0..k {
            out = out.mul_unchecked(self, trunc);
        }
        out
    }

    pub fn truncate(&self, trunc: &Truncation) -> SuperPoly {
        if trunc.is_none() {
            return self.clone();
        }
        self.filter_terms(|m| trunc.admits_monomial(&self.alphabet, m))
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> SuperPoly {
        SuperPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&ExactRational) -> ExactRational) -> SuperPoly {
        let mut out = SuperPoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Component of exact (internal, aux) bidegree.
    pub fn homogeneous_component(&self, internal: u32, aux: u32) -> SuperPoly {
        let a = &*self.alphabet;
        self.filter_terms(|m| m.internal_degree(a) == internal && m.aux_degree(a) == aux)
    }

    /// Distinct internal degrees present, ascending.
    pub fn internal_degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .terms
            .keys()
            .map(|m| m.internal_degree(&self.alphabet))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_internal_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.internal_degree(&self.alphabet))
            .max()
    }

    /// `Some(parity)` if every term has the same parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<VarId> {
        let mut v: Vec<VarId> = self.terms.keys().flat_map(|m| m.factors().map(|(v, _)| v)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn derive_even(&self, v: VarId) -> Result<SuperPoly> {
        if self.alphabet.parity(v).is_odd() {
            return Err(Error::WrongParity {
                name: self.alphabet.name(v).to_string(),
                op: "derive_even",
            });
        }
        let mut out = SuperPoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            if let Some((rest, e)) = m.lower_even(v) {
                out.add_term(rest, &(c * &ExactRational::from_int(e as i64)));
            }
        }
        Ok(out)
    }

    /// Left Grassmann derivative.
    pub fn derive_odd_left(&self, v: VarId) -> Result<SuperPoly> {
        if !self.alphabet.parity(v).is_odd() {
            return Err(Error::WrongParity {
                name: self.alphabet.name(v).to_string(),
                op: "derive_odd_left",
            });
        }
        let mut out = SuperPoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            if let Some((rest, neg)) = m.left_strip_odd(v) {
                out.add_term(rest, &if neg { -c } else { c.clone() });
            }
        }
        Ok(out)
    }

    /// Partial derivative with respect to `v`, left derivative for odd `v`.
    pub fn derive(&self, v: VarId) -> SuperPoly {
        match self.alphabet.parity(v) {
            Parity::Even => self.derive_even(v),
            Parity::Odd => self.derive_odd_left(v),
        }
        .expect("parity dispatched")
    }

    /// Applies the derivation `D = sum_g D(g) * d/dg` (left derivatives for
    /// odd `g`). `image` returns `D(g)` for each variable, `None` meaning 0.
    /// Works for derivations of either parity.
    pub fn apply_derivation(&self, image: impl Fn(VarId) -> Option<SuperPoly>) -> SuperPoly {
        let mut cache: FxHashMap<VarId, Option<SuperPoly>> = FxHashMap::default();
        let mut acc: FxHashMap<Monomial, ExactRational> = FxHashMap::default();
        for (m, c) in &self.terms {
            for (v, _) in m.factors() {
                let img = cache.entry(v).or_insert_with(|| image(v));
                let Some(img) = img else { continue };
                let (rest, coef) = match self.alphabet.parity(v) {
                    Parity::Even => {
                        let (rest, e) = m.lower_even(v).expect("factor present");
                        (rest, c * &ExactRational::from_int(e as i64))
                    }
                    Parity::Odd => {
                        let (rest, neg) = m.left_strip_odd(v).expect("factor present");
                        (rest, if neg { -c } else { c.clone() })
                    }
                };
                for (mi, ci) in &img.terms {
                    if let Some((prod, neg)) = mi.mul(&rest) {
                        let x = ci * &coef;
                        let slot = acc.entry(prod).or_default();
                        if neg {
                            *slot -= &x;
                        } else {
                            *slot += &x;
                        }
                    }
                }
            }
        }
        SuperPoly {
            alphabet: self.alphabet.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Parity-preserving algebra homomorphism into `target`, given by the
    /// images of the variables. Odd variables must map to odd elements (or
    /// zero); factors are multiplied in canonical order.
    pub fn map_homomorphism(
        &self,
        target: &Arc<Alphabet>,
        image: impl Fn(VarId) -> SuperPoly,
        trunc: &Truncation,
    ) -> SuperPoly {
        let mut powers: FxHashMap<(VarId, u32), SuperPoly> = FxHashMap::default();
        let mut out = SuperPoly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = SuperPoly::constant(target, c.clone());
            for (v, e) in m.factors() {
                let f = powers
                    .entry((v, e))
                    .or_insert_with(|| image(v).pow(e, trunc));
                acc = acc.mul_unchecked(f, trunc);
                if acc.is_zero() {
                    break;
                }
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, &cc);
            }
        }
        out
    }

    /// Substitutes an even variable by a polynomial over the same alphabet.
    pub fn substitute(&self, v: VarId, value: &SuperPoly, trunc: &Truncation) -> Result<SuperPoly> {
        self.check(value)?;
        if self.alphabet.parity(v).is_odd() {
            return Err(Error::WrongParity {
                name: self.alphabet.name(v).to_string(),
                op: "substitute",
            });
        }
        let alpha = self.alphabet.clone();
        Ok(self.map_homomorphism(
            &alpha,
            |w| {
                if w == v {
                    value.clone()
                } else {
                    SuperPoly::var(&alpha, w)
                }
            },
            trunc,
        ))
    }

    /// Coefficient of an auxiliary monomial, taken with respect to the
    /// variables occurring in it. The monomial `1` returns `self`.
    pub fn coefficient_of(&self, aux: &Monomial) -> SuperPoly {
        let vars: Vec<VarId> = aux.factors().map(|(v, _)| v).collect();
        let exps: Vec<u32> = aux.factors().map(|(_, e)| e).collect();
        self.coefficient_in(&vars, &exps)
    }

    /// Coefficient of `prod vars[i]^exps[i]` with respect to the even
    /// variables `vars`; the result no longer involves them.
    pub fn coefficient_in(&self, vars: &[VarId], exps: &[u32]) -> SuperPoly {
        let mut out = SuperPoly::zero(&self.alphabet);
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(vars);
            if e == exps {
                out.add_term(rest, c);
            }
        }
        out
    }

    /// Groups terms by their exponent vector in `vars` (even variables).
    pub fn collect_in(&self, vars: &[VarId]) -> BTreeMap<Vec<u32>, SuperPoly> {
        let mut out: BTreeMap<Vec<u32>, SuperPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(vars);
            out.entry(e)
                .or_insert_with(|| SuperPoly::zero(&self.alphabet))
                .add_term(rest, c);
        }
        out
    }

    /// Multiplies by `prod vars[i]^exps[i]`.
    pub fn times_even_monomial(&self, vars: &[VarId], exps: &[u32]) -> SuperPoly {
        SuperPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.join_even(vars, exps), c.clone()))
                .collect(),
        }
    }
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        self.try_add(rhs).expect("alphabet mismatch in +")
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        self.try_sub(rhs).expect("alphabet mismatch in -")
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        self.multiply(rhs, &Truncation::none())
            .expect("alphabet mismatch in *")
    }
}

impl Add for SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: SuperPoly) -> SuperPoly {
        &self + &rhs
    }
}

impl Sub for SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: SuperPoly) -> SuperPoly {
        &self - &rhs
    }
}

impl Mul for SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: SuperPoly) -> SuperPoly {
        &self * &rhs
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        self.scale(&ExactRational::from_int(-1))
    }
}

impl Neg for SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        -&self
    }
}
