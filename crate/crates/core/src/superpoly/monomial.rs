use std::cmp::Ordering;

use smallvec::SmallVec;

use super::alphabet::{Alphabet, Parity, VarId};

/// A monomial in canonical form: even factors sorted by variable with
/// positive exponents, odd factors strictly ascending by id.
///
/// Signs produced by reordering odd factors live in the coefficient, never
/// here.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub(crate) even: SmallVec<[(VarId, u32); 4]>,
    pub(crate) odd: SmallVec<[VarId; 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    /// Single variable to the first power.
    pub fn var(alphabet: &Alphabet, v: VarId) -> Self {
        let mut m = Monomial::one();
        match alphabet.parity(v) {
            Parity::Even => m.even.push((v, 1)),
            Parity::Odd => m.odd.push(v),
        }
        m
    }

    /// Builds a canonical monomial from a factor list given in arbitrary
    /// order. Returns `None` when an odd variable repeats, otherwise the
    /// monomial and whether reordering the odd factors flipped the sign.
    pub fn from_factors(alphabet: &Alphabet, factors: &[(VarId, u32)]) -> Option<(Self, bool)> {
        let mut even: Vec<(VarId, u32)> = Vec::new();
        let mut odd: Vec<VarId> = Vec::new();
        for &(v, e) in factors {
            if e == 0 {
                continue;
            }
            match alphabet.parity(v) {
                Parity::Even => even.push((v, e)),
                Parity::Odd => {
                    if e > 1 {
                        return None;
                    }
                    odd.push(v);
                }
            }
        }
        even.sort_by_key(|&(v, _)| v);
        let mut merged: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        for (v, e) in even {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        // bubble-count inversions
        let mut inversions = 0usize;
        for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                match odd[i].cmp(&odd[j]) {
                    Ordering::Greater => inversions += 1,
                    Ordering::Equal => return None,
                    Ordering::Less => {}
                }
            }
        }
        odd.sort();
        Some((
            Monomial {
                even: merged,
                odd: odd.into_iter().collect(),
            },
            inversions % 2 == 1,
        ))
    }

    pub fn even_factors(&self) -> &[(VarId, u32)] {
        &self.even
    }

    pub fn odd_factors(&self) -> &[VarId] {
        &self.odd
    }

    /// All factors in canonical order (even first, then odd with exponent 1).
    pub fn factors(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.even
            .iter()
            .copied()
            .chain(self.odd.iter().map(|&v| (v, 1)))
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        if let Ok(i) = self.even.binary_search_by_key(&v, |&(w, _)| w) {
            return self.even[i].1;
        }
        u32::from(self.odd.binary_search(&v).is_ok())
    }

    pub fn total_degree(&self) -> u32 {
        self.even.iter().map(|&(_, e)| e).sum::<u32>() + self.odd.len() as u32
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.odd.len())
    }

    pub fn internal_degree(&self, alphabet: &Alphabet) -> u32 {
        self.factors()
            .map(|(v, e)| e * alphabet.spec(v).degree_internal)
            .sum()
    }

    pub fn aux_degree(&self, alphabet: &Alphabet) -> u32 {
        self.factors()
            .map(|(v, e)| e * alphabet.spec(v).degree_aux)
            .sum()
    }

    /// Degree counted over a chosen set of variables.
    pub fn degree_in(&self, vars: &[VarId]) -> u32 {
        self.factors()
            .filter(|(v, _)| vars.contains(v))
            .map(|(_, e)| e)
            .sum()
    }

    /// Supercommutative product. `None` if an odd variable collides; the flag
    /// is true when the Koszul sign is negative.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let mut odd: SmallVec<[VarId; 4]> = SmallVec::with_capacity(self.odd.len() + other.odd.len());
        let mut neg = false;
        let (mut i, mut j) = (0, 0);
        // each time an element of `other` is placed before remaining elements
        // of `self`, it crosses them.
        while i < self.odd.len() && j < other.odd.len() {
            match self.odd[i].cmp(&other.odd[j]) {
                Ordering::Less => {
                    odd.push(self.odd[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    if (self.odd.len() - i) % 2 == 1 {
                        neg = !neg;
                    }
                    odd.push(other.odd[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        odd.extend_from_slice(&self.odd[i..]);
        odd.extend_from_slice(&other.odd[j..]);

        let mut even: SmallVec<[(VarId, u32); 4]> =
            SmallVec::with_capacity(self.even.len() + other.even.len());
        let (mut i, mut j) = (0, 0);
        while i < self.even.len() && j < other.even.len() {
            let (a, b) = (self.even[i], other.even[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    even.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    even.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    even.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        even.extend_from_slice(&self.even[i..]);
        even.extend_from_slice(&other.even[j..]);
        Some((Monomial { even, odd }, neg))
    }

    /// Removes one power of an even variable. Returns the exponent it had.
    pub(crate) fn lower_even(&self, v: VarId) -> Option<(Monomial, u32)> {
        let i = self.even.binary_search_by_key(&v, |&(w, _)| w).ok()?;
        let e = self.even[i].1;
        let mut m = self.clone();
        if e == 1 {
            m.even.remove(i);
        } else {
            m.even[i].1 -= 1;
        }
        Some((m, e))
    }

    /// Left derivative by an odd variable: moves it to the front and deletes
    /// it. Returns the remainder and whether the sign is negative.
    pub(crate) fn left_strip_odd(&self, v: VarId) -> Option<(Monomial, bool)> {
        let pos = self.odd.binary_search(&v).ok()?;
        let mut m = self.clone();
        m.odd.remove(pos);
        Some((m, pos % 2 == 1))
    }

    /// Splits into the part over `vars` (exponents in the order of `vars`) and
    /// the rest.
    pub(crate) fn split_off(&self, vars: &[VarId]) -> (Vec<u32>, Monomial) {
        let mut exps = vec![0u32; vars.len()];
        let mut rest = Monomial::one();
        for &(v, e) in &self.even {
            match vars.iter().position(|&w| w == v) {
                Some(k) => exps[k] = e,
                None => rest.even.push((v, e)),
            }
        }
        rest.odd = self.odd.clone();
        (exps, rest)
    }

    /// Product with `prod vars^exps` (inverse of [`Monomial::split_off`]).
    pub(crate) fn join_even(&self, vars: &[VarId], exps: &[u32]) -> Monomial {
        let mut even: Vec<(VarId, u32)> = self.even.to_vec();
        for (&v, &e) in vars.iter().zip(exps) {
            if e == 0 {
                continue;
            }
            match even.iter_mut().find(|(w, _)| *w == v) {
                Some((_, old)) => *old += e,
                None => even.push((v, e)),
            }
        }
        even.sort_by_key(|&(v, _)| v);
        Monomial {
            even: even.into_iter().collect(),
            odd: self.odd.clone(),
        }
    }
}

/// Lexicographic comparison with lower variable ids ranking higher.
fn lex_even(a: &[(VarId, u32)], b: &[(VarId, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            // the side holding the smaller variable has the larger exponent there
            return y.0.cmp(&x.0);
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

/// Graded order: total degree first, then lexicographic on the factor list.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| lex_even(&self.even, &other.even))
            .then_with(|| other.odd.cmp(&self.odd))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::alphabet::VarSpec;

    fn alpha() -> std::sync::Arc<Alphabet> {
        Alphabet::new(vec![
            VarSpec::even("x", 1, 0),
            VarSpec::odd("p", 1, 0),
            VarSpec::odd("q", 1, 0),
            VarSpec::odd("r", 1, 0),
        ])
        .unwrap()
    }

    #[test]
    fn koszul_sign_matches_bubble_sort() {
        let a = alpha();
        let (p, q, r) = (VarId(1), VarId(2), VarId(3));
        // (r)(p q) -> p q r needs two transpositions
        let (m1, _) = Monomial::from_factors(&a, &[(r, 1)]).unwrap();
        let (m2, _) = Monomial::from_factors(&a, &[(p, 1), (q, 1)]).unwrap();
        let (prod, neg) = m1.mul(&m2).unwrap();
        assert_eq!(prod.odd_factors(), &[p, q, r]);
        assert!(!neg);
        // (q)(p) -> -p q
        let (mq, _) = Monomial::from_factors(&a, &[(q, 1)]).unwrap();
        let (mp, _) = Monomial::from_factors(&a, &[(p, 1)]).unwrap();
        assert!(mq.mul(&mp).unwrap().1);
        assert!(mp.mul(&mp).is_none());
    }

    #[test]
    fn from_factors_counts_inversions() {
        let a = alpha();
        let (m, neg) = Monomial::from_factors(&a, &[(VarId(3), 1), (VarId(0), 2), (VarId(1), 1)]).unwrap();
        assert!(neg);
        assert_eq!(m.exponent(VarId(0)), 2);
        assert_eq!(m.total_degree(), 4);
        assert!(Monomial::from_factors(&a, &[(VarId(1), 2)]).is_none());
    }
}
