//! Partitions, Schur polynomials, elementary symmetric polynomials and
//! Littlewood-Richardson coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superpoly::{Alphabet, ExactRational, SuperPoly, VarId, VarSpec};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; anything not weakly decreasing is an
    /// error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a partition")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("{parts:?} has interior zeros")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `lambda_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `lambda_1 >= mu_1`, `lambda_2 >= mu_2`, ...
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// The hook `(j+1, 1^k)`.
    pub fn hook(j: u32, k: u32) -> Partition {
        let mut v = vec![j + 1];
        v.extend(std::iter::repeat_n(1, k as usize));
        Partition(v)
    }

    /// Partitions of `size` with at most `max_len` parts and parts at most
    /// `max_part`, in decreasing lexicographic order.
    pub fn all(size: u32, max_len: Option<usize>, max_part: Option<u32>) -> Vec<Partition> {
        fn rec(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(
            size,
            max_part.unwrap_or(size),
            max_len.unwrap_or(size as usize),
            &mut Vec::new(),
            &mut out,
        );
        out
    }

    /// All partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let above = if i == 0 { u32::MAX } else { self.0[i - 1] };
            let here = self.0.get(i).copied().unwrap_or(0);
            if here < above {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `2,1`, `(2,1)`, `()` and the empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Coefficients in the Schur basis.
pub type SchurExpansion = BTreeMap<Partition, ExactRational>;

const SYM_VARS: u32 = 16;

/// Alphabet of commuting variables `z1..z16` used by [`schur`] and
/// [`elementary`].
pub fn sym_alphabet() -> &'static Arc<Alphabet> {
    static A: OnceLock<Arc<Alphabet>> = OnceLock::new();
    A.get_or_init(|| {
        Alphabet::new((1..=SYM_VARS).map(|k| VarSpec::aux(format!("z{k}"))).collect())
            .expect("distinct names")
    })
}

pub fn sym_vars(n: usize) -> Vec<VarId> {
    assert!(n as u32 <= SYM_VARS, "at most {SYM_VARS} variables");
    (0..n as u16).map(VarId).collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    // Heap's algorithm; each step is a transposition
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![(p.clone(), false)];
    let mut c = vec![0usize; n];
    let mut odd = false;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            odd = !odd;
            out.push((p.clone(), odd));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn vandermonde_pairs(vars: &[VarId]) -> Vec<(VarId, VarId)> {
    let mut out = Vec::new();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            out.push((vars[i], vars[j]));
        }
    }
    out
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(alphabet: &Arc<Alphabet>, vars: &[VarId]) -> SuperPoly {
    let mut out = SuperPoly::one(alphabet);
    for (i, j) in vandermonde_pairs(vars) {
        out = &out * &(&SuperPoly::var(alphabet, i) - &SuperPoly::var(alphabet, j));
    }
    out
}

/// `s_lambda` in the given commuting variables, as the ratio of the
/// alternant `det(x_i^{lambda_j + n - j})` and the Vandermonde.
pub fn schur_in(alphabet: &Arc<Alphabet>, vars: &[VarId], lambda: &Partition) -> SuperPoly {
    let n = vars.len();
    if lambda.len() > n {
        return SuperPoly::zero(alphabet);
    }
    let shifted: Vec<u32> = lambda
        .padded(n)
        .iter()
        .enumerate()
        .map(|(j, l)| l + (n - 1 - j) as u32)
        .collect();
    let mut alt = SuperPoly::zero(alphabet);
    for (perm, odd) in permutations(n) {
        let exps: Vec<u32> = perm.iter().map(|&p| shifted[p]).collect();
        let c = ExactRational::from_int(if odd { -1 } else { 1 });
        alt = &alt + &SuperPoly::constant(alphabet, c).times_even_monomial(vars, &exps);
    }
    alt.exact_divide_differences(&vandermonde_pairs(vars))
        .expect("alternants are divisible by the Vandermonde")
}

/// `s_lambda(z1..zn)` over [`sym_alphabet`].
pub fn schur(lambda: &Partition, n: usize) -> SuperPoly {
    schur_in(sym_alphabet(), &sym_vars(n), lambda)
}

/// `s_{(j+1, 1^k)}(z1..zn)`.
pub fn hook_schur(j: u32, k: u32, n: usize) -> SuperPoly {
    schur(&Partition::hook(j, k), n)
}

/// `e_k` of the given variables.
pub fn elementary_in(alphabet: &Arc<Alphabet>, vars: &[VarId], k: usize) -> SuperPoly {
    fn rec(alpha: &Arc<Alphabet>, vars: &[VarId], k: usize) -> SuperPoly {
        if k == 0 {
            return SuperPoly::one(alpha);
        }
        if vars.len() < k {
            return SuperPoly::zero(alpha);
        }
        let (first, rest) = vars.split_first().expect("nonempty");
        &rec(alpha, rest, k)
            + &rec(alpha, rest, k - 1).times_even_monomial(&[*first], &[1])
    }
    rec(alphabet, vars, k)
}

/// `e_k(z1..zn)` over [`sym_alphabet`].
pub fn elementary(k: usize, n: usize) -> SuperPoly {
    elementary_in(sym_alphabet(), &sym_vars(n), k)
}

/// Schur coefficients of a polynomial symmetric in `vars` whose
/// coefficients may involve other variables:
/// `f_lambda = [x^{lambda + delta}] (f * Delta)`, read off without forming
/// the product. Only degrees present in `f` are examined.
pub fn schur_expand(f: &SuperPoly, vars: &[VarId]) -> BTreeMap<Partition, SuperPoly> {
    let n = vars.len();
    let by_exp = f.collect_in(vars);
    let mut degrees: Vec<u32> = by_exp.keys().map(|e| e.iter().sum()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let perms = permutations(n);
    let mut out = BTreeMap::new();
    for d in degrees {
        for lambda in Partition::all(d, Some(n), None) {
            let lp = lambda.padded(n);
            let mut acc = SuperPoly::zero(f.alphabet());
            for (perm, odd) in &perms {
                // exponent lambda + delta - sigma(delta)
                let exp: Option<Vec<u32>> = (0..n)
                    .map(|i| {
                        let v = lp[i] as i64 + (n - 1 - i) as i64 - (n - 1 - perm[i]) as i64;
                        u32::try_from(v).ok()
                    })
                    .collect();
                let Some(exp) = exp else { continue };
                if let Some(c) = by_exp.get(&exp) {
                    acc = if *odd { &acc - c } else { &acc + c };
                }
            }
            if !acc.is_zero() {
                out.insert(lambda, acc);
            }
        }
    }
    out
}

type LrTable = BTreeMap<Partition, u64>;

fn lr_cache() -> &'static Mutex<HashMap<(Partition, Partition), Arc<LrTable>>> {
    static C: OnceLock<Mutex<HashMap<(Partition, Partition), Arc<LrTable>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn lr_compute(mu: &Partition, nu: &Partition) -> LrTable {
    let n = mu.len() + nu.len();
    let alpha = sym_alphabet();
    let vars = sym_vars(n);
    let prod = &schur_in(alpha, &vars, mu) * &schur_in(alpha, &vars, nu);
    schur_expand(&prod, &vars)
        .into_iter()
        .map(|(l, c)| {
            let c = c.constant_term();
            assert!(c.is_integer() && !c.is_negative(), "LR coefficient {c}");
            (l, c.to_i64().expect("small") as u64)
        })
        .collect()
}

/// `s_mu * s_nu = sum_lambda c^lambda_{mu nu} s_lambda`.
///
/// Every `lambda` has length at most `l(mu) + l(nu)`, so that many variables
/// suffice; when the conjugate shapes need fewer, the expansion is done for
/// them and conjugated back.
pub fn lr_expand(mu: &Partition, nu: &Partition) -> Arc<LrTable> {
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(t) = lr_cache().lock().expect("cache").get(&key) {
        return t.clone();
    }
    let (m, n) = &key;
    let direct = m.len() + n.len();
    let conj = m.part(1) + n.part(1);
    let table = if (conj as usize) < direct {
        lr_compute(&m.conjugate(), &n.conjugate())
            .into_iter()
            .map(|(l, c)| (l.conjugate(), c))
            .collect()
    } else {
        lr_compute(m, n)
    };
    let table = Arc::new(table);
    lr_cache().lock().expect("cache").insert(key, table.clone());
    table
}

pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    lr_expand(mu, nu).get(lambda).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sym(s: &str) -> SuperPoly {
        SuperPoly::parse(sym_alphabet(), s).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p("(3,1)").conjugate(), p("2,1,1"));
        assert_eq!(p("()").to_string(), "()");
        assert_eq!(Partition::all(4, None, None).len(), 5);
        assert_eq!(Partition::all(4, Some(2), None).len(), 3);
        assert_eq!(p("1").add_box(), vec![p("2"), p("1,1")]);
        assert_eq!(Partition::hook(1, 2), p("2,1,1"));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p("1"), 2), sym("z1 + z2"));
        assert_eq!(schur(&p("2,1"), 2), sym("z1^2*z2 + z1*z2^2"));
        assert!(schur(&p("1,1,1"), 2).is_zero());
        assert_eq!(schur(&p(""), 3), sym("1"));
        assert_eq!(hook_schur(0, 0, 3), sym("z1 + z2 + z3"));
        assert_eq!(hook_schur(1, 1, 2), schur(&p("2,1"), 2));
        assert!(hook_schur(0, 2, 2).is_zero());
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(1, 2), sym("z1 + z2"));
        assert_eq!(elementary(2, 2), sym("z1*z2"));
        assert!(elementary(3, 2).is_zero());
        assert_eq!(elementary(0, 0), sym("1"));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("3,1"), &p(""), &p("3,1")), 1);
        assert_eq!(lr_coefficient(&p("2"), &p("1"), &p("2,1,1")), 0);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
    }

    #[test]
    fn expansion_round_trip() {
        let vars = sym_vars(3);
        let f = &schur(&p("2,1"), 3) * &schur(&p("1"), 3);
        let e = schur_expand(&f, &vars);
        let back = e
            .iter()
            .fold(SuperPoly::zero(sym_alphabet()), |acc, (l, c)| &acc + &(c * &schur(l, 3)));
        assert_eq!(back, f);
        assert_eq!(e.len(), 3);
    }
}
