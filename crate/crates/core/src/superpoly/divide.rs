use std::collections::BTreeMap;

use super::alphabet::VarId;
use super::poly::SuperPoly;
use super::rational::ExactRational;
use crate::error::{Error, Result};

impl SuperPoly {
    /// Exact quotient `q` with `q * d == self`, where `d` is a nonzero
    /// polynomial in even variables only. The coefficient ring of the
    /// division is everything not occurring in `d`, so `self` may carry odd
    /// variables freely.
    ///
    /// Truncated series divide correctly as long as every homogeneous
    /// component (in the grading of a homogeneous `d`) is complete.
    pub fn exact_divide(&self, d: &SuperPoly) -> Result<SuperPoly> {
        if !crate::superpoly::alphabet::same_alphabet(self.alphabet(), d.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.terms().any(|(m, _)| !m.odd_factors().is_empty()) {
            return Err(Error::OddDivisor);
        }
        let dvars = d.variables();
        if dvars.is_empty() {
            return Ok(self.scale(&d.constant_term().recip()?));
        }
        // lexicographic order on exponent vectors over dvars
        let divisor: BTreeMap<Vec<u32>, ExactRational> = d
            .terms()
            .map(|(m, c)| (m.split_off(&dvars).0, c.clone()))
            .collect();
        let (lead, lc) = divisor.iter().next_back().expect("nonzero divisor");
        let lc_inv = lc.recip()?;

        let mut work = self.collect_in(&dvars);
        let mut quotient: Vec<(Vec<u32>, SuperPoly)> = Vec::new();
        while let Some((m, r)) = work.pop_last() {
            if !m.iter().zip(lead).all(|(a, b)| a >= b) {
                return Err(Error::InexactDivision(format!(
                    "leading exponent {m:?} not divisible by {lead:?}"
                )));
            }
            let e: Vec<u32> = m.iter().zip(lead).map(|(a, b)| a - b).collect();
            let q = r.scale(&lc_inv);
            for (dm, dc) in divisor.iter().rev().skip(1) {
                let target: Vec<u32> = e.iter().zip(dm).map(|(a, b)| a + b).collect();
                let delta = q.scale(&-dc);
                let slot = work
                    .entry(target.clone())
                    .or_insert_with(|| SuperPoly::zero(self.alphabet()));
                *slot = &*slot + &delta;
                if slot.is_zero() {
                    work.remove(&target);
                }
            }
            quotient.push((e, q));
        }
        let mut out = SuperPoly::zero(self.alphabet());
        for (e, q) in quotient {
            out = &out + &q.times_even_monomial(&dvars, &e);
        }
        Ok(out)
    }

    /// Divides successively by each `(x_i - x_j)`.
    pub fn exact_divide_differences(&self, pairs: &[(VarId, VarId)]) -> Result<SuperPoly> {
        let mut out = self.clone();
        for &(i, j) in pairs {
            let d = &SuperPoly::var(self.alphabet(), i) - &SuperPoly::var(self.alphabet(), j);
            out = out.exact_divide(&d)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use crate::superpoly::{Alphabet, SuperPoly, Truncation, VarSpec};

    #[test]
    fn difference_of_squares() {
        let a = Alphabet::new(vec![VarSpec::aux("z1"), VarSpec::aux("z2")]).unwrap();
        let p = SuperPoly::parse(&a, "z1^2 - z2^2").unwrap();
        let d = SuperPoly::parse(&a, "z1 - z2").unwrap();
        assert_eq!(p.exact_divide(&d).unwrap().to_string(), "z1 + z2");
        let bad = SuperPoly::parse(&a, "z1 + z2").unwrap();
        assert!(bad.exact_divide(&d).is_err());
        assert!(p.exact_divide(&SuperPoly::zero(&a)).is_err());
    }

    #[test]
    fn odd_coefficients_survive() {
        let a = Alphabet::new(vec![
            VarSpec::aux("z"),
            VarSpec::odd("th", 1, 0),
            VarSpec::odd("et", 1, 0),
        ])
        .unwrap();
        let q = SuperPoly::parse(&a, "th*et*z + 2*th").unwrap();
        let d = SuperPoly::parse(&a, "z^2 + 3").unwrap();
        let p = q.multiply(&d, &Truncation::none()).unwrap();
        assert_eq!(p.exact_divide(&d).unwrap(), q);
    }
}
