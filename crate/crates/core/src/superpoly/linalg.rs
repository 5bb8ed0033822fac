//! Exact sparse row reduction, used for rank and span-membership checks on
//! sets of polynomials.

use std::collections::BTreeMap;

use super::monomial::Monomial;
use super::poly::SuperPoly;
use super::rational::ExactRational;

type Row = BTreeMap<usize, ExactRational>;

/// Incremental echelon basis over a growing column index.
#[derive(Default, Debug, Clone)]
pub struct EchelonBasis {
    pivots: BTreeMap<usize, Row>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: Row) -> Row {
        let mut floor = 0usize;
        loop {
            let Some((&col, _)) = row.range(floor..).next() else {
                return row;
            };
            match self.pivots.get(&col) {
                Some(p) => {
                    let f = row[&col].clone();
                    for (c, v) in p {
                        let x = row.entry(*c).or_default();
                        *x -= &(&f * v);
                        if x.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => floor = col + 1,
            }
        }
    }

    /// Adds a row; returns true if it was independent of the rows so far.
    pub fn insert(&mut self, row: Row) -> bool {
        let row = self.reduce(row);
        let Some((&col, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero pivot");
        let row: Row = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
        self.pivots.insert(col, row);
        true
    }

    pub fn contains(&self, row: Row) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Maps monomials to column indices.
#[derive(Default, Debug, Clone)]
pub struct MonomialIndex {
    cols: BTreeMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new() -> Self {
        MonomialIndex::default()
    }

    pub fn row(&mut self, p: &SuperPoly) -> Row {
        let mut row = Row::new();
        for (m, c) in p.terms() {
            let n = self.cols.len();
            let col = *self.cols.entry(m.clone()).or_insert(n);
            row.insert(col, c.clone());
        }
        row
    }

    /// Row for membership tests: `None` if it uses an unseen monomial.
    pub fn existing_row(&self, p: &SuperPoly) -> Option<Row> {
        p.terms()
            .map(|(m, c)| self.cols.get(m).map(|&k| (k, c.clone())))
            .collect()
    }
}

/// Rank of the linear span of `polys` over the rationals.
pub fn rank(polys: &[SuperPoly]) -> usize {
    let mut index = MonomialIndex::new();
    let mut basis = EchelonBasis::new();
    for p in polys {
        basis.insert(index.row(p));
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::{Alphabet, VarSpec};

    #[test]
    fn rank_of_dependent_set() {
        let a = Alphabet::new(vec![VarSpec::aux("x"), VarSpec::aux("y")]).unwrap();
        let ps: Vec<SuperPoly> = ["x + y", "x - y", "2*x", "x*y", "0"]
            .iter()
            .map(|s| SuperPoly::parse(&a, s).unwrap())
            .collect();
        assert_eq!(rank(&ps), 3);
        assert_eq!(rank(&[]), 0);
    }
}
