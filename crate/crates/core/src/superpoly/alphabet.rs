use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_count(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Index of a variable inside its [`Alphabet`].
///
/// Odd variables are ordered by id: the canonical order of Grassmann factors
/// in a monomial is ascending id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub u16);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpec {
    pub name: String,
    pub parity: Parity,
    pub degree_internal: u32,
    pub degree_aux: u32,
}

impl VarSpec {
    pub fn even(name: impl Into<String>, degree_internal: u32, degree_aux: u32) -> Self {
        VarSpec {
            name: name.into(),
            parity: Parity::Even,
            degree_internal,
            degree_aux,
        }
    }

    pub fn odd(name: impl Into<String>, degree_internal: u32, degree_aux: u32) -> Self {
        VarSpec {
            name: name.into(),
            parity: Parity::Odd,
            degree_internal,
            degree_aux,
        }
    }

    /// Auxiliary commuting variable (z, t, u, q style): even, internal degree
    /// 0, auxiliary degree 1.
    pub fn aux(name: impl Into<String>) -> Self {
        VarSpec::even(name, 0, 1)
    }
}

/// An ordered, immutable set of graded variables.
#[derive(Clone)]
pub struct Alphabet {
    vars: Vec<VarSpec>,
    index: HashMap<String, VarId>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vars.iter().map(|v| &v.name)).finish()
    }
}

impl Alphabet {
    pub fn new(vars: Vec<VarSpec>) -> Result<Arc<Self>> {
        if vars.len() > u16::MAX as usize {
            return Err(Error::InvalidArgument("alphabet too large".into()));
        }
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.name.clone(), VarId(i as u16)).is_some() {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(Arc::new(Alphabet { vars, index }))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn spec(&self, v: VarId) -> &VarSpec {
        &self.vars[v.index()]
    }

    pub fn name(&self, v: VarId) -> &str {
        &self.vars[v.index()].name
    }

    pub fn parity(&self, v: VarId) -> Parity {
        self.vars[v.index()].parity
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<VarId> {
        self.lookup(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, &VarSpec)> {
        self.vars
            .iter()
            .enumerate()
            .map(|(i, s)| (VarId(i as u16), s))
    }

    /// Aux variables (positive auxiliary degree).
    pub fn aux_vars(&self) -> Vec<VarId> {
        self.iter()
            .filter(|(_, s)| s.degree_aux > 0)
            .map(|(v, _)| v)
            .collect()
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        let r = Alphabet::new(vec![VarSpec::aux("z"), VarSpec::aux("z")]);
        assert_eq!(r.unwrap_err(), Error::DuplicateVariable("z".into()));
    }

    #[test]
    fn lookup() {
        let a = Alphabet::new(vec![VarSpec::even("x", 1, 0), VarSpec::odd("th", 1, 0)]).unwrap();
        assert_eq!(a.var("th").unwrap(), VarId(1));
        assert!(a.parity(VarId(1)).is_odd());
        assert!(a.var("nope").is_err());
    }
}
