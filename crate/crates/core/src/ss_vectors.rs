//! Classical symbols of the Segal-Sugawara families `h_kk`, `b_kk`, `s_kk`,
//! their translation series, and the symbol-level Berezinian of the `(1|1)`
//! current matrix
//!
//! ```text
//! M(z) = [[ a(z),    psi(z)        ],
//!         [ -phi(z), -(c(z) - a(z)) ]]
//! ```
//!
//! For a `(1|1)` block matrix `X` with even diagonal and odd off-diagonal
//! entries the Berezinian (in general the product of two determinants, one
//! of them inverted) reduces to `(X11 - X12 X22^-1 X21) X22^-1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gl11::{Gl11, SeriesKind};
use crate::superpoly::{ExactRational, SuperPoly, Truncation, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    H,
    B,
    S,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::H, Family::B, Family::S];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::H => "h",
            Family::B => "b",
            Family::S => "s",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" => Ok(Family::H),
            "b" => Ok(Family::B),
            "s" => Ok(Family::S),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        }
    }
}

/// The entries of the current matrix, either at mode `-1` or as truncated
/// series in one auxiliary variable.
struct Currents {
    a: SuperPoly,
    c: SuperPoly,
    phi: SuperPoly,
    psi: SuperPoly,
    trunc: Truncation,
}

impl Currents {
    fn symbols(g: &Gl11) -> Currents {
        Currents {
            a: g.poly(g.a(0)),
            c: g.poly(g.c(0)),
            phi: g.poly(g.phi(0)),
            psi: g.poly(g.psi(0)),
            trunc: Truncation::none(),
        }
    }

    fn series(g: &Gl11, z: VarId, cap: u32) -> Result<Currents> {
        Ok(Currents {
            a: g.generator_series(SeriesKind::A, z, cap)?,
            c: g.generator_series(SeriesKind::C, z, cap)?,
            phi: g.generator_series(SeriesKind::Phi, z, cap)?,
            psi: g.generator_series(SeriesKind::Psi, z, cap)?,
            trunc: Truncation::vars(&[z], cap),
        })
    }

    fn mul(&self, x: &SuperPoly, y: &SuperPoly) -> SuperPoly {
        x.multiply(y, &self.trunc).expect("one alphabet")
    }

    fn matrix(&self) -> [[SuperPoly; 2]; 2] {
        [
            [self.a.clone(), self.psi.clone()],
            [-&self.phi, &self.a - &self.c],
        ]
    }

    fn family(&self, family: Family, k: u32) -> SuperPoly {
        let y = self.mul(&self.phi, &self.psi);
        let km1 = ExactRational::from_int(k as i64 - 1);
        match family {
            Family::H => {
                let lead = self.mul(&self.a.pow(k - 1, &self.trunc), &self.c);
                if k < 2 {
                    return lead;
                }
                let tail = self.mul(&self.a.pow(k - 2, &self.trunc), &y).scale(&km1);
                &lead + &tail
            }
            Family::B => {
                let d = &self.c - &self.a;
                let lead = self.mul(&d.pow(k - 1, &self.trunc), &self.c);
                if k < 2 {
                    return lead;
                }
                let tail = self.mul(&d.pow(k - 2, &self.trunc), &y).scale(&km1);
                &lead - &tail
            }
            Family::S => {
                let m = self.matrix();
                let mut p = m.clone();
                for _ in 1..k {
                    p = matmul(&p, &m, &self.trunc);
                }
                &p[0][0] - &p[1][1]
            }
        }
    }
}

fn matmul(x: &[[SuperPoly; 2]; 2], y: &[[SuperPoly; 2]; 2], trunc: &Truncation) -> [[SuperPoly; 2]; 2] {
    let e = |i: usize, k: usize| {
        let l = x[i][0].multiply(&y[0][k], trunc).expect("one alphabet");
        let r = x[i][1].multiply(&y[1][k], trunc).expect("one alphabet");
        &l + &r
    };
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidArgument("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// The classical symbol of the `k`-th member of a family, in `a0, c0, phi0,
/// psi0`.
pub fn symbol(g: &Gl11, family: Family, k: u32) -> Result<SuperPoly> {
    check_k(k)?;
    Ok(Currents::symbols(g).family(family, k))
}

/// The same expression with every current replaced by its series in `z1`,
/// truncated to `z1`-degree `cap`.
pub fn series(g: &Gl11, family: Family, k: u32, cap: u32) -> Result<SuperPoly> {
    check_k(k)?;
    Ok(Currents::series(g, g.z(1), cap)?.family(family, k))
}

/// Inverse of a power series in the even variable `v`, truncated to
/// `v`-degree `cap` (and to `trunc`). The `v^0` part must be a nonzero
/// constant.
pub(crate) fn invert_series(p: &SuperPoly, v: VarId, cap: u32, trunc: &Truncation) -> Result<SuperPoly> {
    let lead = p.coefficient_in(&[v], &[0]);
    if lead.is_zero() || !lead.variables().is_empty() {
        return Err(Error::NotInvertible);
    }
    let inv0 = lead.constant_term().recip()?;
    let trunc = trunc.clone().with_vars(&[v], cap);
    let one = SuperPoly::one(p.alphabet());
    // 1/(p0 (1 + n)) = p0^-1 sum (-n)^j, n = p/p0 - 1 has no v^0 term
    let n = &p.scale(&inv0) - &one;
    let neg_n = -&n;
    let mut out = one.clone();
    let mut power = one;
    for _ in 0..cap {
        power = power.multiply(&neg_n, &trunc)?;
        if power.is_zero() {
            break;
        }
        out = &out + &power;
    }
    Ok(out.scale(&inv0).truncate(&trunc))
}

/// `Ber(1 + sign * u * M(z1))` truncated to `u`-degree `u_cap` and
/// `z1`-degree `z_cap`.
pub fn berezinian_series(g: &Gl11, sign: i8, u_cap: u32, z_cap: u32) -> Result<SuperPoly> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument("sign must be +1 or -1".into()));
    }
    let cur = Currents::series(g, g.z(1), z_cap)?;
    let u = g.u();
    let trunc = Truncation::vars(&[g.z(1)], z_cap).with_vars(&[u], u_cap);
    let su = SuperPoly::var(g.alphabet(), u).scale(&ExactRational::from_int(sign as i64));
    let m = cur.matrix();
    let one = g.one();
    let x = |i: usize, j: usize| -> Result<SuperPoly> {
        let e = su.multiply(&m[i][j], &trunc)?;
        Ok(if i == j { &one + &e } else { e })
    };
    let x22_inv = invert_series(&x(1, 1)?, u, u_cap, &trunc)?;
    let schur = &x(0, 0)?
        - &x(0, 1)?
            .multiply(&x22_inv, &trunc)?
            .multiply(&x(1, 0)?, &trunc)?;
    schur.multiply(&x22_inv, &trunc)
}

/// Coefficients `u^1..u^u_cap` of a series in `u`.
fn u_coefficients(g: &Gl11, p: &SuperPoly, u_cap: u32) -> Vec<SuperPoly> {
    (1..=u_cap).map(|k| p.coefficient_in(&[g.u()], &[k])).collect()
}

/// Checks `-d/du log Ber(1 - u M(z)) = sum_k u^{k-1} str M(z)^k` through
/// `u^{u_cap - 1}`.
pub fn newton_check(g: &Gl11, u_cap: u32, z_cap: u32) -> Result<bool> {
    let u = g.u();
    let trunc = Truncation::vars(&[g.z(1)], z_cap).with_vars(&[u], u_cap.saturating_sub(1));
    let ber = berezinian_series(g, -1, u_cap, z_cap)?;
    let inv = invert_series(&ber, u, u_cap, &trunc)?;
    let lhs = -&ber.derive_even(u)?.multiply(&inv, &trunc)?;
    let mut rhs = g.zero();
    for k in 1..=u_cap {
        rhs = &rhs + &series(g, Family::S, k, z_cap)?.times_even_monomial(&[u], &[k - 1]);
    }
    Ok(lhs == rhs.truncate(&trunc))
}

/// Checks that the `u^k` coefficients of `Ber(1 + uM)` are the `b`-series
/// and those of `Ber(1 - uM)^-1` are the `h`-series, for `1 <= k <= u_cap`.
pub fn macmahon_check(g: &Gl11, u_cap: u32, z_cap: u32) -> Result<bool> {
    let u = g.u();
    let trunc = Truncation::vars(&[g.z(1)], z_cap).with_vars(&[u], u_cap);
    let ber_plus = berezinian_series(g, 1, u_cap, z_cap)?;
    let ber_minus_inv = invert_series(&berezinian_series(g, -1, u_cap, z_cap)?, u, u_cap, &trunc)?;
    let b = u_coefficients(g, &ber_plus, u_cap);
    let h = u_coefficients(g, &ber_minus_inv, u_cap);
    for k in 1..=u_cap {
        let i = (k - 1) as usize;
        if b[i] != series(g, Family::B, k, z_cap)? || h[i] != series(g, Family::H, k, z_cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Image of a symbol under `a0 -> c0 - a0`, `phi0 -> -phi0` (so that
/// `y0 -> -y0`), all other generators fixed.
pub fn hb_swap(g: &Gl11, p: &SuperPoly) -> SuperPoly {
    let (a0, phi0) = (g.a(0), g.phi(0));
    p.map_homomorphism(
        g.alphabet(),
        |v| {
            if v == a0 {
                &g.poly(g.c(0)) - &g.poly(a0)
            } else if v == phi0 {
                -g.poly(phi0)
            } else {
                g.poly(v)
            }
        },
        &Truncation::none(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> &'static Gl11 {
        Gl11::standard()
    }

    #[test]
    fn symbol_examples() {
        let g = g();
        assert_eq!(symbol(g, Family::H, 2).unwrap(), g.parse("a0*c0 + phi0*psi0").unwrap());
        assert_eq!(
            symbol(g, Family::B, 2).unwrap(),
            g.parse("c0^2 - a0*c0 - phi0*psi0").unwrap()
        );
        assert_eq!(symbol(g, Family::S, 1).unwrap(), g.poly(g.c(0)));
        assert_eq!(
            symbol(g, Family::S, 2).unwrap(),
            g.parse("2*a0*c0 - c0^2 + 2*phi0*psi0").unwrap()
        );
        assert!(symbol(g, Family::H, 0).is_err());
    }

    #[test]
    fn series_low_cases() {
        let g = g();
        assert_eq!(
            series(g, Family::H, 1, 4).unwrap(),
            g.generator_series(SeriesKind::C, g.z(1), 4).unwrap()
        );
        let s2 = series(g, Family::S, 2, 3).unwrap();
        assert_eq!(s2.coefficient_in(&[g.z(1)], &[0]), symbol(g, Family::S, 2).unwrap());
    }

    #[test]
    fn berezinian_low_coefficients() {
        let g = g();
        let ber = berezinian_series(g, 1, 3, 3).unwrap();
        assert_eq!(ber.coefficient_in(&[g.u()], &[0]), g.one());
        assert_eq!(
            ber.coefficient_in(&[g.u()], &[1]),
            g.generator_series(SeriesKind::C, g.z(1), 3).unwrap()
        );
        assert_eq!(ber.coefficient_in(&[g.u()], &[2]), series(g, Family::B, 2, 3).unwrap());
        assert_eq!(berezinian_series(g, 1, 0, 3).unwrap(), g.one());
        assert!(berezinian_series(g, 2, 1, 1).is_err());
    }

    #[test]
    fn newton_and_macmahon() {
        let g = g();
        assert!(newton_check(g, 4, 2).unwrap());
        assert!(macmahon_check(g, 4, 2).unwrap());
    }

    #[test]
    fn h_b_symmetry() {
        let g = g();
        for k in 1..=5 {
            let h = symbol(g, Family::H, k).unwrap();
            assert_eq!(hb_swap(g, &h), symbol(g, Family::B, k).unwrap());
        }
    }

    #[test]
    fn family_parsing() {
        assert_eq!("s".parse::<Family>().unwrap(), Family::S);
        assert!("x".parse::<Family>().is_err());
    }
}
