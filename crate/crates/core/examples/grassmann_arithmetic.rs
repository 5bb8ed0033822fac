//! Exact arithmetic with even and odd variables.

use gl11_vacuum::gl11::Gl11;

fn main() -> gl11_vacuum::Result<()> {
    let g = Gl11::standard();
    let p = g.parse("phi0*psi1 + a0")?;
    let q = g.parse("psi1*phi0 - 1/2*c2")?;

    println!("p       = {p}");
    println!("q       = {q}");
    println!("p + q   = {}", &p + &q);
    println!("p * q   = {}", &p * &q);
    // odd generators anticommute and square to zero
    let phi = g.poly(g.phi(0));
    let psi = g.poly(g.psi(1));
    println!("phi0*psi1 + psi1*phi0 = {}", &(&phi * &psi) + &(&psi * &phi));
    println!("phi0^2 = {}", &phi * &phi);

    println!("d/dphi0 (phi0*psi1*a0) = {}", g.parse("phi0*psi1*a0")?.derive_odd_left(g.phi(0))?);
    println!("d/da0 (a0^3*c1)       = {}", g.parse("a0^3*c1")?.derive_even(g.a(0))?);

    let prod = g.parse("a0^2 - c1^2")?;
    println!("(a0^2 - c1^2) / (a0 + c1) = {}", prod.exact_divide(&g.parse("a0 + c1")?)?);
    println!("json: {}", p.to_json());
    Ok(())
}
