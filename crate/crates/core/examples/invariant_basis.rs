//! The elements Y(n, lambda), decomposition over them, and the series
//! A(z_1..z_n; t_0..t_{n-1}) whose coefficients are invariant.

use gl11_vacuum::gl11::Gl11;
use gl11_vacuum::invariant_basis::{
    basis_element, coefficients_invariant, decompose, factorization_check, A_series, SeriesCaps, Y,
};
use gl11_vacuum::schur::Partition;

fn main() -> gl11_vacuum::Result<()> {
    let g = Gl11::standard();
    let y2 = Y(g, 2, &Partition::empty())?;
    println!("Y(2, ()) = {y2}");
    println!("Y(2, (1)) = {}", Y(g, 2, &"1".parse()?)?);

    let p = &g.y(0) * &g.y(2);
    let dec = decompose(g, &p)?;
    println!("y0*y2 = {}", serde_json::to_string(&dec.to_json()).unwrap());

    let e = basis_element(g, 1, &"1".parse()?, &[1])?;
    println!("basis element (n=1, lambda=(1), k=[1]) = {e}");
    println!("invariant: {}", g.is_invariant(&e).invariant);

    let caps = SeriesCaps::for_internal_degree(2, 8);
    let a = A_series(g, 2, &caps)?;
    println!("A(z1,z2;t0,t1) to internal degree 8: {} terms", a.len());
    println!("every coefficient invariant: {}", coefficients_invariant(g, 2, &a).is_none());
    let rep = factorization_check(g, 2, &SeriesCaps::new(4, 2))?;
    println!("A factors as A(z1; T1) A(z2; T2): {}", rep.holds);
    Ok(())
}
