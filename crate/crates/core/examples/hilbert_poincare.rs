//! Four routes to the Hilbert-Poincare series, plus the general (m,n)
//! generating functions.

use gl11_vacuum::qseries::{
    chi_mn, enumerate_pp, f_mn, fermionic_series, hp_from_basis, ids_check, planep_series,
};

fn main() -> gl11_vacuum::Result<()> {
    let order = 10;
    println!("product:    {}", planep_series(order));
    println!("fermionic:  {}", fermionic_series(order));
    println!("from basis: {}", hp_from_basis(order));
    let counts: Vec<u128> = (0..=order).map(|v| enumerate_pp(1, 1, v)).collect();
    println!("counted:    {counts:?}");

    println!("chi_(2,2) = {}", chi_mn(2, 2, 8));
    println!("f_(2,2)   = {}", f_mn(2, 2, 8)?);
    for s in 0..=4 {
        println!("partition identity, s = {s}, to q^30: {}", ids_check(s, 30));
    }
    Ok(())
}
