//! Schur polynomials as alternant ratios and Littlewood-Richardson
//! coefficients.

use gl11_vacuum::schur::{lr_expand, schur, schur_expand, sym_vars, Partition};

fn main() -> gl11_vacuum::Result<()> {
    let l: Partition = "2,1".parse()?;
    println!("s_(2,1)(z1,z2,z3) = {}", schur(&l, 3));

    let mu: Partition = "2,1".parse()?;
    let nu: Partition = "2,1".parse()?;
    println!("s_(2,1) * s_(2,1) =");
    for (lambda, c) in lr_expand(&mu, &nu).iter() {
        println!("  {c} s_{lambda}");
    }

    // expand a symmetric polynomial back into Schur functions
    let f = &schur(&mu, 4) * &schur(&nu, 4);
    let vars = sym_vars(4);
    for (lambda, c) in schur_expand(&f, &vars) {
        println!("  [{lambda}] {c}");
    }
    Ok(())
}
