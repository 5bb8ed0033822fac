//! The loop algebra acting on the symmetric algebra, and invariance of the
//! symbols of the h, b and s families.

use gl11_vacuum::gl11::{Gl11, LoopOperator};
use gl11_vacuum::ss_vectors::{symbol, Family};

fn main() -> gl11_vacuum::Result<()> {
    let g = Gl11::standard();
    let p = g.parse("a0*c1 + phi0*psi0")?;
    for op in LoopOperator::all_up_to(1) {
        println!("{op} . ({p}) = {}", g.act(&op, &p));
    }

    for family in Family::ALL {
        for k in 1..=3 {
            let s = symbol(g, family, k)?;
            let rep = g.is_invariant(&s);
            println!("{family}_{k} = {s}  invariant: {}", rep.invariant);
        }
    }

    // translation preserves invariance
    let h3 = symbol(g, Family::H, 3)?;
    let t = g.translate_n(&h3, 2)?;
    println!("T^2 h_3 has {} terms, invariant: {}", t.len(), g.is_invariant(&t).invariant);

    let rep = g.is_invariant(&g.poly(g.a(0)));
    if let Some((op, image)) = rep.witness {
        println!("a0 is not invariant: {op} gives {image}");
    }
    Ok(())
}
