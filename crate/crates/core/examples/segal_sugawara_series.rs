//! Generating series of the three families, the Berezinian and the Newton
//! and MacMahon identities relating them.

use gl11_vacuum::gl11::Gl11;
use gl11_vacuum::ss_vectors::{hb_swap, macmahon_check, newton_check, series, symbol, Family};

fn main() -> gl11_vacuum::Result<()> {
    let g = Gl11::standard();
    for family in Family::ALL {
        let s = series(g, family, 2, 2)?;
        println!("{family}_2(z) to z^2:");
        for (e, c) in s.collect_in(&[g.z(1)]) {
            println!("  z^{}: {c}", e[0]);
        }
    }
    println!("Newton identity to (u^4, z^2): {}", newton_check(g, 4, 2)?);
    println!("MacMahon identity to (u^4, z^2): {}", macmahon_check(g, 4, 2)?);
    let h2 = symbol(g, Family::H, 2)?;
    println!("h_2 under a0 -> c0 - a0, phi0 -> -phi0: {}", hb_swap(g, &h2));
    Ok(())
}
