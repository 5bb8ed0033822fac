//! Projection of invariants to affine supersymmetric polynomials, and the
//! cancellation operator D.

use gl11_vacuum::gl11::Gl11;
use gl11_vacuum::ss_vectors::{symbol, Family};
use gl11_vacuum::susy::{
    affine_generator, cancellation_check, chevalley, conjecture_probe, d_series,
    injectivity_spotcheck, ConjectureKind, D_apply, ProbeParams, SusyAlphabet,
};

fn main() -> gl11_vacuum::Result<()> {
    let g = Gl11::standard();
    let s = SusyAlphabet::for_gl11(g);
    for k in 1..=3 {
        println!("h_{k} -> {}", chevalley(g, &s, &symbol(g, Family::H, k)?)?);
    }
    println!("generator (k=2, r=1): {}", affine_generator(&s, 2, 1)?);

    let rep = injectivity_spotcheck(g, 5)?;
    println!("ranks per degree: {:?}  full rank: {}", rep.per_degree, rep.full_rank);

    for (r, d) in d_series(g, 3)?.iter().enumerate() {
        println!("d_{r} = {d}");
    }
    for text in ["a0", "a0*c0", "a0^2*c0", "a0^2*c0 + a0*c1"] {
        let p = g.parse(text)?;
        println!("D({p}) = {}  cancels: {}", D_apply(g, &p)?, cancellation_check(g, &p)?);
    }

    let params = ProbeParams { m: 1, n: 1, max_degree: 4 };
    let report = conjecture_probe(g, ConjectureKind::Canc34, params)?;
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
