//! Tame degree of a ray set, with the witness and the dual certificate.

use sigmatame::charsphere::{tame_degree, tameness_certificate, SigmaSet};

fn main() -> sigmatame::Result<()> {
    let set = SigmaSet::from_vectors(
        3,
        &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1], vec![1, 1, 0]],
    )?;
    let verdict = tame_degree(&set);
    println!("{set}: tame degree {}", verdict.degree);
    if let Some(w) = &verdict.witness {
        let terms: Vec<String> = w.terms.iter().map(|t| format!("{}*{}", t.coeff, t.ray)).collect();
        println!("  witness: {} = 0 (verified: {})", terms.join(" + "), w.verify());
    }
    if let Some(d) = verdict.degree.finite() {
        let cert = tameness_certificate(&set, d).expect("set is d-tame");
        println!("  {d}-tame: {} subsets separated (verified: {})", cert.subsets.len(), cert.verify(&set));
        for s in cert.subsets.iter().take(3) {
            println!("    functional {:?} on {:?}", s.functional, s.rays);
        }
    }
    Ok(())
}
