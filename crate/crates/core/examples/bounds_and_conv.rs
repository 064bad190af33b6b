//! Floor bounds and a conv_{<=t} inclusion certificate.

use sigmatame::bounds::{bounds_report, conv_inclusion_certificate};
use sigmatame::charsphere::SigmaSet;

fn main() -> sigmatame::Result<()> {
    let report = bounds_report(12, 3, Some(2))?;
    for v in &report.values {
        println!("{}: {} = {} ({:?})", v.name, v.formula, v.value, v.status);
    }
    let set = SigmaSet::from_vectors(2, &[vec![1, 0], vec![0, 1], vec![-1, -1]])?;
    let sub = SigmaSet::from_vectors(2, &[vec![1, 1], vec![-1, 0]])?;
    let cert = conv_inclusion_certificate(&sub, &set, 2)?;
    println!("{sub} in conv_<=2 {set}: {} (verified {})", cert.included, cert.verify(&sub, &set));
    for w in &cert.witnesses {
        let terms: Vec<String> = w.witness.terms.iter().map(|t| format!("{}*{}", t.coeff, t.ray)).collect();
        println!("  {} * {} = {}", w.witness.multiple, w.ray, terms.join(" + "));
    }
    if let Some(d) = &cert.derived {
        println!(
            "tame degree {} / 2 gives at least {}; subset has {}",
            d.set_tame_degree, d.bound, d.sub_tame_degree
        );
    }
    Ok(())
}
