//! The family over F_{p^m}(x1) for p = 3, m = 2: sequence, valuations,
//! complement and a centralizer report for each divisor of m.

use sigmatame::charsphere::tame_degree;
use sigmatame::funcfield::{
    centralizer_report_funcfield, prime_char_instance, sigma_complement_funcfield, valuation_profiles,
};

fn main() -> sigmatame::Result<()> {
    let inst = prime_char_instance(3, 2)?;
    let seq: Vec<String> = inst.sequence.iter().map(|e| e.to_string()).collect();
    println!("a = {}, sequence {}", inst.a, seq.join(", "));
    for v in valuation_profiles(&inst) {
        println!("  {}: {:?}", v.place, v.values);
    }
    let sigma = sigma_complement_funcfield(&inst)?;
    println!("Sigma^c = {sigma}, tame degree {}", tame_degree(&sigma).degree);
    for d in [1, 2] {
        let r = centralizer_report_funcfield(&inst, d)?;
        println!("d = {d}: restricted {}, verified {}", r.restricted_sigma, r.verify());
        for v in &r.verdicts {
            println!("  {} {}", v.claim, v.citation);
        }
    }
    Ok(())
}
