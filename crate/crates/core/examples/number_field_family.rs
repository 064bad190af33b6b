//! The family over Q(sqrt(-5)): prime selection, the generator of I^r,
//! valuation profiles and the complement.

use sigmatame::charsphere::tame_degree;
use sigmatame::numfield::{nf_from_disc, Caps};
use sigmatame::numfield_example::{
    build_instance, character_profiles, select_prime, sigma_complement_numfield,
};

fn main() -> sigmatame::Result<()> {
    let caps = Caps::default();
    let k = nf_from_disc(-5)?;
    let (q, k_q) = select_prime(&k, 2, &caps)?;
    let inst = build_instance(&k, q, k_q, None, &caps)?;
    println!("{k}: q = {q}, k_q = {k_q}, I = {}, r = {}", inst.i.ideal, inst.r);
    println!("alpha = {} with norm {}", inst.alpha_text, k.norm(&inst.alpha));
    for c in character_profiles(&inst)? {
        println!("  {}: raw {:?} -> {}", c.place, c.raw, c.ray);
    }
    let sigma = sigma_complement_numfield(&inst)?;
    println!("Sigma^c = {sigma}, tame degree {}", tame_degree(&sigma).degree);
    Ok(())
}
