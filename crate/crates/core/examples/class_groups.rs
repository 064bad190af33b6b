//! Class numbers, fundamental units and principality in a few quadratic
//! fields.

use sigmatame::numfield::{
    class_group, fundamental_unit, nf_from_disc, primes_above, principal_generator, Caps,
};

fn main() -> sigmatame::Result<()> {
    let caps = Caps::default();
    for d in [-1, -5, -23, 2, 10, 79] {
        let k = nf_from_disc(d)?;
        let g = class_group(&k, &caps)?;
        print!("{k}: d_K = {}, h = {}, Minkowski primes {:?}", k.discriminant(), g.order, g.minkowski_primes);
        if let Some(u) = fundamental_unit(&k, &caps)? {
            print!(", unit {} (norm {})", k.format_elem(&u.unit), u.norm);
        }
        println!();
    }
    let k = nf_from_disc(-5)?;
    for p in primes_above(&k, 3)? {
        let gen = principal_generator(&k, &p.ideal, &caps)?;
        let square = principal_generator(&k, &p.ideal.pow(&k, 2), &caps)?;
        println!(
            "P = {} over 3: principal {}, P^2 generated by {}",
            p.ideal,
            gen.is_some(),
            square.map(|a| k.format_elem(&a)).unwrap_or_default()
        );
    }
    Ok(())
}
