//! Fixed sublattice and trace complement for the cyclic group of order 4
//! permuting a basis of Z^4.

use sigmatame::charsphere::Ray;
use sigmatame::lattice::{
    fixed_sublattice, orbit_characters, trace_complement, LatticeAction, DEFAULT_GROUP_ORDER_CAP,
};

fn main() -> sigmatame::Result<()> {
    let action = LatticeAction::from_permutations(4, &[vec![1, 2, 3, 0]], DEFAULT_GROUP_ORDER_CAP)?;
    let q0 = fixed_sublattice(&action)?;
    let dec = trace_complement(&action, &q0)?;
    println!("|H| = {}", action.order());
    println!("Q0 = span {:?}", dec.q0_basis);
    println!("Q1 = span {:?}", dec.q1_basis);
    println!("[Z^4 : Q0 + Q1] = {}", dec.index);
    let chi = Ray::canonicalize(&[2, 0, -1, 0])?;
    let orbit: Vec<String> = orbit_characters(&action, &chi)?.iter().map(|r| r.to_string()).collect();
    println!("orbit of {chi}: {}", orbit.join(", "));
    Ok(())
}
