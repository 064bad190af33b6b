//! F_{p^m} with its Frobenius and trace, and the normal element used by the
//! prime-characteristic family.

use sigmatame::arith::fq_make;
use sigmatame::funcfield::find_normal_trace_one;

fn main() -> sigmatame::Result<()> {
    let f = fq_make(3, 2)?;
    println!("F_9 = F_3[t]/({:?}), {} elements", f.modulus(), f.order());
    for a in f.elements().take(5) {
        println!("  {a}: frobenius {}, trace {}", a.frobenius(), a.trace());
    }
    let a = find_normal_trace_one(&f);
    let conj: Vec<String> = a.conjugates().iter().map(|c| c.to_string()).collect();
    println!("normal element of trace 1: {a}, conjugates [{}]", conj.join(", "));
    Ok(())
}
