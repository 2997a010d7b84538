//! The dual canonical basis, its relation to the dual standard basis, and the action on it.

use qn_kl::canonical::{act_on_e, e_in_m_truncated, e_l_matrices};
use qn_kl::tensor::Generator;
use qn_kl::weights::DominantWeight;

fn main() {
    let top = DominantWeight::from_slice(&[1, -1]);
    let m = e_l_matrices(&top).expect("computable");
    println!("E in terms of L:");
    for (row, col, c) in m.e_in_l.nonzero() {
        println!("  [{row:?}, {col:?}] = {c}");
    }
    println!("L in terms of E:");
    for (row, col, c) in m.l_in_e.nonzero() {
        println!("  [{row:?}, {col:?}] = {c}");
    }
    println!("product is the identity: {}", m.e_in_l.mul(&m.l_in_e).is_identity());

    for g in [Generator::E(0), Generator::F(0), Generator::E(1)] {
        println!("{g} E{top:?} = {}", act_on_e(g, &top).render("E"));
    }

    let zero = DominantWeight::from_slice(&[0, 0]);
    let e: Vec<String> = e_in_m_truncated(&zero, 2)
        .expect("computable")
        .into_iter()
        .map(|(mu, c)| format!("({c})·M{mu:?}"))
        .collect();
    println!("E{zero:?} = {} + ...", e.join(" + "));
}
