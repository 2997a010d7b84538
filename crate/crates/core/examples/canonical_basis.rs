//! Canonical basis elements: the typicalization chain, the expansion, and its value at q = 1.

use qn_kl::canonical::{q1_coefficient_sum, typicalization_chain, ucb, ucb_q1_closed};
use qn_kl::weights::DominantWeight;

fn main() {
    let lam = DominantWeight::from_slice(&[5, 3, 2, 1, 0, 0, -1, -4, -6]);
    let chain = typicalization_chain(&lam).expect("finite chain");
    println!("{} steps to a typical weight", chain.len());
    for step in &chain {
        println!("  {:?} --{}--> {:?}", step.source, step.operator, step.target);
    }

    let u = ucb(&lam).expect("computable");
    println!("U{lam:?} = {}", u.render("F"));

    let closed = ucb_q1_closed(&lam);
    println!("at q = 1: algorithm and closed form agree: {}", u.eval_one() == closed);
    println!("sum of coefficients at q = 1: {}", q1_coefficient_sum(&lam));

    for v in [[0, 0, 0], [1, 0, -1], [2, 0, -2]] {
        let d = DominantWeight::from_slice(&v);
        println!("U{d:?} = {}", ucb(&d).expect("computable").render("F"));
    }
}
