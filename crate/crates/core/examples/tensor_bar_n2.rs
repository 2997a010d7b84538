//! The bar involution on the rank-two tensor space, and the two bases it fixes.

use qn_kl::tensor::{bar_n2, bar_vector_n2, m2_in_l, t2_closed};
use qn_kl::weights::Weight;

fn main() {
    for v in [[0, 0], [1, -1], [2, -2], [3, 1]] {
        let lam = Weight::from_slice(&v);
        let b = bar_n2(&lam, 10).expect("rank two");
        println!("bar N{lam:?} = {} + (keys >= 10)", b.terms.render("N"));
        let back = bar_vector_n2(&b).expect("rank two");
        println!("  applied twice: {}", back.terms.render("N"));
        println!("  T{lam:?} = {}", t2_closed(&lam).expect("rank two").render("N"));
        let m: Vec<String> = m2_in_l(&lam)
            .expect("rank two")
            .into_iter()
            .map(|(mu, c)| format!("({c})·L{mu:?}"))
            .collect();
        println!("  M{lam:?} = {}", m.join(" + "));
    }
}
