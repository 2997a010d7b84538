//! Schur P-functions, Euler characteristics, irreducible and Verma characters.

use qn_kl::characters::{ch_euler, ch_irreducible, ch_verma_truncated, pieri_check, schur_p};
use qn_kl::weights::{DominantWeight, Weight};

fn main() {
    for v in [[2, 0], [1, 1], [1, -1]] {
        let lam = Weight::from_slice(&v);
        println!("P{lam:?} = {}", schur_p(&lam).expect("weakly decreasing"));
    }

    for v in [vec![0, 0], vec![1, 0], vec![1, -1], vec![1, 0, -1]] {
        let lam = DominantWeight::from_slice(&v);
        println!("ch E{lam:?} = {}", ch_euler(&lam).expect("computable"));
        println!("ch L{lam:?} = {}", ch_irreducible(&lam).expect("computable"));
    }

    let lam = Weight::from_slice(&[1, 0, -1]);
    println!("Pieri identity at {lam:?}: {}", pieri_check(&lam).expect("computable").holds());

    let verma = ch_verma_truncated(&Weight::from_slice(&[0, 0]), 3);
    println!("ch M(0,0) = {}", verma.render());
}
