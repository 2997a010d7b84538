//! Multiplicities of simple modules in Euler characteristics.

use qn_kl::characters::{decomposition_column, decomposition_row, Method};
use qn_kl::weights::DominantWeight;

fn main() {
    for v in [vec![1, -1], vec![2, -2], vec![2, 0, -2], vec![1, 0, 0, -1]] {
        let mu = DominantWeight::from_slice(&v);
        let row = decomposition_row(&mu, Method::Closed).expect("computable");
        let terms: Vec<String> = row.iter().map(|(l, c)| format!("{c}·L{l:?}")).collect();
        println!("E{mu:?}(1) = {}", terms.join(" + "));
    }

    let lam = DominantWeight::from_slice(&[0, 0, 0]);
    let closed = decomposition_column(&lam, Method::Closed).expect("computable");
    let canonical = decomposition_column(&lam, Method::Canonical).expect("computable");
    println!("column of L{lam:?}: {closed:?}");
    println!("both methods agree: {}", closed == canonical);
}
