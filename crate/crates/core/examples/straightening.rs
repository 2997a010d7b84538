//! Reducing wedge words to the standard basis, and the quantum group action.

use qn_kl::tensor::Generator;
use qn_kl::wedge::{act_wedge, straighten, Straightener, Strategy, WedgeVector, DEFAULT_FUEL};
use qn_kl::weights::DominantWeight;

fn main() {
    for word in [vec![0, 0], vec![-1, 1], vec![1, 1], vec![-2, 0, 2], vec![0, 1, -1]] {
        let v = straighten(&word).expect("enough fuel");
        println!("{word:?} -> {}", v.render("F"));
    }

    let word = [2, -3, 1, 0, -1, 3];
    let mut left = Straightener::new(Strategy::Leftmost, DEFAULT_FUEL);
    let mut random = Straightener::new(Strategy::Random(7), DEFAULT_FUEL);
    let a = left.straighten(&word).expect("enough fuel");
    let b = random.straighten(&word).expect("enough fuel");
    println!("{word:?}: strategies agree: {}", a == b);

    let f = WedgeVector::basis(DominantWeight::from_slice(&[1, 0]));
    for g in [Generator::E(0), Generator::F(0), Generator::F(1)] {
        println!("{g} F[1,0] = {}", act_wedge(g, &f).expect("enough fuel").render("F"));
    }
}
