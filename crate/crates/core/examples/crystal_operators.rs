//! Signature rule and crystal operators.

use qn_kl::crystal::{crystal_dominant, crystal_primed, i_signature, i_string};
use qn_kl::weights::{DominantWeight, Weight};

fn main() {
    let lam = Weight::from_slice(&[1, 2, 0, -3, -2, -1, 0, 1]);
    for i in [0, 1] {
        let c = crystal_primed(&lam, i);
        println!("node {i}: signature {}", i_signature(&lam, i));
        println!("  E = {:?}, F = {:?}, epsilon = {}, phi = {}", c.e, c.f, c.epsilon, c.phi);
    }

    let d = DominantWeight::from_slice(&[1, 0, 0, -2]);
    for i in 0..3 {
        let c = crystal_dominant(&d, i);
        let string: Vec<String> = i_string(&d, i).iter().map(ToString::to_string).collect();
        println!("dominant {d:?}, node {i}: E = {:?}, F = {:?}, string {}", c.e, c.f, string.join(" -> "));
    }
}
