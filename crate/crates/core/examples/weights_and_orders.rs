//! Weights, their statistics, blocks and the Bruhat order.

use qn_kl::weights::{
    bruhat_leq, downarrow_reachable, lower_block_set, same_block, wt, DominantWeight, Weight,
};

fn main() {
    let lam: DominantWeight = "5,3,2,1,0,0,-1,-4,-6".parse().expect("dominant");
    let s = lam.stats();
    println!("lambda = {lam:?}");
    println!("z = {}, h = {}, atypicality = {}, typical: {}", s.z, s.h, s.atypicality, s.is_typical);
    println!("wt(lambda) = {:?}", wt(&lam));

    let a = Weight::from_slice(&[-1, 1]);
    let b = Weight::from_slice(&[0, 0]);
    println!("{a:?} <= {b:?} in Bruhat order: {}", bruhat_leq(&a, &b));
    println!("same block: {}", same_block(&a, &b));
    println!("reachable by lowering moves: {:?}", downarrow_reachable(&b, &a, 10_000).expect("same rank"));

    let top = DominantWeight::from_slice(&[2, 0, -2]);
    println!("dominant weights below {top:?} in its block:");
    for mu in lower_block_set(&top) {
        println!("  {mu:?}");
    }
}
