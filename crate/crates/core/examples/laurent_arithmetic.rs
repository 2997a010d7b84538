//! Exact arithmetic in Z[q, q^-1].

use qn_kl::qring::{lp, LaurentPoly};

fn main() {
    let a = lp(&[(1, 1), (3, 1)]);
    let b = lp(&[(-1, 1), (1, -1)]);
    println!("a = {a}");
    println!("b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("bar(a) = {}", a.bar());
    println!("a at q = 1: {}", a.eval_one());

    let three = LaurentPoly::quantum_int(3, 1).expect("defined at node 1");
    let fact = LaurentPoly::quantum_factorial(3, 1).expect("defined at node 1");
    println!("[3] = {three}, [3]! = {fact}, bar-invariant: {}", fact.is_bar_invariant());
    println!("[3]! / [3] = {}", fact.exact_div(&three).expect("divides"));

    let p = lp(&[(0, 2), (1, 3)]);
    println!("bar-invariant lift of {p}: {}", p.bar_invariant_lift().expect("in Z[q]"));
}
