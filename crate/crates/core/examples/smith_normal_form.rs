//! Smith normal form with its unimodular transforms.

use num_bigint::BigInt;
use quadtex::invariants::{determinant, k_groups_of, smith_normal_form};

fn main() {
    let m: Vec<Vec<i64>> = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let r = smith_normal_form(&big);
    println!(
        "invariant factors: {:?}",
        r.invariant_factors.iter().map(BigInt::to_string).collect::<Vec<_>>()
    );
    println!("det U = {}, det V = {}", determinant(&r.u), determinant(&r.v));
    for row in &r.d {
        println!("  {}", row.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" "));
    }
    println!("cokernel and kernel of M: {}", k_groups_of(&m));
}
