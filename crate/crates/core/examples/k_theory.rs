//! Transition matrices and K-groups for A = [2], B = [3] under the exchange
//! specification, then for the Fibonacci pair under every specification.

use quadtex::invariants::{build_quad_matrices, k_theory, structure_checks};
use quadtex::textile::{enumerate_kappas, LayeredGraph};
use quadtex::{IntMatrix, KappaStrategy, TextileSystem};

fn main() -> quadtex::Result<()> {
    let a = IntMatrix::new(&[vec![2]])?;
    let b = IntMatrix::new(&[vec![3]])?;
    let ts = TextileSystem::from_matrices(a, b, &KappaStrategy::Exchange)?;
    let qm = build_quad_matrices(&ts);
    println!(
        "A = [2], B = [3], exchange: {} tiles, n = {}",
        ts.tiles().len(),
        qm.omega.len()
    );
    for (ra, rb) in qm.a_kappa.iter().zip(&qm.b_kappa) {
        println!("  {ra:?}   {rb:?}");
    }
    println!("  {}", k_theory(&ts)?.groups);

    let fib = IntMatrix::new(&[vec![1, 1], vec![1, 0]])?;
    let g = LayeredGraph::new(fib.clone(), fib)?;
    for (i, kappa) in enumerate_kappas(&g, usize::MAX).enumerate() {
        let ts = TextileSystem::new(g.clone(), kappa)?;
        let qm = build_quad_matrices(&ts);
        let s = structure_checks(&qm.h_kappa);
        println!(
            "Fibonacci, specification {}: n = {}, {}, irreducible = {}, condition (I) = {}",
            i + 1,
            qm.omega.len(),
            k_theory(&ts)?.groups,
            s.irreducible,
            s.condition_i
        );
    }
    Ok(())
}
