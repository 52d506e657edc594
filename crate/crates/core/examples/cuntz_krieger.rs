//! Cuntz-Krieger partial isometries realized inside the Fock module.

use quadtex::fock::{ck_generators, fock_basis};
use quadtex::{IntMatrix, KappaStrategy, Layer, TextileSystem};

fn main() -> quadtex::Result<()> {
    let fib = IntMatrix::new(&[vec![1, 1], vec![1, 0]])?;
    let ts = TextileSystem::from_matrices(fib.clone(), fib, &KappaStrategy::Lex)?;
    let tf = fock_basis(&ts, 5)?;
    let ck = ck_generators(&tf)?;
    let ea = ts.edges(Layer::A);
    let eb = ts.edges(Layer::B);
    for (i, p) in ck.omega.iter().enumerate() {
        println!(
            "({}, {}): S has {} nonzero entries, T has {}",
            ea[p.alpha].id(),
            eb[p.a].id(),
            ck.s[i].nnz(),
            ck.t[i].nnz()
        );
    }
    for e in &ck.report.entries {
        println!("{:?}  {}  {}", e.status, e.identity_id, e.paper_ref);
    }
    Ok(())
}
