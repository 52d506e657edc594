//! Inner products, actions and the canonical bases of the quad module.

use quadtex::diagonal::{embed, lambda, DiagElem, Scalar};
use quadtex::quad::{
    act, inner_a, inner_eta, inner_rho, module_basis, norms, reconstruct, Action, BasisKind, QuadVector,
};
use quadtex::{IntMatrix, KappaStrategy, Layer, TextileSystem};

fn show(c: &[Scalar]) -> String {
    c.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> quadtex::Result<()> {
    let fib = IntMatrix::new(&[vec![1, 1], vec![1, 0]])?;
    let ts = TextileSystem::from_matrices(fib.clone(), fib, &KappaStrategy::Lex)?;
    for (i, t) in ts.tiles().iter().enumerate() {
        println!("ω{} = {}", i + 1, ts.tile_label(t));
    }

    let x = QuadVector::from_ints(&[1, -2, 3, 0, 4]);
    let y = QuadVector::from_ints(&[2, 1, 1, 5, -1]);
    println!("<x|y>_A   = [{}]", show(&inner_a(&ts, &x, &y).coeffs));
    println!("<x|y>_rho = [{}]", show(&inner_rho(&ts, &x, &y).coeffs));
    println!("<x|y>_eta = [{}]", show(&inner_eta(&ts, &x, &y).coeffs));
    println!(
        "lambda(<x|y>_rho) = [{}]",
        show(&lambda(&ts, &inner_rho(&ts, &x, &y)).coeffs)
    );

    for alpha in 0..ts.edge_count(Layer::A) {
        let u = module_basis(&ts, BasisKind::U, alpha)?;
        println!(
            "u_{} is supported on tiles {:?}",
            alpha + 1,
            u.support().iter().map(|i| i + 1).collect::<Vec<_>>()
        );
    }
    println!("x reconstructed from the u basis: {}", reconstruct(&ts, &x)? == x);

    let y1 = DiagElem::basis(ts.vertex_count(), 0);
    let left = act(&ts, &Action::LeftRho(embed(&ts, Layer::A, &y1)), &x)?;
    println!("phi_rho(E_1) x = [{}]", show(&left.coeffs));
    let n = norms(&ts, &x);
    println!("norms of x: A {:.4}, rho {:.4}, eta {:.4}", n.a, n.rho, n.eta);
    Ok(())
}
