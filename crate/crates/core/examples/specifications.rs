//! Counting and listing the specifications of a commuting pair.

use quadtex::textile::{count_specifications, enumerate_kappas, sigma_blocks, LayeredGraph};
use quadtex::{IntMatrix, Layer};

fn main() -> quadtex::Result<()> {
    let a = IntMatrix::new(&[vec![1, 1], vec![1, 0]])?;
    let b = IntMatrix::new(&[vec![1, 1], vec![1, 0]])?;
    let g = LayeredGraph::new(a.clone(), b.clone())?;

    for (&(i, j), block) in &sigma_blocks(&g).blocks {
        println!("block ({}, {}): {} pairs each way", i + 1, j + 1, block.ab.len());
    }
    println!("{} specifications", count_specifications(&a, &b)?);
    for (n, kappa) in enumerate_kappas(&g, usize::MAX).enumerate() {
        println!("specification {}:", n + 1);
        for [[alpha, b], [a, beta]] in kappa.id_table(&g) {
            println!("  ({alpha}, {b}) -> ({a}, {beta})");
        }
    }

    let big = IntMatrix::new(&[vec![2, 1], vec![1, 2]])?;
    let g = LayeredGraph::new(big.clone(), big.clone())?;
    println!(
        "A = B = [[2,1],[1,2]]: {} edges per layer, {} specifications",
        g.edges(Layer::A).len(),
        count_specifications(&big, &big)?
    );
    Ok(())
}
