//! The tile alphabet as Wang tiles and counts of rectangular patches.

use quadtex::app::wang_tiles;
use quadtex::subshift::{count_rectangles, enumerate_rectangles};
use quadtex::{IntMatrix, KappaStrategy, TextileSystem};

fn main() -> quadtex::Result<()> {
    let ts = TextileSystem::from_matrices(
        IntMatrix::new(&[vec![2]])?,
        IntMatrix::new(&[vec![3]])?,
        &KappaStrategy::Exchange,
    )?;
    println!("{}", serde_json::to_string(&wang_tiles(&ts)).expect("tiles serialize"));

    for (k, l) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (4, 6)] {
        println!("{k}x{l}: {}", count_rectangles(&ts, k, l)?);
    }
    for r in enumerate_rectangles(&ts, 2, 2, 3)? {
        println!("{:?}", r.cells);
    }
    Ok(())
}
