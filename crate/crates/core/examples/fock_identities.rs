//! Builds the truncated Fock module and checks the operator identities.

use quadtex::fock::{fock_basis, verify_fock_identities, verify_relations_hk, Creation, Sep};
use quadtex::{EdgeKey, IntMatrix, KappaStrategy, TextileSystem};

fn main() -> quadtex::Result<()> {
    let ts = TextileSystem::from_matrices(
        IntMatrix::new(&[vec![2]])?,
        IntMatrix::new(&[vec![3]])?,
        &KappaStrategy::Exchange,
    )?;
    let tf = fock_basis(&ts, 4)?;
    for level in 0..=4 {
        println!("level {level}: {} words", tf.level_size(level));
    }
    println!(
        "level 2: {} glued by eta, {} glued by rho",
        tf.level2_count(Sep::Eta),
        tf.level2_count(Sep::Rho)
    );

    let s1 = tf.creation(Creation::S, EdgeKey::a(0))?;
    let w = tf.level_range(1, 1).start;
    let image = s1.apply(&tf.unit_vector(w));
    let targets: Vec<String> = image
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| tf.label(i))
        .collect();
    println!("s_1 maps {} to {}", tf.label(w), targets.join(" + "));

    let mut report = verify_fock_identities(&tf)?;
    report.extend(verify_relations_hk(&tf)?);
    for e in &report.entries {
        let [lo, hi] = e.levels_checked;
        println!("{:?}  {:<26} levels {lo}..={hi}", e.status, e.identity_id);
    }
    println!("all pass: {}", report.all_pass());
    Ok(())
}
