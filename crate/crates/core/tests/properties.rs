#![allow(clippy::needless_range_loop)]

mod common;

use common::{count_patches_oracle, det_oracle, factorial, minor_gcd, random_commuting_pair, test_systems};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use quadtex::diagonal::{embed, essentiality, hat_rho, lambda, psi, rho_edge, DiagElem, EdgeElem, Scalar};
use quadtex::fock::{fock_basis, Creation, Projection, Sep, Side, SparseOp, TruncatedFock};
use quadtex::invariants::{build_quad_matrices, k_groups_of, minus_identity, smith_normal_form};
use quadtex::quad::{
    act, inner_a, inner_eta, inner_rho, module_basis, norms, reconstruct, reconstruct_v, Action, BasisKind, QuadVector,
};
use quadtex::subshift::count_rectangles_in;
use quadtex::textile::{
    count_specifications, enumerate_kappas, kappa_indicators, omega_set, sigma_blocks, LayeredGraph, TextileSystem,
};
use quadtex::{EdgeKey, Layer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn system(i: usize) -> TextileSystem {
    test_systems().swap_remove(i).1
}

fn random_pair_system(seed: u64, max_tiles: u64) -> TextileSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = random_commuting_pair(&mut rng, max_tiles);
    TextileSystem::from_matrices(a, b, &quadtex::KappaStrategy::Lex).unwrap()
}

fn ints(c: &[Scalar]) -> Vec<i64> {
    c.iter().map(|x| x.to_integer()).collect()
}

fn random_quad(ts: &TextileSystem, rng: &mut impl Rng) -> QuadVector {
    let v: Vec<i64> = (0..ts.tiles().len()).map(|_| rng.gen_range(-5..=5)).collect();
    QuadVector::from_ints(&v)
}

// ---- textile ----

#[test]
fn block_cardinality_on_test_systems() {
    for (name, ts) in test_systems() {
        let g = ts.graph();
        let ab = g.matrix(Layer::A).mul(g.matrix(Layer::B));
        let blocks = sigma_blocks(g);
        for i in 0..g.vertex_count() {
            for j in 0..g.vertex_count() {
                let (x, y) = blocks.get(i, j).map_or((0, 0), |b| (b.ab.len(), b.ba.len()));
                assert_eq!(x as u64, ab.get(i, j), "{name} ({i},{j})");
                assert_eq!(y as u64, ab.get(i, j), "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn tile_corners_and_indicators() {
    for (name, ts) in test_systems() {
        assert_eq!(ts.tiles().len(), ts.kappa().len(), "{name}");
        let ea = ts.edges(Layer::A);
        let eb = ts.edges(Layer::B);
        for t in ts.tiles() {
            assert_eq!(ts.kappa().apply(t.top, t.right), Some((t.left, t.bottom)));
            assert_eq!(ea[t.top].source, eb[t.left].source);
            assert_eq!(ea[t.top].target, eb[t.right].source);
            assert_eq!(eb[t.left].target, ea[t.bottom].source);
            assert_eq!(eb[t.right].target, ea[t.bottom].target);
        }
        let ind = kappa_indicators(&ts);
        let (na, nb) = (ea.len(), eb.len());
        for alpha in 0..na {
            for b in 0..nb {
                let mut row = 0;
                for a in 0..nb {
                    let expect = ts.tiles().iter().any(|t| t.top == alpha && t.right == b && t.left == a);
                    assert_eq!(ind.kappa_a(a, alpha, b) == 1, expect);
                    row += ind.kappa_a(a, alpha, b) as usize;
                }
                assert_eq!(row, (ea[alpha].target == eb[b].source) as usize, "{name}");
            }
        }
        for alpha in 0..na {
            for a in 0..nb {
                for beta in 0..na {
                    let expect = ts
                        .tiles()
                        .iter()
                        .any(|t| t.top == alpha && t.left == a && t.bottom == beta);
                    assert_eq!(ind.kappa_b(alpha, a, beta) == 1, expect);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn block_cardinality_random(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = random_commuting_pair(&mut rng, 400);
        let g = LayeredGraph::new(a.clone(), b.clone()).unwrap();
        let ab = a.mul(&b);
        let blocks = sigma_blocks(&g);
        for i in 0..a.size() {
            for j in 0..a.size() {
                let (x, y) = blocks.get(i, j).map_or((0, 0), |blk| (blk.ab.len(), blk.ba.len()));
                prop_assert_eq!(x as u64, ab.get(i, j));
                prop_assert_eq!(y as u64, ab.get(i, j));
            }
        }
    }

    #[test]
    fn specification_count_matches_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = random_commuting_pair(&mut rng, 12);
        let total = count_specifications(&a, &b).unwrap();
        prop_assume!(total <= 10_000u32.into());
        let g = LayeredGraph::new(a.clone(), b.clone()).unwrap();
        let ab = a.mul(&b);
        let product: u64 = ab.rows().iter().flatten().map(|&x| factorial(x)).product();
        let tables: std::collections::BTreeSet<_> = enumerate_kappas(&g, usize::MAX)
            .map(|k| { k.validate(&g).unwrap(); k.id_table(&g) })
            .collect();
        prop_assert_eq!(total, product.into());
        prop_assert_eq!(tables.len() as u64, product);
    }
}

// ---- diagonal algebra ----

#[test]
fn edge_maps_commute_along_tiles() {
    for (name, ts) in test_systems() {
        let n = ts.vertex_count();
        for t in ts.tiles() {
            for i in 0..n {
                let e = DiagElem::basis(n, i);
                let lhs = rho_edge(&ts, EdgeKey::b(t.right), &rho_edge(&ts, EdgeKey::a(t.top), &e).unwrap()).unwrap();
                let rhs = rho_edge(
                    &ts,
                    EdgeKey::a(t.bottom),
                    &rho_edge(&ts, EdgeKey::b(t.left), &e).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }
}

#[test]
fn hat_maps_respect_units() {
    for (name, ts) in test_systems() {
        let ea = ts.edges(Layer::A);
        let eb = ts.edges(Layer::B);
        let one_a = EdgeElem::unit(&ts, Layer::A);
        let one_b = EdgeElem::unit(&ts, Layer::B);
        for a in 0..eb.len() {
            let h = hat_rho(&ts, EdgeKey::b(a), &one_a).unwrap();
            let expect: Vec<i64> = ea.iter().map(|beta| (eb[a].target == beta.source) as i64).collect();
            assert_eq!(ints(&h.coeffs), expect, "{name}");
        }
        for alpha in 0..ea.len() {
            let h = hat_rho(&ts, EdgeKey::a(alpha), &one_b).unwrap();
            let expect: Vec<i64> = eb.iter().map(|b| (ea[alpha].target == b.source) as i64).collect();
            assert_eq!(ints(&h.coeffs), expect, "{name}");
        }
    }
}

#[test]
fn essentiality_matches_edge_sums() {
    for seed in 0..40 {
        let ts = random_pair_system(seed, 200);
        let n = ts.vertex_count();
        let ess = essentiality(&ts);
        for (layer, cols) in [(Layer::A, &ess.zero_cols_a), (Layer::B, &ess.zero_cols_b)] {
            let mut sum = vec![Scalar::zero(); n];
            for i in 0..ts.edge_count(layer) {
                let key = EdgeKey { layer, index: i };
                let r = rho_edge(&ts, key, &DiagElem::unit(n)).unwrap();
                for (s, c) in sum.iter_mut().zip(&r.coeffs) {
                    *s += c;
                }
            }
            let deficient: Vec<usize> = (0..n).filter(|&j| sum[j] < Scalar::one()).map(|j| j + 1).collect();
            assert_eq!(&deficient, cols);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_psi_is_indegree(sys in 0..4usize, seed in any::<u64>()) {
        let ts = system(sys);
        let n = ts.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = DiagElem::from_ints(&(0..n).map(|_| rng.gen_range(-9..=9)).collect::<Vec<_>>());
        for layer in [Layer::A, Layer::B] {
            let got = lambda(&ts, &psi(&ts, layer, &y));
            for j in 0..n {
                let indeg = ts.edges(layer).iter().filter(|e| e.target == j).count() as i64;
                prop_assert_eq!(got.coeffs[j], y.coeffs[j] * indeg);
            }
        }
    }
}

// ---- quad module ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_bases_reconstruct(sys in 0..4usize, seed in any::<u64>()) {
        let ts = system(sys);
        let x = random_quad(&ts, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(reconstruct(&ts, &x).unwrap(), x.clone());
        prop_assert_eq!(reconstruct_v(&ts, &x).unwrap(), x);
    }

    #[test]
    fn inner_products_are_lambda_compatible(sys in 0..4usize, seed in any::<u64>()) {
        let ts = system(sys);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_quad(&ts, &mut rng);
        let y = random_quad(&ts, &mut rng);
        let a = inner_a(&ts, &x, &y);
        prop_assert_eq!(&lambda(&ts, &inner_rho(&ts, &x, &y)), &a);
        prop_assert_eq!(&lambda(&ts, &inner_eta(&ts, &x, &y)), &a);
    }

    #[test]
    fn left_actions_commute(sys in 0..4usize, seed in any::<u64>()) {
        let ts = system(sys);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_quad(&ts, &mut rng);
        let w = EdgeElem::from_ints(Layer::A, &(0..ts.edge_count(Layer::A)).map(|_| rng.gen_range(-4..=4)).collect::<Vec<_>>());
        let z = EdgeElem::from_ints(Layer::B, &(0..ts.edge_count(Layer::B)).map(|_| rng.gen_range(-4..=4)).collect::<Vec<_>>());
        let (lw, lz) = (Action::LeftRho(w), Action::LeftEta(z));
        let one = act(&ts, &lw, &act(&ts, &lz, &x).unwrap()).unwrap();
        let two = act(&ts, &lz, &act(&ts, &lw, &x).unwrap()).unwrap();
        prop_assert_eq!(one, two);
    }
}

#[test]
fn norm_bounds_on_random_vectors() {
    for (name, ts) in test_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = ts.vertex_count();
        let indeg = |layer| {
            let l = lambda(&ts, &EdgeElem::unit(&ts, layer));
            (0..n).map(|j| l.coeffs[j].to_integer()).max().unwrap() as f64
        };
        let (c_rho, c_eta) = (indeg(Layer::A), indeg(Layer::B));
        for _ in 0..200 {
            let x = random_quad(&ts, &mut rng);
            let nm = norms(&ts, &x);
            let tol = 1e-12 * (1.0 + nm.a);
            assert!(
                nm.rho <= nm.a + tol && nm.a <= c_rho.sqrt() * nm.rho + tol,
                "{name}: {nm:?}"
            );
            assert!(
                nm.eta <= nm.a + tol && nm.a <= c_eta.sqrt() * nm.eta + tol,
                "{name}: {nm:?}"
            );
        }
    }
}

#[test]
fn vertex_action_on_u_basis() {
    for (name, ts) in test_systems() {
        let n = ts.vertex_count();
        for alpha in 0..ts.edge_count(Layer::A) {
            let u = module_basis(&ts, BasisKind::U, alpha).unwrap();
            for i in 0..n {
                let y = DiagElem::basis(n, i);
                let acted = act(&ts, &Action::LeftRho(embed(&ts, Layer::A, &y)), &u).unwrap();
                let lhs = inner_eta(&ts, &u, &acted);
                let rhs = embed(&ts, Layer::B, &rho_edge(&ts, EdgeKey::a(alpha), &y).unwrap());
                assert_eq!(lhs, rhs, "{name} alpha={alpha} i={i}");
            }
        }
    }
}

// ---- Fock representation ----

fn primitive_ops(tf: &TruncatedFock) -> Vec<(String, SparseOp, isize)> {
    let ts = tf.system();
    let mut ops = Vec::new();
    for i in 0..ts.edge_count(Layer::A) {
        ops.push((format!("s{i}"), tf.creation(Creation::S, EdgeKey::a(i)).unwrap(), 1));
        let w = EdgeElem::basis(ts, EdgeKey::a(i)).unwrap();
        ops.push((format!("phi_rho{i}"), tf.left_action(Side::Rho, &w).unwrap(), 0));
    }
    for i in 0..ts.edge_count(Layer::B) {
        ops.push((format!("t{i}"), tf.creation(Creation::T, EdgeKey::b(i)).unwrap(), 1));
        let z = EdgeElem::basis(ts, EdgeKey::b(i)).unwrap();
        ops.push((format!("phi_eta{i}"), tf.left_action(Side::Eta, &z).unwrap(), 0));
    }
    for (name, p) in [
        ("P0", Projection::Level(0)),
        ("Prho", Projection::Rho),
        ("Peta", Projection::Eta),
    ] {
        ops.push((name.into(), tf.projection(p), 0));
    }
    ops
}

#[test]
fn grading_and_partial_permutations() {
    for (name, ts) in test_systems() {
        let tf = fock_basis(&ts, 3).unwrap();
        for (op_name, op, shift) in primitive_ops(&tf) {
            for (r, c, v) in op.entries() {
                assert_eq!(v, 1, "{name} {op_name} is not 0/1");
                assert_eq!(
                    tf.level_of(r) as isize,
                    tf.level_of(c) as isize + shift,
                    "{name} {op_name}"
                );
                let adj = op.transpose();
                assert_eq!(adj.get(c, r), 1);
            }
            if shift == 1 {
                for r in 0..tf.dim() {
                    assert!(op.row(r).len() <= 1, "{name} {op_name}: row {r} has two preimages");
                }
            }
        }
    }
}

#[test]
fn word_basis_is_orthogonal() {
    for (name, ts) in test_systems() {
        let tf = fock_basis(&ts, 3).unwrap();
        let ea = ts.edges(Layer::A);
        let eb = ts.edges(Layer::B);
        for i in 0..tf.dim() {
            // range of the right edge of the last tile, or of the base edge
            let v = match tf.word(i) {
                quadtex::fock::FockWord::Q(b) => eb[*b].target,
                quadtex::fock::FockWord::P(beta) => ea[*beta].target,
                quadtex::fock::FockWord::Glued { tiles, .. } => eb[ts.tiles()[*tiles.last().unwrap()].right].target,
            };
            for j in 0..tf.dim() {
                let ip = tf.inner_a(&tf.unit_vector(i), &tf.unit_vector(j));
                let expect: Vec<i64> = (0..ts.vertex_count()).map(|k| (i == j && k == v) as i64).collect();
                assert_eq!(ip, expect, "{name} {i} {j}");
            }
        }
    }
}

#[test]
fn adjoints_are_adjoint() {
    for (name, ts) in test_systems() {
        let tf = fock_basis(&ts, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let sparse = |rng: &mut ChaCha8Rng| {
            let mut v = vec![0; tf.dim()];
            for _ in 0..rng.gen_range(1..=6) {
                v[rng.gen_range(0..tf.dim())] = rng.gen_range(-5..=5);
            }
            v
        };
        for (op_name, op, _) in primitive_ops(&tf) {
            let adj = op.transpose();
            for _ in 0..100 {
                let zeta = sparse(&mut rng);
                let w = sparse(&mut rng);
                assert_eq!(
                    tf.inner_a(&adj.apply(&zeta), &w),
                    tf.inner_a(&zeta, &op.apply(&w)),
                    "{name} {op_name}"
                );
            }
        }
    }
}

// ---- invariants ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_properties(
        rows in 1..=5usize,
        cols in 1..=5usize,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let r = smith_normal_form(&big);
        let prod = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
            a.iter().map(|row| (0..b[0].len()).map(|j| row.iter().zip(b).map(|(x, br)| x * &br[j]).sum()).collect()).collect()
        };
        prop_assert_eq!(prod(&prod(&r.u, &big), &r.v), r.d.clone());
        let as_i128 = |a: &Vec<Vec<BigInt>>| -> Vec<Vec<i128>> {
            a.iter().map(|row| row.iter().map(|x| i128::try_from(x).unwrap()).collect()).collect()
        };
        prop_assert_eq!(det_oracle(&as_i128(&r.u)).abs(), 1);
        prop_assert_eq!(det_oracle(&as_i128(&r.v)).abs(), 1);
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert!(r.d[i][j].is_zero());
                }
            }
        }
        let f = &r.invariant_factors;
        prop_assert!(f.iter().all(|d| d.is_positive()));
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        let mut partial = BigInt::one();
        for k in 1..=rows.min(cols) {
            if k <= f.len() {
                partial *= &f[k - 1];
            } else {
                partial = BigInt::zero();
            }
            prop_assert_eq!(partial.clone(), BigInt::from(minor_gcd(&m, k)));
        }
    }
}

#[test]
fn transition_row_sums_match_indicators() {
    let mut systems: Vec<TextileSystem> = test_systems().into_iter().map(|(_, ts)| ts).collect();
    systems.extend((0..20).map(|s| random_pair_system(s, 200)));
    for ts in systems {
        let qm = build_quad_matrices(&ts);
        let ind = kappa_indicators(&ts);
        let omega = omega_set(&ts);
        for (row, p) in omega.iter().enumerate() {
            let sum: i64 = qm.a_kappa[row].iter().sum();
            let expect: i64 = (0..ts.edge_count(Layer::B))
                .map(|b| ind.kappa_a(p.a, p.alpha, b) as i64 * omega.iter().filter(|q| q.a == b).count() as i64)
                .sum();
            assert_eq!(sum, expect);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn k_groups_agree_between_presentations(seed in any::<u64>()) {
        let ts = random_pair_system(seed, 120);
        let qm = build_quad_matrices(&ts);
        let sum: Vec<Vec<i64>> = qm.a_kappa.iter().zip(&qm.b_kappa)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        prop_assert_eq!(k_groups_of(&minus_identity(&sum)), k_groups_of(&minus_identity(&qm.h_kappa)));
    }
}

// ---- subshift ----

#[test]
fn level_two_summands_count_pairs() {
    for (name, ts) in test_systems() {
        let tf = fock_basis(&ts, 2).unwrap();
        let h = count_rectangles_in(ts.tiles(), 1, 2, 1_000_000).unwrap();
        let v = count_rectangles_in(ts.tiles(), 2, 1, 1_000_000).unwrap();
        assert_eq!(h, tf.level2_count(Sep::Eta).into(), "{name}");
        assert_eq!(v, tf.level2_count(Sep::Rho).into(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn removing_tiles_never_increases_counts(
        sys in 0..4usize,
        mask in any::<u64>(),
        k in 1..=3usize,
        l in 1..=3usize,
    ) {
        let ts = system(sys);
        let full = ts.tiles();
        let sub: Vec<_> = full.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, t)| *t).collect();
        let c_full = count_rectangles_in(full, k, l, 1_000_000).unwrap();
        let c_sub = count_rectangles_in(&sub, k, l, 1_000_000).unwrap();
        prop_assert!(c_sub <= c_full);
        prop_assert_eq!(c_sub, count_patches_oracle(&sub, k, l).into());
    }
}
