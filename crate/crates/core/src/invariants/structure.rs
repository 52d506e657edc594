//! Graph-level properties of a 0/1 transition matrix.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    /// The transition graph is strongly connected.
    pub irreducible: bool,
    /// Every vertex reaches a cycle and every cycle has an exit.
    pub condition_i: bool,
    pub has_zero_row: bool,
    /// 1-based indices of zero rows.
    pub zero_rows: Vec<usize>,
}

pub fn structure_checks(m: &[Vec<i64>]) -> StructureReport {
    let n = m.len();
    let mut g = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let out_degree: Vec<usize> = m.iter().map(|r| r.iter().filter(|&&x| x != 0).count()).collect();
    let zero_rows: Vec<usize> = (0..n).filter(|&i| out_degree[i] == 0).map(|i| i + 1).collect();

    let sccs = tarjan_scc(&g);
    let irreducible = n > 0 && sccs.len() == 1;

    // a component carries a cycle if it has two vertices or a loop
    let mut on_cycle = vec![false; n];
    let mut cycle_without_exit = false;
    for comp in &sccs {
        let idx: Vec<usize> = comp.iter().map(|v| v.index()).collect();
        let cyclic = idx.len() > 1 || m[idx[0]][idx[0]] != 0;
        if !cyclic {
            continue;
        }
        for &i in &idx {
            on_cycle[i] = true;
        }
        if idx.iter().all(|&i| out_degree[i] == 1) {
            cycle_without_exit = true;
        }
    }
    // backward closure from cyclic vertices
    let mut reaches = on_cycle.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            if !reaches[i] && (0..n).any(|j| m[i][j] != 0 && reaches[j]) {
                reaches[i] = true;
                changed = true;
            }
        }
    }
    StructureReport {
        irreducible,
        condition_i: !cycle_without_exit && reaches.iter().all(|&r| r),
        has_zero_row: !zero_rows.is_empty(),
        zero_rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_has_no_exit() {
        let r = structure_checks(&[vec![0, 1], vec![1, 0]]);
        assert!(r.irreducible);
        assert!(!r.condition_i);
    }

    #[test]
    fn full_matrix() {
        let r = structure_checks(&[vec![1, 1], vec![1, 1]]);
        assert!(r.irreducible && r.condition_i && !r.has_zero_row);
    }

    #[test]
    fn zero_row_flagged() {
        let r = structure_checks(&[vec![1, 1], vec![0, 0]]);
        assert!(r.has_zero_row);
        assert_eq!(r.zero_rows, [2]);
        assert!(!r.irreducible);
        assert!(!r.condition_i);
    }

    #[test]
    fn reducible_with_exits() {
        // vertex 1 feeds a two-loop vertex
        let r = structure_checks(&[vec![0, 1], vec![0, 1]]);
        assert!(!r.irreducible);
        assert!(!r.condition_i);
        let r = structure_checks(&[vec![1, 1], vec![0, 1]]);
        assert!(!r.irreducible);
        assert!(!r.condition_i);
        let r = structure_checks(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert!(r.irreducible && r.condition_i);
    }
}
