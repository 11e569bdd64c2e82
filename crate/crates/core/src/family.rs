//! The labelled tree family grown from `P6` by the two path-attaching
//! operations, whose members are exactly the trees with sd_γt = 3.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::canon::{canonical_code_with_cap, labeled_tree_code};
use crate::domination::{gamma_t_value, is_total_dominating};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    A,
    B,
    C,
}

impl Status {
    pub fn as_char(self) -> char {
        match self {
            Status::A => 'A',
            Status::B => 'B',
            Status::C => 'C',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Operation {
    /// Attach `x-w-v` (statuses A, B, C) at an A vertex.
    O1,
    /// Attach `x-w-v-u` (statuses A, A, B, C) at a B or C vertex.
    O2,
}

impl Operation {
    fn name(self) -> &'static str {
        match self {
            Operation::O1 => "O1",
            Operation::O2 => "O2",
        }
    }

    fn added(self) -> &'static [Status] {
        match self {
            Operation::O1 => &[Status::A, Status::B, Status::C],
            Operation::O2 => &[Status::A, Status::A, Status::B, Status::C],
        }
    }

    fn admits(self, s: Status) -> bool {
        match self {
            Operation::O1 => s == Status::A,
            Operation::O2 => s != Status::A,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledTree {
    pub tree: Graph,
    pub status: Vec<Status>,
}

impl LabeledTree {
    pub fn status_line(&self) -> String {
        self.status.iter().map(|s| s.as_char()).collect()
    }

    pub fn with_status(&self, s: Status) -> VertexSet {
        (0..self.status.len()).filter(|&v| self.status[v] == s).collect()
    }

    /// Vertices labelled B or C.
    pub fn bc_set(&self) -> VertexSet {
        self.with_status(Status::B).union(self.with_status(Status::C))
    }

    fn labeled_code(&self) -> Vec<u8> {
        let labels: Vec<u8> = self.status.iter().map(|s| s.as_char() as u8).collect();
        labeled_tree_code(&self.tree, &labels).expect("family members are trees")
    }

    /// Every C vertex has exactly one B neighbour and vice versa.
    pub fn satisfies_label_law(&self) -> bool {
        let b = self.with_status(Status::B);
        let c = self.with_status(Status::C);
        self.tree.is_tree()
            && self.status.len() == self.tree.n()
            && b.iter().all(|v| self.tree.neighbors(v).intersection(c).len() == 1)
            && c.iter().all(|v| self.tree.neighbors(v).intersection(b).len() == 1)
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::to_edge_list(&self.tree))?;
        write!(f, "status: {}", self.status_line())
    }
}

/// `P6` labelled C, B, A, A, B, C along the path.
pub fn family_seed() -> LabeledTree {
    use Status::*;
    LabeledTree {
        tree: crate::graph::named::path(6),
        status: vec![C, B, A, A, B, C],
    }
}

pub fn apply_operation(t: &LabeledTree, op: Operation, y: usize) -> Result<LabeledTree> {
    let n = t.tree.n();
    if y >= n {
        return Err(Error::IndexOutOfRange { vertex: y, n });
    }
    if !op.admits(t.status[y]) {
        return Err(Error::WrongStatus {
            vertex: y,
            status: t.status[y].as_char(),
            op: op.name(),
        });
    }
    let added = op.added();
    let mut tree = t.tree.with_new_vertex(VertexSet::singleton(y))?;
    for i in 1..added.len() {
        tree = tree.with_new_vertex(VertexSet::singleton(n + i - 1))?;
    }
    let mut status = t.status.clone();
    status.extend_from_slice(added);
    let out = LabeledTree { tree, status };
    debug_assert!(out.satisfies_label_law());
    Ok(out)
}

/// Members of order at most `n_max`, one per isomorphism class of the
/// underlying tree, sorted by order then canonical code.
///
/// The closure is deduplicated on labelled codes: two labellings of the
/// same tree may admit different operations.
pub fn generate_family(n_max: usize) -> Vec<LabeledTree> {
    let seed = family_seed();
    if n_max < seed.tree.n() {
        return Vec::new();
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::from([seed.labeled_code()]);
    let mut members: BTreeMap<Vec<u8>, LabeledTree> = BTreeMap::new();
    let mut queue = VecDeque::from([seed]);
    while let Some(t) = queue.pop_front() {
        for y in 0..t.tree.n() {
            for op in [Operation::O1, Operation::O2] {
                if !op.admits(t.status[y]) || t.tree.n() + op.added().len() > n_max {
                    continue;
                }
                let child = apply_operation(&t, op, y).expect("eligibility checked");
                if seen.insert(child.labeled_code()) {
                    queue.push_back(child);
                }
            }
        }
        let code = canonical_code_with_cap(&t.tree, MAX_ORDER).expect("trees are never capped");
        members.entry(code).or_insert(t);
    }
    members.into_values().collect()
}

/// Canonical codes of the family's underlying trees up to a fixed order.
#[derive(Clone, Debug)]
pub struct FamilyIndex {
    n_max: usize,
    codes: BTreeSet<Vec<u8>>,
}

impl FamilyIndex {
    pub fn new(n_max: usize) -> Self {
        let codes = generate_family(n_max)
            .iter()
            .map(|t| canonical_code_with_cap(&t.tree, MAX_ORDER).expect("tree"))
            .collect();
        FamilyIndex { n_max, codes }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn contains(&self, t: &Graph) -> Result<bool> {
        check_tree(t)?;
        if t.n() > self.n_max {
            return Err(Error::OutOfRange {
                what: "tree order",
                value: t.n(),
                lo: 3,
                hi: self.n_max,
            });
        }
        Ok(self.codes.contains(&canonical_code_with_cap(t, MAX_ORDER)?))
    }
}

fn check_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(Error::TooSmall(t.n()));
    }
    Ok(())
}

/// Whether the unlabelled tree `t` has some labelling in the family.
pub fn is_in_family(t: &Graph) -> Result<bool> {
    check_tree(t)?;
    FamilyIndex::new(t.n()).contains(t)
}

/// The B and C vertices form a minimum total dominating set.
pub fn verify_bc_property(t: &LabeledTree) -> bool {
    let bc = t.bc_set();
    is_total_dominating(&t.tree, bc) && gamma_t_value(&t.tree).is_ok_and(|v| v == bc.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;
    use crate::graph::named::*;
    use crate::graph::structure_profile;

    fn code(g: &Graph) -> Vec<u8> {
        canonical_code(g).unwrap()
    }

    #[test]
    fn seed() {
        let s = family_seed();
        assert_eq!(s.tree, path(6));
        assert_eq!(s.status_line(), "CBAABC");
        assert_eq!(gamma_t_value(&s.tree).unwrap(), 4);
        assert!(verify_bc_property(&s));
        assert_eq!(s.bc_set().len(), 4);
    }

    #[test]
    fn operations() {
        let s = family_seed();
        let spider = apply_operation(&s, Operation::O1, 2).unwrap();
        assert_eq!(spider.tree.n(), 9);
        assert_eq!(spider.status_line(), "CBAABCABC");
        // spider: centre 2 with three legs of length 2, 3, 3
        let legs = Graph::from_edge_list(
            9,
            &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (0, 6), (6, 7), (7, 8)],
        )
        .unwrap();
        assert_eq!(code(&spider.tree), code(&legs));
        assert_eq!(
            code(&apply_operation(&s, Operation::O1, 3).unwrap().tree),
            code(&legs)
        );

        let p10 = apply_operation(&s, Operation::O2, 0).unwrap();
        assert_eq!(code(&p10.tree), code(&path(10)));
        assert!(p10.satisfies_label_law());

        assert_eq!(
            apply_operation(&s, Operation::O1, 1),
            Err(Error::WrongStatus {
                vertex: 1,
                status: 'B',
                op: "O1"
            })
        );
        assert!(apply_operation(&s, Operation::O2, 2).is_err());
    }

    #[test]
    fn generation_sizes() {
        assert_eq!(generate_family(5).len(), 0);
        assert_eq!(generate_family(6).len(), 1);
        assert_eq!(generate_family(8).len(), 1);
        for t in generate_family(14) {
            let n = t.tree.n();
            assert!((0..=2).any(|a| (0..=2).any(|b| 6 + 3 * a + 4 * b == n)), "order {n}");
            assert!(t.satisfies_label_law());
            assert!(structure_profile(&t.tree).strong_supports.is_empty());
        }
    }

    #[test]
    fn bc_property_small_members() {
        for t in generate_family(13) {
            assert!(verify_bc_property(&t), "{t}");
            // orders 6 + 3a + 4b below 14 determine a + b uniquely
            let ops = match t.tree.n() {
                6 => 0,
                9 | 10 => 1,
                12 | 13 => 2,
                n => unreachable!("order {n}"),
            };
            assert_eq!(t.bc_set().len(), 4 + 2 * ops);
        }
    }

    #[test]
    fn membership() {
        assert!(is_in_family(&path(6)).unwrap());
        assert!(!is_in_family(&path(7)).unwrap());
        assert!(is_in_family(&path(10)).unwrap());
        assert_eq!(is_in_family(&cycle(6)), Err(Error::NotATree));
        assert_eq!(is_in_family(&path(2)), Err(Error::TooSmall(2)));
    }

    #[test]
    fn commuting_operations() {
        let s = family_seed();
        // two operations anchored at vertices of the seed, either order
        for (op1, y1) in [(Operation::O1, 2), (Operation::O2, 0), (Operation::O2, 4)] {
            for (op2, y2) in [(Operation::O1, 3), (Operation::O2, 5), (Operation::O2, 1)] {
                let ab = apply_operation(&apply_operation(&s, op1, y1).unwrap(), op2, y2).unwrap();
                let ba = apply_operation(&apply_operation(&s, op2, y2).unwrap(), op1, y1).unwrap();
                assert_eq!(ab.labeled_code(), ba.labeled_code());
            }
        }
    }
}
