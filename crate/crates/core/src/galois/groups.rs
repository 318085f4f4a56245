//! Permutation data for the transitive groups that can occur, and the cycle
//! types realized by their elements.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::OnceLock;

use super::GaloisLabel;

/// One transitive group: its label, its order, and generators as image lists
/// on the points `1..=degree`.
struct GroupData {
    label: GaloisLabel,
    order: usize,
    generators: &'static [&'static [u8]],
}

const fn g(degree: u8, index: u8, order: usize, generators: &'static [&'static [u8]]) -> GroupData {
    GroupData {
        label: GaloisLabel::from_parts(degree, index),
        order,
        generators,
    }
}

#[rustfmt::skip]
const GROUPS: &[GroupData] = &[
    g(2, 1, 2, &[&[2, 1]]),
    g(4, 1, 4, &[&[2, 3, 4, 1]]),
    g(4, 2, 4, &[&[4, 3, 2, 1], &[2, 1, 4, 3]]),
    g(4, 3, 8, &[&[2, 3, 4, 1], &[3, 2, 1, 4]]),
    g(6, 1, 6, &[&[2, 3, 4, 5, 6, 1]]),
    g(6, 2, 6, &[&[3, 4, 5, 6, 1, 2], &[4, 3, 2, 1, 6, 5]]),
    g(6, 3, 12, &[&[2, 3, 4, 5, 6, 1], &[4, 3, 2, 1, 6, 5]]),
    g(6, 5, 18, &[&[1, 4, 3, 6, 5, 2], &[4, 5, 6, 1, 2, 3]]),
    g(6, 9, 36, &[&[1, 4, 3, 6, 5, 2], &[5, 4, 3, 2, 1, 6], &[4, 5, 6, 1, 2, 3]]),
    g(12, 2, 12, &[
        &[10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3],
        &[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
    ]),
    g(12, 3, 12, &[
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[11, 8, 9, 6, 7, 4, 5, 2, 3, 12, 1, 10],
        &[12, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 1],
    ]),
    g(12, 10, 24, &[
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12],
        &[10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3],
        &[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
    ]),
    g(12, 11, 24, &[
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12],
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
    ]),
    g(12, 12, 24, &[
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
        &[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12],
    ]),
    g(12, 13, 24, &[
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3],
        &[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
        &[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12],
    ]),
    g(12, 14, 24, &[
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
        &[7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12],
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
    ]),
    g(12, 15, 24, &[
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[1, 8, 3, 10, 5, 12, 7, 2, 9, 4, 11, 6],
        &[7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12],
        &[2, 1, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3],
    ]),
    g(12, 16, 36, &[
        &[1, 10, 3, 8, 5, 2, 7, 12, 9, 6, 11, 4],
        &[10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3],
        &[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
    ]),
    g(12, 18, 36, &[
        &[1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4],
        &[10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3],
        &[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
    ]),
    g(12, 28, 48, &[
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
        &[7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12],
        &[5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4],
        &[5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12],
    ]),
    g(12, 37, 72, &[
        &[1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4],
        &[5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12],
        &[10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3],
        &[7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6],
    ]),
    g(12, 38, 72, &[
        &[1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4],
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
        &[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12],
    ]),
    g(12, 39, 72, &[
        &[1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4],
        &[5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12],
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
    ]),
    g(12, 42, 72, &[
        &[1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4],
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
        &[7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12],
    ]),
    g(12, 81, 144, &[
        &[1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4],
        &[5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12],
        &[4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3],
        &[7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12],
    ]),
];

/// Number of group elements of each cycle type (cycle lengths sorted
/// descending, fixed points included).
pub type CycleTypeCounts = BTreeMap<Vec<u32>, usize>;

/// Elements of the group generated by `gens`, as 0-based image vectors.
fn closure(gens: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = gens[0].len();
    let id: Vec<u8> = (0..n as u8).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(p) = queue.pop_front() {
        for s in gens {
            let q: Vec<u8> = p.iter().map(|&i| s[i as usize]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
        out.push(p);
    }
    out
}

pub(crate) fn cycle_type(perm: &[u8]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

fn is_transitive(elements: &[Vec<u8>]) -> bool {
    let n = elements[0].len();
    let orbit: HashSet<u8> = elements.iter().map(|p| p[0]).collect();
    orbit.len() == n
}

pub(crate) struct GroupTable {
    pub label: GaloisLabel,
    pub order: usize,
    pub cycle_types: CycleTypeCounts,
}

/// Cycle-type tables for every supported label, built on first use.
pub(crate) fn tables() -> &'static [GroupTable] {
    static TABLES: OnceLock<Vec<GroupTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        GROUPS
            .iter()
            .map(|data| {
                let gens: Vec<Vec<u8>> = data
                    .generators
                    .iter()
                    .map(|g| g.iter().map(|&i| i - 1).collect())
                    .collect();
                let elements = closure(&gens);
                assert_eq!(elements.len(), data.order, "order of {}", data.label);
                assert!(is_transitive(&elements), "{} is not transitive", data.label);
                let mut cycle_types = CycleTypeCounts::new();
                for e in &elements {
                    *cycle_types.entry(cycle_type(e)).or_default() += 1;
                }
                GroupTable {
                    label: data.label,
                    order: data.order,
                    cycle_types,
                }
            })
            .collect()
    })
}

pub(crate) fn table(label: GaloisLabel) -> &'static GroupTable {
    tables()
        .iter()
        .find(|t| t.label == label)
        .expect("every valid label has group data")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_transitivity_check_out() {
        // the assertions inside `tables` are the real test
        assert_eq!(tables().len(), 25);
        for t in tables() {
            let total: usize = t.cycle_types.values().sum();
            assert_eq!(total, t.order);
            assert_eq!(t.cycle_types[&vec![1; t.label.degree() as usize]], 1);
        }
    }

    #[test]
    fn cyclic_groups_have_full_cycles() {
        for label in ["4T1", "6T1"] {
            let t = table(label.parse().unwrap());
            let n = t.label.degree();
            assert!(t.cycle_types.contains_key(&vec![n]));
        }
        // the regular S3 has no 6-cycle and C6 has two
        assert!(!table("6T2".parse().unwrap())
            .cycle_types
            .contains_key(&vec![6]));
        assert_eq!(table("6T1".parse().unwrap()).cycle_types[&vec![6]], 2);
    }

    #[test]
    fn same_order_pairs_are_distinguished_by_cycle_type_statistics() {
        // 12T12 and 12T13 both have order 24; so do 12T10, 12T11, 12T14, 12T15
        let a = &table("12T12".parse().unwrap()).cycle_types;
        let b = &table("12T13".parse().unwrap()).cycle_types;
        assert_ne!(a, b);
    }

    #[test]
    fn cycle_type_of_small_permutations() {
        assert_eq!(cycle_type(&[1, 0, 2]), vec![2, 1]);
        assert_eq!(cycle_type(&[1, 2, 3, 0]), vec![4]);
        assert_eq!(cycle_type(&[0, 1]), vec![1, 1]);
    }
}
