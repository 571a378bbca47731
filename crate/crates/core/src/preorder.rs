//! Preorders generated by a base relation, and their equivalence classes.
//!
//! Used for left, right and two-sided cells of both W and M(n,r).

use std::collections::VecDeque;

/// The reflexive-transitive closure of a relation on `0..n`, where a base
/// pair `(x, y)` means `x <= y`.
#[derive(Clone, Debug)]
pub struct Preorder {
    n: usize,
    base: Vec<Vec<usize>>,
    /// `up[x]` is a bitset of all `y` with `x <= y`.
    up: Vec<Vec<u64>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

impl Preorder {
    pub fn from_relation<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut base = vec![Vec::new(); n];
        for (x, y) in pairs {
            if x != y {
                base[x].push(y);
            }
        }
        for b in &mut base {
            b.sort_unstable();
            b.dedup();
        }
        let words = n.div_ceil(64).max(1);
        let mut up = vec![vec![0u64; words]; n];
        for x in 0..n {
            let set = &mut up[x];
            let mut queue = VecDeque::from([x]);
            set[x / 64] |= 1 << (x % 64);
            while let Some(y) = queue.pop_front() {
                for &z in &base[y] {
                    if !bit(set, z) {
                        set[z / 64] |= 1 << (z % 64);
                        queue.push_back(z);
                    }
                }
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (x..n)
                .filter(|&y| bit(&up[x], y) && bit(&up[y], x))
                .collect();
            for &y in &members {
                class_of[y] = id;
            }
            classes.push(members);
        }
        Self {
            n,
            base,
            up,
            class_of,
            classes,
        }
    }

    /// The preorder generated by the union of both base relations.
    pub fn join(&self, other: &Preorder) -> Preorder {
        assert_eq!(self.n, other.n);
        let pairs = self
            .base_pairs()
            .chain(other.base_pairs())
            .collect::<Vec<_>>();
        Preorder::from_relation(self.n, pairs)
    }

    pub fn base_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        bit(&self.up[x], y)
    }

    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Classes, each sorted, ordered by smallest member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_chain() {
        let p = Preorder::from_relation(5, [(0, 1), (1, 2), (2, 1), (3, 4)]);
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert!(p.equivalent(1, 2));
        assert_eq!(p.classes(), &[vec![0], vec![1, 2], vec![3], vec![4]]);
        let q = Preorder::from_relation(5, [(4, 0)]);
        let j = p.join(&q);
        assert!(j.leq(3, 2));
        assert_eq!(j.classes().len(), 4);
    }

    #[test]
    fn wide_sets() {
        let n = 130;
        let p = Preorder::from_relation(n, (0..n).map(|i| (i, (i + 1) % n)));
        assert_eq!(p.classes().len(), 1);
        assert!(p.leq(129, 0));
    }
}
