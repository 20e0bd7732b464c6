//! Finite posets over opaque string identifiers.
//!
//! Elements are kept sorted lexicographically (the canonical order used
//! everywhere for deterministic output) and the order relation is stored as
//! bitmask rows, which bounds supported posets at 64 elements — far above the
//! 20-element cap that antichain enumeration enforces anyway.

use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub const MAX_ELEMENTS: usize = 64;
pub const MAX_ANTICHAIN_ELEMENTS: usize = 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    elems: Vec<String>, // sorted, unique
    leq: Vec<u64>,      // leq[i] bit j set  <=>  elems[i] <= elems[j]
}

impl Poset {
    /// Build from elements and generator pairs: the relation becomes the
    /// reflexive-transitive closure; a closure that violates antisymmetry is a
    /// cycle and rejected.
    pub fn new(elements: Vec<String>, pairs: &[(String, String)]) -> Result<Poset> {
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::PosetTooLarge {
                size: elements.len(),
                limit: MAX_ELEMENTS,
                what: "the order relation",
            });
        }
        let mut elems = elements;
        elems.sort();
        for w in elems.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateElement(w[0].clone()));
            }
        }
        let index: BTreeMap<&str, usize> =
            elems.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
        let n = elems.len();
        let mut leq = vec![0u64; n];
        for (i, row) in leq.iter_mut().enumerate() {
            *row |= 1 << i;
        }
        for (x, y) in pairs {
            let &i = index.get(x.as_str()).ok_or_else(|| Error::UnknownElement(x.clone()))?;
            let &j = index.get(y.as_str()).ok_or_else(|| Error::UnknownElement(y.clone()))?;
            leq[i] |= 1 << j;
        }
        // transitive closure, one element at a time
        for k in 0..n {
            for i in 0..n {
                if leq[i] >> k & 1 == 1 {
                    leq[i] |= leq[k];
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i] >> j & 1 == 1 && leq[j] >> i & 1 == 1 {
                    return Err(Error::Cycle {
                        x: elems[i].clone(),
                        y: elems[j].clone(),
                    });
                }
            }
        }
        Ok(Poset { elems, leq })
    }

    pub fn singleton(id: &str) -> Poset {
        Poset::new(vec![id.to_string()], &[]).expect("singleton poset")
    }

    /// Test helper: elements and pairs from string literals.
    pub fn of(elements: &[&str], pairs: &[(&str, &str)]) -> Result<Poset> {
        Poset::new(
            elements.iter().map(|s| s.to_string()).collect(),
            &pairs
                .iter()
                .map(|(x, y)| (x.to_string(), y.to_string()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elems
    }

    pub fn id(&self, i: usize) -> &str {
        &self.elems[i]
    }

    pub fn index(&self, id: &str) -> Option<usize> {
        self.elems.binary_search_by(|e| e.as_str().cmp(id)).ok()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i] >> j & 1 == 1
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    /// All pairs (i, j) with i < j in the order, i ≠ j.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.lt(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Covering pairs (x, y): x < y with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(i, j)| !(0..self.len()).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    /// floor(x) = number of vertices on the longest covering chain ending at
    /// x; 1 for minimal elements.
    pub fn floors(&self) -> Vec<usize> {
        let n = self.len();
        // process by how many elements lie strictly below — a linear extension
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.leq.iter().filter(|&&r| r >> i & 1 == 1).count(), i));
        let mut floor = vec![1usize; n];
        for &i in &order {
            for j in 0..n {
                if self.lt(j, i) {
                    floor[i] = floor[i].max(floor[j] + 1);
                }
            }
        }
        floor
    }

    pub fn floor_of(&self, i: usize) -> usize {
        self.floors()[i]
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.len()).find(|&j| (0..self.len()).all(|i| self.le(i, j)))
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|j| self.lt(i, j)))
            .collect()
    }

    /// All nonempty antichains as sorted index lists, in lexicographic order.
    /// Enumeration is exponential, hence the hard size cap.
    pub fn antichains(&self) -> Result<Vec<Vec<usize>>> {
        if self.len() > MAX_ANTICHAIN_ELEMENTS {
            return Err(Error::PosetTooLarge {
                size: self.len(),
                limit: MAX_ANTICHAIN_ELEMENTS,
                what: "antichain enumeration",
            });
        }
        let n = self.len();
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn step(
            p: &Poset,
            start: usize,
            n: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            for i in start..n {
                if current.iter().all(|&c| !p.comparable(c, i)) {
                    current.push(i);
                    out.push(current.clone());
                    step(p, i + 1, n, current, out);
                    current.pop();
                }
            }
        }
        step(self, 0, n, &mut current, &mut out);
        Ok(out)
    }

    /// Restriction to a subset of elements (identifiers kept).
    pub fn induced(&self, subset: &[usize]) -> Poset {
        let elements: Vec<String> = subset.iter().map(|&i| self.elems[i].clone()).collect();
        let mut pairs = Vec::new();
        for &i in subset {
            for &j in subset {
                if self.lt(i, j) {
                    pairs.push((self.elems[i].clone(), self.elems[j].clone()));
                }
            }
        }
        Poset::new(elements, &pairs).expect("restriction of a poset is a poset")
    }

    /// Check that `map` (self index → other index) is an order isomorphism.
    pub fn is_isomorphism(&self, other: &Poset, map: &[usize]) -> bool {
        if self.len() != other.len() || map.len() != self.len() {
            return false;
        }
        let mut seen = vec![false; other.len()];
        for &m in map {
            if m >= other.len() || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| self.le(i, j) == other.le(map[i], map[j]))
        })
    }
}

/// All order-isomorphisms P → Q matching the labels, as index maps, in
/// lexicographic order of the image sequence.  Empty when none exist.
pub fn labeled_isomorphisms<L: PartialEq>(
    p: &Poset,
    q: &Poset,
    label_p: &[L],
    label_q: &[L],
) -> Vec<Vec<usize>> {
    assert_eq!(label_p.len(), p.len(), "label count");
    assert_eq!(label_q.len(), q.len(), "label count");
    if p.len() != q.len() {
        return Vec::new();
    }
    let n = p.len();
    let mut out = Vec::new();
    let mut map: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn assign<L: PartialEq>(
        p: &Poset,
        q: &Poset,
        label_p: &[L],
        label_q: &[L],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = map.len();
        if i == p.len() {
            out.push(map.clone());
            return;
        }
        for c in 0..q.len() {
            if used[c] || label_p[i] != label_q[c] {
                continue;
            }
            // order consistency with everything already placed, both ways
            let ok = (0..i).all(|j| {
                p.le(j, i) == q.le(map[j], c) && p.le(i, j) == q.le(c, map[j])
            });
            if ok {
                map.push(c);
                used[c] = true;
                assign(p, q, label_p, label_q, map, used, out);
                used[c] = false;
                map.pop();
            }
        }
    }
    assign(p, q, label_p, label_q, &mut map, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(p: &Poset, list: &[Vec<usize>]) -> Vec<Vec<String>> {
        list.iter()
            .map(|a| a.iter().map(|&i| p.id(i).to_string()).collect())
            .collect()
    }

    #[test]
    fn closure_and_cycle_detection() {
        let p = Poset::of(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);

        let p = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(p.lt(0, 1));
        assert!(!p.le(1, 0));

        let err = Poset::of(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err.code(), "CycleError");

        // indirect cycle through closure
        let err = Poset::of(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap_err();
        assert_eq!(err.code(), "CycleError");
    }

    #[test]
    fn transitive_closure_fills_in() {
        let p = Poset::of(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.lt(p.index("a").unwrap(), p.index("c").unwrap()));
    }

    #[test]
    fn antichain_enumeration() {
        let chain = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(ids(&chain, &chain.antichains().unwrap()), [["a"], ["b"]]);

        let anti = Poset::of(&["a", "b"], &[]).unwrap();
        assert_eq!(
            ids(&anti, &anti.antichains().unwrap()),
            [vec!["a"], vec!["a", "b"], vec!["b"]]
        );

        let diamond =
            Poset::of(&["a", "c", "d", "e"], &[("a", "c"), ("a", "d"), ("c", "e"), ("d", "e")])
                .unwrap();
        assert_eq!(
            ids(&diamond, &diamond.antichains().unwrap()),
            [vec!["a"], vec!["c"], vec!["c", "d"], vec!["d"], vec!["e"]]
        );
    }

    #[test]
    fn antichains_match_brute_force() {
        let p = Poset::of(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        let mut brute = Vec::new();
        for mask in 1u32..(1 << p.len()) {
            let set: Vec<usize> = (0..p.len()).filter(|&i| mask >> i & 1 == 1).collect();
            let anti = set
                .iter()
                .all(|&i| set.iter().all(|&j| i == j || !p.comparable(i, j)));
            if anti {
                brute.push(set);
            }
        }
        brute.sort();
        assert_eq!(p.antichains().unwrap(), brute);
    }

    #[test]
    fn covers_drop_implied_pairs() {
        let chain = Poset::of(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(chain.covers(), vec![(0, 1), (1, 2)]);

        let anti = Poset::of(&["a", "b"], &[]).unwrap();
        assert!(anti.covers().is_empty());

        // a<d is transitively implied and must not appear as a cover
        let p = Poset::of(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("a", "d")],
        )
        .unwrap();
        let cover_ids: Vec<(String, String)> = p
            .covers()
            .into_iter()
            .map(|(i, j)| (p.id(i).to_string(), p.id(j).to_string()))
            .collect();
        assert_eq!(
            cover_ids,
            [
                ("a".into(), "b".into()),
                ("a".into(), "c".into()),
                ("b".into(), "d".into()),
                ("c".into(), "d".into())
            ]
        );
    }

    #[test]
    fn floors_count_longest_covering_chain() {
        let chain = Poset::of(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(chain.floors(), vec![1, 2, 3]);

        let diamond =
            Poset::of(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
                .unwrap();
        assert_eq!(diamond.floor_of(diamond.index("d").unwrap()), 3);
        // covers raise floor by at least one, with equality somewhere
        let floors = diamond.floors();
        for (i, j) in diamond.covers() {
            assert!(floors[j] > floors[i]);
        }
    }

    #[test]
    fn greatest_element() {
        let chain = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(chain.greatest().map(|i| chain.id(i)), Some("b"));

        let anti = Poset::of(&["a", "b"], &[]).unwrap();
        assert_eq!(anti.greatest(), None);

        let v = Poset::of(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        assert_eq!(v.greatest().map(|i| v.id(i)), Some("c"));
    }

    #[test]
    fn labeled_isomorphism_search() {
        let p = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
        let q = Poset::of(&["u", "v"], &[("u", "v")]).unwrap();
        assert_eq!(labeled_isomorphisms(&p, &q, &[1, 1], &[1, 1]), vec![vec![0, 1]]);
        assert!(labeled_isomorphisms(&p, &q, &[1, 2], &[2, 1]).is_empty());

        let p = Poset::of(&["a", "b"], &[]).unwrap();
        let q = Poset::of(&["u", "v"], &[]).unwrap();
        assert_eq!(
            labeled_isomorphisms(&p, &q, &[1, 1], &[1, 1]),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn labeled_isomorphisms_contain_identity() {
        let p = Poset::of(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        let labels = [3, 1, 4, 1];
        let isos = labeled_isomorphisms(&p, &p, &labels, &labels);
        assert!(isos.contains(&vec![0, 1, 2, 3]));
        for m in isos {
            assert!(p.is_isomorphism(&p, &m));
        }
    }

    #[test]
    fn induced_subposet_keeps_order() {
        let p = Poset::of(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let q = p.induced(&[0, 2]);
        assert_eq!(q.elements(), ["a", "c"]);
        assert!(q.lt(0, 1));
    }

    #[test]
    fn antichain_cap_is_enforced() {
        let ids: Vec<String> = (0..21).map(|i| format!("x{i:02}")).collect();
        let p = Poset::new(ids, &[]).unwrap();
        assert_eq!(p.antichains().unwrap_err().code(), "PosetTooLarge");
    }
}
