//! Standard and semistandard tableaux on multipartition diagrams.

use std::collections::BTreeMap;
use std::fmt;

use super::node::{diagram, removable_nodes, remove_node, Node};
use super::partition::{MultiComposition, MultiPartition};
use super::perm::Perm;
use super::CombiError;

/// A standard tableau: a bijection from the diagram of `shape` to `{1..n}`
/// increasing along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StdTableau {
    shape: MultiPartition,
    // entries mirror the diagram: component -> row -> values
    rows: Vec<Vec<Vec<usize>>>,
}

impl StdTableau {
    fn from_rows(shape: MultiPartition, rows: Vec<Vec<Vec<usize>>>) -> Self {
        let t = StdTableau { shape, rows };
        debug_assert!(t.is_standard(), "not standard: {t:?}");
        t
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn value_at(&self, x: &Node) -> usize {
        self.rows[x.component - 1][x.row - 1][x.col - 1]
    }

    pub fn node_of(&self, value: usize) -> Node {
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v == value {
                        return Node::new(i + 1, j + 1, k + 1);
                    }
                }
            }
        }
        panic!("value {value} not present");
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for comp in &self.rows {
            for (i, row) in comp.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v < 1 || v > n || seen[v] {
                        return false;
                    }
                    seen[v] = true;
                    if j + 1 < row.len() && row[j] >= row[j + 1] {
                        return false;
                    }
                    if i + 1 < comp.len() && j < comp[i + 1].len() && v >= comp[i + 1][j] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, comp) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "[")?;
                for (j, v) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// All standard tableaux of shape `la`, in a deterministic order (recursion
/// over removable nodes in node order).
pub fn enumerate_std_tableaux(la: &MultiPartition) -> Vec<StdTableau> {
    let n = la.size();
    if n == 0 {
        let rows = la.components().iter().map(|_| Vec::new()).collect();
        return vec![StdTableau::from_rows(la.clone(), rows)];
    }
    let mut out = Vec::new();
    for x in removable_nodes(la) {
        let smaller = remove_node(la, &x).expect("removable");
        for t in enumerate_std_tableaux(&smaller) {
            let mut rows = t.rows.clone();
            let comp = &mut rows[x.component - 1];
            if comp.len() < x.row {
                comp.resize(x.row, Vec::new());
            }
            comp[x.row - 1].push(n);
            debug_assert_eq!(comp[x.row - 1].len(), x.col);
            out.push(StdTableau::from_rows(la.clone(), rows));
        }
    }
    out
}

/// `|Std(la)|` by the removable-node recursion, memoized.
pub fn std_count(la: &MultiPartition) -> u64 {
    fn rec(la: &MultiPartition, memo: &mut BTreeMap<MultiPartition, u64>) -> u64 {
        if la.size() == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(la) {
            return c;
        }
        let mut total = 0;
        for x in removable_nodes(la) {
            let smaller = remove_node(la, &x).expect("removable");
            total += rec(&smaller, memo);
        }
        memo.insert(la.clone(), total);
        total
    }
    rec(la, &mut BTreeMap::new())
}

/// The row-reading filling: box `(i,j,k)` gets
/// `sum_{c<k} |mu^(c)| + sum_{a<i} mu_a^(k) + j`. For partitions this is the
/// superstandard tableau `t^la`.
pub fn superstandard(la: &MultiPartition) -> StdTableau {
    let values = superstandard_values(la.as_composition());
    let mut rows: Vec<Vec<Vec<usize>>> = la
        .components()
        .iter()
        .map(|c| c.iter().map(|&len| vec![0; len]).collect())
        .collect();
    for (x, v) in values {
        rows[x.component - 1][x.row - 1][x.col - 1] = v;
    }
    StdTableau::from_rows(la.clone(), rows)
}

/// The same reading-order values for an arbitrary composition shape, as a
/// node map (used to convert standard tableaux to weight readings).
pub fn superstandard_values(mu: &MultiComposition) -> BTreeMap<Node, usize> {
    let mut out = BTreeMap::new();
    let mut next = 1;
    for x in diagram(mu) {
        out.insert(x, next);
        next += 1;
    }
    out
}

/// The permutation `d(t)` with `t = d(t) . t^la` as functions on box labels.
pub fn tableau_perm(t: &StdTableau) -> Perm {
    let base = superstandard(t.shape());
    let n = t.size();
    let mut one_line = vec![0u8; n];
    for x in diagram(t.shape().as_composition()) {
        one_line[base.value_at(&x) - 1] = t.value_at(&x) as u8;
    }
    Perm::from_one_line(one_line)
}

/// A semistandard tableau: boxes carry labels `(a, c)` with the component
/// floor `k <= c`, rows weakly increasing and columns strictly increasing in
/// the order by `(c, a)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiStdTableau {
    shape: MultiPartition,
    rows: Vec<Vec<Vec<(usize, usize)>>>,
}

fn label_le(x: (usize, usize), y: (usize, usize)) -> bool {
    // (a,c) <= (a',c') iff c < c', or c = c' and a <= a'
    x.1 < y.1 || (x.1 == y.1 && x.0 <= y.0)
}

fn label_lt(x: (usize, usize), y: (usize, usize)) -> bool {
    label_le(x, y) && x != y
}

impl SemiStdTableau {
    pub fn from_entries(shape: MultiPartition, entries: &BTreeMap<Node, (usize, usize)>) -> Self {
        let mut rows: Vec<Vec<Vec<(usize, usize)>>> = shape
            .components()
            .iter()
            .map(|c| c.iter().map(|&len| vec![(0, 0); len]).collect())
            .collect();
        for x in diagram(shape.as_composition()) {
            let lab = *entries.get(&x).expect("entry for every box");
            rows[x.component - 1][x.row - 1][x.col - 1] = lab;
        }
        SemiStdTableau { shape, rows }
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn label_at(&self, x: &Node) -> (usize, usize) {
        self.rows[x.component - 1][x.row - 1][x.col - 1]
    }

    pub fn entries(&self) -> BTreeMap<Node, (usize, usize)> {
        diagram(self.shape.as_composition())
            .into_iter()
            .map(|x| (x, self.label_at(&x)))
            .collect()
    }

    /// The weight: `mu_a^{(c)}` counts boxes labelled `(a, c)`.
    pub fn weight(&self) -> MultiComposition {
        let r = self.shape.num_components();
        let mut comps: Vec<Vec<usize>> = vec![Vec::new(); r];
        for comp in &self.rows {
            for row in comp {
                for &(a, c) in row {
                    let v = &mut comps[c - 1];
                    if v.len() < a {
                        v.resize(a, 0);
                    }
                    v[a - 1] += 1;
                }
            }
        }
        MultiComposition::new(comps)
    }

    pub fn is_semistandard(&self) -> bool {
        for (k, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &lab) in row.iter().enumerate() {
                    let (a, c) = lab;
                    if a < 1 || c < 1 || c < k + 1 {
                        return false;
                    }
                    if j + 1 < row.len() && !label_le(lab, row[j + 1]) {
                        return false;
                    }
                    if i + 1 < comp.len() && j < comp[i + 1].len() && !label_lt(lab, comp[i + 1][j])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for SemiStdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, comp) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, row) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "[")?;
                for (j, (a, c)) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "({a},{c})")?;
                }
                write!(f, "]")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// The highest-weight filling `T^la` with `T(x) = (row(x), comp(x))`; the
/// unique semistandard tableau of shape and weight `la`.
pub fn canonical_sst(la: &MultiPartition) -> SemiStdTableau {
    let entries = diagram(la.as_composition())
        .into_iter()
        .map(|x| (x, (x.row, x.component)))
        .collect();
    SemiStdTableau::from_entries(la.clone(), &entries)
}

/// The distinguished filling `T_x^la`: `(row, comp)` off `x` and the bottom
/// label `(m_r, r)` at the removable node `x`.
pub fn special_sst(
    la: &MultiPartition,
    x: &Node,
    m: &[usize],
) -> Result<SemiStdTableau, CombiError> {
    if !removable_nodes(la).contains(x) {
        return Err(CombiError::NotRemovable(*x));
    }
    let r = la.num_components();
    assert_eq!(m.len(), r);
    let entries = diagram(la.as_composition())
        .into_iter()
        .map(|y| {
            let lab = if y == *x {
                (m[r - 1], r)
            } else {
                (y.row, y.component)
            };
            (y, lab)
        })
        .collect();
    Ok(SemiStdTableau::from_entries(la.clone(), &entries))
}

/// The weight reading `mu(t)` of a standard tableau: the box holding value
/// `v` is labelled by the row slot of `v` in the reading filling of `mu`.
/// Not semistandard in general.
pub fn weight_reading(t: &StdTableau, mu: &MultiComposition) -> BTreeMap<Node, (usize, usize)> {
    assert_eq!(t.size(), mu.size());
    let base = superstandard_values(mu);
    let mut slot_of_value: Vec<(usize, usize)> = vec![(0, 0); t.size() + 1];
    for (x, v) in &base {
        slot_of_value[*v] = (x.row, x.component);
    }
    diagram(t.shape().as_composition())
        .into_iter()
        .map(|x| (x, slot_of_value[t.value_at(&x)]))
        .collect()
}

fn sst_backtrack(
    la: &MultiPartition,
    mut allowed: impl FnMut(usize, usize) -> bool,
    max_a: &[usize],
    mut on_found: impl FnMut(&BTreeMap<Node, (usize, usize)>),
) {
    let boxes = diagram(la.as_composition());
    let r = la.num_components();
    let mut entries: BTreeMap<Node, (usize, usize)> = BTreeMap::new();

    fn rec(
        boxes: &[Node],
        pos: usize,
        r: usize,
        max_a: &[usize],
        allowed: &mut impl FnMut(usize, usize) -> bool,
        entries: &mut BTreeMap<Node, (usize, usize)>,
        on_found: &mut impl FnMut(&BTreeMap<Node, (usize, usize)>),
    ) {
        if pos == boxes.len() {
            on_found(entries);
            return;
        }
        let x = boxes[pos];
        let left = if x.col > 1 {
            entries
                .get(&Node::new(x.row, x.col - 1, x.component))
                .copied()
        } else {
            None
        };
        let up = if x.row > 1 {
            entries
                .get(&Node::new(x.row - 1, x.col, x.component))
                .copied()
        } else {
            None
        };
        for c in x.component..=r {
            for a in 1..=max_a[c - 1] {
                let lab = (a, c);
                if let Some(l) = left {
                    if !label_le(l, lab) {
                        continue;
                    }
                }
                if let Some(u) = up {
                    if !label_lt(u, lab) {
                        continue;
                    }
                }
                if !allowed(a, c) {
                    continue;
                }
                entries.insert(x, lab);
                rec(boxes, pos + 1, r, max_a, allowed, entries, on_found);
                entries.remove(&x);
            }
        }
    }

    rec(
        &boxes,
        0,
        r,
        max_a,
        &mut allowed,
        &mut entries,
        &mut on_found,
    );
}

/// All semistandard tableaux of shape `la` and weight `mu`, in a
/// deterministic order (reading-order backtracking, labels ascending).
pub fn enumerate_ssts(la: &MultiPartition, mu: &MultiComposition) -> Vec<SemiStdTableau> {
    if la.size() != mu.size() || la.num_components() != mu.num_components() {
        return Vec::new();
    }
    let r = la.num_components();
    let max_a: Vec<usize> = (1..=r).map(|c| mu.rows(c)).collect();
    // remaining multiplicity per slot
    let mut remaining: Vec<Vec<usize>> = (1..=r)
        .map(|c| (1..=mu.rows(c)).map(|a| mu.part(a, c)).collect())
        .collect();
    let mut out = Vec::new();
    {
        let remaining = &mut remaining;
        let out_ref = &mut out;
        let la_ref = la;
        sst_backtrack_with_counts(la_ref, &max_a, remaining, out_ref);
    }
    out
}

// weight-constrained variant: tracks remaining counts to prune
fn sst_backtrack_with_counts(
    la: &MultiPartition,
    max_a: &[usize],
    remaining: &mut [Vec<usize>],
    out: &mut Vec<SemiStdTableau>,
) {
    let boxes = diagram(la.as_composition());
    let r = la.num_components();
    let mut entries: BTreeMap<Node, (usize, usize)> = BTreeMap::new();

    fn rec(
        la: &MultiPartition,
        boxes: &[Node],
        pos: usize,
        r: usize,
        max_a: &[usize],
        remaining: &mut [Vec<usize>],
        entries: &mut BTreeMap<Node, (usize, usize)>,
        out: &mut Vec<SemiStdTableau>,
    ) {
        if pos == boxes.len() {
            out.push(SemiStdTableau::from_entries(la.clone(), entries));
            return;
        }
        let x = boxes[pos];
        let left = if x.col > 1 {
            entries
                .get(&Node::new(x.row, x.col - 1, x.component))
                .copied()
        } else {
            None
        };
        let up = if x.row > 1 {
            entries
                .get(&Node::new(x.row - 1, x.col, x.component))
                .copied()
        } else {
            None
        };
        for c in x.component..=r {
            for a in 1..=max_a[c - 1] {
                if remaining[c - 1][a - 1] == 0 {
                    continue;
                }
                let lab = (a, c);
                if let Some(l) = left {
                    if !label_le(l, lab) {
                        continue;
                    }
                }
                if let Some(u) = up {
                    if !label_lt(u, lab) {
                        continue;
                    }
                }
                remaining[c - 1][a - 1] -= 1;
                entries.insert(x, lab);
                rec(la, boxes, pos + 1, r, max_a, remaining, entries, out);
                entries.remove(&x);
                remaining[c - 1][a - 1] += 1;
            }
        }
    }

    rec(
        la,
        &boxes,
        0,
        r,
        max_a,
        remaining,
        &mut entries,
        out,
    );
}

/// All semistandard tableaux of shape `la` with labels `(a,c)`, `a <= m_c`,
/// of any weight: a basis index set for the Weyl module at bounds `m`.
pub fn enumerate_ssts_bounded(la: &MultiPartition, m: &[usize]) -> Vec<SemiStdTableau> {
    assert_eq!(la.num_components(), m.len());
    let mut out = Vec::new();
    sst_backtrack(
        la,
        |_, _| true,
        m,
        |entries| out.push(SemiStdTableau::from_entries(la.clone(), entries)),
    );
    out
}

/// `dim W(la)` at bounds `m`: the number of semistandard tableaux of shape
/// `la` with entries bounded by `m`, summed over all weights.
pub fn weyl_dim(la: &MultiPartition, m: &[usize]) -> u64 {
    assert_eq!(la.num_components(), m.len());
    let mut count = 0u64;
    sst_backtrack(la, |_, _| true, m, |_| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combi::{
        dominance_ge, enumerate_multipartitions, gamma, node_precedes,
    };

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn std_enumeration_examples() {
        assert_eq!(enumerate_std_tableaux(&mp("[[1],[1]]")).len(), 2);
        assert_eq!(enumerate_std_tableaux(&mp("[[2],[]]")).len(), 1);
        assert_eq!(std_count(&mp("[[1],[1]]")), 2);
        // sum over shapes of n = 2, r = 2 of |Std|^2 is r^n n! = 8
        let total: u64 = enumerate_multipartitions(2, 2)
            .iter()
            .map(|la| std_count(la).pow(2))
            .sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn std_count_matches_enumeration_and_recursion() {
        for n in 0..=4 {
            for r in 1..=2 {
                for la in enumerate_multipartitions(n, r) {
                    let listed = enumerate_std_tableaux(&la);
                    assert_eq!(listed.len() as u64, std_count(&la), "shape {la}");
                    for t in &listed {
                        assert!(t.is_standard());
                    }
                    // enumeration yields pairwise distinct tableaux
                    let mut sorted = listed.clone();
                    sorted.sort();
                    sorted.dedup();
                    assert_eq!(sorted.len(), listed.len());
                }
            }
        }
    }

    #[test]
    fn dimension_identity_over_shapes() {
        // sum |Std(la)|^2 = r^n n! for n <= 5, r <= 3
        for r in 1..=3u32 {
            for n in 0..=5u32 {
                let total: u64 = enumerate_multipartitions(n as usize, r as usize)
                    .iter()
                    .map(|la| std_count(la).pow(2))
                    .sum();
                let expected = (r as u64).pow(n) * (1..=n as u64).product::<u64>().max(1);
                assert_eq!(total, expected, "n = {n}, r = {r}");
            }
        }
    }

    #[test]
    fn superstandard_and_tableau_perm() {
        let la = mp("[[2,1],[1]]");
        let t0 = superstandard(&la);
        assert!(t0.is_standard());
        assert_eq!(t0.value_at(&Node::new(1, 1, 1)), 1);
        assert_eq!(t0.value_at(&Node::new(2, 1, 1)), 3);
        assert_eq!(t0.value_at(&Node::new(1, 1, 2)), 4);
        assert!(tableau_perm(&t0).is_identity());
        // two disconnected boxes: the non-reading tableau is s_1
        let la2 = mp("[[1],[1]]");
        let ts = enumerate_std_tableaux(&la2);
        let swapped = ts
            .iter()
            .find(|t| t.value_at(&Node::new(1, 1, 1)) == 2)
            .unwrap();
        assert_eq!(tableau_perm(swapped), Perm::adjacent(2, 1));
        // d is a bijection Std(la) -> its image, with t recoverable
        for t in enumerate_std_tableaux(&la) {
            let d = tableau_perm(&t);
            let base = superstandard(&la);
            for x in diagram(la.as_composition()) {
                assert_eq!(t.value_at(&x), d.apply(base.value_at(&x)));
            }
        }
    }

    #[test]
    fn sst_examples() {
        // T_0(la, la) = {T^la}
        for n in 0..=4 {
            for la in enumerate_multipartitions(n, 2) {
                let list = enumerate_ssts(&la, la.as_composition());
                assert_eq!(list.len(), 1, "shape {la}");
                assert_eq!(list[0], canonical_sst(&la));
                assert!(list[0].is_semistandard());
                assert_eq!(list[0].weight(), *la.as_composition());
            }
        }
        // gl_3 Weyl dimension of (2,1)
        assert_eq!(weyl_dim(&mp("[[2,1]]"), &[3]), 8);
        // two free boxes at r = 2, m = (2,2)
        assert_eq!(weyl_dim(&mp("[[1],[1]]"), &[2, 2]), 8);
    }

    #[test]
    fn nonempty_sst_forces_dominance() {
        let m = [3, 3];
        for la in enumerate_multipartitions(3, 2) {
            for mu in crate::combi::enumerate_weights(3, 2, &m) {
                let ssts = enumerate_ssts(&la, &mu);
                for t in &ssts {
                    assert!(t.is_semistandard());
                    assert_eq!(t.weight(), mu);
                }
                if !ssts.is_empty() {
                    assert!(
                        dominance_ge(la.as_composition(), &mu, &m).unwrap(),
                        "T_0({la},{mu}) nonempty but not la >= mu"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_reading_of_superstandard_is_canonical() {
        for n in 0..=4 {
            for la in enumerate_multipartitions(n, 2) {
                let read = weight_reading(&superstandard(&la), la.as_composition());
                let expected = canonical_sst(&la).entries();
                assert_eq!(read, expected, "shape {la}");
            }
        }
    }

    #[test]
    fn special_sst_examples() {
        let m = [2, 2];
        let la = mp("[[1],[1]]");
        let t = special_sst(&la, &Node::new(1, 1, 1), &m).unwrap();
        assert_eq!(t.label_at(&Node::new(1, 1, 1)), (2, 2));
        assert_eq!(t.label_at(&Node::new(1, 1, 2)), (1, 2));
        assert!(special_sst(&la, &Node::new(2, 1, 1), &m).is_err());

        // T_x^la is semistandard, has weight gamma(la \ x), and stripping
        // the (m_r, r) box leaves T^{la \ x}
        for n in 1..=5 {
            let m = [n, n];
            for la in enumerate_multipartitions(n, 2) {
                for x in removable_nodes(&la) {
                    let t = special_sst(&la, &x, &m).unwrap();
                    assert!(t.is_semistandard(), "T_{x}^{la} not semistandard");
                    let smaller = remove_node(&la, &x).unwrap();
                    assert_eq!(t.weight(), gamma(smaller.as_composition(), &m));
                    let mut stripped = t.entries();
                    stripped.remove(&x);
                    let expected = canonical_sst(&smaller).entries();
                    assert_eq!(stripped, expected);
                }
            }
        }
    }

    #[test]
    fn removable_nodes_totally_ordered_for_fixed_shape() {
        for la in enumerate_multipartitions(5, 3) {
            let rem = removable_nodes(&la);
            for w in rem.windows(2) {
                assert!(node_precedes(&w[0], &w[1]));
            }
        }
    }
}
