//! Diagram nodes, the order on them, and removable/addable node calculus.

use std::fmt;

use serde::ser::SerializeTuple;
use serde::{Deserialize, Serialize, Serializer};

use super::partition::MultiPartition;
use super::CombiError;

/// A box `(i, j, k)` of a multipartition diagram: row `i`, column `j`,
/// component `k`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub component: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, component: usize) -> Self {
        assert!(row >= 1 && col >= 1 && component >= 1, "nodes are 1-based");
        Node {
            row,
            col,
            component,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.component)
    }
}

// JSON mirror: the triple [i, j, k].
impl Serialize for Node {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(3)?;
        t.serialize_element(&self.row)?;
        t.serialize_element(&self.col)?;
        t.serialize_element(&self.component)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (row, col, component) = <(usize, usize, usize)>::deserialize(deserializer)?;
        Ok(Node {
            row,
            col,
            component,
        })
    }
}

/// The strict order `x > y`: earlier component, or same component and
/// earlier row. Column plays no role, so this is a partial order on nodes
/// but restricts to a total order on the removable (or addable) nodes of a
/// fixed shape.
pub fn node_precedes(x: &Node, y: &Node) -> bool {
    x.component < y.component || (x.component == y.component && x.row < y.row)
}

/// All boxes of the diagram, components then rows then columns ascending
/// (reading order).
pub fn diagram(mu: &super::partition::MultiComposition) -> Vec<Node> {
    let mut out = Vec::with_capacity(mu.size());
    for (k, comp) in mu.components().iter().enumerate() {
        for (i, &len) in comp.iter().enumerate() {
            for j in 1..=len {
                out.push(Node::new(i + 1, j, k + 1));
            }
        }
    }
    out
}

/// Removable nodes of a multipartition, largest first in the node order.
pub fn removable_nodes(la: &MultiPartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (k, comp) in la.components().iter().enumerate() {
        for (i, &len) in comp.iter().enumerate() {
            if len > 0 && comp.get(i + 1).copied().unwrap_or(0) < len {
                out.push(Node::new(i + 1, len, k + 1));
            }
        }
    }
    out
}

/// Addable nodes within row bounds `m`, largest first in the node order.
pub fn addable_nodes(la: &MultiPartition, m: &[usize]) -> Vec<Node> {
    assert_eq!(la.num_components(), m.len(), "bounds length must equal r");
    addable_impl(la, Some(m))
}

/// Addable nodes with unbounded rows (the Hecke/Fock side, which carries no
/// weight-bound parameter).
pub fn addable_nodes_unbounded(la: &MultiPartition) -> Vec<Node> {
    addable_impl(la, None)
}

fn addable_impl(la: &MultiPartition, m: Option<&[usize]>) -> Vec<Node> {
    let mut out = Vec::new();
    for (k, comp) in la.components().iter().enumerate() {
        let limit = m.map(|m| m[k]).unwrap_or(usize::MAX);
        for i in 1..=comp.len() + 1 {
            if i > limit {
                break;
            }
            let cur = comp.get(i - 1).copied().unwrap_or(0);
            let above = if i == 1 {
                usize::MAX
            } else {
                comp.get(i - 2).copied().unwrap_or(0)
            };
            if above > cur {
                out.push(Node::new(i, cur + 1, k + 1));
            }
        }
    }
    out
}

/// `la \ x`; rejects non-removable nodes.
pub fn remove_node(la: &MultiPartition, x: &Node) -> Result<MultiPartition, CombiError> {
    if !removable_nodes(la).contains(x) {
        return Err(CombiError::NotRemovable(*x));
    }
    let mut comps: Vec<Vec<usize>> = la.components().to_vec();
    comps[x.component - 1][x.row - 1] -= 1;
    Ok(MultiPartition::new(comps))
}

/// `la U x`; rejects non-addable nodes (row bounds unchecked here).
pub fn add_node(la: &MultiPartition, x: &Node) -> Result<MultiPartition, CombiError> {
    if !addable_nodes_unbounded(la).contains(x) {
        return Err(CombiError::NotAddable(*x));
    }
    let mut comps: Vec<Vec<usize>> = la.components().to_vec();
    let comp = &mut comps[x.component - 1];
    if comp.len() < x.row {
        comp.resize(x.row, 0);
    }
    comp[x.row - 1] += 1;
    Ok(MultiPartition::new(comps))
}
