use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};
use crate::fp::RegularRep;

/// `Cay(H, S)` on the elements of a realized group, with edges `{g, s g}`.
/// Vertex `i` is the element with coset index `i`.
pub fn cayley_graph(rep: &RegularRep, set: &[u32]) -> Result<Graph> {
    let n = rep.order();
    let mut s: Vec<u32> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.iter().any(|&x| x as usize >= n) {
        return Err(Error::Input("connection set element out of range".into()));
    }
    if s.contains(&rep.identity()) {
        return Err(Error::Input("connection set contains the identity".into()));
    }
    if s.iter().any(|&x| s.binary_search(&rep.inverse(x)).is_err()) {
        return Err(Error::Input("connection set is not closed under inverses".into()));
    }
    let left: Vec<_> = s.iter().map(|&x| rep.left_perm(x)).collect();
    let adj = (0..n as u32)
        .map(|g| left.iter().map(|l| l.image(g)).collect())
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}
