use super::{MultiGraph, VertexId};

/// Component index of every vertex. Components are numbered in order of
/// their smallest vertex.
pub fn component_labels(g: &MultiGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &(_, w) in &inc[v] {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn components(g: &MultiGraph) -> Vec<Vec<VertexId>> {
    let label = component_labels(g);
    let count = label.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        blocks[l].push(v);
    }
    blocks
}

/// At most one component. The empty graph counts as connected.
pub fn is_connected(g: &MultiGraph) -> bool {
    components(g).len() <= 1
}
