use crate::multigraph::component_labels;
use crate::tile::Tile;

use super::{cycles, linking_power, split_parts, weakly_link, ReduceError, WeakLinkResult};

/// A cycle `b, π(b), π²(b), ...` of the permutation of first-copy pieces,
/// started at its smallest piece `b`, and the tile
/// `S = T'_b T'_π(b) ... T'_π^(ℓ-1)(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceCycle {
    pub pieces: Vec<usize>,
    pub tile: Tile,
}

impl PieceCycle {
    pub fn length(&self) -> usize {
        self.pieces.len()
    }
}

/// Structure of `cyc(T^n)`: for every `n`, it is the disjoint union over
/// the cycles of `gcd(n, ℓ)` copies of `cyc(S^(n / gcd(n, ℓ)))`, and
/// `c(T) = (c(T_1) + ... + c(T_r)) / m` over the components `T_i` of
/// `T_0^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub weak: WeakLinkResult,
    /// Linking power: `T_0^m` is linked.
    pub m: usize,
    /// Connected components of `T_0^m`, ordered by smallest vertex.
    pub subtiles: Vec<Tile>,
    /// Intersections of the components of `T_0^m` with its first copy of
    /// `T_0`, ordered by smallest vertex. A piece need not be connected.
    pub pieces: Vec<Tile>,
    /// `piece_permutation[i] = j`: the part of the component through piece
    /// `i` lying in the next copy is a translate of piece `j`. Pieces whose
    /// component stays in one copy map to themselves.
    pub piece_permutation: Vec<usize>,
    pub cycles: Vec<PieceCycle>,
}

pub fn limit_decomposition(t: &Tile) -> Result<Decomposition, ReduceError> {
    let weak = weakly_link(t)?;
    let m = linking_power(&weak);
    let t0 = &weak.tile;
    let power = t0.power(m).expect("m >= 1");
    let subtiles: Vec<Tile> = split_parts(&power).into_iter().map(|p| p.tile).collect();

    // Components of T_0^m coincide with those of cyc(T_0^m) because T_0^m is
    // linked, and rotating cyc by one copy maps components to components.
    let nv = t0.graph().vertex_count();
    let label = component_labels(power.graph());
    let mut piece_of_label = vec![usize::MAX; label.iter().map(|&l| l + 1).max().unwrap_or(0)];
    let mut piece_vertices: Vec<Vec<usize>> = Vec::new();
    for v in 0..nv {
        let l = label[v];
        if piece_of_label[l] == usize::MAX {
            piece_of_label[l] = piece_vertices.len();
            piece_vertices.push(Vec::new());
        }
        piece_vertices[piece_of_label[l]].push(v);
    }
    let piece_of = |v: usize| piece_of_label[label[v]];
    let piece_permutation: Vec<usize> = piece_vertices
        .iter()
        .enumerate()
        .map(|(i, vs)| {
            if m == 1 {
                return i;
            }
            let l = label[vs[0]];
            match (nv..2 * nv).find(|&w| label[w] == l) {
                Some(w) => piece_of(w - nv),
                None => i,
            }
        })
        .collect();

    let pieces: Vec<Tile> = piece_vertices
        .iter()
        .enumerate()
        .map(|(i, vs)| {
            let (g, _) = t0.graph().induced(vs);
            let local = |x: usize| vs.binary_search(&x).expect("member");
            let pick = |seq: &[usize]| -> Vec<usize> {
                seq.iter()
                    .filter(|&&x| piece_of(x) == i)
                    .map(|&x| local(x))
                    .collect()
            };
            Tile::new(g, pick(t0.a()), pick(t0.b()))
                .expect("pieces of a weakly linked tile are tiles")
        })
        .collect();

    let cycles = cycles(&piece_permutation)
        .into_iter()
        .map(|members| {
            let tile = members[1..]
                .iter()
                .fold(pieces[members[0]].clone(), |acc, &p| {
                    acc.compose(&pieces[p])
                        .expect("consecutive pieces have matching widths")
                });
            PieceCycle {
                pieces: members,
                tile,
            }
        })
        .collect();

    Ok(Decomposition {
        weak,
        m,
        subtiles,
        pieces,
        piece_permutation,
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::MultiGraph;

    fn tile(n: usize, edges: &[(usize, usize)], a: &[usize], b: &[usize]) -> Tile {
        Tile::new(
            MultiGraph::from_edges(n, edges.iter().copied()).unwrap(),
            a.to_vec(),
            b.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn connected_linked_tile_is_its_own_decomposition() {
        let t = tile(3, &[(0, 1), (1, 2)], &[0, 1, 2], &[0, 1, 2]);
        let d = limit_decomposition(&t).unwrap();
        assert_eq!(d.m, 1);
        assert_eq!(d.subtiles, vec![t.clone()]);
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.cycles[0].tile, t);
    }

    #[test]
    fn swap_tile_has_one_two_cycle() {
        let t = tile(2, &[], &[0, 1], &[1, 0]);
        let d = limit_decomposition(&t).unwrap();
        assert_eq!(d.m, 2);
        assert_eq!(d.subtiles.len(), 2);
        assert_eq!(d.piece_permutation, vec![1, 0]);
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.cycles[0].length(), 2);
    }

    #[test]
    fn independent_halves() {
        let t = tile(4, &[(0, 1), (2, 3)], &[0, 2], &[1, 3]);
        let d = limit_decomposition(&t).unwrap();
        assert_eq!((d.m, d.subtiles.len(), d.cycles.len()), (1, 2, 2));
    }
}
