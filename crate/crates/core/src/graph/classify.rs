use super::PlanarEmbedding;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Tree,
    MaximalOuterplanar,
    Planar3Tree,
    Triangulation,
    PlanarOther,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::MaximalOuterplanar => "maximal_outerplanar",
            GraphClass::Planar3Tree => "planar_3tree",
            GraphClass::Triangulation => "triangulation",
            GraphClass::PlanarOther => "planar_other",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Checked in order: tree, planar 3-tree, maximal outerplanar,
/// triangulation, other.
pub fn classify(emb: &PlanarEmbedding) -> GraphClass {
    let n = emb.n();
    if n >= 1 && emb.num_edges() == n - 1 && emb.is_connected() {
        return GraphClass::Tree;
    }
    if is_planar_3tree(emb) {
        return GraphClass::Planar3Tree;
    }
    if is_maximal_outerplanar(emb) {
        return GraphClass::MaximalOuterplanar;
    }
    if emb.is_triangulation() {
        return GraphClass::Triangulation;
    }
    GraphClass::PlanarOther
}

/// Peels degree-3 vertices off a triangulation until K4 remains.
pub fn is_planar_3tree(emb: &PlanarEmbedding) -> bool {
    let n = emb.n();
    if n < 4 || !emb.is_triangulation() {
        return false;
    }
    let mut adj: Vec<BTreeSet<usize>> = emb
        .rotations()
        .iter()
        .map(|r| r.iter().copied().collect())
        .collect();
    let mut alive = n;
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    while alive > 4 {
        let Some(v) = ready.pop_first() else {
            return false;
        };
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let triangle = adj[nb[0]].contains(&nb[1])
            && adj[nb[1]].contains(&nb[2])
            && adj[nb[0]].contains(&nb[2]);
        if !triangle {
            return false;
        }
        adj[v].clear();
        alive -= 1;
        for &u in &nb {
            adj[u].remove(&v);
            if adj[u].len() == 3 {
                ready.insert(u);
            } else {
                ready.remove(&u);
            }
        }
    }
    true
}

fn is_maximal_outerplanar(emb: &PlanarEmbedding) -> bool {
    let n = emb.n();
    if n < 3 || emb.num_edges() != 2 * n - 3 || !emb.is_connected() {
        return false;
    }
    let faces = emb.faces();
    let big: Vec<&Vec<usize>> = faces.faces.iter().filter(|f| f.len() != 3).collect();
    let covers_all = |f: &Vec<usize>| {
        let s: BTreeSet<usize> = f.iter().copied().collect();
        f.len() == n && s.len() == n
    };
    match big.as_slice() {
        [] => n == 3,
        [f] => covers_all(f),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> PlanarEmbedding {
        let rot = (0..n)
            .map(|i| {
                let mut r = Vec::new();
                if i > 0 {
                    r.push(i - 1);
                }
                if i + 1 < n {
                    r.push(i + 1);
                }
                r
            })
            .collect();
        PlanarEmbedding::new(rot).unwrap()
    }

    fn octahedron() -> PlanarEmbedding {
        // Outer triangle 0 1 2, inner triangle 3 4 5 with 3 near edge 01,
        // 4 near 12, 5 near 20.
        PlanarEmbedding::new(vec![
            vec![1, 3, 5, 2],
            vec![2, 4, 3, 0],
            vec![0, 5, 4, 1],
            vec![0, 1, 4, 5],
            vec![1, 2, 5, 3],
            vec![2, 0, 3, 4],
        ])
        .unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(classify(&path(5)), GraphClass::Tree);
        assert_eq!(classify(&path(1)), GraphClass::Tree);
        assert_eq!(
            classify(&crate::graph::tests::k4()),
            GraphClass::Planar3Tree
        );
        let tri = PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(classify(&tri), GraphClass::MaximalOuterplanar);
        let oct = octahedron();
        assert!(oct.is_triangulation());
        assert_eq!(classify(&oct), GraphClass::Triangulation);
        let c6 =
            PlanarEmbedding::new((0..6).map(|i| vec![(i + 1) % 6, (i + 5) % 6]).collect()).unwrap();
        assert_eq!(classify(&c6), GraphClass::PlanarOther);
    }

    #[test]
    fn generated_3trees_classify() {
        for n in [4, 5, 17, 60, 200] {
            for seed in 0..20 {
                let (e, _) = crate::graph::generate_planar3tree(n, seed).unwrap();
                assert_eq!(classify(&e), GraphClass::Planar3Tree, "n={n} seed={seed}");
            }
        }
    }
}
