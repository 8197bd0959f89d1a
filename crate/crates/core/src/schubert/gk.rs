//! The rooted walk graph `G_k`: the Dynkin diagram with an extra root
//! vertex `p_∅` joined to the start node `k`. Vertices other than the root
//! are named `p_l` after the Dynkin node `l`; the edge entering `p_l` is
//! labeled `l`.

use super::dynkin::{DynkinDiagram, DynkinType};
use super::SchubertError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkNode {
    /// Dynkin node of the vertex; `None` for the root `p_∅`.
    pub node: Option<usize>,
    /// Reduced word, leftmost reflection first.
    pub word: Vec<usize>,
    /// Coordinate name; type A uses the Plücker subset `w·{1..k}`.
    pub name: String,
}

#[derive(Clone, Debug)]
pub struct GkGraph {
    diagram: DynkinDiagram,
    k: usize,
    x_chain: Vec<usize>,
    u: usize,
    y_arm: Vec<usize>,
    z_arm: Vec<usize>,
    nodes: Vec<GkNode>,
    edges: Vec<(usize, usize, usize)>,
}

impl GkGraph {
    pub fn build(diagram: &DynkinDiagram, k: usize) -> Result<Self, SchubertError> {
        let rank = diagram.rank();
        if k == 0 || k > rank {
            return Err(SchubertError::NodeOutOfRange { node: k, rank });
        }
        let (x_chain, u, y_arm, z_arm) = match diagram.kind() {
            DynkinType::A => {
                let y: Vec<usize> = (k + 1..=rank).collect();
                let z: Vec<usize> = (1..k).rev().collect();
                (Vec::new(), k, y, z)
            }
            _ => {
                if !diagram.is_leaf(k) {
                    return Err(SchubertError::NotExtremal(k));
                }
                let u = diagram.trivalent().ok_or(SchubertError::NoTrivalentNode)?;
                let mut chain = vec![k];
                let mut prev = 0;
                let mut cur = k;
                while cur != u {
                    let next = diagram
                        .neighbors(cur)
                        .into_iter()
                        .find(|&v| v != prev)
                        .expect("a leaf path reaches the branch node");
                    prev = cur;
                    cur = next;
                    if cur != u {
                        chain.push(cur);
                    }
                }
                let last = *chain.last().expect("k is on the chain");
                let open: Vec<usize> = diagram.neighbors(u).into_iter().filter(|&v| v != last).collect();
                // neighbors come sorted: the smaller label starts the y-arm
                let y = walk_arm(diagram, u, open[0]);
                let z = walk_arm(diagram, u, open[1]);
                (chain, u, y, z)
            }
        };

        let mut g = GkGraph {
            diagram: diagram.clone(),
            k,
            x_chain,
            u,
            y_arm,
            z_arm,
            nodes: Vec::new(),
            edges: Vec::new(),
        };
        g.check_constraint()?;
        g.fill_nodes();
        Ok(g)
    }

    fn check_constraint(&self) -> Result<(), SchubertError> {
        let (c, d, t) = (self.c(), self.d(), self.t());
        // type A tolerates an empty arm at the ends of the chain
        let arms_ok = self.diagram.kind() == DynkinType::A || (d >= 1 && t >= 1);
        // 1/(c-1) + 1/(d+1) + 1/(t+1) >= 1, cleared of denominators
        let (p, q, r) = (c - 1, d + 1, t + 1);
        if !arms_ok || q * r + p * r + p * q < p * q * r {
            return Err(SchubertError::ShapeConstraint { c, d, t });
        }
        Ok(())
    }

    fn push_node(&mut self, word: Vec<usize>, node: Option<usize>, parent: Option<usize>) -> usize {
        let name = self.coordinate_name(node, &word);
        let idx = self.nodes.len();
        self.nodes.push(GkNode { node, word, name });
        if let (Some(p), Some(l)) = (parent, node) {
            self.edges.push((p, idx, l));
        }
        idx
    }

    fn fill_nodes(&mut self) {
        let mut parent = self.push_node(Vec::new(), None, None);
        let mut word: Vec<usize> = Vec::new();
        let spine: Vec<usize> = self.x_chain.iter().copied().chain([self.u]).collect();
        for x in spine {
            word.insert(0, x);
            parent = self.push_node(word.clone(), Some(x), Some(parent));
        }
        let hub = parent;
        for arm in [self.y_arm.clone(), self.z_arm.clone()] {
            let mut parent = hub;
            let mut w = word.clone();
            for l in arm {
                w.insert(0, l);
                parent = self.push_node(w.clone(), Some(l), Some(parent));
            }
        }
    }

    fn coordinate_name(&self, node: Option<usize>, word: &[usize]) -> String {
        if self.diagram.kind() == DynkinType::A {
            let n = self.diagram.rank() + 1;
            let mut set: Vec<usize> = (1..=self.k).collect();
            for &s in word.iter().rev() {
                for e in set.iter_mut() {
                    if *e == s {
                        *e = s + 1;
                    } else if *e == s + 1 {
                        *e = s;
                    }
                }
            }
            set.sort_unstable();
            return crate::poly::indexed_name("p", &set, n);
        }
        match node {
            None => "p_∅".to_string(),
            Some(l) => format!("p_{l}"),
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `[x_{c-2}, …, x_1]`, starting at `k`.
    pub fn x_chain(&self) -> &[usize] {
        &self.x_chain
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn y_arm(&self) -> &[usize] {
        &self.y_arm
    }

    pub fn z_arm(&self) -> &[usize] {
        &self.z_arm
    }

    pub fn c(&self) -> usize {
        self.x_chain.len() + 2
    }

    pub fn d(&self) -> usize {
        self.y_arm.len()
    }

    pub fn t(&self) -> usize {
        self.z_arm.len()
    }

    /// Root first, then the spine, then the y-arm, then the z-arm.
    pub fn nodes(&self) -> &[GkNode] {
        &self.nodes
    }

    /// `(parent, child, label)` as indices into [`GkGraph::nodes`].
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn node_of(&self, dynkin_node: usize) -> Option<&GkNode> {
        self.nodes.iter().find(|n| n.node == Some(dynkin_node))
    }
}

fn walk_arm(diagram: &DynkinDiagram, from: usize, start: usize) -> Vec<usize> {
    let mut arm = vec![start];
    let mut prev = from;
    let mut cur = start;
    while let Some(next) = diagram.neighbors(cur).into_iter().find(|&v| v != prev) {
        arm.push(next);
        prev = cur;
        cur = next;
    }
    arm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gk(t: DynkinType, r: usize, k: usize) -> Result<GkGraph, SchubertError> {
        GkGraph::build(&DynkinDiagram::new(t, r).unwrap(), k)
    }

    #[test]
    fn e6_from_six() {
        let g = gk(DynkinType::E, 6, 6).unwrap();
        assert_eq!(g.x_chain(), &[6, 5]);
        assert_eq!((g.u(), g.y_arm(), g.z_arm()), (4, &[2][..], &[3, 1][..]));
        assert_eq!((g.c(), g.d(), g.t()), (4, 1, 2));
        assert_eq!(g.nodes().len(), 7);
        assert_eq!(g.edges().len(), 6);
        assert_eq!(g.node_of(5).unwrap().word, vec![5, 6]);
        assert_eq!(g.node_of(2).unwrap().word, vec![2, 4, 5, 6]);
        assert_eq!(g.node_of(1).unwrap().word, vec![1, 3, 4, 5, 6]);
    }

    #[test]
    fn leaves_of_e7_and_e8() {
        let g = gk(DynkinType::E, 7, 7).unwrap();
        assert_eq!((g.x_chain(), g.y_arm(), g.z_arm()), (&[7, 6, 5][..], &[2][..], &[3, 1][..]));
        let g = gk(DynkinType::E, 7, 2).unwrap();
        assert_eq!((g.c(), g.d(), g.t()), (3, 2, 3));
        let g = gk(DynkinType::E, 8, 1).unwrap();
        assert_eq!((g.c(), g.d(), g.t()), (4, 1, 4));
        assert!(matches!(gk(DynkinType::E, 6, 4), Err(SchubertError::NotExtremal(4))));
    }

    #[test]
    fn spin_node_of_d() {
        for n in 4..=9 {
            let g = gk(DynkinType::D, n, n).unwrap();
            assert_eq!(g.c(), 3);
            assert_eq!((g.d(), g.t()), (n - 3, 1));
            assert_eq!(g.nodes().len(), n + 1);
        }
        let g = gk(DynkinType::D, 6, 1).unwrap();
        assert_eq!((g.c(), g.d(), g.t()), (5, 1, 1));
    }

    #[test]
    fn type_a_coordinates() {
        let g = gk(DynkinType::A, 5, 2).unwrap();
        let names: Vec<&str> = g.nodes().iter().map(|n| n.name.as_str()).collect();
        assert_eq!(names, ["p_12", "p_13", "p_14", "p_15", "p_16", "p_23"]);
        assert_eq!(g.y_arm(), &[3, 4, 5]);
        assert_eq!(g.z_arm(), &[1]);
        let g = gk(DynkinType::A, 4, 1).unwrap();
        assert_eq!(g.t(), 0);
        assert!(gk(DynkinType::A, 4, 5).is_err());
    }

    #[test]
    fn words_are_nested() {
        for (t, r, k) in [(DynkinType::E, 7, 7), (DynkinType::D, 7, 7), (DynkinType::A, 6, 3)] {
            let g = gk(t, r, k).unwrap();
            for &(p, c, l) in g.edges() {
                let (pw, cw) = (&g.nodes()[p].word, &g.nodes()[c].word);
                assert_eq!(cw[0], l);
                assert_eq!(&cw[1..], &pw[..]);
            }
        }
    }
}
