use std::fmt;

use super::SchubertError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for DynkinType {
    type Err = SchubertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(DynkinType::A),
            "D" | "d" => Ok(DynkinType::D),
            "E" | "e" => Ok(DynkinType::E),
            other => Err(SchubertError::InvalidType(other.to_string())),
        }
    }
}

/// A simply-laced Dynkin diagram with Bourbaki numbering of nodes `1..=rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    kind: DynkinType,
    rank: usize,
    edges: Vec<(usize, usize)>,
}

impl DynkinDiagram {
    pub fn new(kind: DynkinType, rank: usize) -> Result<Self, SchubertError> {
        let mut edges = Vec::new();
        match kind {
            DynkinType::A if rank >= 1 => {
                edges.extend((1..rank).map(|i| (i, i + 1)));
            }
            DynkinType::D if rank >= 4 => {
                edges.extend((1..rank - 2).map(|i| (i, i + 1)));
                edges.push((rank - 2, rank - 1));
                edges.push((rank - 2, rank));
            }
            DynkinType::E if (6..=8).contains(&rank) => {
                edges.push((1, 3));
                edges.extend((3..rank).map(|i| (i, i + 1)));
                edges.push((2, 4));
            }
            _ => return Err(SchubertError::InvalidTypeRank(kind, rank)),
        }
        edges.sort_unstable();
        Ok(DynkinDiagram { kind, rank, edges })
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `node` in increasing order.
    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == node {
                    Some(b)
                } else if b == node {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, node: usize) -> usize {
        self.neighbors(node).len()
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.degree(node) <= 1
    }

    /// The unique node of degree three, outside type A.
    pub fn trivalent(&self) -> Option<usize> {
        (1..=self.rank).find(|&v| self.degree(v) == 3)
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bourbaki_tables() {
        let a5 = DynkinDiagram::new(DynkinType::A, 5).unwrap();
        assert_eq!(a5.edges(), &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        let e6 = DynkinDiagram::new(DynkinType::E, 6).unwrap();
        assert_eq!(e6.degree(4), 3);
        assert_eq!(e6.neighbors(4), vec![2, 3, 5]);
        assert_eq!(e6.trivalent(), Some(4));
        let d5 = DynkinDiagram::new(DynkinType::D, 5).unwrap();
        assert_eq!(d5.degree(3), 3);
        assert_eq!(d5.neighbors(3), vec![2, 4, 5]);
        for (t, r) in [(DynkinType::A, 0), (DynkinType::D, 3), (DynkinType::E, 5), (DynkinType::E, 9)] {
            assert!(DynkinDiagram::new(t, r).is_err());
        }
        for (t, r) in [(DynkinType::A, 7), (DynkinType::D, 6), (DynkinType::E, 7), (DynkinType::E, 8)] {
            let g = DynkinDiagram::new(t, r).unwrap();
            // connected tree
            assert_eq!(g.edges().len(), r - 1);
        }
    }
}
