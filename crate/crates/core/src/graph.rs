//! Simple graphs, polarity graphs, and the looped view G°.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::plane::IncidencePlane;
use crate::polarity::{square_order, Polarity, PolarityKind};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
}

impl SimpleGraph {
    /// Builds from an edge list. Self-loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    /// Takes adjacency lists as given after sorting; caller ensures symmetry.
    pub fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges().all(|(u, v)| self.has_edge(v, u))
            && self
                .adj
                .iter()
                .enumerate()
                .all(|(u, list)| list.iter().all(|&v| self.has_edge(v, u as u32)))
    }

    /// Degree → number of vertices with that degree.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for list in &self.adj {
            *profile.entry(list.len()).or_default() += 1;
        }
        profile
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    #[serde(rename = "ER")]
    Er,
    #[serde(rename = "U")]
    Unitary,
    #[serde(rename = "custom")]
    Custom,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Er => "ER",
            Construction::Unitary => "U",
            Construction::Custom => "custom",
        })
    }
}

/// Identifies a polarity graph well enough to rebuild it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub construction: Construction,
    pub q: u32,
    pub modulus: Vec<u32>,
    pub polarity: PolarityKind,
}

impl fmt::Display for GraphDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{} ({} polarity",
            self.construction, self.q, self.polarity
        )?;
        if !self.modulus.is_empty() {
            write!(f, ", modulus {:?}", self.modulus)?;
        }
        f.write_str(")")
    }
}

/// The polarity graph G(Π,θ): points of Π, with `p ~ p'` iff `p I θ(p')`.
#[derive(Clone, Debug)]
pub struct PolarityGraph {
    graph: SimpleGraph,
    absolute: Vec<bool>,
    descriptor: GraphDescriptor,
    plane: IncidencePlane,
    polarity: Polarity,
}

impl PolarityGraph {
    /// Builds G(Π,θ) after validating θ against Π.
    pub fn new(plane: IncidencePlane, polarity: Polarity) -> Result<Self> {
        let report = polarity.validate(&plane);
        if !report.passed() {
            return Err(Error::InvalidPolarity(report));
        }
        let n = plane.num_points();
        let mut adj = Vec::with_capacity(n);
        let mut absolute = Vec::with_capacity(n);
        for p in 0..n as u32 {
            let mut nbrs: Vec<u32> = plane
                .lines_through(p)
                .iter()
                .map(|&l| polarity.point_of(l))
                .filter(|&u| u != p)
                .collect();
            nbrs.sort_unstable();
            adj.push(nbrs);
            absolute.push(plane.incident(p, polarity.line_of(p)));
        }
        let construction = match (polarity.kind(), plane.coords().is_some()) {
            (PolarityKind::Orthogonal, true) => Construction::Er,
            (PolarityKind::Unitary, true) => Construction::Unitary,
            _ => Construction::Custom,
        };
        let modulus = match construction {
            Construction::Custom => Vec::new(),
            _ => plane
                .coords()
                .map(|c| c.field().modulus().to_vec())
                .unwrap_or_default(),
        };
        let descriptor = GraphDescriptor {
            construction,
            q: plane.order(),
            modulus,
            polarity: polarity.kind(),
        };
        Ok(PolarityGraph {
            graph: SimpleGraph { adj },
            absolute,
            descriptor,
            plane,
            polarity,
        })
    }

    /// ER_q: PG(2,q) with the orthogonal polarity.
    pub fn er(q: u32) -> Result<Self> {
        Self::er_over(&Field::of_order(q)?)
    }

    pub fn er_over(field: &Field) -> Result<Self> {
        let plane = IncidencePlane::pg2(field)?;
        let theta = Polarity::orthogonal(&plane)?;
        PolarityGraph::new(plane, theta)
    }

    /// U_q for square prime powers q.
    pub fn unitary(q: u32) -> Result<Self> {
        let (p, k) = square_order(q)?;
        Self::unitary_over(&Field::new(p, k)?)
    }

    pub fn unitary_over(field: &Field) -> Result<Self> {
        let plane = IncidencePlane::pg2(field)?;
        let theta = Polarity::unitary(&plane)?;
        PolarityGraph::new(plane, theta)
    }

    /// Rebuilds the graph named by a descriptor (not for custom planes).
    pub fn from_descriptor(d: &GraphDescriptor) -> Result<Self> {
        let (p, k) = crate::gf::prime_power(d.q).ok_or(Error::NotPrimePower(d.q))?;
        let field = Field::with_modulus(p, k, &d.modulus)?;
        match d.construction {
            Construction::Er => Self::er_over(&field),
            Construction::Unitary => Self::unitary_over(&field),
            Construction::Custom => Err(Error::MissingCoordinates),
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn order(&self) -> u32 {
        self.descriptor.q
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        self.graph.neighbors(v)
    }

    pub fn is_absolute(&self, v: u32) -> bool {
        self.absolute[v as usize]
    }

    pub fn absolute_flags(&self) -> &[bool] {
        &self.absolute
    }

    pub fn absolute_points(&self) -> Vec<u32> {
        (0..self.absolute.len() as u32)
            .filter(|&v| self.absolute[v as usize])
            .collect()
    }

    pub fn descriptor(&self) -> &GraphDescriptor {
        &self.descriptor
    }

    pub fn plane(&self) -> &IncidencePlane {
        &self.plane
    }

    pub fn polarity(&self) -> &Polarity {
        &self.polarity
    }

    /// G°(Π,θ): one loop at each absolute point.
    pub fn looped(&self) -> LoopedView<'_> {
        LoopedView::new(&self.graph, &self.absolute)
    }
}

/// A simple graph with loops overlaid at flagged vertices. Each loop adds
/// one to the degree and one on the adjacency diagonal.
#[derive(Clone, Copy, Debug)]
pub struct LoopedView<'a> {
    graph: &'a SimpleGraph,
    loops: &'a [bool],
}

impl<'a> LoopedView<'a> {
    pub fn new(graph: &'a SimpleGraph, loops: &'a [bool]) -> Self {
        assert_eq!(graph.num_vertices(), loops.len());
        LoopedView { graph, loops }
    }

    pub fn graph(&self) -> &'a SimpleGraph {
        self.graph
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn has_loop(&self, v: u32) -> bool {
        self.loops[v as usize]
    }

    pub fn num_loops(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.graph.degree(v) + usize::from(self.loops[v as usize])
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let n = self.num_vertices() as u32;
        let d = if n == 0 { 0 } else { self.degree(0) };
        (0..n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Row-major dense adjacency matrix with the loops on the diagonal.
    pub fn dense_matrix(&self) -> Vec<f64> {
        let n = self.num_vertices();
        let mut m = vec![0.0; n * n];
        for (u, v) in self.graph.edges() {
            m[u as usize * n + v as usize] = 1.0;
            m[v as usize * n + u as usize] = 1.0;
        }
        for (v, &l) in self.loops.iter().enumerate() {
            if l {
                m[v * n + v] = 1.0;
            }
        }
        m
    }
}
