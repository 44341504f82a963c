use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphDescriptor, PolarityGraph};

/// A claimed induced triangle-free, absolute-point-free vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub graph: GraphDescriptor,
    pub vertices: Vec<u32>,
    pub size: usize,
    pub generator: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<String>,
}

impl Certificate {
    /// Sorts and deduplicates `vertices`.
    pub fn new(graph: &PolarityGraph, mut vertices: Vec<u32>, generator: &str, seed: u64) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Certificate {
            graph: graph.descriptor().clone(),
            size: vertices.len(),
            vertices,
            generator: generator.to_owned(),
            seed,
            manifest: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Checks sortedness, uniqueness, the claimed size, and id range.
    pub fn check_well_formed(&self, n: usize) -> Result<()> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v as usize >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedCertificate(
                "vertex list must be strictly increasing".into(),
            ));
        }
        if self.size != self.vertices.len() {
            return Err(Error::MalformedCertificate(format!(
                "claims size {} but lists {} vertices",
                self.size,
                self.vertices.len()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    AbsolutePoint { vertex: u32 },
    Triangle { triple: [u32; 3] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AbsolutePoint { vertex } => {
                write!(f, "vertex {vertex} is an absolute point")
            }
            Violation::Triangle { triple } => write!(f, "vertices {triple:?} form a triangle"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted { size: usize },
    Rejected(Violation),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

/// Checks a vertex set against the raw adjacency of `g`: no absolute point
/// and no triangle inside the set. Returns the lexicographically first
/// offending triple on rejection.
pub fn verify_vertex_set(g: &PolarityGraph, vertices: &[u32]) -> Result<Verdict> {
    let n = g.num_vertices();
    let mut inside = vec![false; n];
    for &v in vertices {
        if v as usize >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v as usize] = true;
    }
    let mut members: Vec<u32> = vertices.to_vec();
    members.sort_unstable();
    members.dedup();

    if let Some(&v) = members.iter().find(|&&v| g.is_absolute(v)) {
        return Ok(Verdict::Rejected(Violation::AbsolutePoint { vertex: v }));
    }
    let adj = g.graph();
    for &a in &members {
        for &b in adj
            .neighbors(a)
            .iter()
            .filter(|&&b| b > a && inside[b as usize])
        {
            for &c in adj
                .neighbors(b)
                .iter()
                .filter(|&&c| c > b && inside[c as usize])
            {
                if adj.neighbors(c).contains(&a) {
                    return Ok(Verdict::Rejected(Violation::Triangle { triple: [a, b, c] }));
                }
            }
        }
    }
    Ok(Verdict::Accepted {
        size: members.len(),
    })
}

/// Full certificate check: descriptor match, well-formedness, then the set.
pub fn verify_certificate(g: &PolarityGraph, cert: &Certificate) -> Result<Verdict> {
    if &cert.graph != g.descriptor() {
        return Err(Error::DescriptorMismatch {
            expected: g.descriptor().to_string(),
            found: cert.graph.to_string(),
        });
    }
    cert.check_well_formed(g.num_vertices())?;
    verify_vertex_set(g, &cert.vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::parsons_partition;

    #[test]
    fn parsons_rest_set_for_er5() {
        let g = PolarityGraph::er(5).unwrap();
        let rest = parsons_partition(&g).rest;
        assert_eq!(rest.len(), 10);
        let cert = Certificate::new(&g, rest.clone(), "test", 0);
        assert_eq!(
            verify_certificate(&g, &cert).unwrap(),
            Verdict::Accepted { size: 10 }
        );

        // one extra vertex closing a triangle with two members
        let extra = (0..31u32)
            .filter(|v| !rest.contains(v) && !g.is_absolute(*v))
            .find(|&v| {
                let inner: Vec<u32> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|u| rest.contains(u))
                    .collect();
                inner
                    .iter()
                    .any(|&a| inner.iter().any(|&b| g.graph().has_edge(a, b)))
            })
            .unwrap();
        let mut bad = rest;
        bad.push(extra);
        match verify_vertex_set(&g, &bad).unwrap() {
            Verdict::Rejected(Violation::Triangle { triple }) => assert!(triple.contains(&extra)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn absolute_point_rejected() {
        let g = PolarityGraph::er(3).unwrap();
        let a = g.absolute_points()[1];
        assert_eq!(
            verify_vertex_set(&g, &[a]).unwrap(),
            Verdict::Rejected(Violation::AbsolutePoint { vertex: a })
        );
        assert!(matches!(
            verify_vertex_set(&g, &[13]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn malformed_and_mismatched() {
        let g3 = PolarityGraph::er(3).unwrap();
        let g5 = PolarityGraph::er(5).unwrap();
        let mut cert = Certificate::new(&g3, vec![5, 6], "test", 0);
        assert!(matches!(
            verify_certificate(&g5, &cert),
            Err(Error::DescriptorMismatch { .. })
        ));
        cert.size = 3;
        assert!(matches!(
            verify_certificate(&g3, &cert),
            Err(Error::MalformedCertificate(_))
        ));
        cert.size = 2;
        cert.vertices = vec![6, 5];
        assert!(matches!(
            verify_certificate(&g3, &cert),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn json_schema_fields() {
        let g = PolarityGraph::er(3).unwrap();
        let cert = Certificate::new(&g, vec![7, 5], "exact", 9);
        let v: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(v["construction"], "ER");
        assert_eq!(v["q"], 3);
        assert_eq!(v["modulus"], serde_json::json!([0, 1]));
        assert_eq!(v["polarity"], "orthogonal");
        assert_eq!(v["vertices"], serde_json::json!([5, 7]));
        assert_eq!(v["size"], 2);
        assert_eq!(v["generator"], "exact");
        assert_eq!(v["seed"], 9);
        assert_eq!(Certificate::from_json(&cert.to_json()).unwrap(), cert);
    }
}
