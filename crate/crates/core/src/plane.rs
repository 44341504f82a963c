//! Projective planes as explicit point–line incidence structures.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Largest plane order accepted by [`IncidencePlane::pg2`].
pub const MAX_PLANE_ORDER: u32 = 32;

pub fn plane_size(q: u32) -> usize {
    let q = q as usize;
    q * q + q + 1
}

/// A point of PG(2,q) in canonical form: the leftmost nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    pub coords: [Fe; 3],
    pub id: u32,
}

/// Scales `raw` so its leftmost nonzero coordinate is 1.
pub fn normalize(field: &Field, raw: [Fe; 3]) -> Result<[Fe; 3]> {
    let lead = raw
        .iter()
        .copied()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroTriple)?;
    let s = field.inv(lead)?;
    Ok(raw.map(|c| field.mul(s, c)))
}

/// Coordinates of the points (and, with the same labels, the lines) of PG(2,q).
#[derive(Clone, Debug)]
pub struct PlaneCoords {
    field: Field,
    points: Vec<[Fe; 3]>,
    // dense q^3 lookup from a normalized triple to its id
    index: Vec<u32>,
}

impl PlaneCoords {
    fn new(field: Field) -> Self {
        let q = field.order();
        let mut points = Vec::with_capacity(plane_size(q));
        // leftmost-nonzero-is-one triples come out in lexicographic code order
        for a in field.elements() {
            points.push([Fe::ZERO, Fe::ONE, a]);
        }
        for a in field.elements() {
            for b in field.elements() {
                points.push([Fe::ONE, a, b]);
            }
        }
        points.insert(0, [Fe::ZERO, Fe::ZERO, Fe::ONE]);
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));

        let qs = q as usize;
        let mut index = vec![u32::MAX; qs * qs * qs];
        for (id, p) in points.iter().enumerate() {
            index[Self::slot(qs, p)] = id as u32;
        }
        PlaneCoords {
            field,
            points,
            index,
        }
    }

    fn slot(q: usize, p: &[Fe; 3]) -> usize {
        (p[0].0 as usize * q + p[1].0 as usize) * q + p[2].0 as usize
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coordinates of point (or line) `id`.
    pub fn coords(&self, id: u32) -> [Fe; 3] {
        self.points[id as usize]
    }

    /// Normalizes `raw` and looks up its id.
    pub fn locate(&self, raw: [Fe; 3]) -> Result<ProjPoint> {
        let coords = normalize(&self.field, raw)?;
        let id = self.index[Self::slot(self.field.order() as usize, &coords)];
        Ok(ProjPoint { coords, id })
    }

    pub fn points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        self.points
            .iter()
            .enumerate()
            .map(|(id, &coords)| ProjPoint {
                coords,
                id: id as u32,
            })
    }
}

#[derive(Clone, Debug)]
pub struct IncidencePlane {
    order: u32,
    n_points: usize,
    lines: Vec<Vec<u32>>,
    point_lines: Vec<Vec<u32>>,
    coords: Option<PlaneCoords>,
}

impl IncidencePlane {
    /// PG(2,q) over `field`. Line `[a0,a1,a2]` carries the same id as the
    /// point `(a0,a1,a2)` and contains the points `x` with `a·x = 0`.
    pub fn pg2(field: &Field) -> Result<Self> {
        let q = field.order();
        if !(2..=MAX_PLANE_ORDER).contains(&q) {
            return Err(Error::UnsupportedOrder(q));
        }
        let coords = PlaneCoords::new(field.clone());
        let n = coords.points.len();
        let lines: Vec<Vec<u32>> = coords
            .points
            .iter()
            .map(|a| {
                (0..n as u32)
                    .filter(|&x| field.dot(a, &coords.points[x as usize]).is_zero())
                    .collect()
            })
            .collect();
        let mut plane = IncidencePlane::from_lines_unchecked(q, n, lines);
        plane.coords = Some(coords);
        Ok(plane)
    }

    /// Builds a plane from per-line point lists and validates it.
    pub fn from_lines(order: u32, n_points: usize, lines: Vec<Vec<u32>>) -> Result<Self> {
        if !(2..=MAX_PLANE_ORDER).contains(&order) {
            return Err(Error::UnsupportedOrder(order));
        }
        let plane = IncidencePlane::from_lines_unchecked(order, n_points, lines);
        let report = plane.validate();
        if report.passed() {
            Ok(plane)
        } else {
            Err(Error::InvalidPlane(report))
        }
    }

    /// Builds the structure without checking any axiom. Point ids outside
    /// `0..n_points` are dropped from the transpose but kept on their line.
    pub fn from_lines_unchecked(order: u32, n_points: usize, mut lines: Vec<Vec<u32>>) -> Self {
        let mut point_lines = vec![Vec::new(); n_points];
        for (l, pts) in lines.iter_mut().enumerate() {
            pts.sort_unstable();
            for &p in pts.iter() {
                if let Some(ls) = point_lines.get_mut(p as usize) {
                    ls.push(l as u32);
                }
            }
        }
        IncidencePlane {
            order,
            n_points,
            lines,
            point_lines,
            coords: None,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn num_points(&self) -> usize {
        self.n_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// Sorted point ids on line `l`.
    pub fn line(&self, l: u32) -> &[u32] {
        &self.lines[l as usize]
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    /// Sorted line ids through point `p`.
    pub fn lines_through(&self, p: u32) -> &[u32] {
        &self.point_lines[p as usize]
    }

    pub fn incident(&self, p: u32, l: u32) -> bool {
        self.lines[l as usize].binary_search(&p).is_ok()
    }

    pub fn coords(&self) -> Option<&PlaneCoords> {
        self.coords.as_ref()
    }

    /// Dense incidence bitmap indexed `p * num_lines + l`.
    pub(crate) fn incidence_matrix(&self) -> Vec<bool> {
        let nl = self.lines.len();
        let mut m = vec![false; self.n_points * nl];
        for (l, pts) in self.lines.iter().enumerate() {
            for &p in pts {
                if (p as usize) < self.n_points {
                    m[p as usize * nl + l] = true;
                }
            }
        }
        m
    }

    /// Checks the projective plane axioms, recording a witness for each failure.
    pub fn validate(&self) -> ValidationReport {
        let q = self.order as usize;
        let expected = plane_size(self.order);
        let n = self.n_points;
        let nl = self.lines.len();
        let mut report = ValidationReport::default();

        report.push(
            "point and line counts",
            (n != expected || nl != expected).then(|| {
                format!("expected {expected} points and lines, found {n} points and {nl} lines")
            }),
        );

        let bad_id = self
            .lines
            .iter()
            .enumerate()
            .find_map(|(l, pts)| pts.iter().find(|&&p| p as usize >= n).map(|&p| (l, p)));
        report.push(
            "point ids in range",
            bad_id.map(|(l, p)| format!("line {l} names point {p}")),
        );
        let dup = self
            .lines
            .iter()
            .position(|pts| pts.windows(2).any(|w| w[0] == w[1]));
        report.push(
            "no repeated incidences",
            dup.map(|l| format!("line {l} lists a point twice")),
        );

        let short_line = self.lines.iter().position(|pts| pts.len() != q + 1);
        report.push(
            "uniform line size",
            short_line.map(|l| format!("line {l} has {} points", self.lines[l].len())),
        );
        let odd_point = self.point_lines.iter().position(|ls| ls.len() != q + 1);
        report.push(
            "uniform point degree",
            odd_point.map(|p| format!("point {p} lies on {} lines", self.point_lines[p].len())),
        );

        report.push(
            "unique joining line",
            pair_multiplicity_defect(n, &self.lines)
                .map(|(a, b, c)| format!("points {a} and {b} share {c} lines")),
        );
        report.push(
            "unique meeting point",
            pair_multiplicity_defect(nl, &self.point_lines)
                .map(|(a, b, c)| format!("lines {a} and {b} share {c} points")),
        );
        report
    }
}

// Each member list contributes one to every pair it contains. Returns the
// first pair (a < b) whose total differs from 1.
fn pair_multiplicity_defect(size: usize, groups: &[Vec<u32>]) -> Option<(usize, usize, u32)> {
    let mut count = vec![0u32; size * size];
    for g in groups {
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                let (a, b) = (a as usize, b as usize);
                if a < size && b < size && a != b {
                    count[a * size + b] += 1;
                    count[b * size + a] += 1;
                }
            }
        }
    }
    (0..size)
        .flat_map(|a| (a + 1..size).map(move |b| (a, b)))
        .find(|&(a, b)| count[a * size + b] != 1)
        .map(|(a, b)| (a, b, count[a * size + b]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub witness: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Outcome of an axiom check: one entry per axiom, with a witness on failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub(crate) fn push(&mut self, name: &'static str, witness: Option<String>) {
        self.checks.push(Check { name, witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in self.failures() {
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(
                f,
                "{} failed ({})",
                c.name,
                c.witness.as_deref().unwrap_or("")
            )?;
        }
        if first {
            f.write_str("all checks passed")?;
        }
        Ok(())
    }
}
