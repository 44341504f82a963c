//! Polarities of projective planes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::prime_power;
use crate::plane::{IncidencePlane, ValidationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolarityKind {
    Orthogonal,
    Unitary,
    Custom,
}

impl fmt::Display for PolarityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolarityKind::Orthogonal => "orthogonal",
            PolarityKind::Unitary => "unitary",
            PolarityKind::Custom => "custom",
        })
    }
}

/// A point ↔ line correspondence of order two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarity {
    point_to_line: Vec<u32>,
    line_to_point: Vec<u32>,
    kind: PolarityKind,
}

impl Polarity {
    /// Maps every point of PG(2,q) to the line with the same coordinate label.
    pub fn orthogonal(plane: &IncidencePlane) -> Result<Self> {
        let coords = plane.coords().ok_or(Error::MissingCoordinates)?;
        let identity: Vec<u32> = coords.points().map(|p| p.id).collect();
        Ok(Polarity {
            point_to_line: identity.clone(),
            line_to_point: identity,
            kind: PolarityKind::Orthogonal,
        })
    }

    /// Maps `(x0,x1,x2)` to the line `[x0^s, x1^s, x2^s]` where `q = s^2`.
    pub fn unitary(plane: &IncidencePlane) -> Result<Self> {
        let coords = plane.coords().ok_or(Error::MissingCoordinates)?;
        let field = coords.field();
        let q = field.order();
        if field.degree() % 2 != 0 {
            return Err(Error::NotSquareOrder(q));
        }
        let s = u64::from(field.characteristic().pow(field.degree() / 2));
        let mut point_to_line = vec![0; plane.num_points()];
        for p in coords.points() {
            let image = p.coords.map(|c| field.pow(c, s));
            point_to_line[p.id as usize] = coords.locate(image)?.id;
        }
        // Frobenius of order two: the map is its own inverse on labels.
        let line_to_point = point_to_line.clone();
        Ok(Polarity {
            point_to_line,
            line_to_point,
            kind: PolarityKind::Unitary,
        })
    }

    /// A polarity given as an explicit point → line table. The line → point
    /// direction is its inverse; non-bijective tables are rejected.
    pub fn from_point_map(point_to_line: Vec<u32>, kind: PolarityKind) -> Result<Self> {
        let n = point_to_line.len();
        let mut line_to_point = vec![u32::MAX; n];
        for (p, &l) in point_to_line.iter().enumerate() {
            let slot = line_to_point.get_mut(l as usize).ok_or_else(|| {
                Error::InvalidPolarity(single_failure(
                    "bijection",
                    format!("point {p} maps to line {l}, out of range"),
                ))
            })?;
            if *slot != u32::MAX {
                return Err(Error::InvalidPolarity(single_failure(
                    "bijection",
                    format!("points {} and {p} both map to line {l}", *slot),
                )));
            }
            *slot = p as u32;
        }
        Ok(Polarity {
            point_to_line,
            line_to_point,
            kind,
        })
    }

    /// Both directions supplied independently; nothing is checked.
    pub fn from_maps_unchecked(
        point_to_line: Vec<u32>,
        line_to_point: Vec<u32>,
        kind: PolarityKind,
    ) -> Self {
        Polarity {
            point_to_line,
            line_to_point,
            kind,
        }
    }

    pub fn kind(&self) -> PolarityKind {
        self.kind
    }

    pub fn line_of(&self, p: u32) -> u32 {
        self.point_to_line[p as usize]
    }

    pub fn point_of(&self, l: u32) -> u32 {
        self.line_to_point[l as usize]
    }

    pub fn point_to_line(&self) -> &[u32] {
        &self.point_to_line
    }

    /// Checks that the map is an involution and that `p I l ⇔ θ(l) I θ(p)`.
    pub fn validate(&self, plane: &IncidencePlane) -> ValidationReport {
        let n = plane.num_points();
        let nl = plane.num_lines();
        let mut report = ValidationReport::default();

        let size_ok = self.point_to_line.len() == n && self.line_to_point.len() == nl;
        report.push(
            "domain size",
            (!size_ok).then(|| {
                format!(
                    "plane has {n} points and {nl} lines, map covers {} and {}",
                    self.point_to_line.len(),
                    self.line_to_point.len()
                )
            }),
        );
        let in_range = self.point_to_line.iter().all(|&l| (l as usize) < nl)
            && self.line_to_point.iter().all(|&p| (p as usize) < n);
        if !size_ok || !in_range {
            report.push("involution", Some("map is not total on the plane".into()));
            return report;
        }

        let involution = (0..n as u32)
            .find(|&p| self.point_of(self.line_of(p)) != p)
            .map(|p| {
                format!(
                    "point {p} -> line {} -> point {}",
                    self.line_of(p),
                    self.point_of(self.line_of(p))
                )
            })
            .or_else(|| {
                (0..nl as u32)
                    .find(|&l| self.line_of(self.point_of(l)) != l)
                    .map(|l| {
                        format!(
                            "line {l} -> point {} -> line {}",
                            self.point_of(l),
                            self.line_of(self.point_of(l))
                        )
                    })
            });
        report.push("involution", involution);

        let inc = plane.incidence_matrix();
        let witness = (0..n).find_map(|p| {
            (0..nl).find_map(|l| {
                let lhs = inc[p * nl + l];
                let rhs = inc[self.line_to_point[l] as usize * nl + self.point_to_line[p] as usize];
                (lhs != rhs).then(|| {
                    format!(
                        "point {p} {} line {l} but point {} {} line {}",
                        if lhs { "is on" } else { "is off" },
                        self.line_to_point[l],
                        if rhs { "is on" } else { "is off" },
                        self.point_to_line[p]
                    )
                })
            })
        });
        report.push("incidence preserving", witness);
        report
    }
}

fn single_failure(name: &'static str, witness: String) -> ValidationReport {
    let mut r = ValidationReport::default();
    r.push(name, Some(witness));
    r
}

/// Splits a square prime power `q = s^2` into `(p, k)` with `k` even.
pub fn square_order(q: u32) -> Result<(u32, u32)> {
    match prime_power(q) {
        Some((p, k)) if k % 2 == 0 => Ok((p, k)),
        Some(_) => Err(Error::NotSquareOrder(q)),
        None => Err(Error::NotPrimePower(q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn pg(q: u32) -> IncidencePlane {
        IncidencePlane::pg2(&Field::of_order(q).unwrap()).unwrap()
    }

    #[test]
    fn orthogonal_and_unitary_validate() {
        for q in [2, 3, 4, 5] {
            let plane = pg(q);
            assert!(Polarity::orthogonal(&plane)
                .unwrap()
                .validate(&plane)
                .passed());
        }
        for q in [4, 9, 16] {
            let plane = pg(q);
            let theta = Polarity::unitary(&plane).unwrap();
            assert!(theta.validate(&plane).passed(), "q={q}");
            for p in 0..plane.num_points() as u32 {
                assert_eq!(theta.point_of(theta.line_of(p)), p);
            }
        }
    }

    #[test]
    fn unitary_needs_square_order() {
        assert!(matches!(
            Polarity::unitary(&pg(5)),
            Err(Error::NotSquareOrder(5))
        ));
        assert!(matches!(
            Polarity::unitary(&pg(8)),
            Err(Error::NotSquareOrder(8))
        ));
        assert!(matches!(square_order(6), Err(Error::NotPrimePower(6))));
        assert_eq!(square_order(25).unwrap(), (5, 2));
    }

    #[test]
    fn transposed_map_fails_incidence_preservation() {
        let plane = pg(3);
        let theta = Polarity::orthogonal(&plane).unwrap();
        let mut map = theta.point_to_line().to_vec();
        map.swap(0, 1);
        let perturbed = Polarity::from_point_map(map, PolarityKind::Custom).unwrap();
        let report = perturbed.validate(&plane);
        assert!(report.check("involution").unwrap().passed());
        assert!(!report.check("incidence preserving").unwrap().passed());
    }

    #[test]
    fn non_involution_is_reported() {
        let plane = pg(2);
        let p2l: Vec<u32> = (0..7).collect();
        let l2p: Vec<u32> = (0..7).map(|l| (l + 1) % 7).collect();
        let bad = Polarity::from_maps_unchecked(p2l, l2p, PolarityKind::Custom);
        assert!(!bad.validate(&plane).check("involution").unwrap().passed());
    }

    #[test]
    fn loaded_planes_need_explicit_polarity() {
        let plane = pg(3);
        let bare = IncidencePlane::from_lines(3, 13, plane.lines().to_vec()).unwrap();
        assert!(matches!(
            Polarity::orthogonal(&bare),
            Err(Error::MissingCoordinates)
        ));
    }
}
