use serde::Serialize;

/// Upper bound on an induced triangle-free, absolute-point-free vertex set in
/// any polarity graph of a plane of order q:
/// `(q²+q+1)/2 + √q (q²+q+1)/(q+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TriangleFreeBound {
    pub q: u32,
    pub value: f64,
    pub floor: u64,
}

pub fn triangle_free_bound(q: u32) -> TriangleFreeBound {
    let qq = u128::from(q);
    let n = qq * qq + qq + 1;
    let value = n as f64 / 2.0 + (q as f64).sqrt() * n as f64 / (q as f64 + 1.0);

    // m <= value  <=>  t := 2(q+1)m - n(q+1) <= 2n√q  <=>  t <= 0 or t² <= 4n²q
    let fits = |m: u128| -> bool {
        let lhs = 2 * (qq + 1) * m;
        let rhs = n * (qq + 1);
        lhs <= rhs || {
            let t = lhs - rhs;
            t * t <= 4 * n * n * qq
        }
    };
    let mut floor = value.floor().max(0.0) as u128;
    while !fits(floor) {
        floor -= 1;
    }
    while fits(floor + 1) {
        floor += 1;
    }
    TriangleFreeBound {
        q,
        value,
        floor: floor as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let b3 = triangle_free_bound(3);
        assert!((b3.value - (6.5 + 3f64.sqrt() * 13.0 / 4.0)).abs() < 1e-12);
        assert_eq!(b3.floor, 12);
        let b5 = triangle_free_bound(5);
        assert!((b5.value - (15.5 + 5f64.sqrt() * 31.0 / 6.0)).abs() < 1e-12);
        assert_eq!(b5.floor, 27);
    }

    #[test]
    fn floor_matches_float_away_from_boundaries() {
        for q in 2..=1000u32 {
            let b = triangle_free_bound(q);
            assert!(b.floor as f64 <= b.value + 1e-9);
            assert!((b.floor + 1) as f64 > b.value - 1e-9, "q={q}");
        }
    }
}
