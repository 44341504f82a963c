//! Arithmetic in finite fields GF(p^k), k ≤ 4.
//!
//! Elements are stored as integer codes `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_i` are the coefficients of the polynomial representative
//! (least-degree first). Codes order elements, and that order fixes point ids
//! in the planes built on top of this module.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields up to this order get log/antilog tables.
const TABLE_LIMIT: u32 = 1 << 12;

/// Fixed moduli for the extension fields, least-degree coefficient first.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),       // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),    // x^3 + x + 1
    (3, 2, &[1, 0, 1]),       // x^2 + 1
    (2, 4, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (5, 2, &[2, 0, 1]),       // x^2 + 2
    (3, 3, &[1, 2, 0, 1]),    // x^3 + 2x + 1
];

/// An element code. Only meaningful together with the [`Field`] it came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

#[derive(Clone)]
struct LogTables {
    // exp has length 2(q-1) so log a + log b never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^k` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl Field {
    /// GF(p^k) with the fixed modulus for its order. Prime fields use `x`.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        check_params(p, k)?;
        if k == 1 {
            return Field::with_modulus(p, 1, &[0, 1]);
        }
        let modulus = MODULI
            .iter()
            .find(|(mp, mk, _)| *mp == p && *mk == k)
            .map(|(_, _, m)| *m)
            .ok_or_else(|| Error::UnsupportedField {
                p,
                k,
                reason: "no built-in modulus; supply one".into(),
            })?;
        Field::with_modulus(p, k, modulus)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, k)
    }

    /// GF(p^k) over a caller-supplied monic irreducible modulus of degree `k`
    /// (coefficients least-degree first).
    pub fn with_modulus(p: u32, k: u32, modulus: &[u32]) -> Result<Self> {
        check_params(p, k)?;
        let invalid = |reason: &str| Error::InvalidModulus {
            p,
            k,
            reason: reason.into(),
        };
        if modulus.len() != k as usize + 1 {
            return Err(invalid("degree differs from k"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(invalid("coefficient out of range"));
        }
        if modulus[k as usize] != 1 {
            return Err(invalid("not monic"));
        }
        if k > 1 {
            if (0..p).any(|x| eval_mod(modulus, x, p) == 0) {
                return Err(invalid("has a root in GF(p)"));
            }
            if k == 4 && has_quadratic_factor(modulus, p) {
                return Err(invalid("has a quadratic factor"));
            }
        }

        let mut field = Field {
            p,
            k,
            q: p.pow(k),
            modulus: modulus.to_vec(),
            tables: None,
        };
        if field.q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    pub fn elem(&self, value: Fe) -> FieldElem<'_> {
        debug_assert!(value.0 < self.q);
        FieldElem { field: self, value }
    }

    /// Element with the given coefficients (least-degree first), reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Fe {
        let mut poly = coeffs.iter().map(|&c| c % self.p).collect::<Vec<_>>();
        self.reduce(&mut poly);
        self.encode(&poly)
    }

    /// The constant `c mod p`.
    pub fn constant(&self, c: u32) -> Fe {
        Fe(c % self.p)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut v = a.0;
        for _ in 0..self.k {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if self.k == 1 {
            return Fe((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        match &self.tables {
            Some(t) => Fe(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_poly(a, b),
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => {
                let l = t.log[a.0 as usize];
                Fe(t.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
            }
            None => self.pow(a, u64::from(self.q) - 2),
        })
    }

    pub fn pow(&self, a: Fe, mut n: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn dot(&self, a: &[Fe; 3], b: &[Fe; 3]) -> Fe {
        let s = self.add(self.mul(a[0], b[0]), self.mul(a[1], b[1]));
        self.add(s, self.mul(a[2], b[2]))
    }

    fn encode(&self, poly: &[u32]) -> Fe {
        let mut v = 0;
        for &c in poly.iter().take(self.k as usize).rev() {
            v = v * self.p + c;
        }
        Fe(v)
    }

    // Reduces a coefficient vector modulo the field modulus in place.
    fn reduce(&self, poly: &mut Vec<u32>) {
        let k = self.k as usize;
        while poly.len() > k {
            let lead = poly.pop().unwrap();
            if lead == 0 {
                continue;
            }
            let shift = poly.len() - k;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let sub = (u64::from(lead) * u64::from(m) % u64::from(self.p)) as u32;
                poly[shift + i] = (poly[shift + i] + self.p - sub) % self.p;
            }
        }
        poly.resize(k, 0);
    }

    fn mul_poly(&self, a: Fe, b: Fe) -> Fe {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let p = u64::from(self.p);
        let mut wide = vec![0u64; ca.len() + cb.len() - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                wide[i + j] = (wide[i + j] + u64::from(x) * u64::from(y)) % p;
            }
        }
        let mut prod = wide.into_iter().map(|c| c as u32).collect();
        self.reduce(&mut prod);
        self.encode(&prod)
    }

    fn build_tables(&self) -> LogTables {
        let order = self.q - 1;
        let generator = (1..self.q)
            .map(Fe)
            .find(|&g| self.multiplicative_order(g) == order)
            .expect("multiplicative group of a field is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = Fe::ONE;
        for i in 0..order {
            exp[i as usize] = x.0;
            exp[(i + order) as usize] = x.0;
            log[x.0 as usize] = i;
            x = self.mul_poly(x, generator);
        }
        LogTables { exp, log }
    }

    fn multiplicative_order(&self, g: Fe) -> u32 {
        let mut x = g;
        let mut n = 1;
        while x != Fe::ONE {
            x = self.mul_poly(x, g);
            n += 1;
        }
        n
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.p == other.p && self.k == other.k && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.k, self.modulus)
    }
}

fn check_params(p: u32, k: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let unsupported = |reason: &str| Error::UnsupportedField {
        p,
        k,
        reason: reason.into(),
    };
    if !(1..=4).contains(&k) {
        return Err(unsupported("extension degree must be in 1..=4"));
    }
    match p.checked_pow(k) {
        Some(q) if q <= MAX_ORDER => Ok(()),
        _ => Err(unsupported("order exceeds 2^16")),
    }
}

fn eval_mod(poly: &[u32], x: u32, p: u32) -> u32 {
    poly.iter().rev().fold(0u64, |acc, &c| {
        (acc * u64::from(x) + u64::from(c)) % u64::from(p)
    }) as u32
}

// True if some monic quadratic over GF(p) divides `poly`.
fn has_quadratic_factor(poly: &[u32], p: u32) -> bool {
    (0..p).any(|b| {
        (0..p).any(|c| {
            let mut rem = poly.to_vec();
            // divide by x^2 + b x + c
            while rem.len() > 2 {
                let lead = rem.pop().unwrap();
                let n = rem.len();
                rem[n - 1] = (rem[n - 1] + p - lead * b % p) % p;
                rem[n - 2] = (rem[n - 2] + p - lead * c % p) % p;
            }
            rem.iter().all(|&r| r == 0)
        })
    })
}

/// An element paired with its field, for checked arithmetic across field
/// boundaries. Hot loops use [`Fe`] with [`Field`] methods directly.
#[derive(Clone, Copy)]
pub struct FieldElem<'f> {
    field: &'f Field,
    value: Fe,
}

impl<'f> FieldElem<'f> {
    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn same_field(&self, other: &FieldElem<'_>) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElem<'_>) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.add(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElem<'_>) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.field.elem(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.field.elem(self.field.inv(self.value)?))
    }

    pub fn pow(&self, n: u64) -> Self {
        self.field.elem(self.field.pow(self.value, n))
    }
}

impl PartialEq for FieldElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

impl fmt::Debug for FieldElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(f: &Field) -> Fe {
        f.from_coeffs(&[0, 1])
    }

    #[test]
    fn prime_field_has_modulus_x() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 3);
    }

    #[test]
    fn table_moduli_have_no_roots() {
        // GF(9): x^2 + 1 at 0, 1, 2 gives 1, 2, 2
        let m = [1, 0, 1];
        assert_eq!(
            (0..3).map(|x| eval_mod(&m, x, 3)).collect::<Vec<_>>(),
            [1, 2, 2]
        );
        // GF(4): x^2 + x + 1 at 0, 1 gives 1, 1
        assert_eq!(eval_mod(&[1, 1, 1], 0, 2), 1);
        assert_eq!(eval_mod(&[1, 1, 1], 1, 2), 1);
        for &(p, k, m) in MODULI {
            assert!(Field::with_modulus(p, k, m).is_ok(), "GF({p}^{k})");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(
            Field::new(7, 2),
            Err(Error::UnsupportedField { .. })
        ));
        assert!(matches!(
            Field::new(2, 5),
            Err(Error::UnsupportedField { .. })
        ));
        assert!(matches!(
            Field::new(257, 2),
            Err(Error::UnsupportedField { .. })
        ));
        assert!(Field::new(65521, 1).is_ok());
    }

    #[test]
    fn user_modulus_is_validated() {
        // x^2 + 1 over GF(5) has roots 2 and 3
        assert!(matches!(
            Field::with_modulus(5, 2, &[1, 0, 1]),
            Err(Error::InvalidModulus { .. })
        ));
        // (x^2 + x + 1)^2 = x^4 + x^2 + 1 has no roots over GF(2) but is reducible
        assert!(matches!(
            Field::with_modulus(2, 4, &[1, 0, 1, 0, 1]),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(Field::with_modulus(2, 4, &[1, 0, 0, 1, 1]).is_ok());
        assert!(Field::with_modulus(7, 2, &[1, 0, 1]).is_ok());
        assert!(Field::with_modulus(3, 2, &[1, 0, 2]).is_err());
    }

    #[test]
    fn small_products() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.mul(Fe(2), Fe(3)), Fe(1));

        let f9 = Field::new(3, 2).unwrap();
        let x9 = x(&f9);
        assert_eq!(f9.mul(x9, x9), f9.constant(2));

        let f4 = Field::new(2, 2).unwrap();
        let x4 = x(&f4);
        let x_plus_1 = f4.from_coeffs(&[1, 1]);
        assert_eq!(f4.inv(x4).unwrap(), x_plus_1);
        assert_eq!(f4.pow(x4, 2), x_plus_1);
    }

    #[test]
    fn inverse_by_exhaustion_in_gf4() {
        let f4 = Field::new(2, 2).unwrap();
        let x4 = x(&f4);
        let inverses: Vec<Fe> = f4
            .elements()
            .filter(|&b| f4.mul(x4, b) == Fe::ONE)
            .collect();
        assert_eq!(inverses, vec![f4.from_coeffs(&[1, 1])]);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = Field::new(7, 1).unwrap();
        assert!(matches!(f.inv(Fe::ZERO), Err(Error::ZeroInverse)));
    }

    #[test]
    fn pow_edge_cases() {
        let f9 = Field::new(3, 2).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.pow(a, 0), Fe::ONE);
            if !a.is_zero() {
                assert_eq!(f9.pow(a, 8), Fe::ONE);
            }
        }
    }

    #[test]
    fn poly_and_table_paths_agree() {
        for q in [8, 9, 16, 25, 27] {
            let f = Field::of_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.mul(a, b),
                        if a.is_zero() || b.is_zero() {
                            Fe::ZERO
                        } else {
                            f.mul_poly(a, b)
                        }
                    );
                }
            }
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let f4 = Field::new(2, 2).unwrap();
        let f5 = Field::new(5, 1).unwrap();
        let a = f4.elem(Fe(1));
        let b = f5.elem(Fe(1));
        assert!(matches!(a.add(&b), Err(Error::MixedFields)));
        assert!(matches!(a.mul(&b), Err(Error::MixedFields)));
        let c = f4.elem(Fe(3));
        assert_eq!(a.mul(&c).unwrap(), c);
        // same modulus built twice is the same field
        let g4 = Field::new(2, 2).unwrap();
        assert!(a.add(&g4.elem(Fe(2))).is_ok());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
