//! Exact arithmetic in the cyclotomic field `Q(ζ_m)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` after
//! reduction modulo the `m`-th cyclotomic polynomial, which makes the
//! representation canonical for a fixed `m`.
//!
//! Elements of order `1` are plain rationals. They combine with elements of
//! any order `m` by embedding, so `Cyclotomic::zero()` and
//! `Cyclotomic::one()` work without knowing the ambient order.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::{abs_rational_literal, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("order mismatch: Q(ζ_{0}) vs Q(ζ_{1})")]
    OrderMismatch(u32, u32),
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("exponent {exponent} out of range for order {order}")]
    ExponentOutOfRange { order: u32, exponent: u32 },
    #[error("malformed scalar literal {literal:?} at offset {offset}: {reason}")]
    Parse {
        literal: String,
        offset: usize,
        reason: String,
    },
}

/// Per-order reduction data: `φ(m)` and the coordinates of `ζ^k` for `0 ≤ k < m`.
#[derive(Debug)]
struct OrderData {
    phi: usize,
    powers: Vec<Vec<BigRational>>,
}

fn cyclotomic_polynomial(m: u32, cache: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    // x^m - 1, low degree first
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d, cache);
            num = exact_div_monic(&num, &div);
        }
    }
    cache.insert(m, num.clone());
    num
}

fn exact_div_monic(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = div.len() - 1;
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in div.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn order_data(m: u32) -> Arc<OrderData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<OrderData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    if let Some(d) = guard.get(&m) {
        return d.clone();
    }
    let mut polys = HashMap::new();
    let phi_poly = cyclotomic_polynomial(m, &mut polys);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..m {
        powers.push(
            cur.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect::<Vec<_>>(),
        );
        // multiply by x and reduce with the monic Φ_m
        let top = cur[phi - 1].clone();
        let mut next = vec![BigInt::zero(); phi];
        for i in (1..phi).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for (i, n) in next.iter_mut().enumerate() {
                *n -= &top * &phi_poly[i];
            }
        }
        cur = next;
    }
    let data = Arc::new(OrderData { phi, powers });
    guard.insert(m, data.clone());
    data
}

/// Euler's totient, via the degree of the cyclotomic polynomial.
pub fn totient(m: u32) -> usize {
    assert!(m > 0, "totient of zero");
    order_data(m).phi
}

/// An element of `Q(ζ_m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// Embeds the rational `q` into `Q(ζ_m)`.
    pub fn from_rational_in(m: u32, q: BigRational) -> Result<Self, ScalarError> {
        if m == 0 {
            return Err(ScalarError::InvalidOrder(m));
        }
        let phi = totient(m);
        let mut coeffs = vec![BigRational::zero(); phi];
        coeffs[0] = q;
        Ok(Cyclotomic { order: m, coeffs })
    }

    /// `ζ_m^k` for `0 ≤ k < m`.
    pub fn root_of_unity_in(m: u32, k: u32) -> Result<Self, ScalarError> {
        if m == 0 {
            return Err(ScalarError::InvalidOrder(m));
        }
        if k >= m {
            return Err(ScalarError::ExponentOutOfRange { order: m, exponent: k });
        }
        let data = order_data(m);
        Ok(Cyclotomic {
            order: m,
            coeffs: data.powers[k as usize].clone(),
        })
    }

    /// Builds an element from power-basis coordinates, reducing if more
    /// than `φ(m)` are given.
    pub fn from_coeffs(m: u32, coeffs: Vec<BigRational>) -> Result<Self, ScalarError> {
        if m == 0 {
            return Err(ScalarError::InvalidOrder(m));
        }
        let data = order_data(m);
        let mut out = vec![BigRational::zero(); data.phi];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < data.phi {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&data.powers[k % m as usize]) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            order: m,
            coeffs: out,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses `self` in `Q(ζ_m)`; only rationals (order 1) may change order.
    pub fn promote(&self, m: u32) -> Result<Self, ScalarError> {
        if self.order == m {
            Ok(self.clone())
        } else if self.order == 1 {
            Self::from_rational_in(m, self.coeffs[0].clone())
        } else {
            Err(ScalarError::OrderMismatch(self.order, m))
        }
    }

    fn common_order(&self, other: &Self) -> Result<u32, ScalarError> {
        match (self.order, other.order) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(ScalarError::OrderMismatch(a, b)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let m = self.common_order(other)?;
        let (a, b) = (self.promote(m)?, other.promote(m)?);
        Ok(Cyclotomic {
            order: m,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let m = self.common_order(other)?;
        if self.order == 1 {
            let c = &self.coeffs[0];
            return Ok(Cyclotomic {
                order: other.order,
                coeffs: other.coeffs.iter().map(|x| x * c).collect(),
            });
        }
        if other.order == 1 {
            let c = &other.coeffs[0];
            return Ok(Cyclotomic {
                order: self.order,
                coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            });
        }
        let phi = self.coeffs.len();
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(m, raw)
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::InversionOfZero);
        }
        if self.order == 1 {
            return Ok(Cyclotomic {
                order: 1,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Solve (multiplication by self) · x = 1 in the power basis.
        let m = self.order;
        let data = order_data(m);
        let phi = data.phi;
        let mut mat = Matrix::<BigRational>::zeros(phi, phi);
        for j in 0..phi {
            let mut basis = vec![BigRational::zero(); phi];
            basis[j] = BigRational::one();
            let col = self.checked_mul(&Cyclotomic {
                order: m,
                coeffs: basis,
            })?;
            for (i, c) in col.coeffs.into_iter().enumerate() {
                mat[(i, j)] = c;
            }
        }
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let x = mat
            .solve(&crate::linalg::Vector::new(rhs))
            .expect("nonzero element of a field is invertible");
        Ok(Cyclotomic {
            order: m,
            coeffs: x.coords,
        })
    }

    /// Parses a literal such as `1/2*z^3 - 1` in `Q(ζ_m)`.
    pub fn parse(literal: &str, m: u32) -> Result<Self, ScalarError> {
        if m == 0 {
            return Err(ScalarError::InvalidOrder(m));
        }
        let terms = parse_terms(literal)?;
        let mut raw: Vec<BigRational> = Vec::new();
        for (coeff, exp) in terms {
            let k = (exp % BigInt::from(m)).to_usize().expect("reduced exponent fits");
            if raw.len() <= k {
                raw.resize(k + 1, BigRational::zero());
            }
            raw[k] += coeff;
        }
        if raw.is_empty() {
            raw.push(BigRational::zero());
        }
        Self::from_coeffs(m, raw)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match (self.order, other.order) {
            (1, _) | (_, 1) => {
                let (r, c) = if self.order == 1 { (self, other) } else { (other, self) };
                c.to_rational().is_some_and(|q| q == r.coeffs[0])
            }
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    /// Canonical literal: descending powers of `z`, e.g. `1/2*z^3 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = abs_rational_literal(c);
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn parse_error(literal: &str, offset: usize, reason: &str) -> ScalarError {
    ScalarError::Parse {
        literal: literal.to_string(),
        offset,
        reason: reason.to_string(),
    }
}

/// Splits a literal into `(coefficient, exponent)` terms.
fn parse_terms(literal: &str) -> Result<Vec<(BigRational, BigInt)>, ScalarError> {
    let bytes = literal.as_bytes();
    let mut pos = 0;
    let mut terms = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            None
        } else {
            BigInt::from_str(&literal[start..*pos]).ok()
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(parse_error(literal, pos, "empty literal"));
    }
    loop {
        skip_ws(&mut pos);
        let mut sign = BigInt::one();
        if terms.is_empty() {
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
                skip_ws(&mut pos);
            }
        } else {
            match bytes.get(pos) {
                Some(b'+') => pos += 1,
                Some(b'-') => {
                    sign = -sign;
                    pos += 1
                }
                _ => return Err(parse_error(literal, pos, "expected '+' or '-'")),
            }
            skip_ws(&mut pos);
        }
        let mut coeff = BigRational::from_integer(sign);
        let mut has_z = false;
        if let Some(n) = read_int(&mut pos) {
            let mut q = BigRational::from_integer(n);
            if bytes.get(pos) == Some(&b'/') {
                pos += 1;
                let d = read_int(&mut pos)
                    .ok_or_else(|| parse_error(literal, pos, "expected denominator"))?;
                if d.is_zero() {
                    return Err(parse_error(literal, pos, "zero denominator"));
                }
                q /= BigRational::from_integer(d);
            }
            coeff *= q;
            skip_ws(&mut pos);
            if bytes.get(pos) == Some(&b'*') {
                pos += 1;
                skip_ws(&mut pos);
                if bytes.get(pos) != Some(&b'z') {
                    return Err(parse_error(literal, pos, "expected 'z' after '*'"));
                }
                has_z = true;
                pos += 1;
            }
        } else if bytes.get(pos) == Some(&b'z') {
            has_z = true;
            pos += 1;
        } else {
            return Err(parse_error(literal, pos, "expected a rational or 'z'"));
        }
        let mut exp = BigInt::zero();
        if has_z {
            exp = BigInt::one();
            skip_ws(&mut pos);
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                skip_ws(&mut pos);
                exp = read_int(&mut pos)
                    .ok_or_else(|| parse_error(literal, pos, "expected exponent"))?;
            }
        }
        terms.push((coeff, exp));
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
    }
    Ok(terms)
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::one()],
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Field for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }

    fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    fn root_of_unity(order: u32, exponent: u32) -> Option<Self> {
        if order == 0 {
            return None;
        }
        Self::root_of_unity_in(order, exponent % order).ok()
    }
}

/// `ζ_order^exponent`, kept symbolic until embedded into a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    pub order: u32,
    pub exponent: u32,
}

impl RootOfUnity {
    pub fn new(order: u32, exponent: i64) -> Result<Self, ScalarError> {
        if order == 0 {
            return Err(ScalarError::InvalidOrder(order));
        }
        Ok(RootOfUnity {
            order,
            exponent: exponent.mod_floor(&(order as i64)) as u32,
        })
    }

    pub fn one(order: u32) -> Self {
        RootOfUnity { order, exponent: 0 }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.order != other.order {
            return Err(ScalarError::OrderMismatch(self.order, other.order));
        }
        Ok(RootOfUnity {
            order: self.order,
            exponent: (self.exponent + other.exponent) % self.order,
        })
    }

    pub fn inv(&self) -> Self {
        RootOfUnity {
            order: self.order,
            exponent: (self.order - self.exponent) % self.order,
        }
    }

    /// The value in a concrete field, if the field contains it.
    pub fn embed<F: Field>(&self) -> Option<F> {
        F::root_of_unity(self.order, self.exponent)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ{}^{}", self.order, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity_in(m, k).unwrap()
    }

    fn q(a: i64, b: i64) -> Cyclotomic {
        Cyclotomic::from_ratio(a, b)
    }

    #[test]
    fn totients() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (m, &phi) in (1..=12).zip(&expected) {
            assert_eq!(totient(m), phi, "φ({m})");
        }
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(z(4, 1) * &z(4, 1), -Cyclotomic::one());
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        let s = Cyclotomic::one() + &(z(3, 1) + &z(3, 2));
        assert!(s.is_zero());
    }

    #[test]
    fn inverse_of_zeta6_fifth() {
        assert_eq!(z(6, 5).checked_inv().unwrap(), z(6, 1));
        assert_eq!(Cyclotomic::zero().checked_inv(), Err(ScalarError::InversionOfZero));
    }

    #[test]
    fn embeddings() {
        assert_eq!(z(2, 1), -Cyclotomic::one());
        assert_eq!(z(4, 2), -Cyclotomic::one());
        let r = Cyclotomic::from_rational_in(12, BigRational::new(3.into(), 4.into())).unwrap();
        assert_eq!(r.coeffs().len(), 4);
        assert_eq!(r.to_rational(), Some(BigRational::new(3.into(), 4.into())));
        assert_eq!(r, q(3, 4));
        assert!(matches!(
            Cyclotomic::from_rational_in(0, BigRational::one()),
            Err(ScalarError::InvalidOrder(0))
        ));
        assert!(Cyclotomic::root_of_unity_in(4, 4).is_err());
    }

    #[test]
    fn order_mismatch_is_reported() {
        assert_eq!(
            z(3, 1).checked_add(&z(4, 1)),
            Err(ScalarError::OrderMismatch(3, 4))
        );
        assert!(z(3, 1).checked_mul(&q(1, 2)).is_ok());
    }

    #[test]
    fn roots_multiply_by_adding_exponents() {
        for m in 1..=12u32 {
            for j in 0..m {
                for k in 0..m {
                    assert_eq!(z(m, j) * &z(m, k), z(m, (j + k) % m), "m={m} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn literal_roundtrip() {
        let x = Cyclotomic::parse("1/2*z^3 - 1", 8).unwrap();
        assert_eq!(x.to_string(), "1/2*z^3 - 1");
        let y = Cyclotomic::parse(" -z + 2*z^2 + 3/4 ", 5).unwrap();
        assert_eq!(y.to_string(), "2*z^2 - z + 3/4");
        assert_eq!(Cyclotomic::parse(&y.to_string(), 5).unwrap(), y);
        // z^2 = -1 in Q(ζ_4)
        assert_eq!(Cyclotomic::parse("z^2", 4).unwrap().to_string(), "-1");
        assert_eq!(Cyclotomic::parse("0", 7).unwrap().to_string(), "0");
        assert_eq!(Cyclotomic::parse("z^7", 7).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn malformed_literals() {
        for bad in ["1//2*z", "", "1 2", "z^", "1/0", "*z", "1/2*", "2 z"] {
            assert!(
                matches!(Cyclotomic::parse(bad, 4), Err(ScalarError::Parse { .. })),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn root_of_unity_type() {
        let a = RootOfUnity::new(6, -1).unwrap();
        assert_eq!(a.exponent, 5);
        assert_eq!(a.mul(&RootOfUnity::new(6, 1).unwrap()).unwrap(), RootOfUnity::one(6));
        assert_eq!(a.inv().exponent, 1);
        assert_eq!(a.embed::<Cyclotomic>().unwrap(), z(6, 5));
        assert_eq!(a.embed::<BigRational>(), None);
        assert_eq!(RootOfUnity::new(2, 1).unwrap().embed::<BigRational>(), Some(-BigRational::one()));
    }
}
