//! Finite abelian grading groups, degrees and bicharacters.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::cyclotomic::RootOfUnity;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("cyclic orders must be nonempty and each at least 1")]
    InvalidGroup,
    #[error("degree {0} does not belong to the grading group {1}")]
    GroupMismatch(Degree, GradingGroup),
    #[error("bicharacter exponent matrix has shape {rows}x{cols}, expected {expected}x{expected}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("the scalar field does not contain ζ_{order}^{exponent}")]
    RootNotInField { order: u32, exponent: u32 },
}

/// `Z_{n₁} × … × Z_{n_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<u32>,
}

/// Element of a [`GradingGroup`], stored as reduced residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl GradingGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self, GradingError> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(GradingError::InvalidGroup);
        }
        Ok(GradingGroup { orders })
    }

    pub fn trivial() -> Self {
        GradingGroup { orders: vec![1] }
    }

    pub fn cyclic(n: u32) -> Self {
        Self::new(vec![n]).expect("cyclic order must be positive")
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements.
    pub fn size(&self) -> u64 {
        self.orders.iter().map(|&n| n as u64).product()
    }

    pub fn zero(&self) -> Degree {
        Degree(vec![0; self.orders.len()])
    }

    /// Builds a degree, reducing each residue into range.
    pub fn degree(&self, residues: &[i64]) -> Result<Degree, GradingError> {
        if residues.len() != self.orders.len() {
            return Err(GradingError::GroupMismatch(
                Degree(residues.iter().map(|&r| r.max(0) as u32).collect()),
                self.clone(),
            ));
        }
        Ok(Degree(
            residues
                .iter()
                .zip(&self.orders)
                .map(|(&r, &n)| r.mod_floor(&(n as i64)) as u32)
                .collect(),
        ))
    }

    /// The generator `e_i`.
    pub fn generator(&self, i: usize) -> Degree {
        let mut r = vec![0; self.orders.len()];
        r[i] = 1 % self.orders[i];
        Degree(r)
    }

    pub fn contains(&self, d: &Degree) -> bool {
        d.0.len() == self.orders.len() && d.0.iter().zip(&self.orders).all(|(r, n)| r < n)
    }

    fn check(&self, d: &Degree) -> Result<(), GradingError> {
        if self.contains(d) {
            Ok(())
        } else {
            Err(GradingError::GroupMismatch(d.clone(), self.clone()))
        }
    }

    pub fn add(&self, a: &Degree, b: &Degree) -> Result<Degree, GradingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(Degree(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &Degree) -> Result<Degree, GradingError> {
        self.check(a)?;
        Ok(Degree(
            a.0.iter().zip(&self.orders).map(|(x, n)| (n - x) % n).collect(),
        ))
    }

    pub fn sub(&self, a: &Degree, b: &Degree) -> Result<Degree, GradingError> {
        self.add(a, &self.neg(b)?)
    }

    /// All elements in lexicographic order of residues.
    pub fn elements(&self) -> Vec<Degree> {
        let mut out = vec![Vec::new()];
        for &n in &self.orders {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |r| {
                        let mut p = prefix.clone();
                        p.push(r);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Degree).collect()
    }
}

/// A bicharacter `ε(α, β) = ζ_m^{αᵀ E β}` given by its generator exponent matrix `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    group: GradingGroup,
    order: u32,
    exponents: Vec<Vec<u32>>,
}

/// One violated congruence of a bicharacter exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BicharacterViolation {
    /// `E_ij + E_ji ≢ 0 (mod m)`.
    Symmetry { i: usize, j: usize },
    /// `n_i · E_ij ≢ 0 (mod m)` (`row = true`) or `n_j · E_ij ≢ 0` (`row = false`).
    WellDefined { i: usize, j: usize, row: bool },
}

impl fmt::Display for BicharacterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BicharacterViolation::Symmetry { i, j } => {
                write!(f, "symmetry: E[{i}][{j}] + E[{j}][{i}] is not 0 mod m")
            }
            BicharacterViolation::WellDefined { i, j, row } => {
                let k = if *row { i } else { j };
                write!(f, "well-definedness: n_{k} * E[{i}][{j}] is not 0 mod m")
            }
        }
    }
}

/// Outcome of [`Bicharacter::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicharacterReport {
    pub violations: Vec<BicharacterViolation>,
    /// Biadditivity holds for any exponent-matrix presentation.
    pub biadditive_by_construction: bool,
}

impl BicharacterReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Bicharacter {
    /// Stores `exponents` reduced mod `order`. Validity is checked separately
    /// by [`validate`](Self::validate).
    pub fn new(
        group: GradingGroup,
        order: u32,
        exponents: Vec<Vec<i64>>,
    ) -> Result<Self, GradingError> {
        if order == 0 {
            return Err(GradingError::InvalidOrder(order));
        }
        let k = group.rank();
        let cols = exponents.iter().map(Vec::len).find(|&c| c != k);
        if exponents.len() != k || cols.is_some() {
            return Err(GradingError::DimensionMismatch {
                rows: exponents.len(),
                cols: cols.unwrap_or(k),
                expected: k,
            });
        }
        let m = order as i64;
        let exponents = exponents
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.mod_floor(&m) as u32).collect())
            .collect();
        Ok(Bicharacter {
            group,
            order,
            exponents,
        })
    }

    /// `ε ≡ 1` on `group`.
    pub fn trivial(group: GradingGroup) -> Self {
        let k = group.rank();
        Bicharacter {
            group,
            order: 1,
            exponents: vec![vec![0; k]; k],
        }
    }

    /// The super sign rule on `Z₂`: `ε(α, β) = (-1)^{αβ}`.
    pub fn super_sign() -> Self {
        Bicharacter {
            group: GradingGroup::cyclic(2),
            order: 2,
            exponents: vec![vec![1]],
        }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    pub fn validate(&self) -> BicharacterReport {
        let m = self.order as u64;
        let k = self.group.rank();
        let n = self.group.orders();
        let mut violations = Vec::new();
        for i in 0..k {
            for j in 0..k {
                // a factor of order one contributes nothing
                if n[i] == 1 || n[j] == 1 {
                    continue;
                }
                let eij = self.exponents[i][j] as u64;
                if j >= i && !(eij + self.exponents[j][i] as u64).is_multiple_of(m) {
                    violations.push(BicharacterViolation::Symmetry { i, j });
                }
                if !(n[i] as u64 * eij).is_multiple_of(m) {
                    violations.push(BicharacterViolation::WellDefined { i, j, row: true });
                }
                if !(n[j] as u64 * eij).is_multiple_of(m) {
                    violations.push(BicharacterViolation::WellDefined { i, j, row: false });
                }
            }
        }
        BicharacterReport {
            violations,
            biadditive_by_construction: true,
        }
    }

    /// Exponent of `ζ_m` in `ε(α, β)`.
    fn exponent(&self, a: &Degree, b: &Degree) -> u32 {
        let m = self.order as u64;
        let mut acc = 0u64;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                acc = (acc + ai as u64 * bj as u64 % m * self.exponents[i][j] as u64) % m;
            }
        }
        acc as u32
    }

    pub fn eval(&self, a: &Degree, b: &Degree) -> Result<RootOfUnity, GradingError> {
        self.group.check(a)?;
        self.group.check(b)?;
        Ok(RootOfUnity {
            order: self.order,
            exponent: self.exponent(a, b),
        })
    }
}

/// A bicharacter with its values embedded in a concrete field `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Epsilon<F> {
    bicharacter: Bicharacter,
    roots: Vec<F>,
}

impl<F: Field> Epsilon<F> {
    pub fn new(bicharacter: Bicharacter) -> Result<Self, GradingError> {
        let m = bicharacter.order;
        let roots = (0..m)
            .map(|k| F::root_of_unity(m, k).ok_or(GradingError::RootNotInField { order: m, exponent: k }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Epsilon { bicharacter, roots })
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.bicharacter
    }

    pub fn group(&self) -> &GradingGroup {
        &self.bicharacter.group
    }

    /// `ε(α, β)`. Degrees are assumed to belong to the group.
    pub fn eps(&self, a: &Degree, b: &Degree) -> F {
        debug_assert!(self.group().contains(a) && self.group().contains(b));
        self.roots[self.bicharacter.exponent(a, b) as usize].clone()
    }

    /// Degree arithmetic in the underlying group. Panics on foreign degrees.
    pub fn add(&self, a: &Degree, b: &Degree) -> Degree {
        self.group().add(a, b).expect("degree outside grading group")
    }

    pub fn sub(&self, a: &Degree, b: &Degree) -> Degree {
        self.group().sub(a, b).expect("degree outside grading group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic;
    use num_traits::One;

    #[test]
    fn degree_arithmetic() {
        let z4 = GradingGroup::cyclic(4);
        let (a, b) = (z4.degree(&[3]).unwrap(), z4.degree(&[2]).unwrap());
        assert_eq!(z4.add(&a, &b).unwrap(), z4.degree(&[1]).unwrap());
        let k = GradingGroup::new(vec![2, 2]).unwrap();
        let d = k.degree(&[1, 0]).unwrap();
        assert_eq!(k.neg(&d).unwrap(), d);
        let z6 = GradingGroup::cyclic(6);
        let s = z6.add(&z6.degree(&[5]).unwrap(), &z6.degree(&[1]).unwrap()).unwrap();
        assert_eq!(s, z6.zero());
        assert!(matches!(z6.add(&d, &s), Err(GradingError::GroupMismatch(..))));
        assert_eq!(k.elements().len(), 4);
        assert!(GradingGroup::new(vec![]).is_err());
        assert!(GradingGroup::new(vec![2, 0]).is_err());
    }

    #[test]
    fn validation_examples() {
        assert!(Bicharacter::super_sign().validate().passed());
        let bad = Bicharacter::new(GradingGroup::cyclic(3), 3, vec![vec![1]]).unwrap();
        let report = bad.validate();
        assert!(!report.passed());
        assert!(report.violations.contains(&BicharacterViolation::Symmetry { i: 0, j: 0 }));
        let g = GradingGroup::new(vec![3, 3]).unwrap();
        let good = Bicharacter::new(g, 3, vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert!(good.validate().passed());
        assert!(matches!(
            Bicharacter::new(GradingGroup::cyclic(2), 2, vec![vec![1, 0]]),
            Err(GradingError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn evaluation_examples() {
        let s = Bicharacter::super_sign();
        let one = s.group().degree(&[1]).unwrap();
        let eps = Epsilon::<Cyclotomic>::new(s.clone()).unwrap();
        assert_eq!(eps.eps(&one, &one), -Cyclotomic::one());
        assert_eq!(s.eval(&s.group().zero(), &one).unwrap(), RootOfUnity::one(2));

        let g = GradingGroup::new(vec![3, 3]).unwrap();
        let b = Bicharacter::new(g.clone(), 3, vec![vec![0, 1], vec![2, 0]]).unwrap();
        let v = b.eval(&g.generator(0), &g.generator(1)).unwrap();
        assert_eq!(v, RootOfUnity { order: 3, exponent: 1 });
        let eps = Epsilon::<Cyclotomic>::new(b).unwrap();
        assert_eq!(
            eps.eps(&g.generator(0), &g.generator(1)),
            Cyclotomic::root_of_unity_in(3, 1).unwrap()
        );
    }

    #[test]
    fn rational_field_rejects_cube_roots() {
        let g = GradingGroup::new(vec![3, 3]).unwrap();
        let b = Bicharacter::new(g, 3, vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert!(matches!(
            Epsilon::<num_rational::BigRational>::new(b),
            Err(GradingError::RootNotInField { .. })
        ));
    }
}
