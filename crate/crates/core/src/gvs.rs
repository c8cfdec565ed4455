//! Finite-dimensional graded vector spaces, graded linear maps and subspaces.
//!
//! `End(V)` carries the shift grading: a map `A` has degree `δ` when it sends
//! `V_γ` into `V_{γ+δ}` for every `γ`. Its basis is the matrix units
//! `E(r,c)` in row-major order, so a [`Matrix`] flattens directly into
//! coordinates on [`GradedSpace::end_space`].

use std::collections::BTreeMap;

use thiserror::Error;

use crate::grading::{Degree, GradingError, GradingGroup};
use crate::linalg::{kernel_of_rows, rref, Matrix, Vector};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("subspace is not graded")]
    NotGraded,
    #[error("map entry ({row},{col}) is not of shift {shift}")]
    ShiftMismatch { row: usize, col: usize, shift: Degree },
}

fn shape(expected: impl ToString, found: impl ToString) -> SpaceError {
    SpaceError::ShapeMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: Degree,
}

/// `V = ⊕_α V_α` with a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    group: GradingGroup,
    basis: Vec<BasisElement>,
}

/// How a vector sits with respect to the grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(Degree),
    Mixed,
}

impl GradedSpace {
    pub fn new(
        group: GradingGroup,
        basis: impl IntoIterator<Item = (String, Degree)>,
    ) -> Result<Self, SpaceError> {
        let mut out = GradedSpace {
            group,
            basis: Vec::new(),
        };
        for (name, degree) in basis {
            if !out.group.contains(&degree) {
                return Err(GradingError::GroupMismatch(degree, out.group.clone()).into());
            }
            if out.basis.iter().any(|b| b.name == name) {
                return Err(SpaceError::DuplicateName(name));
            }
            out.basis.push(BasisElement { name, degree });
        }
        Ok(out)
    }

    /// Basis named `{prefix}0, {prefix}1, …` with the given degrees.
    pub fn with_degrees(
        group: GradingGroup,
        prefix: &str,
        degrees: Vec<Degree>,
    ) -> Result<Self, SpaceError> {
        Self::new(
            group,
            degrees
                .into_iter()
                .enumerate()
                .map(|(i, d)| (format!("{prefix}{i}"), d)),
        )
    }

    pub fn zero(group: GradingGroup) -> Self {
        GradedSpace {
            group,
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.basis[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Distinct degrees carried by the basis, sorted.
    pub fn degrees(&self) -> Vec<Degree> {
        let mut ds: Vec<Degree> = self.basis.iter().map(|b| b.degree.clone()).collect();
        ds.sort();
        ds.dedup();
        ds
    }

    pub fn indices_of_degree<'a>(&'a self, d: &'a Degree) -> impl Iterator<Item = usize> + 'a {
        self.basis
            .iter()
            .enumerate()
            .filter(move |(_, b)| &b.degree == d)
            .map(|(i, _)| i)
    }

    /// `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &GradedSpace) -> Result<Self, SpaceError> {
        if self.group != other.group {
            return Err(SpaceError::AmbientMismatch);
        }
        Self::new(
            self.group.clone(),
            self.basis
                .iter()
                .chain(&other.basis)
                .map(|b| (b.name.clone(), b.degree.clone())),
        )
    }

    /// `End(V)` with basis `E(r,c)` (row-major) of degree `|b_r| - |b_c|`.
    pub fn end_space(&self) -> Self {
        let n = self.dim();
        let mut basis = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let d = self
                    .group
                    .sub(self.degree(r), self.degree(c))
                    .expect("basis degrees belong to the group");
                basis.push(BasisElement {
                    name: format!("E({},{})", self.name(r), self.name(c)),
                    degree: d,
                });
            }
        }
        GradedSpace {
            group: self.group.clone(),
            basis,
        }
    }

    pub fn homogeneity<F: Field>(&self, v: &Vector<F>) -> Homogeneity {
        let mut found: Option<&Degree> = None;
        for (i, _) in v.support() {
            let d = self.degree(i);
            match found {
                None => found = Some(d),
                Some(f) if f != d => return Homogeneity::Mixed,
                _ => {}
            }
        }
        match found {
            None => Homogeneity::Zero,
            Some(d) => Homogeneity::Homogeneous(d.clone()),
        }
    }

    /// The nonzero homogeneous components of `v`, by increasing degree.
    pub fn components<F: Field>(&self, v: &Vector<F>) -> Vec<(Degree, Vector<F>)> {
        let mut parts: BTreeMap<Degree, Vector<F>> = BTreeMap::new();
        for (i, x) in v.support() {
            parts
                .entry(self.degree(i).clone())
                .or_insert_with(|| Vector::zeros(v.dim()))
                .coords[i] = x.clone();
        }
        parts.into_iter().collect()
    }

    pub fn check_vector<F: Field>(&self, v: &Vector<F>) -> Result<(), SpaceError> {
        if v.dim() == self.dim() {
            Ok(())
        } else {
            Err(shape(format!("vector of length {}", self.dim()), v.dim()))
        }
    }
}

/// A linear map between graded spaces, homogeneous when `shift` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap<F> {
    domain: GradedSpace,
    codomain: GradedSpace,
    matrix: Matrix<F>,
    shift: Option<Degree>,
}

impl<F: Field> GradedMap<F> {
    /// Wraps `matrix`; the shift is detected when all nonzero entries agree.
    pub fn new(
        domain: GradedSpace,
        codomain: GradedSpace,
        matrix: Matrix<F>,
    ) -> Result<Self, SpaceError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(shape(
                format!("{}x{}", codomain.dim(), domain.dim()),
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        let shift = detect_shift(&domain, &codomain, &matrix);
        Ok(GradedMap {
            domain,
            codomain,
            matrix,
            shift,
        })
    }

    /// Wraps `matrix`, requiring it to be homogeneous of degree `shift`.
    pub fn with_shift(
        domain: GradedSpace,
        codomain: GradedSpace,
        matrix: Matrix<F>,
        shift: Degree,
    ) -> Result<Self, SpaceError> {
        let mut map = Self::new(domain, codomain, matrix)?;
        if let Some((row, col)) = shift_violation(&map.domain, &map.codomain, &map.matrix, &shift) {
            return Err(SpaceError::ShiftMismatch { row, col, shift });
        }
        map.shift = Some(shift);
        Ok(map)
    }

    pub fn identity(space: &GradedSpace) -> Self {
        GradedMap {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Matrix::identity(space.dim()),
            shift: Some(space.group().zero()),
        }
    }

    pub fn zero(domain: &GradedSpace, codomain: &GradedSpace) -> Self {
        GradedMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Matrix::zeros(codomain.dim(), domain.dim()),
            shift: None,
        }
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn shift(&self) -> Option<&Degree> {
        self.shift.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, v: &Vector<F>) -> Result<Vector<F>, SpaceError> {
        self.domain.check_vector(v)?;
        Ok(self.matrix.apply(v))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap<F>) -> Result<GradedMap<F>, SpaceError> {
        if other.codomain != self.domain {
            return Err(shape("composable maps", "codomain/domain mismatch"));
        }
        let matrix = self.matrix.mul(&other.matrix);
        let shift = match (&self.shift, &other.shift) {
            (Some(a), Some(b)) => Some(self.domain.group().add(a, b)?),
            _ => detect_shift(&other.domain, &self.codomain, &matrix),
        };
        Ok(GradedMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            matrix,
            shift,
        })
    }

    pub fn add(&self, other: &GradedMap<F>) -> Result<GradedMap<F>, SpaceError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(shape("maps between the same spaces", "different spaces"));
        }
        GradedMap::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    /// The decomposition `f = Σ_δ f_δ` into homogeneous parts, zero parts omitted.
    pub fn homogeneous_components(&self) -> Vec<(Degree, GradedMap<F>)> {
        let group = self.domain.group();
        let mut parts: BTreeMap<Degree, Matrix<F>> = BTreeMap::new();
        for (r, c, x) in self.matrix.entries() {
            let d = group
                .sub(self.codomain.degree(r), self.domain.degree(c))
                .expect("basis degrees belong to the group");
            parts
                .entry(d)
                .or_insert_with(|| Matrix::zeros(self.matrix.rows(), self.matrix.cols()))[(r, c)] =
                x.clone();
        }
        parts
            .into_iter()
            .map(|(d, m)| {
                (
                    d.clone(),
                    GradedMap {
                        domain: self.domain.clone(),
                        codomain: self.codomain.clone(),
                        matrix: m,
                        shift: Some(d),
                    },
                )
            })
            .collect()
    }
}

fn detect_shift<F: Field>(dom: &GradedSpace, cod: &GradedSpace, m: &Matrix<F>) -> Option<Degree> {
    let group = dom.group();
    let mut shift: Option<Degree> = None;
    for (r, c, _) in m.entries() {
        let d = group.sub(cod.degree(r), dom.degree(c)).ok()?;
        match &shift {
            None => shift = Some(d),
            Some(s) if *s != d => return None,
            _ => {}
        }
    }
    shift
}

/// First entry `(row, col)` of `m` breaking homogeneity of degree `shift`.
pub(crate) fn shift_violation<F: Field>(
    dom: &GradedSpace,
    cod: &GradedSpace,
    m: &Matrix<F>,
    shift: &Degree,
) -> Option<(usize, usize)> {
    let group = dom.group();
    m.entries()
        .find(|(r, c, _)| group.add(dom.degree(*c), shift).ok().as_ref() != Some(cod.degree(*r)))
        .map(|(r, c, _)| (r, c))
}

/// A linear subspace stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: GradedSpace,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
    graded: bool,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: &GradedSpace, vectors: &[Vector<F>]) -> Result<Self, SpaceError> {
        for v in vectors {
            ambient.check_vector(v)?;
        }
        Ok(Self::from_rows_unchecked(
            ambient.clone(),
            vectors.iter().map(|v| v.coords.clone()).collect(),
        ))
    }

    fn from_rows_unchecked(ambient: GradedSpace, mut rows: Vec<Vec<F>>) -> Self {
        let pivots = rref(&mut rows);
        let mut s = Subspace {
            ambient,
            rows: rows.into_iter().map(Vector::new).collect(),
            pivots,
            graded: false,
        };
        s.graded = s.compute_graded();
        s
    }

    pub fn zero(ambient: &GradedSpace) -> Self {
        Subspace {
            ambient: ambient.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
            graded: true,
        }
    }

    pub fn full(ambient: &GradedSpace) -> Self {
        let n = ambient.dim();
        Self::from_rows_unchecked(
            ambient.clone(),
            (0..n).map(|i| Vector::<F>::unit(n, i).coords).collect(),
        )
    }

    pub fn ambient(&self) -> &GradedSpace {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The echelon basis.
    pub fn basis(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &Vector<F>) -> Vector<F> {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out.coords[p].clone();
            if !c.is_zero() {
                out.axpy(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector<F>) -> bool {
        v.dim() == self.ambient.dim() && self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &Vector<F>) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.coords[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<(), SpaceError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(SpaceError::AmbientMismatch)
        }
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Self, SpaceError> {
        self.check_ambient(other)?;
        let rows = self
            .rows
            .iter()
            .chain(&other.rows)
            .map(|v| v.coords.clone())
            .collect();
        Ok(Self::from_rows_unchecked(self.ambient.clone(), rows))
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Self, SpaceError> {
        self.check_ambient(other)?;
        let n = self.ambient.dim();
        let (p, q) = (self.dim(), other.dim());
        // Σ a_i u_i - Σ b_j w_j = 0
        let system: Vec<Vec<F>> = (0..n)
            .map(|r| {
                self.rows
                    .iter()
                    .map(|u| u.coords[r].clone())
                    .chain(other.rows.iter().map(|w| -w.coords[r].clone()))
                    .collect()
            })
            .collect();
        let vectors: Vec<Vec<F>> = kernel_of_rows(system, p + q)
            .into_iter()
            .map(|k| {
                let mut v = Vector::zeros(n);
                for (a, u) in k.coords[..p].iter().zip(&self.rows) {
                    v.axpy(a, u);
                }
                v.coords
            })
            .collect();
        Ok(Self::from_rows_unchecked(self.ambient.clone(), vectors))
    }

    /// Vectors `a` with `Σ a_i w_i = 0` for every `w` in the subspace.
    pub fn annihilator_rows(&self) -> Vec<Vector<F>> {
        kernel_of_rows(
            self.rows.iter().map(|v| v.coords.clone()).collect(),
            self.ambient.dim(),
        )
    }

    /// `ker f` as a subspace of the domain.
    pub fn kernel(map: &GradedMap<F>) -> Self {
        Self::from_rows_unchecked(
            map.domain().clone(),
            map.matrix().kernel().into_iter().map(|v| v.coords).collect(),
        )
    }

    /// `im f` as a subspace of the codomain.
    pub fn image(map: &GradedMap<F>) -> Self {
        let cols = (0..map.matrix().cols())
            .map(|c| map.matrix().column(c).coords)
            .collect();
        Self::from_rows_unchecked(map.codomain().clone(), cols)
    }

    /// `f⁻¹(W) = {x : f(x) ∈ W}`.
    pub fn preimage(map: &GradedMap<F>, target: &Subspace<F>) -> Result<Self, SpaceError> {
        if map.codomain() != &target.ambient {
            return Err(SpaceError::AmbientMismatch);
        }
        let ann = target.annihilator_rows();
        let n = map.domain().dim();
        let system: Vec<Vec<F>> = ann
            .iter()
            .map(|a| {
                (0..n)
                    .map(|c| {
                        let mut s = F::zero();
                        for (r, x) in a.support() {
                            let m = &map.matrix()[(r, c)];
                            if !m.is_zero() {
                                s = s + &(x.clone() * m);
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(Self::from_rows_unchecked(
            map.domain().clone(),
            kernel_of_rows(system, n).into_iter().map(|v| v.coords).collect(),
        ))
    }

    fn compute_graded(&self) -> bool {
        self.rows.iter().all(|row| {
            self.ambient
                .components(row)
                .iter()
                .all(|(_, part)| self.reduce(part).is_zero())
        })
    }

    /// A homogeneous basis. For a graded subspace the echelon rows are
    /// themselves homogeneous.
    pub fn homogeneous_basis(&self) -> Result<Vec<(Degree, Vector<F>)>, SpaceError> {
        if !self.graded {
            return Err(SpaceError::NotGraded);
        }
        Ok(self
            .rows
            .iter()
            .map(|r| match self.ambient.homogeneity(r) {
                Homogeneity::Homogeneous(d) => (d, r.clone()),
                _ => unreachable!("echelon rows of a graded subspace are homogeneous"),
            })
            .collect())
    }

    /// `W ∩ V_α`.
    pub fn component(&self, degree: &Degree) -> Result<Self, SpaceError> {
        let rows = self
            .homogeneous_basis()?
            .into_iter()
            .filter(|(d, _)| d == degree)
            .map(|(_, v)| v.coords)
            .collect();
        Ok(Self::from_rows_unchecked(self.ambient.clone(), rows))
    }
}

/// `W⁰ = {X ∈ End(V) : X(w) = 0 for all w ∈ W}`.
pub fn annihilator_in_end<F: Field>(w: &Subspace<F>) -> Subspace<F> {
    let v = w.ambient();
    let n = v.dim();
    let end = v.end_space();
    // unknowns x_{rc}; equations (X w)_r = Σ_c x_{rc} w_c = 0
    let mut system = Vec::with_capacity(w.dim() * n);
    for wv in w.basis() {
        for r in 0..n {
            let mut row = vec![F::zero(); n * n];
            for (c, x) in wv.support() {
                row[r * n + c] = x.clone();
            }
            system.push(row);
        }
    }
    Subspace::from_rows_unchecked(
        end,
        kernel_of_rows(system, n * n).into_iter().map(|k| k.coords).collect(),
    )
}

/// `D⁰ = {x ∈ V : X(x) = 0 for all X ∈ D}` for a graded `D ⊆ End(V)`.
pub fn null_space<F: Field>(d: &Subspace<F>, v: &GradedSpace) -> Result<Subspace<F>, SpaceError> {
    if d.ambient() != &v.end_space() {
        return Err(SpaceError::AmbientMismatch);
    }
    if !d.is_graded() {
        return Err(SpaceError::NotGraded);
    }
    let n = v.dim();
    let mut system = Vec::with_capacity(d.dim() * n);
    for x in d.basis() {
        let m = Matrix::from_flat(n, n, &x.coords);
        system.extend(m.to_rows());
    }
    Ok(Subspace::from_rows_unchecked(
        v.clone(),
        kernel_of_rows(system, n).into_iter().map(|k| k.coords).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn super_space(degs: &[i64]) -> GradedSpace {
        let g = GradingGroup::cyclic(2);
        GradedSpace::with_degrees(g.clone(), "v", degs.iter().map(|&d| g.degree(&[d]).unwrap()).collect())
            .unwrap()
    }

    fn vecq(xs: &[i64]) -> Vector<Q> {
        Vector::new(xs.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn duplicate_names_rejected() {
        let g = GradingGroup::trivial();
        let z = g.zero();
        let err = GradedSpace::new(g, [("a".to_string(), z.clone()), ("a".to_string(), z)]);
        assert_eq!(err, Err(SpaceError::DuplicateName("a".into())));
    }

    #[test]
    fn end_space_grading() {
        let v = super_space(&[0, 1]);
        let end = v.end_space();
        assert_eq!(end.dim(), 4);
        let degs: Vec<u32> = end.basis().iter().map(|b| b.degree.residues()[0]).collect();
        assert_eq!(degs, vec![0, 1, 1, 0]);
    }

    #[test]
    fn compose_identity_and_shifts() {
        let v = super_space(&[0, 1]);
        let odd = GradedMap::new(v.clone(), v.clone(), Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(2), q(0)]]))
            .unwrap();
        assert_eq!(odd.shift(), Some(&v.group().degree(&[1]).unwrap()));
        let id = GradedMap::identity(&v);
        assert_eq!(id.compose(&odd).unwrap().matrix(), odd.matrix());
        let sq = odd.compose(&odd).unwrap();
        assert_eq!(sq.shift(), Some(&v.group().zero()));
        let zero = GradedMap::<Q>::zero(&v, &v);
        assert!(zero.apply(&vecq(&[3, 4])).unwrap().is_zero());
        assert!(zero.homogeneous_components().is_empty());
    }

    #[test]
    fn with_shift_rejects_wrong_degree() {
        let v = super_space(&[0, 1]);
        let m = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(0)]]);
        let err = GradedMap::with_shift(v.clone(), v.clone(), m, v.group().zero());
        assert!(matches!(err, Err(SpaceError::ShiftMismatch { row: 0, col: 1, .. })));
    }

    #[test]
    fn components_reassemble() {
        let v = super_space(&[0, 1, 1]);
        let m = Matrix::from_rows(vec![
            vec![q(1), q(2), q(0)],
            vec![q(3), q(4), q(5)],
            vec![q(0), q(6), q(7)],
        ]);
        let f = GradedMap::new(v.clone(), v.clone(), m.clone()).unwrap();
        assert_eq!(f.shift(), None);
        let parts = f.homogeneous_components();
        assert_eq!(parts.len(), 2);
        let total = parts.iter().fold(Matrix::zeros(3, 3), |acc, (_, p)| acc.add(p.matrix()));
        assert_eq!(total, m);
        let id = GradedMap::<Q>::identity(&v);
        let parts = id.homogeneous_components();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, v.group().zero());
    }

    #[test]
    fn subspace_operations() {
        let v = super_space(&[0, 0, 1]);
        let a = Subspace::span(&v, &[vecq(&[1, 1, 0]), vecq(&[0, 0, 1])]).unwrap();
        let b = Subspace::span(&v, &[vecq(&[1, 0, 0]), vecq(&[0, 1, 1])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&vecq(&[1, 1, 1])));
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(&v));
        assert!(a.is_graded());
        assert!(!b.is_graded());
        assert!(a.contains(&vecq(&[2, 2, 5])));
        assert_eq!(a.coordinates(&vecq(&[2, 2, 5])), Some(vec![q(2), q(5)]));

        let id = GradedMap::<Q>::identity(&v);
        assert_eq!(Subspace::kernel(&id).dim(), 0);
        let single = Subspace::span(&v, &[vecq(&[1, 2, 3])]).unwrap();
        assert!(single.contains(&vecq(&[1, 2, 3])));
        // order of generators does not matter
        let s1 = Subspace::span(&v, &[vecq(&[1, 1, 0]), vecq(&[0, 0, 1])]).unwrap();
        let s2 = Subspace::span(&v, &[vecq(&[0, 0, 2]), vecq(&[3, 3, 1])]).unwrap();
        assert_eq!(s1, s2);
    }

    #[test]
    fn preimage_under_projection() {
        let v = super_space(&[0, 0, 1]);
        let p = GradedMap::new(
            v.clone(),
            v.clone(),
            Matrix::from_rows(vec![vec![q(1), q(0), q(0)], vec![q(0), q(0), q(0)], vec![q(0), q(0), q(0)]]),
        )
        .unwrap();
        let target = Subspace::<Q>::zero(&v);
        let pre = Subspace::preimage(&p, &target).unwrap();
        assert_eq!(pre, Subspace::span(&v, &[vecq(&[0, 1, 0]), vecq(&[0, 0, 1])]).unwrap());
        assert_eq!(Subspace::image(&p).dim(), 1);
    }

    #[test]
    fn null_space_extremes() {
        let v = super_space(&[0, 1]);
        let end = v.end_space();
        assert_eq!(null_space(&Subspace::<Q>::full(&end), &v).unwrap().dim(), 0);
        assert_eq!(null_space(&Subspace::<Q>::zero(&end), &v).unwrap(), Subspace::full(&v));
        let w = Subspace::span(&v, &[vecq(&[1, 0])]).unwrap();
        let ann = annihilator_in_end(&w);
        assert_eq!(ann.dim(), 2);
        assert_eq!(null_space(&ann, &v).unwrap(), w);
    }
}
