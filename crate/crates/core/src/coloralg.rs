//! Lie and Leibniz color algebras, representations and quadratic forms.

use thiserror::Error;

use crate::grading::{Degree, Epsilon};
use crate::gvs::{shift_violation, GradedSpace, SpaceError};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Field;
use crate::tensor::Bilinear;
use crate::verdict::{labels, render_vector, vector_witness, Report, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constant entry {position} has an index out of range")]
    InvalidConstants { position: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("bracket is not graded at {0}")]
    NotGraded(Witness),
    #[error("action of basis element {index} is not homogeneous of degree {expected}")]
    ShiftMismatch { index: usize, expected: Degree },
    #[error("not a Lie color algebra: {0} fails")]
    NotLie(String),
    #[error("not a representation at {0}")]
    NotRepresentation(Witness),
    #[error("bilinear form is not quadratic: {0} fails")]
    NotQuadratic(String),
    #[error("grading groups of the inputs differ")]
    GroupMismatch,
}

fn shape_err(expected: impl ToString, found: impl ToString) -> AlgebraError {
    AlgebraError::ShapeMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// A graded space with a bilinear bracket given by structure constants.
///
/// The same type carries Lie color algebras and the non-skew operations of
/// Leibniz color algebras; which identities hold is decided by the checks.
#[derive(Clone, Debug, PartialEq)]
pub struct ColorAlgebra<F> {
    space: GradedSpace,
    eps: Epsilon<F>,
    bracket: Bilinear<F>,
}

impl<F: Field> ColorAlgebra<F> {
    /// Structure constants `(i, j, k, c)` mean `[b_i, b_j] ∋ c·b_k`.
    pub fn new(
        space: GradedSpace,
        eps: Epsilon<F>,
        entries: &[(usize, usize, usize, F)],
    ) -> Result<Self, AlgebraError> {
        let n = space.dim();
        let bracket = Bilinear::from_entries(n, n, n, entries)
            .map_err(|e| AlgebraError::InvalidConstants { position: e.position })?;
        Self::from_table(space, eps, bracket)
    }

    pub fn from_table(
        space: GradedSpace,
        eps: Epsilon<F>,
        bracket: Bilinear<F>,
    ) -> Result<Self, AlgebraError> {
        let n = space.dim();
        if bracket.dims() != (n, n, n) {
            let (a, b, c) = bracket.dims();
            return Err(shape_err(format!("{n}x{n}->{n}"), format!("{a}x{b}->{c}")));
        }
        if eps.group() != space.group() {
            return Err(AlgebraError::GroupMismatch);
        }
        Ok(ColorAlgebra {
            space,
            eps,
            bracket,
        })
    }

    /// The zero bracket on `space`.
    pub fn abelian(space: GradedSpace, eps: Epsilon<F>) -> Result<Self, AlgebraError> {
        let n = space.dim();
        Self::from_table(space, eps, Bilinear::zero(n, n, n))
    }

    /// `gl(V)`: `End(V)` with `[A, B] = AB − ε(A, B)BA` on matrix units.
    pub fn gl(v: &GradedSpace, eps: Epsilon<F>) -> Self {
        let n = v.dim();
        let end = v.end_space();
        let dim = n * n;
        let bracket = Bilinear::from_fn(dim, dim, dim, |a, b| {
            let (r, c) = (a / n, a % n);
            let (s, t) = (b / n, b % n);
            let mut out = Vector::zeros(dim);
            if c == s {
                out.coords[r * n + t] = F::one();
            }
            if t == r {
                let e = eps.eps(end.degree(a), end.degree(b));
                let slot = &mut out.coords[s * n + c];
                *slot = slot.clone() - &e;
            }
            out
        });
        ColorAlgebra {
            space: end,
            eps,
            bracket,
        }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn epsilon(&self) -> &Epsilon<F> {
        &self.eps
    }

    pub fn table(&self) -> &Bilinear<F> {
        &self.bracket
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn entries(&self) -> Vec<(usize, usize, usize, F)> {
        self.bracket.entries()
    }

    pub fn bracket(&self, x: &Vector<F>, y: &Vector<F>) -> Vector<F> {
        self.bracket.eval(x, y)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector<F> {
        self.bracket.get(i, j)
    }

    fn eps_basis(&self, i: usize, j: usize) -> F {
        self.eps.eps(self.space.degree(i), self.space.degree(j))
    }

    /// `ad(x)` as a matrix on the algebra's space.
    pub fn ad(&self, x: &Vector<F>) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vector<F>> = (0..n).map(|j| self.bracket.eval_right_basis(x, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad(&Vector::unit(self.dim(), i))
    }

    /// `[b_i, b_j]` must lie in degree `|b_i| + |b_j|`.
    pub fn check_graded(&self) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let target = self.eps.add(self.space.degree(i), self.space.degree(j));
                let v = self.bracket.get(i, j);
                if v.support().any(|(k, _)| self.space.degree(k) != &target) {
                    let mut proj = v.clone();
                    for (k, c) in proj.coords.iter_mut().enumerate() {
                        if self.space.degree(k) != &target {
                            *c = F::zero();
                        }
                    }
                    return Verdict::Fail(Witness::new(
                        vec![i, j],
                        labels(&self.space, &[i, j]),
                        render_vector(&self.space, v),
                        render_vector(&self.space, &proj),
                    ));
                }
            }
        }
        Verdict::Pass
    }

    pub fn is_graded(&self) -> bool {
        self.check_graded().passed()
    }

    /// `[x, y] = −ε(x, y)[y, x]` on basis pairs.
    pub fn check_skew(&self) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.bracket.get(i, j);
                let rhs = self.bracket.get(j, i).scale(&-self.eps_basis(i, j));
                if let Some(w) = vector_witness(&self.space, &self.space, &[i, j], lhs, &rhs) {
                    return Verdict::Fail(w);
                }
            }
        }
        Verdict::Pass
    }

    /// `ε(z,x)[[x,y],z] + ε(x,y)[[y,z],x] + ε(y,z)[[z,x],y]` on basis elements.
    pub fn j1(&self, x: usize, y: usize, z: usize) -> Vector<F> {
        let b = &self.bracket;
        let mut out = b.eval_right_basis(b.get(x, y), z).scale(&self.eps_basis(z, x));
        out.axpy(&self.eps_basis(x, y), &b.eval_right_basis(b.get(y, z), x));
        out.axpy(&self.eps_basis(y, z), &b.eval_right_basis(b.get(z, x), y));
        out
    }

    /// `[[x,y],z] − [x,[y,z]] + ε(x,y)[y,[x,z]]` on basis elements.
    pub fn j2(&self, x: usize, y: usize, z: usize) -> Vector<F> {
        let b = &self.bracket;
        let mut out = b.eval_right_basis(b.get(x, y), z);
        out = out.sub(&b.eval_left_basis(x, b.get(y, z)));
        out.axpy(&self.eps_basis(x, y), &b.eval_left_basis(y, b.get(x, z)));
        out
    }

    fn sweep3(&self, mut f: impl FnMut(usize, usize, usize) -> Option<Witness>) -> Verdict {
        let n = self.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if let Some(w) = f(x, y, z) {
                        return Verdict::Fail(w);
                    }
                }
            }
        }
        Verdict::Pass
    }

    pub fn check_j1(&self) -> Verdict {
        let zero = Vector::zeros(self.dim());
        self.sweep3(|x, y, z| vector_witness(&self.space, &self.space, &[x, y, z], &self.j1(x, y, z), &zero))
    }

    pub fn check_j2(&self) -> Verdict {
        let zero = Vector::zeros(self.dim());
        self.sweep3(|x, y, z| vector_witness(&self.space, &self.space, &[x, y, z], &self.j2(x, y, z), &zero))
    }

    /// `J₁(x,y,z) = ε(z,x)·J₂(x,y,z)` on all basis triples. Holds for every
    /// ε-skew graded bracket whether or not it satisfies Jacobi.
    pub fn check_j1_j2_relation(&self) -> Verdict {
        self.sweep3(|x, y, z| {
            let rhs = self.j2(x, y, z).scale(&self.eps_basis(z, x));
            vector_witness(&self.space, &self.space, &[x, y, z], &self.j1(x, y, z), &rhs)
        })
    }

    /// Gradedness, ε-skew symmetry and both forms of the ε-Jacobi identity.
    pub fn check_lie(&self) -> Report {
        let graded = self.check_graded();
        let skew = self.check_skew();
        let (j1, j2) = if graded.passed() {
            (self.check_j1(), self.check_j2())
        } else {
            let why = "bracket is not graded".to_string();
            (Verdict::Skipped(why.clone()), Verdict::Skipped(why))
        };
        Report::new()
            .with("graded", graded)
            .with("skew", skew)
            .with("jacobi-j1", j1)
            .with("jacobi-j2", j2)
    }

    pub fn is_lie(&self) -> bool {
        let r = self.check_lie();
        r.checks.iter().all(|c| c.verdict.passed())
    }

    /// Errors with the first failing check unless the algebra is Lie.
    pub fn require_lie(&self) -> Result<(), AlgebraError> {
        let r = self.check_lie();
        match r.checks.iter().find(|c| !c.verdict.passed()) {
            Some(c) => Err(AlgebraError::NotLie(c.name.clone())),
            None => Ok(()),
        }
    }

    /// `x∘(y∘z) = (x∘y)∘z + ε(x,y) y∘(x∘z)` on basis triples. Skewness is
    /// not required, gradedness is.
    pub fn check_leibniz(&self) -> Result<Verdict, AlgebraError> {
        if let Verdict::Fail(w) = self.check_graded() {
            return Err(AlgebraError::NotGraded(w));
        }
        let b = &self.bracket;
        Ok(self.sweep3(|x, y, z| {
            let lhs = b.eval_left_basis(x, b.get(y, z));
            let mut rhs = b.eval_right_basis(b.get(x, y), z);
            rhs.axpy(&self.eps_basis(x, y), &b.eval_left_basis(y, b.get(x, z)));
            vector_witness(&self.space, &self.space, &[x, y, z], &lhs, &rhs)
        }))
    }
}

/// `[A, B] = AB − ε(A, B)BA` for arbitrary maps, extended bilinearly over
/// homogeneous components.
pub fn gl_commutator<F: Field>(
    v: &GradedSpace,
    eps: &Epsilon<F>,
    a: &Matrix<F>,
    b: &Matrix<F>,
) -> Matrix<F> {
    let n = v.dim();
    let mut out = a.mul(b);
    let ca = homogeneous_parts(v, a);
    let cb = homogeneous_parts(v, b);
    for (da, pa) in &ca {
        for (db, pb) in &cb {
            out = out.sub(&pb.mul(pa).scale(&eps.eps(da, db)));
        }
    }
    debug_assert_eq!(out.rows(), n);
    out
}

/// Shift components of an endomorphism of `v`.
pub fn homogeneous_parts<F: Field>(v: &GradedSpace, a: &Matrix<F>) -> Vec<(Degree, Matrix<F>)> {
    let group = v.group();
    let mut parts: Vec<(Degree, Matrix<F>)> = Vec::new();
    for (r, c, x) in a.entries() {
        let d = group
            .sub(v.degree(r), v.degree(c))
            .expect("basis degrees lie in the group");
        let slot = match parts.iter().position(|(e, _)| *e == d) {
            Some(p) => p,
            None => {
                parts.push((d, Matrix::zeros(a.rows(), a.cols())));
                parts.len() - 1
            }
        };
        parts[slot].1[(r, c)] = x.clone();
    }
    parts
}

/// An action of a color algebra on a graded module, one matrix per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F> {
    algebra: ColorAlgebra<F>,
    module: GradedSpace,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Each `maps[i]` must be homogeneous of degree `|b_i|`.
    pub fn new(
        algebra: ColorAlgebra<F>,
        module: GradedSpace,
        maps: Vec<Matrix<F>>,
    ) -> Result<Self, AlgebraError> {
        if maps.len() != algebra.dim() {
            return Err(shape_err(
                format!("{} maps", algebra.dim()),
                format!("{} maps", maps.len()),
            ));
        }
        if module.group() != algebra.space().group() {
            return Err(AlgebraError::GroupMismatch);
        }
        let m = module.dim();
        for (i, map) in maps.iter().enumerate() {
            if map.rows() != m || map.cols() != m {
                return Err(shape_err(
                    format!("{m}x{m}"),
                    format!("{}x{}", map.rows(), map.cols()),
                ));
            }
            let expected = algebra.space().degree(i).clone();
            if shift_violation(&module, &module, map, &expected).is_some() {
                return Err(AlgebraError::ShiftMismatch { index: i, expected });
            }
        }
        Ok(Representation {
            algebra,
            module,
            maps,
        })
    }

    /// The zero action.
    pub fn trivial(algebra: ColorAlgebra<F>, module: GradedSpace) -> Self {
        let m = module.dim();
        let maps = vec![Matrix::zeros(m, m); algebra.dim()];
        Representation {
            algebra,
            module,
            maps,
        }
    }

    /// The adjoint action `ρ(x) = ad(x)`.
    pub fn adjoint(algebra: ColorAlgebra<F>) -> Self {
        let maps = (0..algebra.dim()).map(|i| algebra.ad_basis(i)).collect();
        let module = algebra.space().clone();
        Representation {
            algebra,
            module,
            maps,
        }
    }

    /// `gl(V)` acting on `V` by evaluation.
    pub fn tautological(v: &GradedSpace, eps: Epsilon<F>) -> Self {
        let n = v.dim();
        let maps = (0..n * n)
            .map(|a| Matrix::unit(n, n, a / n, a % n))
            .collect();
        Representation {
            algebra: ColorAlgebra::gl(v, eps),
            module: v.clone(),
            maps,
        }
    }

    pub fn algebra(&self) -> &ColorAlgebra<F> {
        &self.algebra
    }

    pub fn module(&self) -> &GradedSpace {
        &self.module
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// `ρ(x)` for an arbitrary algebra element.
    pub fn rho(&self, x: &Vector<F>) -> Matrix<F> {
        let m = self.module.dim();
        let mut out = Matrix::zeros(m, m);
        for (i, c) in x.support() {
            out = out.add(&self.maps[i].scale(c));
        }
        out
    }

    /// `x ▷ v`
    pub fn act(&self, x: &Vector<F>, v: &Vector<F>) -> Vector<F> {
        self.rho(x).apply(v)
    }

    /// `ρ([x,y])v = ρ(x)ρ(y)v − ε(x,y)ρ(y)ρ(x)v` on basis pairs and module basis vectors.
    pub fn check(&self) -> Verdict {
        let n = self.algebra.dim();
        let m = self.module.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs_map = self.rho(self.algebra.bracket_basis(i, j));
                let e = self.algebra.eps_basis(i, j);
                let rhs_map = self.maps[i]
                    .mul(&self.maps[j])
                    .sub(&self.maps[j].mul(&self.maps[i]).scale(&e));
                for v in 0..m {
                    let lhs = lhs_map.column(v);
                    let rhs = rhs_map.column(v);
                    if lhs != rhs {
                        let mut names = labels(self.algebra.space(), &[i, j]);
                        names.push(self.module.name(v).to_string());
                        return Verdict::Fail(Witness::new(
                            vec![i, j, v],
                            names,
                            render_vector(&self.module, &lhs),
                            render_vector(&self.module, &rhs),
                        ));
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// `g ⊕ V` with `[x+u, y+v] = [x,y] + x▷v − ε(x,y) y▷u`.
    pub fn semidirect_product(&self) -> Result<ColorAlgebra<F>, AlgebraError> {
        self.algebra.require_lie()?;
        if let Verdict::Fail(w) = self.check() {
            return Err(AlgebraError::NotRepresentation(w));
        }
        let g = self.algebra.space();
        let space = g.direct_sum(&self.module)?;
        let n = g.dim();
        let total = space.dim();
        let eps = self.algebra.epsilon().clone();
        let bracket = Bilinear::from_fn(total, total, total, |a, b| match (a < n, b < n) {
            (true, true) => self.algebra.bracket_basis(a, b).concat(&Vector::zeros(total - n)),
            (true, false) => Vector::zeros(n).concat(&self.maps[a].column(b - n)),
            (false, true) => {
                let e = eps.eps(space.degree(a), space.degree(b));
                Vector::zeros(n).concat(&self.maps[b].column(a - n).scale(&-e))
            }
            (false, false) => Vector::zeros(total),
        });
        ColorAlgebra::from_table(space, eps, bracket)
    }
}

/// A bilinear form `B` on a color algebra given by its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForm<F> {
    algebra: ColorAlgebra<F>,
    gram: Matrix<F>,
}

impl<F: Field> QuadraticForm<F> {
    pub fn new(algebra: ColorAlgebra<F>, gram: Matrix<F>) -> Result<Self, AlgebraError> {
        let n = algebra.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(shape_err(
                format!("{n}x{n}"),
                format!("{}x{}", gram.rows(), gram.cols()),
            ));
        }
        Ok(QuadraticForm { algebra, gram })
    }

    pub fn algebra(&self) -> &ColorAlgebra<F> {
        &self.algebra
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn eval(&self, x: &Vector<F>, y: &Vector<F>) -> F {
        let gy = self.gram.apply(y);
        x.support()
            .fold(F::zero(), |acc, (i, c)| acc + &(c.clone() * &gy.coords[i]))
    }

    /// ε-symmetry, nondegeneracy, invariance and the `B(V_α, V_β) = 0`
    /// unless `α + β = 0` pairing condition.
    pub fn check(&self) -> Report {
        let a = &self.algebra;
        let space = a.space();
        let n = a.dim();
        let mut symmetric = Verdict::Pass;
        let mut pairing = Verdict::Pass;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.gram[(i, j)].clone();
                let rhs = a.eps_basis(i, j) * &self.gram[(j, i)];
                if lhs != rhs {
                    symmetric = Verdict::Fail(Witness::new(
                        vec![i, j],
                        labels(space, &[i, j]),
                        lhs.to_string(),
                        rhs.to_string(),
                    ));
                    break 'outer;
                }
            }
        }
        'outer2: for i in 0..n {
            for j in 0..n {
                let sum = a.eps.add(space.degree(i), space.degree(j));
                if !self.gram[(i, j)].is_zero() && sum != space.group().zero() {
                    pairing = Verdict::Fail(Witness::new(
                        vec![i, j],
                        labels(space, &[i, j]),
                        self.gram[(i, j)].to_string(),
                        "0".to_string(),
                    ));
                    break 'outer2;
                }
            }
        }
        let rank = self.gram.rank();
        let nondegenerate = if rank == n {
            Verdict::Pass
        } else {
            Verdict::Fail(Witness::new(
                vec![],
                vec![],
                format!("rank {rank}"),
                format!("rank {n}"),
            ))
        };
        let invariant = a.sweep3(|x, y, z| {
            let lhs = self.eval(a.bracket_basis(x, y), &Vector::unit(n, z));
            let rhs = self.eval(&Vector::unit(n, x), a.bracket_basis(y, z));
            (lhs != rhs).then(|| {
                Witness::new(
                    vec![x, y, z],
                    labels(space, &[x, y, z]),
                    lhs.to_string(),
                    rhs.to_string(),
                )
            })
        });
        Report::new()
            .with("eps-symmetric", symmetric)
            .with("nondegenerate", nondegenerate)
            .with("invariant", invariant)
            .with("graded-pairing", pairing)
    }
}
