//! The omni-Lie color algebra `E = gl(V) ⊕ V`, its Dirac structures and
//! the derivations of a Lie color algebra structure on `V`.
//!
//! Elements of `E` are coordinate vectors over [`OmniAlgebra::space`]: the
//! `n²` matrix units of `End(V)` in row-major order followed by the basis
//! of `V`.

use num_traits::Zero;
use thiserror::Error;

use crate::coloralg::{gl_commutator, AlgebraError, ColorAlgebra};
use crate::grading::{Degree, Epsilon};
use crate::gvs::{annihilator_in_end, null_space, GradedSpace, Homogeneity, SpaceError, Subspace};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Field;
use crate::tensor::{Bilinear, Trilinear};
use crate::verdict::{labels, render_vector, vector_witness, Report, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmniError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("the bracket is not ε-skew at {0}")]
    NotSkew(Witness),
    #[error("the bracket is not graded at {0}")]
    NotGraded(Witness),
    #[error("subspace is not maximal isotropic: {0} fails")]
    NotMaximalIsotropic(String),
    #[error("subspace is not a Dirac structure: {0} fails")]
    NotDirac(String),
    #[error("structure is not a Lie color algebra: {0} fails")]
    NotLie(String),
    #[error("no characteristic pair: {0}")]
    NoCharacteristicPair(String),
    #[error("element does not belong to this omni-Lie algebra: {0}")]
    SpaceMismatch(String),
    #[error("generators must be linearly independent and homogeneous of the bracket's degrees")]
    BadGenerators,
}

/// `A + x` with `A ∈ gl(V)` and `x ∈ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmniElement<F> {
    pub endo: Matrix<F>,
    pub vec: Vector<F>,
}

impl<F: Field> OmniElement<F> {
    pub fn new(endo: Matrix<F>, vec: Vector<F>) -> Self {
        OmniElement { endo, vec }
    }

    pub fn zero(n: usize) -> Self {
        OmniElement {
            endo: Matrix::zeros(n, n),
            vec: Vector::zeros(n),
        }
    }

    pub fn from_endo(endo: Matrix<F>) -> Self {
        let n = endo.rows();
        OmniElement {
            endo,
            vec: Vector::zeros(n),
        }
    }

    pub fn from_vec(vec: Vector<F>) -> Self {
        let n = vec.dim();
        OmniElement {
            endo: Matrix::zeros(n, n),
            vec,
        }
    }

    /// Coordinates over `gl(V) ⊕ V`.
    pub fn to_coords(&self) -> Vector<F> {
        self.endo.flatten().concat(&self.vec)
    }

    pub fn from_coords(n: usize, v: &Vector<F>) -> Self {
        OmniElement {
            endo: Matrix::from_flat(n, n, &v.coords[..n * n]),
            vec: v.slice(n * n, n * n + n),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        OmniElement {
            endo: self.endo.add(&other.endo),
            vec: self.vec.add(&other.vec),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        OmniElement {
            endo: self.endo.scale(c),
            vec: self.vec.scale(c),
        }
    }
}

/// `E = gl(V) ⊕ V` with `∘`, `⟦·,·⟧` and the `V`-valued pairing `⟨·,·⟩`.
#[derive(Clone, Debug)]
pub struct OmniAlgebra<F> {
    v: GradedSpace,
    eps: Epsilon<F>,
    space: GradedSpace,
    circ: Bilinear<F>,
    bracket: Bilinear<F>,
    pairing: Bilinear<F>,
}

impl<F: Field> OmniAlgebra<F> {
    pub fn new(v: GradedSpace, eps: Epsilon<F>) -> Result<Self, OmniError> {
        if v.group() != eps.group() {
            return Err(AlgebraError::GroupMismatch.into());
        }
        let space = v.end_space().direct_sum(&v)?;
        let mut omni = OmniAlgebra {
            v,
            eps,
            space,
            circ: Bilinear::zero(0, 0, 0),
            bracket: Bilinear::zero(0, 0, 0),
            pairing: Bilinear::zero(0, 0, 0),
        };
        let d = omni.space.dim();
        let n = omni.v.dim();
        let basis: Vec<OmniElement<F>> = (0..d)
            .map(|a| OmniElement::from_coords(n, &Vector::unit(d, a)))
            .collect();
        omni.circ = Bilinear::from_fn(d, d, d, |a, b| omni.circ(&basis[a], &basis[b]).to_coords());
        omni.bracket = Bilinear::from_fn(d, d, d, |a, b| {
            omni.bracket(&basis[a], &basis[b]).to_coords()
        });
        omni.pairing = Bilinear::from_fn(d, d, n, |a, b| omni.pairing(&basis[a], &basis[b]));
        Ok(omni)
    }

    /// The underlying graded space `V`.
    pub fn base(&self) -> &GradedSpace {
        &self.v
    }

    /// The graded space `E`.
    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn epsilon(&self) -> &Epsilon<F> {
        &self.eps
    }

    pub fn n(&self) -> usize {
        self.v.dim()
    }

    /// Index of the first `V` coordinate in `E`.
    pub fn vec_offset(&self) -> usize {
        self.n() * self.n()
    }

    /// Homogeneous components `A_α + x_α`.
    pub fn components(&self, e: &OmniElement<F>) -> Vec<(Degree, OmniElement<F>)> {
        let n = self.n();
        self.space
            .components(&e.to_coords())
            .into_iter()
            .map(|(d, v)| (d, OmniElement::from_coords(n, &v)))
            .collect()
    }

    fn bilinear<T>(
        &self,
        e1: &OmniElement<F>,
        e2: &OmniElement<F>,
        zero: T,
        add: impl Fn(T, T) -> T,
        f: impl Fn(&Degree, &OmniElement<F>, &Degree, &OmniElement<F>) -> T,
    ) -> T {
        let c1 = self.components(e1);
        let c2 = self.components(e2);
        let mut acc = zero;
        for (d1, p1) in &c1 {
            for (d2, p2) in &c2 {
                acc = add(acc, f(d1, p1, d2, p2));
            }
        }
        acc
    }

    fn commutator(&self, da: &Degree, a: &Matrix<F>, db: &Degree, b: &Matrix<F>) -> Matrix<F> {
        a.mul(b).sub(&b.mul(a).scale(&self.eps.eps(da, db)))
    }

    /// `(A+x) ∘ (B+y) = [A,B] + Ay`
    pub fn circ(&self, e1: &OmniElement<F>, e2: &OmniElement<F>) -> OmniElement<F> {
        let n = self.n();
        self.bilinear(e1, e2, OmniElement::zero(n), |a, b| a.add(&b), |d1, p1, d2, p2| {
            OmniElement::new(
                self.commutator(d1, &p1.endo, d2, &p2.endo),
                p1.endo.apply(&p2.vec),
            )
        })
    }

    /// `⟦A+x, B+y⟧ = [A,B] + ½(Ay − ε(x,y)Bx)`
    pub fn bracket(&self, e1: &OmniElement<F>, e2: &OmniElement<F>) -> OmniElement<F> {
        let n = self.n();
        let half = F::from_ratio(1, 2);
        self.bilinear(e1, e2, OmniElement::zero(n), |a, b| a.add(&b), |d1, p1, d2, p2| {
            let e = self.eps.eps(d1, d2);
            let v = p1.endo.apply(&p2.vec).sub(&p2.endo.apply(&p1.vec).scale(&e));
            OmniElement::new(self.commutator(d1, &p1.endo, d2, &p2.endo), v.scale(&half))
        })
    }

    /// `⟨A+x, B+y⟩ = ½(Ay + ε(x,y)Bx)`
    pub fn pairing(&self, e1: &OmniElement<F>, e2: &OmniElement<F>) -> Vector<F> {
        let n = self.n();
        let half = F::from_ratio(1, 2);
        self.bilinear(e1, e2, Vector::zeros(n), |a, b| a.add(&b), |d1, p1, d2, p2| {
            let e = self.eps.eps(d1, d2);
            p1.endo
                .apply(&p2.vec)
                .add(&p2.endo.apply(&p1.vec).scale(&e))
                .scale(&half)
        })
    }

    /// `T(e₁,e₂,e₃) = ⅓{ε(z,x)⟨⟦e₁,e₂⟧,e₃⟩ + ε(x,y)⟨⟦e₂,e₃⟧,e₁⟩ + ε(y,z)⟨⟦e₃,e₁⟧,e₂⟩}`
    pub fn homotopy(
        &self,
        e1: &OmniElement<F>,
        e2: &OmniElement<F>,
        e3: &OmniElement<F>,
    ) -> Vector<F> {
        let third = F::from_ratio(1, 3);
        let mut out = Vector::zeros(self.n());
        for (x, p1) in self.components(e1) {
            for (y, p2) in self.components(e2) {
                for (z, p3) in self.components(e3) {
                    let mut t = self
                        .pairing(&self.bracket(&p1, &p2), &p3)
                        .scale(&self.eps.eps(&z, &x));
                    t.axpy(&self.eps.eps(&x, &y), &self.pairing(&self.bracket(&p2, &p3), &p1));
                    t.axpy(&self.eps.eps(&y, &z), &self.pairing(&self.bracket(&p3, &p1), &p2));
                    out.axpy(&third, &t);
                }
            }
        }
        out
    }

    /// `T` tabulated on basis triples of `E`.
    pub fn homotopy_table(&self) -> Trilinear<F> {
        let d = self.space.dim();
        let n = self.n();
        let basis: Vec<OmniElement<F>> = (0..d)
            .map(|a| OmniElement::from_coords(n, &Vector::unit(d, a)))
            .collect();
        Trilinear::from_fn(d, n, |a, b, c| self.homotopy(&basis[a], &basis[b], &basis[c]))
    }

    pub fn circ_table(&self) -> &Bilinear<F> {
        &self.circ
    }

    pub fn bracket_table(&self) -> &Bilinear<F> {
        &self.bracket
    }

    pub fn pairing_table(&self) -> &Bilinear<F> {
        &self.pairing
    }

    /// `(E, ∘)` as a (Leibniz) color algebra.
    pub fn circ_algebra(&self) -> ColorAlgebra<F> {
        ColorAlgebra::from_table(self.space.clone(), self.eps.clone(), self.circ.clone())
            .expect("omni tables match the omni space")
    }

    /// `(E, ⟦·,·⟧)`, which is ε-skew but not Lie.
    pub fn bracket_algebra(&self) -> ColorAlgebra<F> {
        ColorAlgebra::from_table(self.space.clone(), self.eps.clone(), self.bracket.clone())
            .expect("omni tables match the omni space")
    }

    /// The ε-Leibniz rule for `∘` on all basis triples of `E`.
    pub fn check_leibniz(&self) -> Verdict {
        self.circ_algebra()
            .check_leibniz()
            .expect("the circle product is graded")
    }

    /// `J₁ = T` on all basis triples, with `J₁` taken for `⟦·,·⟧`.
    pub fn check_homotopy(&self) -> Verdict {
        let alg = self.bracket_algebra();
        let d = self.space.dim();
        let t = self.homotopy_table();
        let off = self.vec_offset();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let lhs = alg.j1(a, b, c);
                    let rhs = Vector::zeros(off).concat(t.get(a, b, c));
                    if let Some(w) = vector_witness(&self.space, &self.space, &[a, b, c], &lhs, &rhs) {
                        return Verdict::Fail(w);
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// `e₁∘e₂ = ⟦e₁,e₂⟧ + ⟨e₁,e₂⟩` on basis pairs.
    pub fn check_decomposition(&self) -> Verdict {
        let d = self.space.dim();
        let off = self.vec_offset();
        for a in 0..d {
            for b in 0..d {
                let lhs = self.circ.get(a, b);
                let rhs = self
                    .bracket
                    .get(a, b)
                    .add(&Vector::zeros(off).concat(self.pairing.get(a, b)));
                if let Some(w) = vector_witness(&self.space, &self.space, &[a, b], lhs, &rhs) {
                    return Verdict::Fail(w);
                }
            }
        }
        Verdict::Pass
    }

    fn check_subspace(&self, l: &Subspace<F>) -> Result<(), OmniError> {
        if l.ambient() != &self.space {
            return Err(OmniError::SpaceMismatch("subspace of a different space".into()));
        }
        if !l.is_graded() {
            return Err(SpaceError::NotGraded.into());
        }
        Ok(())
    }

    /// `gl(V)` as a subspace of `E`.
    pub fn gl_subspace(&self) -> Subspace<F> {
        let d = self.space.dim();
        let vs: Vec<Vector<F>> = (0..self.vec_offset()).map(|a| Vector::unit(d, a)).collect();
        Subspace::span(&self.space, &vs).expect("units have the right length")
    }

    /// `V` as a subspace of `E`.
    pub fn vec_subspace(&self) -> Subspace<F> {
        let d = self.space.dim();
        let vs: Vec<Vector<F>> = (self.vec_offset()..d).map(|a| Vector::unit(d, a)).collect();
        Subspace::span(&self.space, &vs).expect("units have the right length")
    }

    /// `{X + x : X ∈ D, x ∈ 0}` for `D ⊆ End(V)`.
    pub fn embed_endos(&self, d: &Subspace<F>) -> Result<Subspace<F>, OmniError> {
        if d.ambient() != &self.v.end_space() {
            return Err(OmniError::SpaceMismatch("expected a subspace of End(V)".into()));
        }
        let n = self.n();
        let vs: Vec<Vector<F>> = d.basis().iter().map(|x| x.concat(&Vector::zeros(n))).collect();
        Ok(Subspace::span(&self.space, &vs)?)
    }

    /// `L^⊥ = {e : ⟨e, l⟩ = 0 for all l ∈ L}`.
    pub fn orth_complement(&self, l: &Subspace<F>) -> Result<Subspace<F>, OmniError> {
        self.check_subspace(l)?;
        let d = self.space.dim();
        // one equation per (generator of L, coordinate of V); unknowns are the coordinates of e
        let mut system: Vec<Vec<F>> = Vec::new();
        for g in l.basis() {
            let columns: Vec<Vector<F>> = (0..d).map(|a| self.pairing.eval_left_basis(a, g)).collect();
            for k in 0..self.n() {
                system.push(columns.iter().map(|c| c.coords[k].clone()).collect());
            }
        }
        let kernel = crate::linalg::kernel_of_rows(system, d);
        Ok(Subspace::span(&self.space, &kernel)?)
    }

    /// Isotropic, then maximal, then closed; later checks are skipped after a failure.
    pub fn is_dirac(&self, l: &Subspace<F>) -> Result<Report, OmniError> {
        self.check_subspace(l)?;
        let basis = l.basis();
        let names: Vec<String> = (0..basis.len()).map(|i| format!("L[{i}]")).collect();
        let mut isotropic = Verdict::Pass;
        'iso: for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let p = self.pairing.eval(a, b);
                if !p.is_zero() {
                    isotropic = Verdict::Fail(Witness::new(
                        vec![i, j],
                        vec![names[i].clone(), names[j].clone()],
                        render_vector(&self.v, &p),
                        "0".into(),
                    ));
                    break 'iso;
                }
            }
        }
        let skipped = |why: &str| Verdict::Skipped(why.to_string());
        if !isotropic.passed() {
            return Ok(Report::new()
                .with("isotropic", isotropic)
                .with("maximal", skipped("not isotropic"))
                .with("closed", skipped("not isotropic")));
        }
        let perp = self.orth_complement(l)?;
        let maximal = if perp.dim() == l.dim() {
            Verdict::Pass
        } else {
            let extra = perp
                .basis()
                .iter()
                .find(|v| !l.contains(v))
                .expect("L is contained in its complement");
            Verdict::Fail(Witness::new(
                vec![],
                vec![render_vector(&self.space, extra)],
                format!("dim L^perp = {}", perp.dim()),
                format!("dim L = {}", l.dim()),
            ))
        };
        if !maximal.passed() {
            return Ok(Report::new()
                .with("isotropic", isotropic)
                .with("maximal", maximal)
                .with("closed", skipped("not maximal")));
        }
        let mut closed = Verdict::Pass;
        'cl: for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let br = self.bracket.eval(a, b);
                if !l.contains(&br) {
                    let inside = br.sub(&l.reduce(&br));
                    closed = Verdict::Fail(Witness::new(
                        vec![i, j],
                        vec![names[i].clone(), names[j].clone()],
                        render_vector(&self.space, &br),
                        render_vector(&self.space, &inside),
                    ));
                    break 'cl;
                }
            }
        }
        Ok(Report::new()
            .with("isotropic", isotropic)
            .with("maximal", maximal)
            .with("closed", closed))
    }

    fn check_on_base(&self, omega: &ColorAlgebra<F>) -> Result<(), OmniError> {
        if omega.space() != &self.v || omega.epsilon() != &self.eps {
            return Err(OmniError::SpaceMismatch("bracket on a different space".into()));
        }
        Ok(())
    }

    /// `F_ω = {ad_ω(x) + x}`; refuses brackets that are not graded and ε-skew.
    pub fn graph_of_adjoint(&self, omega: &ColorAlgebra<F>) -> Result<Subspace<F>, OmniError> {
        self.check_on_base(omega)?;
        if let Verdict::Fail(w) = omega.check_graded() {
            return Err(OmniError::NotGraded(w));
        }
        if let Verdict::Fail(w) = omega.check_skew() {
            return Err(OmniError::NotSkew(w));
        }
        let n = self.n();
        let vs: Vec<Vector<F>> = (0..n)
            .map(|i| omega.ad_basis(i).flatten().concat(&Vector::unit(n, i)))
            .collect();
        Ok(Subspace::span(&self.space, &vs)?)
    }

    /// The characteristic pair `(D, π)` of a maximal isotropic `L`, with the
    /// three conditions deciding whether `L` is Dirac.
    pub fn characteristic_pair(&self, l: &Subspace<F>) -> Result<CharacteristicPair<F>, OmniError> {
        self.check_subspace(l)?;
        let iso = self.is_dirac(l)?;
        for name in ["isotropic", "maximal"] {
            if !iso.get(name).is_some_and(Verdict::passed) {
                return Err(OmniError::NotMaximalIsotropic(name.into()));
            }
        }
        let n = self.n();
        let off = self.vec_offset();
        let end = self.v.end_space();
        let in_gl = l.intersect(&self.gl_subspace())?;
        let d_vs: Vec<Vector<F>> = in_gl.basis().iter().map(|x| x.slice(0, off)).collect();
        let d = Subspace::span(&end, &d_vs)?;
        let d0 = null_space(&d, &self.v)?;

        // π(x) for each homogeneous basis vector x of D⁰, from X + x ∈ L_α
        let mut pi = Vec::with_capacity(d0.dim());
        for (deg, x) in d0.homogeneous_basis()? {
            let comp = l.component(&deg)?;
            let cols: Vec<Vector<F>> = comp.basis().iter().map(|g| g.slice(off, off + n)).collect();
            let proj = Matrix::from_columns(n, &cols);
            let coeffs = proj.solve(&x).ok_or_else(|| {
                OmniError::NoCharacteristicPair(format!(
                    "{} is not the V-part of an element of L",
                    render_vector(&self.v, &x)
                ))
            })?;
            let mut e = Vector::zeros(off + n);
            for (c, g) in coeffs.coords.iter().zip(comp.basis()) {
                e.axpy(c, g);
            }
            let endo = d.reduce(&e.slice(0, off));
            pi.push(Matrix::from_flat(n, n, &endo.coords));
        }

        let subalgebra = self.check_subalgebra(&d);
        let pair = CharacteristicPair {
            d,
            d0,
            pi,
            subalgebra,
            pi_jacobi: Verdict::Pass,
            pi_closed: Verdict::Pass,
        };
        Ok(pair.with_conditions(self))
    }

    fn check_subalgebra(&self, d: &Subspace<F>) -> Verdict {
        let n = self.n();
        let end = self.v.end_space();
        for (i, a) in d.basis().iter().enumerate() {
            for (j, b) in d.basis().iter().enumerate() {
                let c = gl_commutator(
                    &self.v,
                    &self.eps,
                    &Matrix::from_flat(n, n, &a.coords),
                    &Matrix::from_flat(n, n, &b.coords),
                )
                .flatten();
                if !d.contains(&c) {
                    return Verdict::Fail(Witness::new(
                        vec![i, j],
                        vec![format!("D[{i}]"), format!("D[{j}]")],
                        render_vector(&end, &c),
                        render_vector(&end, &c.sub(&d.reduce(&c))),
                    ));
                }
            }
        }
        Verdict::Pass
    }

    /// `L = W⁰ ⊕ F_{π|W}` for a Lie color algebra on `W = span(generators)`.
    ///
    /// `π` extends `ad` by zero on the complement of `W` spanned by the
    /// standard basis vectors at the non-pivot columns of `W`'s echelon form.
    pub fn dirac_from_lie(
        &self,
        generators: &[Vector<F>],
        bracket: &ColorAlgebra<F>,
    ) -> Result<Subspace<F>, OmniError> {
        let w = self.check_generators(generators, bracket)?;
        if let Err(AlgebraError::NotLie(name)) = bracket.require_lie() {
            return Err(OmniError::NotLie(name));
        }
        let n = self.n();
        let k = generators.len();
        let mut cols: Vec<Vector<F>> = generators.to_vec();
        cols.extend(
            (0..n)
                .filter(|c| !w.pivots().contains(c))
                .map(|c| Vector::unit(n, c)),
        );
        let change = Matrix::from_columns(n, &cols)
            .inverse()
            .expect("generators plus complement form a basis");
        // projection onto W in generator coordinates
        let proj = Matrix::from_rows((0..k).map(|r| change.row(r).to_vec()).collect());
        let wmat = Matrix::from_columns(n, generators);
        let mut vs: Vec<Vector<F>> = annihilator_in_end(&w)
            .basis()
            .iter()
            .map(|x| x.concat(&Vector::zeros(n)))
            .collect();
        for (i, g) in generators.iter().enumerate() {
            let pi = wmat.mul(&bracket.ad_basis(i)).mul(&proj);
            vs.push(pi.flatten().concat(g));
        }
        Ok(Subspace::span(&self.space, &vs)?)
    }

    fn check_generators(
        &self,
        generators: &[Vector<F>],
        bracket: &ColorAlgebra<F>,
    ) -> Result<Subspace<F>, OmniError> {
        if generators.len() != bracket.dim() || bracket.epsilon() != &self.eps {
            return Err(OmniError::BadGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            self.v.check_vector(g)?;
            match self.v.homogeneity(g) {
                Homogeneity::Homogeneous(d) if &d == bracket.space().degree(i) => {}
                _ => return Err(OmniError::BadGenerators),
            }
        }
        let w = Subspace::span(&self.v, generators)?;
        if w.dim() != generators.len() {
            return Err(OmniError::BadGenerators);
        }
        Ok(w)
    }

    /// The Lie color algebra `(D⁰, π|_{D⁰})` of a Dirac structure, in the
    /// echelon basis of `D⁰`.
    pub fn lie_from_dirac(&self, l: &Subspace<F>) -> Result<(Vec<Vector<F>>, ColorAlgebra<F>), OmniError> {
        let pair = self.require_dirac_pair(l)?;
        let basis: Vec<Vector<F>> = pair.d0.basis().to_vec();
        let alg = self.lie_on_basis(&pair, &basis)?;
        Ok((basis, alg))
    }

    /// As [`lie_from_dirac`](Self::lie_from_dirac), with structure constants
    /// relative to a chosen homogeneous basis of `D⁰`.
    pub fn lie_from_dirac_in_basis(
        &self,
        l: &Subspace<F>,
        basis: &[Vector<F>],
    ) -> Result<ColorAlgebra<F>, OmniError> {
        let pair = self.require_dirac_pair(l)?;
        let span = Subspace::span(&self.v, basis)?;
        if span != pair.d0 || basis.len() != pair.d0.dim() {
            return Err(OmniError::BadGenerators);
        }
        self.lie_on_basis(&pair, basis)
    }

    fn require_dirac_pair(&self, l: &Subspace<F>) -> Result<CharacteristicPair<F>, OmniError> {
        let report = self.is_dirac(l)?;
        if let Some(c) = report.checks.iter().find(|c| !c.verdict.passed()) {
            return Err(OmniError::NotDirac(c.name.clone()));
        }
        self.characteristic_pair(l)
    }

    fn lie_on_basis(
        &self,
        pair: &CharacteristicPair<F>,
        basis: &[Vector<F>],
    ) -> Result<ColorAlgebra<F>, OmniError> {
        let group = self.v.group().clone();
        let mut degrees = Vec::with_capacity(basis.len());
        for b in basis {
            match self.v.homogeneity(b) {
                Homogeneity::Homogeneous(d) => degrees.push(d),
                _ => return Err(OmniError::BadGenerators),
            }
        }
        let space = GradedSpace::with_degrees(group, "w", degrees)?;
        let k = basis.len();
        let coords = Matrix::from_columns(self.n(), basis);
        let mut entries = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let v = pair.pi_apply(&basis[i], &basis[j]);
                let c = coords
                    .solve(&v)
                    .ok_or_else(|| OmniError::NotDirac("pi-closed".into()))?;
                for (m, x) in c.support() {
                    entries.push((i, j, m, x.clone()));
                }
            }
        }
        Ok(ColorAlgebra::new(space, self.eps.clone(), &entries)?)
    }

    /// Derivations of `ω` computed two ways, with closure under the gl bracket.
    pub fn derivations(&self, omega: &ColorAlgebra<F>) -> Result<Derivations<F>, OmniError> {
        self.check_on_base(omega)?;
        if let Err(AlgebraError::NotLie(name)) = omega.require_lie() {
            return Err(OmniError::NotLie(name));
        }
        let n = self.n();
        let end = self.v.end_space();
        let ads: Vec<Matrix<F>> = (0..n).map(|i| omega.ad_basis(i)).collect();
        let mut der_vs = Vec::new();
        let mut norm_vs = Vec::new();
        for delta in self.v.group().elements() {
            let unknowns: Vec<usize> = end.indices_of_degree(&delta).collect();
            if unknowns.is_empty() {
                continue;
            }
            let mut der_cols = Vec::with_capacity(unknowns.len());
            let mut norm_cols = Vec::with_capacity(unknowns.len());
            for &a in &unknowns {
                let dm = Matrix::unit(n, n, a / n, a % n);
                der_cols.push(derivation_residual(omega, &self.eps, &delta, &dm));
                norm_cols.push(normalizer_residual(omega, &self.eps, &delta, &dm, &ads));
            }
            for (cols, out) in [(der_cols, &mut der_vs), (norm_cols, &mut norm_vs)] {
                let rows = cols[0].dim();
                for k in Matrix::from_columns(rows, &cols).kernel() {
                    let mut v = Vector::zeros(n * n);
                    for (c, &a) in k.coords.iter().zip(&unknowns) {
                        v.coords[a] = c.clone();
                    }
                    out.push(v);
                }
            }
        }
        let der = Subspace::span(&end, &der_vs)?;
        let normalizer = Subspace::span(&end, &norm_vs)?;
        let agree = if der == normalizer {
            Verdict::Pass
        } else {
            Verdict::Fail(Witness::new(
                vec![],
                vec![],
                format!("dim Der = {}", der.dim()),
                format!("dim N = {}", normalizer.dim()),
            ))
        };
        let closed = self.check_subalgebra(&der);
        Ok(Derivations {
            der,
            normalizer,
            agree,
            closed,
        })
    }

    /// `D[x,y] = [Dx,y] + ε(D,x)[x,Dy]` on basis pairs, for `D` of shift `delta`.
    pub fn is_derivation(&self, omega: &ColorAlgebra<F>, delta: &Degree, d: &Matrix<F>) -> Verdict {
        let n = self.n();
        let r = derivation_residual(omega, &self.eps, delta, d);
        match (0..n * n).find(|&p| !r.coords[p * n..(p + 1) * n].iter().all(Zero::is_zero)) {
            None => Verdict::Pass,
            Some(p) => {
                let (x, y) = (p / n, p % n);
                let lhs = d.apply(omega.bracket_basis(x, y));
                let rhs = lhs.sub(&r.slice(p * n, (p + 1) * n));
                Verdict::Fail(Witness::new(
                    vec![x, y],
                    labels(&self.v, &[x, y]),
                    render_vector(&self.v, &lhs),
                    render_vector(&self.v, &rhs),
                ))
            }
        }
    }
}

/// Concatenation over basis pairs `(x, y)` of `D[x,y] − [Dx,y] − ε(δ,x)[x,Dy]`.
fn derivation_residual<F: Field>(
    omega: &ColorAlgebra<F>,
    eps: &Epsilon<F>,
    delta: &Degree,
    d: &Matrix<F>,
) -> Vector<F> {
    let n = omega.dim();
    let space = omega.space();
    let table = omega.table();
    let mut out = Vec::with_capacity(n * n * n);
    for x in 0..n {
        let dx = d.column(x);
        let e = eps.eps(delta, space.degree(x));
        for y in 0..n {
            let mut r = d.apply(table.get(x, y));
            r = r.sub(&table.eval_right_basis(&dx, y));
            r.axpy(&-e.clone(), &table.eval_left_basis(x, &d.column(y)));
            out.extend(r.coords);
        }
    }
    Vector::new(out)
}

/// Concatenation over basis `x` of `[D, ad x] − ad(Dx)`, flattened.
fn normalizer_residual<F: Field>(
    omega: &ColorAlgebra<F>,
    eps: &Epsilon<F>,
    delta: &Degree,
    d: &Matrix<F>,
    ads: &[Matrix<F>],
) -> Vector<F> {
    let n = omega.dim();
    let space = omega.space();
    let mut out = Vec::with_capacity(n * n * n);
    for (x, ad) in ads.iter().enumerate() {
        let e = eps.eps(delta, space.degree(x));
        let comm = d.mul(ad).sub(&ad.mul(d).scale(&e));
        let r = comm.sub(&omega.ad(&d.column(x)));
        out.extend(r.flatten().coords);
    }
    Vector::new(out)
}

/// `(D, π)` with `D = L ∩ gl(V)`, `D⁰` its null space and `π` on a basis of `D⁰`.
#[derive(Clone, Debug)]
pub struct CharacteristicPair<F> {
    pub d: Subspace<F>,
    pub d0: Subspace<F>,
    /// `π(x)` for each echelon basis vector `x` of `D⁰`, reduced modulo `D`.
    pub pi: Vec<Matrix<F>>,
    /// `D` is a subalgebra of `gl(V)`.
    pub subalgebra: Verdict,
    /// `π(π(x,y)) − [π(x),π(y)] ∈ D`.
    pub pi_jacobi: Verdict,
    /// `π(x,y) ∈ D⁰`.
    pub pi_closed: Verdict,
}

impl<F: Field> CharacteristicPair<F> {
    /// `π(x)` for `x ∈ D⁰`.
    pub fn pi_of(&self, x: &Vector<F>) -> Option<Matrix<F>> {
        let coords = self.d0.coordinates(x)?;
        let n = x.dim();
        let mut out = Matrix::zeros(n, n);
        for (c, m) in coords.iter().zip(&self.pi) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        Some(out)
    }

    /// `π(x, y) = π(x)(y)`.
    pub fn pi_apply(&self, x: &Vector<F>, y: &Vector<F>) -> Vector<F> {
        self.pi_of(x)
            .expect("argument lies in the null space")
            .apply(y)
    }

    fn with_conditions(mut self, omni: &OmniAlgebra<F>) -> Self {
        let v = omni.base();
        let end = v.end_space();
        let basis = self.d0.homogeneous_basis().expect("null space of graded D is graded");
        let k = basis.len();
        let name = |i: usize| format!("D0[{i}]");
        self.pi_closed = Verdict::Pass;
        'closed: for i in 0..k {
            for (j, (_, bj)) in basis.iter().enumerate() {
                let p = self.pi[i].apply(bj);
                if !self.d0.contains(&p) {
                    self.pi_closed = Verdict::Fail(Witness::new(
                        vec![i, j],
                        vec![name(i), name(j)],
                        render_vector(v, &p),
                        render_vector(v, &p.sub(&self.d0.reduce(&p))),
                    ));
                    break 'closed;
                }
            }
        }
        if !self.pi_closed.passed() {
            self.pi_jacobi = Verdict::Skipped("π(x,y) leaves D⁰".into());
            return self;
        }
        self.pi_jacobi = Verdict::Pass;
        'jac: for i in 0..k {
            for (j, (_, bj)) in basis.iter().enumerate() {
                let pxy = self.pi[i].apply(bj);
                let lhs = self.pi_of(&pxy).expect("checked above");
                let comm = gl_commutator(v, omni.epsilon(), &self.pi[i], &self.pi[j]);
                let r = lhs.sub(&comm).flatten();
                if !self.d.contains(&r) {
                    self.pi_jacobi = Verdict::Fail(Witness::new(
                        vec![i, j],
                        vec![name(i), name(j)],
                        render_vector(&end, &r),
                        render_vector(&end, &r.sub(&self.d.reduce(&r))),
                    ));
                    break 'jac;
                }
            }
        }
        self
    }

    pub fn report(&self) -> Report {
        Report::new()
            .with("subalgebra", self.subalgebra.clone())
            .with("pi-jacobi", self.pi_jacobi.clone())
            .with("pi-closed", self.pi_closed.clone())
    }
}

/// `Der(V)` from the derivation identity and `N(F_ω)` from the normalizer condition.
#[derive(Clone, Debug)]
pub struct Derivations<F> {
    pub der: Subspace<F>,
    pub normalizer: Subspace<F>,
    pub agree: Verdict,
    pub closed: Verdict,
}

impl<F: Field> Derivations<F> {
    pub fn report(&self) -> Report {
        Report::new()
            .with("der-equals-normalizer", self.agree.clone())
            .with("closed", self.closed.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num_rational::BigRational;

    type Q = BigRational;

    fn super_plane() -> OmniAlgebra<Q> {
        OmniAlgebra::new(fixtures::super_line_pair(), fixtures::super_eps()).unwrap()
    }

    fn half() -> Q {
        Q::from_ratio(1, 2)
    }

    #[test]
    fn pairing_and_bracket_on_basis() {
        let o = super_plane();
        let e00 = OmniElement::from_endo(Matrix::unit(2, 2, 0, 0));
        let v0 = OmniElement::from_vec(Vector::unit(2, 0));
        // ⟨E00, v0⟩ = ½ E00 v0 = ½ v0
        assert_eq!(o.pairing(&e00, &v0).coords, vec![half(), Q::from_i64(0)]);
        // ⟦E00, v0⟧ = ½ E00 v0, ⟦v0, E00⟧ = −½ E00 v0
        assert_eq!(o.bracket(&e00, &v0).vec.coords, vec![half(), Q::from_i64(0)]);
        assert_eq!(o.bracket(&v0, &e00).vec.coords, vec![-half(), Q::from_i64(0)]);
        // e₁ ∘ e₂ = [A,B] + Ay, so v0 ∘ E00 = 0
        assert!(o.circ(&v0, &e00).to_coords().is_zero());
    }

    #[test]
    fn super_plane_identities() {
        let o = super_plane();
        assert!(o.check_leibniz().passed());
        assert!(o.check_homotopy().passed());
        assert!(o.check_decomposition().passed());
    }

    #[test]
    fn graph_of_a_lie_bracket_is_dirac() {
        let g = fixtures::gl11::<Q>();
        let o = OmniAlgebra::new(g.space().clone(), g.epsilon().clone()).unwrap();
        let f = o.graph_of_adjoint(&g).unwrap();
        assert!(o.is_dirac(&f).unwrap().passed());
        let pair = o.characteristic_pair(&f).unwrap();
        assert_eq!(pair.d.dim(), 0);
        assert_eq!(pair.d0.dim(), 4);
        assert!(pair.report().passed());
    }

    #[test]
    fn graph_of_a_non_lie_bracket_is_not_closed() {
        let g = fixtures::broken_jacobi::<Q>();
        let o = OmniAlgebra::new(g.space().clone(), g.epsilon().clone()).unwrap();
        let f = o.graph_of_adjoint(&g).unwrap();
        let report = o.is_dirac(&f).unwrap();
        assert!(report.get("isotropic").unwrap().passed());
        assert!(report.get("maximal").unwrap().passed());
        assert!(report.get("closed").unwrap().witness().is_some());
        let pair = o.characteristic_pair(&f).unwrap();
        assert!(pair.report().get("pi-jacobi").unwrap().witness().is_some());
    }

    #[test]
    fn lie_dirac_roundtrip_on_full_space() {
        let g = fixtures::gl11::<Q>();
        let o = OmniAlgebra::new(g.space().clone(), g.epsilon().clone()).unwrap();
        let gens: Vec<Vector<Q>> = (0..4).map(|i| Vector::unit(4, i)).collect();
        let l = o.dirac_from_lie(&gens, &g).unwrap();
        assert_eq!(l, o.graph_of_adjoint(&g).unwrap());
        let back = o.lie_from_dirac_in_basis(&l, &gens).unwrap();
        assert_eq!(back.table(), g.table());
    }

    #[test]
    fn derivations_contain_inner_ones() {
        let g = fixtures::gl11::<Q>();
        let o = OmniAlgebra::new(g.space().clone(), g.epsilon().clone()).unwrap();
        let ders = o.derivations(&g).unwrap();
        assert!(ders.report().passed());
        for i in 0..4 {
            assert!(ders.der.contains(&g.ad_basis(i).flatten()));
        }
    }
}
