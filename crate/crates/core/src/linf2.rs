//! 2-term color L∞-algebras `V₁ →d V₀` with brackets `l₂` and homotopy `l₃`.

use thiserror::Error;

use crate::coloralg::{gl_commutator, AlgebraError, ColorAlgebra, QuadraticForm, Representation};
use crate::grading::{Degree, Epsilon};
use crate::gvs::{shift_violation, GradedSpace, SpaceError, Subspace};
use crate::linalg::{Matrix, Vector};
use crate::omni::{OmniAlgebra, OmniError};
use crate::scalar::Field;
use crate::tensor::{Bilinear, Trilinear};
use crate::verdict::{labels, render_vector, vector_witness, Report, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum L2Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("axiom (h) as printed uses the unbound symbol `z` in ε(y,h)[[x,z],h]; use the corrected form")]
    UnboundSymbol,
    #[error("not skeletal: d is nonzero")]
    NotSkeletal,
    #[error("not strict: l3 is nonzero")]
    NotStrict,
    #[error("not a quadratic Lie color algebra: {0} fails")]
    NotQuadratic(String),
    #[error("2-term axiom {0} fails")]
    AxiomFailure(String),
    #[error("crossed module identity {name} fails at {witness}")]
    CrossedAxiomFailure { name: String, witness: Witness },
    #[error("grading groups of the inputs differ")]
    GroupMismatch,
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Omni(#[from] OmniError),
}

fn shape_err(expected: impl ToString, found: impl ToString) -> L2Error {
    L2Error::ShapeMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Which version of axiom (h) to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HForm {
    /// `l₃(x,y,dh) = −[[x,y],h] + [x,[y,h]] + ε(y,h)[[x,h],y]`
    #[default]
    Corrected,
    /// The printed right-hand side, whose last term mentions an unbound `z`.
    AsPrinted,
}

/// Which sign pattern to use for the coherence axiom (i).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CocycleForm {
    /// The form equivalent to the Jacobiator identity of a Lie color 2-algebra:
    /// `[x,l₃(y,z,w)] − ε(x,y)[y,l₃(x,z,w)] + ε(x+y,z)[z,l₃(x,y,w)] + [l₃(x,y,z),w]
    ///  − l₃([x,y],z,w) + ε(y,z)l₃([x,z],y,w) − ε(y+z,w)l₃([x,w],y,z)
    ///  + l₃(x,[y,z],w) − ε(z,w)l₃(x,[y,w],z) − l₃(x,y,[z,w])`.
    #[default]
    Coherent,
    /// The printed sign pattern, with `ε(y+z,z)` on the third term and the
    /// fourth, eighth and ninth signs flipped relative to [`Coherent`](Self::Coherent).
    Printed,
}

/// The data `(V₁ →d V₀, l₂, l₃)`.
///
/// `l₂` is stored on `V₀ × V₀` and `V₀ × V₁`; on `V₁ × V₀` it is
/// `[h,x] = −ε(h,x)[x,h]` and on `V₁ × V₁` it vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTermAlgebra<F> {
    eps: Epsilon<F>,
    v0: GradedSpace,
    v1: GradedSpace,
    d: Matrix<F>,
    l2_00: Bilinear<F>,
    l2_01: Bilinear<F>,
    l2_10: Bilinear<F>,
    l3: Trilinear<F>,
}

impl<F: Field> TwoTermAlgebra<F> {
    pub fn new(
        eps: Epsilon<F>,
        v0: GradedSpace,
        v1: GradedSpace,
        d: Matrix<F>,
        l2_00: Bilinear<F>,
        l2_01: Bilinear<F>,
        l3: Trilinear<F>,
    ) -> Result<Self, L2Error> {
        let (n0, n1) = (v0.dim(), v1.dim());
        if v0.group() != eps.group() || v1.group() != eps.group() {
            return Err(L2Error::GroupMismatch);
        }
        if d.rows() != n0 || d.cols() != n1 {
            return Err(shape_err(format!("d: {n0}x{n1}"), format!("d: {}x{}", d.rows(), d.cols())));
        }
        if l2_00.dims() != (n0, n0, n0) {
            return Err(shape_err(format!("l2_00: {n0}x{n0}->{n0}"), format!("{:?}", l2_00.dims())));
        }
        if l2_01.dims() != (n0, n1, n1) {
            return Err(shape_err(format!("l2_01: {n0}x{n1}->{n1}"), format!("{:?}", l2_01.dims())));
        }
        if l3.dims() != (n0, n1) {
            return Err(shape_err(format!("l3: {n0}^3->{n1}"), format!("{:?}", l3.dims())));
        }
        let l2_10 = Bilinear::from_fn(n1, n0, n1, |h, x| {
            let e = eps.eps(v1.degree(h), v0.degree(x));
            l2_01.get(x, h).scale(&-e)
        });
        Ok(TwoTermAlgebra {
            eps,
            v0,
            v1,
            d,
            l2_00,
            l2_01,
            l2_10,
            l3,
        })
    }

    /// `V₁ = 0` over a color algebra, with `l₃ = 0`.
    pub fn from_lie(g: &ColorAlgebra<F>) -> Self {
        let n = g.dim();
        let v1 = GradedSpace::zero(g.space().group().clone());
        Self::new(
            g.epsilon().clone(),
            g.space().clone(),
            v1,
            Matrix::zeros(n, 0),
            g.table().clone(),
            Bilinear::zero(n, 0, 0),
            Trilinear::zero(n, 0),
        )
        .expect("shapes agree by construction")
    }

    pub fn epsilon(&self) -> &Epsilon<F> {
        &self.eps
    }

    pub fn v0(&self) -> &GradedSpace {
        &self.v0
    }

    pub fn v1(&self) -> &GradedSpace {
        &self.v1
    }

    pub fn d(&self) -> &Matrix<F> {
        &self.d
    }

    pub fn l2_00(&self) -> &Bilinear<F> {
        &self.l2_00
    }

    pub fn l2_01(&self) -> &Bilinear<F> {
        &self.l2_01
    }

    pub fn l2_10(&self) -> &Bilinear<F> {
        &self.l2_10
    }

    pub fn l3(&self) -> &Trilinear<F> {
        &self.l3
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    /// `[x, y]` on `V₀`.
    pub fn bracket(&self, x: &Vector<F>, y: &Vector<F>) -> Vector<F> {
        self.l2_00.eval(x, y)
    }

    /// `[x, h]` for `x ∈ V₀`, `h ∈ V₁`.
    pub fn act(&self, x: &Vector<F>, h: &Vector<F>) -> Vector<F> {
        self.l2_01.eval(x, h)
    }

    /// `[h, x]` for `h ∈ V₁`, `x ∈ V₀`.
    pub fn ract(&self, h: &Vector<F>, x: &Vector<F>) -> Vector<F> {
        self.l2_10.eval(h, x)
    }

    pub fn l3_eval(&self, x: &Vector<F>, y: &Vector<F>, z: &Vector<F>) -> Vector<F> {
        self.l3.eval(x, y, z)
    }

    pub fn apply_d(&self, h: &Vector<F>) -> Vector<F> {
        self.d.apply(h)
    }

    fn e0(&self, i: usize) -> Vector<F> {
        Vector::unit(self.v0.dim(), i)
    }

    fn e1(&self, i: usize) -> Vector<F> {
        Vector::unit(self.v1.dim(), i)
    }

    fn eps0(&self, i: usize, j: usize) -> F {
        self.eps.eps(self.v0.degree(i), self.v0.degree(j))
    }

    fn deg_sum(&self, idx: &[usize]) -> Degree {
        idx.iter()
            .fold(self.eps.group().zero(), |acc, &i| self.eps.add(&acc, self.v0.degree(i)))
    }

    /// Degree additivity of `d`, `l₂` and `l₃` with respect to the `G`-grading.
    pub fn check_graded(&self) -> Verdict {
        let zero = self.eps.group().zero();
        if let Some((r, c)) = shift_violation(&self.v1, &self.v0, &self.d, &zero) {
            return Verdict::Fail(Witness::new(
                vec![c],
                vec![format!("d({})", self.v1.name(c))],
                format!("component {}", self.v0.name(r)),
                "degree-preserving".into(),
            ));
        }
        let (n0, n1) = (self.v0.dim(), self.v1.dim());
        let bad = |v: &Vector<F>, space: &GradedSpace, target: &Degree| {
            v.support().any(|(k, _)| space.degree(k) != target)
        };
        for x in 0..n0 {
            for y in 0..n0 {
                let t = self.deg_sum(&[x, y]);
                if bad(self.l2_00.get(x, y), &self.v0, &t) {
                    return self.graded_witness(vec![x, y], self.l2_00.get(x, y), &self.v0, &t);
                }
            }
            for h in 0..n1 {
                let t = self.eps.add(self.v0.degree(x), self.v1.degree(h));
                if bad(self.l2_01.get(x, h), &self.v1, &t) {
                    return self.graded_witness(vec![x, h], self.l2_01.get(x, h), &self.v1, &t);
                }
            }
        }
        for x in 0..n0 {
            for y in 0..n0 {
                for z in 0..n0 {
                    let t = self.deg_sum(&[x, y, z]);
                    if bad(self.l3.get(x, y, z), &self.v1, &t) {
                        return self.graded_witness(vec![x, y, z], self.l3.get(x, y, z), &self.v1, &t);
                    }
                }
            }
        }
        Verdict::Pass
    }

    fn graded_witness(&self, tuple: Vec<usize>, v: &Vector<F>, space: &GradedSpace, t: &Degree) -> Verdict {
        let mut proj = v.clone();
        for (k, c) in proj.coords.iter_mut().enumerate() {
            if space.degree(k) != t {
                *c = F::zero();
            }
        }
        Verdict::Fail(Witness::new(
            tuple.clone(),
            tuple.iter().map(|i| i.to_string()).collect(),
            render_vector(space, v),
            render_vector(space, &proj),
        ))
    }

    fn witness(&self, kinds: &[Slot], tuple: &[usize], space: &GradedSpace, lhs: &Vector<F>, rhs: &Vector<F>) -> Option<Witness> {
        if lhs == rhs {
            return None;
        }
        let labels = kinds
            .iter()
            .zip(tuple)
            .map(|(k, &i)| match k {
                Slot::Zero => self.v0.name(i).to_string(),
                Slot::One => self.v1.name(i).to_string(),
            })
            .collect();
        Some(Witness::new(
            tuple.to_vec(),
            labels,
            render_vector(space, lhs),
            render_vector(space, rhs),
        ))
    }

    fn sweep(&self, kinds: &[Slot], mut f: impl FnMut(&[usize]) -> Option<Witness>) -> Verdict {
        let dims: Vec<usize> = kinds
            .iter()
            .map(|k| match k {
                Slot::Zero => self.v0.dim(),
                Slot::One => self.v1.dim(),
            })
            .collect();
        if dims.contains(&0) {
            return Verdict::Pass;
        }
        let mut idx = vec![0; dims.len()];
        loop {
            if let Some(w) = f(&idx) {
                return Verdict::Fail(w);
            }
            let mut p = dims.len();
            loop {
                if p == 0 {
                    return Verdict::Pass;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < dims[p] {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    /// (a) `[x,y] + ε(x,y)[y,x] = 0`
    pub fn check_a(&self) -> Verdict {
        use Slot::Zero;
        self.sweep(&[Zero, Zero], |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = self.l2_00.get(x, y);
            let rhs = self.l2_00.get(y, x).scale(&-self.eps0(x, y));
            self.witness(&[Zero, Zero], t, &self.v0, lhs, &rhs)
        })
    }

    /// (b) `[x,h] + ε(x,h)[h,x] = 0`
    pub fn check_b(&self) -> Verdict {
        use Slot::{One, Zero};
        self.sweep(&[Zero, One], |t| {
            let (x, h) = (t[0], t[1]);
            let e = self.eps.eps(self.v0.degree(x), self.v1.degree(h));
            let lhs = self.l2_01.get(x, h);
            let rhs = self.l2_10.get(h, x).scale(&-e);
            self.witness(&[Zero, One], t, &self.v1, lhs, &rhs)
        })
    }

    /// (c) `[h,k] = 0`, which holds because `l₂` is not stored on `V₁ × V₁`.
    pub fn check_c(&self) -> Verdict {
        Verdict::Pass
    }

    /// (d) total ε-skew symmetry of `l₃` under adjacent transpositions.
    pub fn check_d(&self) -> Verdict {
        use Slot::Zero;
        let k = [Zero, Zero, Zero];
        self.sweep(&k, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = self.l3.get(x, y, z);
            let swap12 = self.l3.get(y, x, z).scale(&-self.eps0(x, y));
            if let Some(w) = self.witness(&k, t, &self.v1, lhs, &swap12) {
                return Some(w);
            }
            let swap23 = self.l3.get(x, z, y).scale(&-self.eps0(y, z));
            self.witness(&k, t, &self.v1, lhs, &swap23)
        })
    }

    /// (e) `d[x,h] = [x,dh]`
    pub fn check_e(&self) -> Verdict {
        use Slot::{One, Zero};
        self.sweep(&[Zero, One], |t| {
            let (x, h) = (t[0], t[1]);
            let lhs = self.d.apply(self.l2_01.get(x, h));
            let rhs = self.l2_00.eval_left_basis(x, &self.d.column(h));
            self.witness(&[Zero, One], t, &self.v0, &lhs, &rhs)
        })
    }

    /// (f) `[dh,k] = [h,dk]`
    pub fn check_f(&self) -> Verdict {
        use Slot::One;
        self.sweep(&[One, One], |t| {
            let (h, k) = (t[0], t[1]);
            let lhs = self.l2_01.eval_right_basis(&self.d.column(h), k);
            let rhs = self.l2_10.eval_left_basis(h, &self.d.column(k));
            self.witness(&[One, One], t, &self.v1, &lhs, &rhs)
        })
    }

    /// `−[[x,y],z] + [x,[y,z]] + ε(y,z)[[x,z],y]` on basis elements of `V₀`.
    pub fn jacobi_rhs(&self, x: usize, y: usize, z: usize) -> Vector<F> {
        let b = &self.l2_00;
        let mut out = b.eval_left_basis(x, b.get(y, z));
        out = out.sub(&b.eval_right_basis(b.get(x, y), z));
        out.axpy(&self.eps0(y, z), &b.eval_right_basis(b.get(x, z), y));
        out
    }

    /// (g) `d l₃(x,y,z) = −[[x,y],z] + [x,[y,z]] + ε(y,z)[[x,z],y]`
    pub fn check_g(&self) -> Verdict {
        use Slot::Zero;
        let k = [Zero, Zero, Zero];
        self.sweep(&k, |t| {
            let lhs = self.d.apply(self.l3.get(t[0], t[1], t[2]));
            let rhs = self.jacobi_rhs(t[0], t[1], t[2]);
            self.witness(&k, t, &self.v0, &lhs, &rhs)
        })
    }

    /// `−[[x,y],h] + [x,[y,h]] + ε(y,h)[[x,h],y]` for `x, y ∈ V₀`, `h ∈ V₁`.
    pub fn h_rhs(&self, x: usize, y: usize, h: usize) -> Vector<F> {
        let hv = self.e1(h);
        let xy = self.l2_00.get(x, y);
        let mut out = self.l2_01.eval_left_basis(x, &self.l2_01.eval_left_basis(y, &hv));
        out = out.sub(&self.l2_01.eval(xy, &hv));
        let e = self.eps.eps(self.v0.degree(y), self.v1.degree(h));
        let xh = self.l2_01.get(x, h);
        out.axpy(&e, &self.l2_10.eval_right_basis(xh, y));
        out
    }

    /// (h) `l₃(x,y,dh) = −[[x,y],h] + [x,[y,h]] + ε(y,h)[[x,h],y]`
    pub fn check_h(&self, form: HForm) -> Result<Verdict, L2Error> {
        use Slot::{One, Zero};
        if form == HForm::AsPrinted {
            return Err(L2Error::UnboundSymbol);
        }
        let k = [Zero, Zero, One];
        Ok(self.sweep(&k, |t| {
            let (x, y, h) = (t[0], t[1], t[2]);
            let lhs = self.l3.eval(&self.e0(x), &self.e0(y), &self.d.column(h));
            let rhs = self.h_rhs(x, y, h);
            self.witness(&k, t, &self.v1, &lhs, &rhs)
        }))
    }

    /// `δl₃(x,y,z,w)` on basis elements of `V₀`.
    pub fn delta_l3(&self, form: CocycleForm, x: usize, y: usize, z: usize, w: usize) -> Vector<F> {
        let (ex, ey, ez, ew) = (self.e0(x), self.e0(y), self.e0(z), self.e0(w));
        let l3 = &self.l3;
        let b = &self.l2_00;
        let e = |i: &[usize], j: &[usize]| self.eps.eps(&self.deg_sum(i), &self.deg_sum(j));
        let one = F::one();
        let (third, fourth, eighth, ninth) = match form {
            CocycleForm::Coherent => (e(&[x, y], &[z]), one.clone(), one.clone(), -one.clone()),
            CocycleForm::Printed => (e(&[y, z], &[z]), -one.clone(), -one.clone(), one.clone()),
        };
        let mut out = self.l2_01.eval_left_basis(x, l3.get(y, z, w));
        out.axpy(&-e(&[x], &[y]), &self.l2_01.eval_left_basis(y, l3.get(x, z, w)));
        out.axpy(&third, &self.l2_01.eval_left_basis(z, l3.get(x, y, w)));
        out.axpy(&fourth, &self.l2_10.eval_right_basis(l3.get(x, y, z), w));
        out.axpy(&-one.clone(), &l3.eval(b.get(x, y), &ez, &ew));
        out.axpy(&e(&[y], &[z]), &l3.eval(b.get(x, z), &ey, &ew));
        out.axpy(&-e(&[y, z], &[w]), &l3.eval(b.get(x, w), &ey, &ez));
        out.axpy(&eighth, &l3.eval(&ex, b.get(y, z), &ew));
        out.axpy(&(ninth * e(&[z], &[w])), &l3.eval(&ex, b.get(y, w), &ez));
        out.axpy(&-one, &l3.eval(&ex, &ey, b.get(z, w)));
        out
    }

    /// (i) `δl₃(x,y,z,w) = 0` over all basis quadruples of `V₀`.
    pub fn check_i(&self, form: CocycleForm) -> Verdict {
        use Slot::Zero;
        let k = [Zero, Zero, Zero, Zero];
        let zero = Vector::zeros(self.v1.dim());
        self.sweep(&k, |t| {
            let lhs = self.delta_l3(form, t[0], t[1], t[2], t[3]);
            self.witness(&k, t, &self.v1, &lhs, &zero)
        })
    }

    /// Every axiom (a)–(i), preceded by degree additivity of the structure maps.
    pub fn check_axioms(&self, h: HForm, i: CocycleForm) -> Result<Report, L2Error> {
        let verdict_h = self.check_h(h)?;
        Ok(Report::new()
            .with("graded", self.check_graded())
            .with("a", self.check_a())
            .with("b", self.check_b())
            .with("c", self.check_c())
            .with("d", self.check_d())
            .with("e", self.check_e())
            .with("f", self.check_f())
            .with("g", self.check_g())
            .with("h", verdict_h)
            .with("i", self.check_i(i)))
    }

    /// `V₀ = gl(V) ⊕ V`, `V₁ = V`, `d` the inclusion, `l₂ = ⟦·,·⟧` and `l₃ = −ε(z,x)T`.
    pub fn from_omni(omni: &OmniAlgebra<F>) -> Self {
        let v0 = omni.space().clone();
        let v1 = omni.base().clone();
        let n = v1.dim();
        let off = omni.vec_offset();
        let dim0 = v0.dim();
        let d = Matrix::from_columns(dim0, &(0..n).map(|i| Vector::unit(dim0, off + i)).collect::<Vec<_>>());
        let l2_01 = Bilinear::from_fn(dim0, n, n, |a, h| omni.bracket_table().get(a, off + h).slice(off, off + n));
        let t = omni.homotopy_table();
        let eps = omni.epsilon().clone();
        let l3 = Trilinear::from_fn(dim0, n, |a, b, c| {
            let e = eps.eps(v0.degree(c), v0.degree(a));
            t.get(a, b, c).scale(&-e)
        });
        Self::new(eps, v0, v1, d, omni.bracket_table().clone(), l2_01, l3)
            .expect("omni data has consistent shapes")
    }
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    Zero,
    One,
}

impl<F: Field> TwoTermAlgebra<F> {
    /// The string 2-algebra `ℝ →0 g` with `l₃(x,y,z) = B([x,y],z)`.
    pub fn string_from_quadratic(q: &QuadraticForm<F>) -> Result<Self, L2Error> {
        let g = q.algebra();
        if let Some(c) = g.check_lie().first_failure() {
            return Err(L2Error::NotQuadratic(format!("lie {}", c.name)));
        }
        if let Some(c) = q.check().first_failure() {
            return Err(L2Error::NotQuadratic(c.name.clone()));
        }
        let group = g.space().group().clone();
        let v1 = GradedSpace::new(group.clone(), [("c".to_string(), group.zero())])?;
        let n = g.dim();
        let l3 = Trilinear::from_fn(n, 1, |x, y, z| {
            Vector::new(vec![q.eval(g.bracket_basis(x, y), &Vector::unit(n, z))])
        });
        Self::new(
            g.epsilon().clone(),
            g.space().clone(),
            v1,
            Matrix::zeros(n, 1),
            g.table().clone(),
            Bilinear::zero(n, 1, 1),
            l3,
        )
    }

    /// `(V₀, l₂|V₀)` as a color algebra.
    pub fn base_algebra(&self) -> ColorAlgebra<F> {
        ColorAlgebra::from_table(self.v0.clone(), self.eps.clone(), self.l2_00.clone())
            .expect("l2_00 matches V0")
    }

    /// The `x ▷ h = [x,h]` matrices, one per basis element of `V₀`.
    fn action_maps(&self) -> Vec<Matrix<F>> {
        let n1 = self.v1.dim();
        (0..self.v0.dim())
            .map(|x| Matrix::from_columns(n1, &(0..n1).map(|h| self.l2_01.get(x, h).clone()).collect::<Vec<_>>()))
            .collect()
    }

    pub fn to_quadruple(&self) -> Result<SkeletalQuadruple<F>, L2Error> {
        if !self.is_skeletal() {
            return Err(L2Error::NotSkeletal);
        }
        let rep = Representation::new(self.base_algebra(), self.v1.clone(), self.action_maps())?;
        Ok(SkeletalQuadruple {
            rep,
            cocycle: self.l3.clone(),
        })
    }

    /// The crossed module `(V₀, V₁, d, ▷)` with `[h,k] = [dh,k]`.
    pub fn to_crossed_module(&self) -> Result<CrossedModule<F>, L2Error> {
        if !self.is_strict() {
            return Err(L2Error::NotStrict);
        }
        let report = self.check_axioms(HForm::Corrected, CocycleForm::Coherent)?;
        if let Some(c) = report.first_failure() {
            return Err(L2Error::AxiomFailure(c.name.clone()));
        }
        let n1 = self.v1.dim();
        let h_table = Bilinear::from_fn(n1, n1, n1, |h, k| self.l2_01.eval_right_basis(&self.d.column(h), k));
        let h = ColorAlgebra::from_table(self.v1.clone(), self.eps.clone(), h_table)?;
        let action = Representation::new(self.base_algebra(), self.v1.clone(), self.action_maps())?;
        let c = CrossedModule::new(h, self.d.clone(), action)?;
        if let Some(check) = c.check().checks.into_iter().find(|c| !c.verdict.passed()) {
            if let Verdict::Fail(witness) = check.verdict {
                return Err(L2Error::CrossedAxiomFailure {
                    name: check.name,
                    witness,
                });
            }
        }
        Ok(c)
    }

    pub fn from_crossed_module(c: &CrossedModule<F>) -> Self {
        let g = c.action.algebra();
        let (n0, n1) = (g.dim(), c.h.dim());
        let l2_01 = Bilinear::from_fn(n0, n1, n1, |x, h| c.action.maps()[x].column(h));
        Self::new(
            g.epsilon().clone(),
            g.space().clone(),
            c.h.space().clone(),
            c.phi.clone(),
            g.table().clone(),
            l2_01,
            Trilinear::zero(n0, n1),
        )
        .expect("crossed module data has consistent shapes")
    }
}

/// `(g, V, ρ, l₃)` with `l₃` a 3-cochain on `g` valued in `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkeletalQuadruple<F> {
    pub rep: Representation<F>,
    pub cocycle: Trilinear<F>,
}

impl<F: Field> SkeletalQuadruple<F> {
    pub fn new(rep: Representation<F>, cocycle: Trilinear<F>) -> Result<Self, L2Error> {
        let (n, m) = (rep.algebra().dim(), rep.module().dim());
        if cocycle.dims() != (n, m) {
            return Err(shape_err(format!("l3: {n}^3->{m}"), format!("{:?}", cocycle.dims())));
        }
        Ok(SkeletalQuadruple { rep, cocycle })
    }

    pub fn algebra(&self) -> &ColorAlgebra<F> {
        self.rep.algebra()
    }

    pub fn to_two_term(&self) -> TwoTermAlgebra<F> {
        let g = self.rep.algebra();
        let (n, m) = (g.dim(), self.rep.module().dim());
        let l2_01 = Bilinear::from_fn(n, m, m, |x, h| self.rep.maps()[x].column(h));
        TwoTermAlgebra::new(
            g.epsilon().clone(),
            g.space().clone(),
            self.rep.module().clone(),
            Matrix::zeros(n, m),
            g.table().clone(),
            l2_01,
            self.cocycle.clone(),
        )
        .expect("quadruple data has consistent shapes")
    }

    /// The 3-cocycle condition written with `ρ`, where `[u,w] = −ε(u,w)ρ(w)u`.
    pub fn check_cocycle(&self, form: CocycleForm) -> Verdict {
        let g = self.rep.algebra();
        let space = g.space();
        let eps = g.epsilon();
        let n = g.dim();
        let m = self.rep.module();
        let deg = |idx: &[usize]| {
            idx.iter()
                .fold(space.group().zero(), |acc, &i| eps.add(&acc, space.degree(i)))
        };
        let e = |a: &[usize], b: &[usize]| eps.eps(&deg(a), &deg(b));
        let c = &self.cocycle;
        let unit = |i| Vector::unit(n, i);
        let rho = |x: usize, v: &Vector<F>| self.rep.maps()[x].apply(v);
        let one = F::one();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        let (third, fourth, eighth, ninth) = match form {
                            CocycleForm::Coherent => (e(&[x, y], &[z]), one.clone(), one.clone(), -e(&[z], &[w])),
                            CocycleForm::Printed => (e(&[y, z], &[z]), -one.clone(), -one.clone(), e(&[z], &[w])),
                        };
                        let mut r = rho(x, c.get(y, z, w));
                        r.axpy(&-e(&[x], &[y]), &rho(y, c.get(x, z, w)));
                        r.axpy(&third, &rho(z, c.get(x, y, w)));
                        r.axpy(&-(fourth * e(&[x, y, z], &[w])), &rho(w, c.get(x, y, z)));
                        r.axpy(&-one.clone(), &c.eval(g.bracket_basis(x, y), &unit(z), &unit(w)));
                        r.axpy(&e(&[y], &[z]), &c.eval(g.bracket_basis(x, z), &unit(y), &unit(w)));
                        r.axpy(&-e(&[y, z], &[w]), &c.eval(g.bracket_basis(x, w), &unit(y), &unit(z)));
                        r.axpy(&eighth, &c.eval(&unit(x), g.bracket_basis(y, z), &unit(w)));
                        r.axpy(&ninth, &c.eval(&unit(x), g.bracket_basis(y, w), &unit(z)));
                        r.axpy(&-one.clone(), &c.eval(&unit(x), &unit(y), g.bracket_basis(z, w)));
                        if !r.is_zero() {
                            return Verdict::Fail(Witness::new(
                                vec![x, y, z, w],
                                labels(space, &[x, y, z, w]),
                                render_vector(m, &r),
                                "0".into(),
                            ));
                        }
                    }
                }
            }
        }
        Verdict::Pass
    }

    pub fn check(&self, form: CocycleForm) -> Report {
        let mut report = Report::new();
        report.extend("lie-", self.algebra().check_lie());
        report.push("representation", self.rep.check());
        report.push("skew", self.to_two_term().check_d());
        report.push("cocycle", self.check_cocycle(form));
        report
    }
}

/// A crossed module `φ: h → g` with `g` acting on `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossedModule<F> {
    pub h: ColorAlgebra<F>,
    pub phi: Matrix<F>,
    /// The action of `g` on the underlying space of `h`; `g` is its algebra.
    pub action: Representation<F>,
}

impl<F: Field> CrossedModule<F> {
    pub fn new(h: ColorAlgebra<F>, phi: Matrix<F>, action: Representation<F>) -> Result<Self, L2Error> {
        let g = action.algebra();
        if action.module() != h.space() {
            return Err(shape_err(
                format!("action on {} basis vectors of h", h.dim()),
                format!("action on {}", action.module().dim()),
            ));
        }
        if phi.rows() != g.dim() || phi.cols() != h.dim() {
            return Err(shape_err(
                format!("phi: {}x{}", g.dim(), h.dim()),
                format!("phi: {}x{}", phi.rows(), phi.cols()),
            ));
        }
        if h.epsilon() != g.epsilon() {
            return Err(L2Error::GroupMismatch);
        }
        Ok(CrossedModule { h, phi, action })
    }

    pub fn g(&self) -> &ColorAlgebra<F> {
        self.action.algebra()
    }

    pub fn check(&self) -> Report {
        let g = self.g();
        let h = &self.h;
        let (n, m) = (g.dim(), h.dim());
        let zero = g.space().group().zero();
        let phi_graded = match shift_violation(h.space(), g.space(), &self.phi, &zero) {
            None => Verdict::Pass,
            Some((r, c)) => Verdict::Fail(Witness::new(
                vec![c],
                vec![h.space().name(c).to_string()],
                format!("component {}", g.space().name(r)),
                "degree-preserving".into(),
            )),
        };
        let phi = |v: &Vector<F>| self.phi.apply(v);
        let mut hom = None;
        let mut peiffer = None;
        for a in 0..m {
            for b in 0..m {
                let lhs = phi(h.bracket_basis(a, b));
                let rhs = g.bracket(&self.phi.column(a), &self.phi.column(b));
                hom = hom.or_else(|| vector_witness(h.space(), g.space(), &[a, b], &lhs, &rhs));
                let lhs = self.action.act(&self.phi.column(a), &Vector::unit(m, b));
                peiffer = peiffer.or_else(|| vector_witness(h.space(), h.space(), &[a, b], &lhs, h.bracket_basis(a, b)));
            }
        }
        let mut equivariance = None;
        for x in 0..n {
            for a in 0..m {
                let lhs = phi(&self.action.maps()[x].column(a));
                let rhs = g.table().eval_left_basis(x, &self.phi.column(a));
                equivariance = equivariance.or_else(|| {
                    vector_witness(g.space(), g.space(), &[x], &lhs, &rhs).map(|mut w| {
                        w.tuple.push(a);
                        w.labels.push(h.space().name(a).to_string());
                        w
                    })
                });
            }
        }
        let mut report = Report::new();
        report.extend("g-", g.check_lie());
        report.extend("h-", h.check_lie());
        report.push("phi-graded", phi_graded);
        report.push("phi-homomorphism", Verdict::from_first_failure(hom));
        report.push("action", self.action.check());
        report.push("equivariance", Verdict::from_first_failure(equivariance));
        report.push("peiffer", Verdict::from_first_failure(peiffer));
        report
    }

    /// `Inn(g) → Der(g)` with `D ▷ ad_x = [D, ad_x] = ad_{Dx}`.
    pub fn inner_derivations(g: &ColorAlgebra<F>) -> Result<Self, L2Error> {
        let v = g.space();
        let eps = g.epsilon();
        let omni = OmniAlgebra::new(v.clone(), eps.clone())?;
        let der = omni.derivations(g)?.der;
        let end = v.end_space();
        let ads: Vec<Vector<F>> = (0..g.dim()).map(|i| g.ad_basis(i).flatten()).collect();
        let inn = Subspace::span(&end, &ads)?;
        let (der_mats, der_alg) = matrix_algebra(v, eps, &der, "D")?;
        let (inn_mats, inn_alg) = matrix_algebra(v, eps, &inn, "I")?;
        let coords = |sub: &Subspace<F>, m: &Matrix<F>| {
            Vector::new(sub.coordinates(&m.flatten()).expect("closed under the bracket"))
        };
        let phi = Matrix::from_columns(der.dim(), &inn_mats.iter().map(|m| coords(&der, m)).collect::<Vec<_>>());
        let maps = der_mats
            .iter()
            .map(|d| {
                let cols: Vec<Vector<F>> = inn_mats
                    .iter()
                    .map(|i| coords(&inn, &gl_commutator(v, eps, d, i)))
                    .collect();
                Matrix::from_columns(inn.dim(), &cols)
            })
            .collect();
        let action = Representation::new(der_alg, inn_alg.space().clone(), maps)?;
        Self::new(inn_alg, phi, action)
    }
}

/// A subspace of `gl(v)` closed under the commutator, as a color algebra on its
/// echelon basis, named `{prefix}0, {prefix}1, …`.
pub fn matrix_algebra<F: Field>(
    v: &GradedSpace,
    eps: &Epsilon<F>,
    sub: &Subspace<F>,
    prefix: &str,
) -> Result<(Vec<Matrix<F>>, ColorAlgebra<F>), L2Error> {
    let n = v.dim();
    let basis = sub.homogeneous_basis()?;
    let mats: Vec<Matrix<F>> = basis.iter().map(|(_, b)| Matrix::from_flat(n, n, &b.coords)).collect();
    let space = GradedSpace::with_degrees(v.group().clone(), prefix, basis.into_iter().map(|(d, _)| d).collect())?;
    let k = mats.len();
    let mut entries = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let c = gl_commutator(v, eps, &mats[i], &mats[j]).flatten();
            let coords = sub.coordinates(&c).ok_or_else(|| {
                L2Error::Algebra(AlgebraError::NotLie(format!("[{prefix}{i},{prefix}{j}] leaves the span")))
            })?;
            for (l, x) in coords.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((i, j, l, x));
                }
            }
        }
    }
    Ok((mats, ColorAlgebra::new(space, eps.clone(), &entries)?))
}
