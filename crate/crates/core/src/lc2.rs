//! Lie color 2-algebras: categories internal to graded vector spaces with a
//! bracket functor and a Jacobiator.

use thiserror::Error;

use crate::grading::{Degree, Epsilon};
use crate::gvs::{GradedSpace, Homogeneity, SpaceError, Subspace};
use crate::linalg::{Matrix, Vector};
use crate::linf2::{L2Error, TwoTermAlgebra};
use crate::scalar::Field;
use crate::tensor::{Bilinear, Trilinear};
use crate::verdict::{labels, render_vector, Report, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Lc2Error {
    #[error("morphisms are not composable: target {target} differs from source {start}")]
    NonComposable { target: String, start: String },
    #[error("morphism does not belong to this 2-vector space")]
    SpaceMismatch,
    #[error("jacobiator arguments must be homogeneous")]
    NotHomogeneous,
    #[error("2-term axiom {0} fails")]
    AxiomFailure(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    TwoTerm(#[from] L2Error),
}

/// A morphism `(x, h): x → x + dh`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism2<F> {
    pub src: Vector<F>,
    pub lift: Vector<F>,
}

impl<F: Field> Morphism2<F> {
    pub fn new(src: Vector<F>, lift: Vector<F>) -> Self {
        Morphism2 { src, lift }
    }

    pub fn add(&self, other: &Self) -> Self {
        Morphism2::new(self.src.add(&other.src), self.lift.add(&other.lift))
    }

    pub fn scale(&self, c: &F) -> Self {
        Morphism2::new(self.src.scale(c), self.lift.scale(c))
    }

    fn axpy(&mut self, c: &F, other: &Self) {
        self.src.axpy(c, &other.src);
        self.lift.axpy(c, &other.lift);
    }
}

/// The 2-vector space `V₀ ⊕ V₁ ⇉ V₀` of a complex `V₁ →d V₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct Color2VectorSpace<F> {
    pub v0: GradedSpace,
    pub v1: GradedSpace,
    pub d: Matrix<F>,
}

impl<F: Field> Color2VectorSpace<F> {
    pub fn new(v0: GradedSpace, v1: GradedSpace, d: Matrix<F>) -> Self {
        Color2VectorSpace { v0, v1, d }
    }

    pub fn source(&self, f: &Morphism2<F>) -> Vector<F> {
        f.src.clone()
    }

    pub fn target(&self, f: &Morphism2<F>) -> Vector<F> {
        f.src.add(&self.d.apply(&f.lift))
    }

    pub fn identity(&self, x: &Vector<F>) -> Morphism2<F> {
        Morphism2::new(x.clone(), Vector::zeros(self.v1.dim()))
    }

    pub fn zero(&self) -> Morphism2<F> {
        Morphism2::new(Vector::zeros(self.v0.dim()), Vector::zeros(self.v1.dim()))
    }

    /// `(x, h)` followed by `(x + dh, k)` is `(x, h + k)`.
    pub fn compose(&self, f: &Morphism2<F>, g: &Morphism2<F>) -> Result<Morphism2<F>, Lc2Error> {
        self.check(f)?;
        self.check(g)?;
        let t = self.target(f);
        if t != g.src {
            return Err(Lc2Error::NonComposable {
                target: render_vector(&self.v0, &t),
                start: render_vector(&self.v0, &g.src),
            });
        }
        Ok(Morphism2::new(f.src.clone(), f.lift.add(&g.lift)))
    }

    /// `(x, h)` has inverse `(x + dh, −h)`.
    pub fn inverse(&self, f: &Morphism2<F>) -> Morphism2<F> {
        Morphism2::new(self.target(f), f.lift.neg())
    }

    fn check(&self, f: &Morphism2<F>) -> Result<(), Lc2Error> {
        if f.src.dim() == self.v0.dim() && f.lift.dim() == self.v1.dim() {
            Ok(())
        } else {
            Err(Lc2Error::SpaceMismatch)
        }
    }

    /// The common degree of `src` and `lift`, if both are homogeneous of one degree.
    pub fn degree(&self, f: &Morphism2<F>) -> Homogeneity {
        let a = self.v0.homogeneity(&f.src);
        let b = self.v1.homogeneity(&f.lift);
        match (a, b) {
            (Homogeneity::Zero, b) => b,
            (a, Homogeneity::Zero) => a,
            (Homogeneity::Homogeneous(x), Homogeneity::Homogeneous(y)) if x == y => Homogeneity::Homogeneous(x),
            _ => Homogeneity::Mixed,
        }
    }

    /// The space of morphisms, with basis `id(x)` for `x ∈ V₀` followed by `V₁`.
    pub fn morphism_space(&self) -> Result<GradedSpace, SpaceError> {
        let ids = self
            .v0
            .basis()
            .iter()
            .map(|b| (format!("id({})", b.name), b.degree.clone()));
        let lifts = self.v1.basis().iter().map(|b| (b.name.clone(), b.degree.clone()));
        GradedSpace::new(self.v0.group().clone(), ids.chain(lifts))
    }

    pub fn to_coords(&self, f: &Morphism2<F>) -> Vector<F> {
        f.src.concat(&f.lift)
    }

    pub fn from_coords(&self, v: &Vector<F>) -> Morphism2<F> {
        let n0 = self.v0.dim();
        Morphism2::new(v.slice(0, n0), v.slice(n0, v.dim()))
    }
}

/// The bracket functor and Jacobiator induced by a 2-term algebra.
pub struct Lie2View<'a, F> {
    pub t: &'a TwoTermAlgebra<F>,
    pub space: Color2VectorSpace<F>,
}

impl<'a, F: Field> Lie2View<'a, F> {
    pub fn new(t: &'a TwoTermAlgebra<F>) -> Self {
        let space = Color2VectorSpace::new(t.v0().clone(), t.v1().clone(), t.d().clone());
        Lie2View { t, space }
    }

    fn eps(&self) -> &Epsilon<F> {
        self.t.epsilon()
    }

    fn deg(&self, idx: &[usize]) -> Degree {
        let v0 = self.t.v0();
        idx.iter()
            .fold(v0.group().zero(), |acc, &i| self.eps().add(&acc, v0.degree(i)))
    }

    fn e(&self, a: &[usize], b: &[usize]) -> F {
        self.eps().eps(&self.deg(a), &self.deg(b))
    }

    fn unit(&self, i: usize) -> Vector<F> {
        Vector::unit(self.t.v0().dim(), i)
    }

    fn id(&self, x: &Vector<F>) -> Morphism2<F> {
        self.space.identity(x)
    }

    fn br(&self, x: &Vector<F>, y: &Vector<F>) -> Vector<F> {
        self.t.bracket(x, y)
    }

    /// `[(x,h),(y,k)] = (l₂(x,y), l₂(x,k) + l₂(h,y) + l₂(dh,k))`
    pub fn bracket(&self, f: &Morphism2<F>, g: &Morphism2<F>) -> Result<Morphism2<F>, Lc2Error> {
        self.space.check(f)?;
        self.space.check(g)?;
        Ok(self.bracket_unchecked(f, g))
    }

    fn bracket_unchecked(&self, f: &Morphism2<F>, g: &Morphism2<F>) -> Morphism2<F> {
        let t = self.t;
        let src = t.bracket(&f.src, &g.src);
        let mut lift = t.act(&f.src, &g.lift);
        lift = lift.add(&t.ract(&f.lift, &g.src));
        lift = lift.add(&t.act(&t.apply_d(&f.lift), &g.lift));
        Morphism2::new(src, lift)
    }

    /// `J_{x,y,z} = ([[x,y],z], l₃(x,y,z))`
    pub fn jacobiator(&self, x: &Vector<F>, y: &Vector<F>, z: &Vector<F>) -> Result<Morphism2<F>, Lc2Error> {
        let v0 = self.t.v0();
        for v in [x, y, z] {
            if v.dim() != v0.dim() {
                return Err(Lc2Error::SpaceMismatch);
            }
            if v0.homogeneity(v) == Homogeneity::Mixed {
                return Err(Lc2Error::NotHomogeneous);
            }
        }
        Ok(self.jac(x, y, z))
    }

    fn jac(&self, x: &Vector<F>, y: &Vector<F>, z: &Vector<F>) -> Morphism2<F> {
        Morphism2::new(self.br(&self.br(x, y), z), self.t.l3_eval(x, y, z))
    }

    /// Target of `J_{x,y,z}` as required: `[x,[y,z]] + ε(y,z)[[x,z],y]`.
    fn jac_target(&self, x: usize, y: usize, z: usize) -> Vector<F> {
        let (ex, ey, ez) = (self.unit(x), self.unit(y), self.unit(z));
        let mut out = self.br(&ex, &self.br(&ey, &ez));
        out.axpy(&self.e(&[y], &[z]), &self.br(&self.br(&ex, &ez), &ey));
        out
    }

    /// `J_{x,y,z}: [[x,y],z] → [x,[y,z]] + ε(y,z)[[x,z],y]` on all basis triples.
    pub fn check_jacobiator_targets(&self) -> Verdict {
        let n = self.t.v0().dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let j = self.jac(&self.unit(x), &self.unit(y), &self.unit(z));
                    let got = self.space.target(&j);
                    let want = self.jac_target(x, y, z);
                    if got != want {
                        return Verdict::Fail(Witness::new(
                            vec![x, y, z],
                            labels(self.t.v0(), &[x, y, z]),
                            render_vector(self.t.v0(), &got),
                            render_vector(self.t.v0(), &want),
                        ));
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Naturality of `J` in argument `slot` along `f = (b_slot, h)` for every basis
    /// vector `h` of `V₁` with the degree of `b_slot`.
    pub fn check_naturality(&self, slot: usize) -> Verdict {
        let v0 = self.t.v0();
        let v1 = self.t.v1();
        let n = v0.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let idx = [x, y, z];
                    for h in (0..v1.dim()).filter(|&h| v1.degree(h) == v0.degree(idx[slot])) {
                        let f = Morphism2::new(self.unit(idx[slot]), Vector::unit(v1.dim(), h));
                        let arg = |i: usize| if i == slot { f.clone() } else { self.id(&self.unit(idx[i])) };
                        let moved = |i: usize| if i == slot { self.space.target(&f) } else { self.unit(idx[i]) };
                        let (a, b, c) = (arg(0), arg(1), arg(2));
                        let top = self.bracket_unchecked(&self.bracket_unchecked(&a, &b), &c);
                        let right = self.jac(&moved(0), &moved(1), &moved(2));
                        let left = self.jac(&self.unit(x), &self.unit(y), &self.unit(z));
                        let mut bottom = self.bracket_unchecked(&a, &self.bracket_unchecked(&b, &c));
                        bottom.axpy(
                            &self.e(&[y], &[z]),
                            &self.bracket_unchecked(&self.bracket_unchecked(&a, &c), &b),
                        );
                        let one = self.space.compose(&top, &right);
                        let two = self.space.compose(&left, &bottom);
                        let failure = match (one, two) {
                            (Ok(p), Ok(q)) if p == q => None,
                            (Ok(p), Ok(q)) => Some((render_vector(v1, &p.lift), render_vector(v1, &q.lift))),
                            (Err(e), _) | (_, Err(e)) => Some((e.to_string(), "composable".into())),
                        };
                        if let Some((lhs, rhs)) = failure {
                            let mut names = labels(v0, &idx);
                            names.push(v1.name(h).to_string());
                            return Verdict::Fail(Witness::new(vec![x, y, z, h], names, lhs, rhs));
                        }
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// The two sides of the Jacobiator identity at a basis quadruple, each composed
    /// along its path in the diagram.
    pub fn jacobiator_paths(
        &self,
        w: usize,
        x: usize,
        y: usize,
        z: usize,
    ) -> Result<(Morphism2<F>, Morphism2<F>), Lc2Error> {
        let (ew, ex, ey, ez) = (self.unit(w), self.unit(x), self.unit(y), self.unit(z));
        let b = |a: &Vector<F>, c: &Vector<F>| self.br(a, c);
        let j = |a: &Vector<F>, c: &Vector<F>, d: &Vector<F>| self.jac(a, c, d);
        let bm = |f: &Morphism2<F>, g: &Morphism2<F>| self.bracket_unchecked(f, g);
        let id = |v: &Vector<F>| self.id(v);
        let e = |a: &[usize], c: &[usize]| self.e(a, c);

        let wx = b(&ew, &ex);
        let yz = b(&ey, &ez);
        let xz = b(&ex, &ez);
        let wz = b(&ew, &ez);
        let xy = b(&ex, &ey);
        let wy = b(&ew, &ey);

        let l1 = j(&wx, &ey, &ez);
        let mut l2 = id(&b(&wx, &yz));
        l2.axpy(&e(&[y], &[z]), &bm(&j(&ew, &ex, &ez), &id(&ey)));
        let mut l3 = j(&ew, &ex, &yz);
        l3.axpy(&e(&[y], &[z]), &j(&ew, &xz, &ey));
        l3.axpy(&e(&[x, y], &[z]), &j(&wz, &ex, &ey));
        let left = self.space.compose(&self.space.compose(&l1, &l2)?, &l3)?;

        let r1 = bm(&j(&ew, &ex, &ey), &id(&ez));
        let mut r2 = j(&ew, &xy, &ez);
        r2.axpy(&e(&[x], &[y]), &j(&wy, &ex, &ez));
        let mut r3 = bm(&id(&ew), &j(&ex, &ey, &ez));
        r3.axpy(&e(&[x, y], &[z]), &id(&b(&wz, &xy)));
        r3.axpy(&e(&[x], &[y]), &id(&b(&wy, &xz)));
        r3.axpy(&e(&[x], &[y, z]), &bm(&j(&ew, &ey, &ez), &id(&ex)));
        let right = self.space.compose(&self.space.compose(&r1, &r2)?, &r3)?;
        Ok((left, right))
    }

    /// The common target objects `P` and `Q` of the two paths.
    pub fn diagram_targets(&self, w: usize, x: usize, y: usize, z: usize) -> (Vector<F>, Vector<F>) {
        let (ew, ex, ey, ez) = (self.unit(w), self.unit(x), self.unit(y), self.unit(z));
        let b = |a: &Vector<F>, c: &Vector<F>| self.br(a, c);
        let e = |a: &[usize], c: &[usize]| self.e(a, c);
        let (yz, xz, wz, xy, wy) = (b(&ey, &ez), b(&ex, &ez), b(&ew, &ez), b(&ex, &ey), b(&ew, &ey));

        let mut p = b(&ew, &b(&ex, &yz));
        p.axpy(&e(&[y], &[z]), &b(&ew, &b(&xz, &ey)));
        p.axpy(&e(&[x, y], &[z]), &b(&wz, &xy));
        p.axpy(&e(&[x], &[y]), &b(&wy, &xz));
        p.axpy(&(e(&[x], &[y]) * e(&[x], &[z])), &b(&b(&ew, &yz), &ex));
        p.axpy(
            &(e(&[x], &[y]) * e(&[x], &[z]) * e(&[y], &[z])),
            &b(&b(&wz, &ey), &ex),
        );

        let mut q = b(&ew, &b(&ex, &yz));
        q.axpy(&e(&[x], &[y, z]), &b(&b(&ew, &yz), &ex));
        q.axpy(&e(&[y], &[z]), &b(&ew, &b(&xz, &ey)));
        q.axpy(&(e(&[y], &[z]) * e(&[x, z], &[y])), &b(&wy, &xz));
        q.axpy(&(e(&[y], &[z]) * e(&[x], &[z])), &b(&wz, &xy));
        q.axpy(
            &(e(&[y], &[z]) * e(&[x], &[z]) * e(&[x], &[y])),
            &b(&b(&wz, &ey), &ex),
        );
        (p, q)
    }

    /// Both paths compose, end at `P = Q`, and agree as morphisms on every basis quadruple.
    pub fn check_jacobiator_identity(&self) -> Report {
        let v0 = self.t.v0();
        let v1 = self.t.v1();
        let n = v0.dim();
        let mut composable = Verdict::Pass;
        let mut targets = Verdict::Pass;
        let mut identity = Verdict::Pass;
        'sweep: for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let tuple = [w, x, y, z];
                        let witness = |lhs: String, rhs: String| {
                            Verdict::Fail(Witness::new(tuple.to_vec(), labels(v0, &tuple), lhs, rhs))
                        };
                        let (left, right) = match self.jacobiator_paths(w, x, y, z) {
                            Ok(p) => p,
                            Err(e) => {
                                if composable.passed() {
                                    composable = witness(e.to_string(), "composable".into());
                                }
                                continue;
                            }
                        };
                        if targets.passed() {
                            let (p, q) = self.diagram_targets(w, x, y, z);
                            let (tl, tr) = (self.space.target(&left), self.space.target(&right));
                            if tl != p || tr != q || p != q {
                                targets = witness(render_vector(v0, &tl), render_vector(v0, &tr));
                            }
                        }
                        if identity.passed() && left != right {
                            identity = witness(render_vector(v1, &left.lift), render_vector(v1, &right.lift));
                        }
                        if !composable.passed() && !targets.passed() && !identity.passed() {
                            break 'sweep;
                        }
                    }
                }
            }
        }
        Report::new()
            .with("composable", composable)
            .with("targets", targets)
            .with("jacobiator-identity", identity)
    }
}

/// A Lie color 2-algebra stored by its structure maps on objects and morphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct LieColor2Algebra<F> {
    pub eps: Epsilon<F>,
    pub objects: GradedSpace,
    pub morphisms: GradedSpace,
    pub source: Matrix<F>,
    pub target: Matrix<F>,
    /// `i: x ↦ 1_x`
    pub identity: Matrix<F>,
    /// The bracket functor on basis morphisms, `L₁ × L₁ → L₁`.
    pub bracket: Bilinear<F>,
    /// `J_{x,y,z}` as an element of `L₁` for basis objects.
    pub jacobiator: Trilinear<F>,
}

impl<F: Field> LieColor2Algebra<F> {
    pub fn from_two_term(t: &TwoTermAlgebra<F>) -> Result<Self, Lc2Error> {
        let view = Lie2View::new(t);
        let space = &view.space;
        let morphisms = space.morphism_space()?;
        let (n0, m) = (t.v0().dim(), morphisms.dim());
        let basis: Vec<Morphism2<F>> = (0..m)
            .map(|i| space.from_coords(&Vector::unit(m, i)))
            .collect();
        let source = Matrix::from_columns(n0, &basis.iter().map(|f| space.source(f)).collect::<Vec<_>>());
        let target = Matrix::from_columns(n0, &basis.iter().map(|f| space.target(f)).collect::<Vec<_>>());
        let identity = Matrix::from_columns(
            m,
            &(0..n0).map(|x| space.to_coords(&view.id(&view.unit(x)))).collect::<Vec<_>>(),
        );
        let bracket = Bilinear::from_fn(m, m, m, |i, j| {
            space.to_coords(&view.bracket_unchecked(&basis[i], &basis[j]))
        });
        let jacobiator = Trilinear::from_fn(n0, m, |x, y, z| {
            space.to_coords(&view.jac(&view.unit(x), &view.unit(y), &view.unit(z)))
        });
        Ok(LieColor2Algebra {
            eps: t.epsilon().clone(),
            objects: t.v0().clone(),
            morphisms,
            source,
            target,
            identity,
            bracket,
            jacobiator,
        })
    }

    /// Recovers `V₁ = ker s`, `d = t|V₁`, `l₂(x,y) = s[1_x,1_y]`,
    /// `l₂(x,h) = [1_x, h]` and `l₃ = p₁ J`.
    pub fn to_two_term(&self) -> Result<TwoTermAlgebra<F>, Lc2Error> {
        let n0 = self.objects.dim();
        let ker = Subspace::span(&self.morphisms, &self.source.kernel())?;
        let lifts = ker.homogeneous_basis()?;
        let v1 = GradedSpace::new(
            self.objects.group().clone(),
            lifts.iter().map(|(deg, v)| {
                let (i, _) = v.support().next().expect("kernel basis vectors are nonzero");
                (self.morphisms.name(i).to_string(), deg.clone())
            }),
        )?;
        let n1 = v1.dim();
        let kvecs: Vec<Vector<F>> = lifts.into_iter().map(|(_, v)| v).collect();
        // p₁ along L₁ = i(V₀) ⊕ ker s
        let p1 = |u: &Vector<F>| -> Vector<F> {
            let ident = self.identity_coords(&self.source.apply(u));
            let rest = u.sub(&ident);
            Vector::new(ker.coordinates(&rest).expect("source removed"))
        };
        let d = Matrix::from_columns(n0, &kvecs.iter().map(|k| self.target.apply(k)).collect::<Vec<_>>());
        let ids: Vec<Vector<F>> = (0..n0).map(|x| self.identity_coords(&Vector::unit(n0, x))).collect();
        let l2_00 = Bilinear::from_fn(n0, n0, n0, |x, y| self.source.apply(&self.bracket.eval(&ids[x], &ids[y])));
        let l2_01 = Bilinear::from_fn(n0, n1, n1, |x, h| p1(&self.bracket.eval(&ids[x], &kvecs[h])));
        let l3 = Trilinear::from_fn(n0, n1, |x, y, z| p1(self.jacobiator.get(x, y, z)));
        Ok(TwoTermAlgebra::new(
            self.eps.clone(),
            self.objects.clone(),
            v1,
            d,
            l2_00,
            l2_01,
            l3,
        )?)
    }

    fn identity_coords(&self, x: &Vector<F>) -> Vector<F> {
        self.identity.apply(x)
    }
}

/// Builds the Lie color 2-algebra of `t` and reads a 2-term algebra back from it.
pub fn roundtrip<F: Field>(t: &TwoTermAlgebra<F>) -> Result<TwoTermAlgebra<F>, Lc2Error> {
    LieColor2Algebra::from_two_term(t)?.to_two_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linf2::{CocycleForm, CrossedModule};
    use crate::omni::OmniAlgebra;
    use num_rational::BigRational;

    type Q = BigRational;

    fn omni_plane() -> TwoTermAlgebra<Q> {
        TwoTermAlgebra::from_omni(&OmniAlgebra::new(fixtures::super_line_pair(), fixtures::super_eps()).unwrap())
    }

    fn string_sl2() -> TwoTermAlgebra<Q> {
        TwoTermAlgebra::string_from_quadratic(&fixtures::sl2_killing()).unwrap()
    }

    #[test]
    fn composition_rules() {
        let t = omni_plane();
        let view = Lie2View::new(&t);
        let s = &view.space;
        let n0 = t.v0().dim();
        let x = Vector::unit(n0, 4);
        let h = Vector::unit(2, 0);
        let k = Vector::unit(2, 1);
        let f = Morphism2::new(x.clone(), h.clone());
        let g = Morphism2::new(s.target(&f), k.clone());
        assert_eq!(s.compose(&f, &g).unwrap(), Morphism2::new(x.clone(), h.add(&k)));
        assert_eq!(s.compose(&s.identity(&x), &f).unwrap(), f);
        assert_eq!(s.compose(&f, &s.identity(&s.target(&f))).unwrap(), f);
        assert_eq!(s.compose(&f, &s.inverse(&f)).unwrap(), s.identity(&x));
        assert!(matches!(s.compose(&f, &f), Err(Lc2Error::NonComposable { .. })));
    }

    #[test]
    fn identities_bracket_to_identities() {
        let t = omni_plane();
        let view = Lie2View::new(&t);
        let n0 = t.v0().dim();
        for i in 0..n0 {
            for j in 0..n0 {
                let (x, y) = (Vector::unit(n0, i), Vector::unit(n0, j));
                let b = view.bracket(&view.space.identity(&x), &view.space.identity(&y)).unwrap();
                assert_eq!(b, view.space.identity(&t.bracket(&x, &y)));
            }
        }
    }

    #[test]
    fn string_jacobiator_lift_is_the_form() {
        let t = string_sl2();
        let view = Lie2View::new(&t);
        let u = |i| Vector::unit(3, i);
        // J_{e,f,h} has lift B([e,f],h) = 8
        let j = view.jacobiator(&u(1), &u(2), &u(0)).unwrap();
        assert_eq!(j.lift.coords, vec![Q::from_i64(8)]);
        assert_eq!(j.src, t.bracket(&t.bracket(&u(1), &u(2)), &u(0)));
    }

    #[test]
    fn mixed_degree_jacobiator_is_refused() {
        let t = omni_plane();
        let view = Lie2View::new(&t);
        let n0 = t.v0().dim();
        // E(v0,v0) has degree 0 and E(v0,v1) degree 1
        let mixed = Vector::unit(n0, 0).add(&Vector::unit(n0, 1));
        let y = Vector::unit(n0, 0);
        assert_eq!(view.jacobiator(&mixed, &y, &y), Err(Lc2Error::NotHomogeneous));
    }

    #[test]
    fn omni_plane_is_a_lie_2_algebra() {
        let t = omni_plane();
        let view = Lie2View::new(&t);
        assert!(view.check_jacobiator_targets().passed());
        for slot in 0..3 {
            assert!(view.check_naturality(slot).passed(), "slot {slot}");
        }
        let report = view.check_jacobiator_identity();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn strict_algebra_has_identity_jacobiators() {
        let c = CrossedModule::inner_derivations(&fixtures::gl11::<Q>()).unwrap();
        let t = TwoTermAlgebra::from_crossed_module(&c);
        let view = Lie2View::new(&t);
        let n = t.v0().dim();
        let u = |i| Vector::unit(n, i);
        for (a, b, c) in [(0, 1, 2), (1, 2, 3), (2, 3, 0)] {
            assert!(view.jacobiator(&u(a), &u(b), &u(c)).unwrap().lift.is_zero());
        }
        assert!(view.check_jacobiator_identity().passed());
    }

    #[test]
    fn broken_l3_fails_at_the_axiom_i_quadruple() {
        let t = fixtures::broken_l3::<Q>();
        let report = Lie2View::new(&t).check_jacobiator_identity();
        assert!(report.get("composable").unwrap().passed());
        assert!(report.get("targets").unwrap().passed());
        let via_diagram = report.get("jacobiator-identity").unwrap().witness().unwrap().tuple.clone();
        let via_axiom = t.check_i(CocycleForm::Coherent).witness().unwrap().tuple.clone();
        assert_eq!(via_diagram, via_axiom);
    }

    #[test]
    fn diagram_difference_is_minus_delta_l3() {
        let t = fixtures::broken_l3::<Q>();
        let view = Lie2View::new(&t);
        for (w, x, y, z) in [(0, 1, 2, 3), (3, 1, 0, 2), (1, 1, 0, 3)] {
            let (left, right) = view.jacobiator_paths(w, x, y, z).unwrap();
            let delta = t.delta_l3(CocycleForm::Coherent, w, x, y, z);
            assert_eq!(left.lift.sub(&right.lift), delta.neg());
        }
    }

    #[test]
    fn roundtrips_are_exact() {
        let c = CrossedModule::inner_derivations(&fixtures::gl11::<Q>()).unwrap();
        for t in [
            omni_plane(),
            string_sl2(),
            TwoTermAlgebra::from_lie(&fixtures::abelian_z2_dim2()),
            TwoTermAlgebra::from_crossed_module(&c),
        ] {
            assert_eq!(roundtrip(&t).unwrap(), t);
        }
    }
}
