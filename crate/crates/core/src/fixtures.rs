//! Small named examples used by tests, the command-line tool and the suite runner.

use crate::coloralg::{ColorAlgebra, QuadraticForm, Representation};
use crate::grading::{Bicharacter, Degree, Epsilon, GradingGroup};
use crate::gvs::GradedSpace;
use crate::linalg::Matrix;
use crate::linf2::{SkeletalQuadruple, TwoTermAlgebra};
use crate::scalar::Field;
use crate::tensor::Trilinear;

/// The trivial bicharacter on the trivial group.
pub fn trivial_eps<F: Field>() -> Epsilon<F> {
    Epsilon::new(Bicharacter::trivial(GradingGroup::trivial())).expect("trivial bicharacter is valid")
}

/// `ε(a,b) = (−1)^{ab}` on `Z₂`.
pub fn super_eps<F: Field>() -> Epsilon<F> {
    Epsilon::new(Bicharacter::super_sign()).expect("super sign is valid")
}

/// `ε(a,b) = (−1)^{a₁b₂ − a₂b₁}` on `Z₂ × Z₂`.
pub fn klein_eps<F: Field>() -> Epsilon<F> {
    let g = GradingGroup::new(vec![2, 2]).expect("valid orders");
    let b = Bicharacter::new(g, 2, vec![vec![0, 1], vec![1, 0]]).expect("valid exponents");
    Epsilon::new(b).expect("klein bicharacter is valid")
}

fn degrees(group: &GradingGroup, raw: &[&[i64]]) -> Vec<Degree> {
    raw.iter().map(|r| group.degree(r).expect("residues match the group")).collect()
}

/// `k` basis vectors `v0, v1, …` of the given degrees.
pub fn space(group: &GradingGroup, raw: &[&[i64]]) -> GradedSpace {
    GradedSpace::with_degrees(group.clone(), "v", degrees(group, raw)).expect("distinct names")
}

/// `V = K^{1|1}`.
pub fn super_line_pair() -> GradedSpace {
    space(&GradingGroup::cyclic(2), &[&[0], &[1]])
}

/// `gl(1|1)` on matrix units `E(v0,v0), E(v0,v1), E(v1,v0), E(v1,v1)`.
pub fn gl11<F: Field>() -> ColorAlgebra<F> {
    ColorAlgebra::gl(&super_line_pair(), super_eps())
}

/// `gl(V)` for `V` spanned by vectors of degree `(1,0)` and `(0,1)` in `Z₂ × Z₂`.
pub fn gl_klein<F: Field>() -> ColorAlgebra<F> {
    let eps = klein_eps::<F>();
    let v = space(eps.group(), &[&[1, 0], &[0, 1]]);
    ColorAlgebra::gl(&v, eps)
}

/// `sl(2)` on `h, e, f` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2<F: Field>() -> ColorAlgebra<F> {
    let g = GradingGroup::trivial();
    let space = GradedSpace::new(
        g.clone(),
        ["h", "e", "f"].map(|n| (n.to_string(), g.zero())),
    )
    .expect("distinct names");
    let c = F::from_i64;
    let entries = vec![
        (0, 1, 1, c(2)),
        (1, 0, 1, c(-2)),
        (0, 2, 2, c(-2)),
        (2, 0, 2, c(2)),
        (1, 2, 0, c(1)),
        (2, 1, 0, c(-1)),
    ];
    ColorAlgebra::new(space, trivial_eps(), &entries).expect("indices in range")
}

/// `sl(2)` with its Killing form `B(h,h) = 8`, `B(e,f) = B(f,e) = 4`.
pub fn sl2_killing<F: Field>() -> QuadraticForm<F> {
    let c = F::from_i64;
    let gram = Matrix::from_rows(vec![
        vec![c(8), c(0), c(0)],
        vec![c(0), c(0), c(4)],
        vec![c(0), c(4), c(0)],
    ]);
    QuadraticForm::new(sl2(), gram).expect("3x3 gram")
}

/// `gl(1|1)` with the supertrace form `B(X,Y) = str(XY)`.
pub fn gl11_supertrace<F: Field>() -> QuadraticForm<F> {
    let sign = |i: usize| if i == 0 { F::one() } else { -F::one() };
    let gram = Matrix::from_rows(
        (0..4)
            .map(|a| {
                let (i, j) = (a / 2, a % 2);
                (0..4)
                    .map(|b| {
                        let (k, l) = (b / 2, b % 2);
                        if j == k && i == l {
                            sign(i)
                        } else {
                            F::zero()
                        }
                    })
                    .collect()
            })
            .collect(),
    );
    QuadraticForm::new(gl11(), gram).expect("4x4 gram")
}

/// The zero bracket on `K^{1|1}`.
pub fn abelian_z2_dim2<F: Field>() -> ColorAlgebra<F> {
    ColorAlgebra::abelian(super_line_pair(), super_eps()).expect("groups agree")
}

/// A skew bracket on `x, y, z` with `[x,y] = x`, `[x,z] = y`, which fails Jacobi at `(x, y, z)`.
pub fn broken_jacobi<F: Field>() -> ColorAlgebra<F> {
    let g = GradingGroup::trivial();
    let space = GradedSpace::new(
        g.clone(),
        ["x", "y", "z"].map(|n| (n.to_string(), g.zero())),
    )
    .expect("distinct names");
    let c = F::from_i64;
    let entries = vec![
        (0, 1, 0, c(1)),
        (1, 0, 0, c(-1)),
        (0, 2, 1, c(1)),
        (2, 0, 1, c(-1)),
    ];
    ColorAlgebra::new(space, trivial_eps(), &entries).expect("indices in range")
}

/// `gl(2)` acting on itself by `ad`, with `d = 0` and `l₃` the alternation of
/// `(E(v0,v0), E(v0,v1), E(v1,v1)) ↦ E(v1,v1)`. Axioms (a)–(h) hold and (i) fails.
pub fn broken_l3<F: Field>() -> TwoTermAlgebra<F> {
    let g = GradingGroup::trivial();
    let gl = ColorAlgebra::gl(&space(&g, &[&[0], &[0]]), trivial_eps());
    let rep = Representation::adjoint(gl);
    let (a, b, c) = (0, 1, 3);
    let perms = [
        ((a, b, c), 1),
        ((b, c, a), 1),
        ((c, a, b), 1),
        ((b, a, c), -1),
        ((a, c, b), -1),
        ((c, b, a), -1),
    ];
    let entries: Vec<_> = perms
        .iter()
        .map(|&((i, j, k), s)| (i, j, k, 3, F::from_i64(s)))
        .collect();
    let l3 = Trilinear::from_entries(4, 4, &entries).expect("indices in range");
    SkeletalQuadruple::new(rep, l3).expect("shapes agree").to_two_term()
}
