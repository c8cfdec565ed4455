//! Named, self-contained algebra files.

use colorlie::coloralg::{ColorAlgebra, Representation};
use colorlie::fixtures as fx;
use colorlie::grading::{Bicharacter, Epsilon, GradingGroup};
use colorlie::gvs::GradedSpace;
use colorlie::linalg::Vector;
use colorlie::linf2::{CrossedModule, TwoTermAlgebra};
use colorlie::omni::OmniAlgebra;
use colorlie::Scalar;

use crate::error::CliError;
use crate::format::{
    crossed_module_spec, entries_spec, matrix_spec, space_spec, vector_spec, AlgebraFile, QuadraticSpec,
    RepresentationSpec, SubspaceSpec,
};

pub const NAMES: &[&str] = &[
    "abelian-z2-dim2",
    "broken-jacobi",
    "broken-l3",
    "gl-klein",
    "gl11",
    "gl11-in-dim5",
    "gl11-supertrace",
    "inn-der-gl11",
    "inn-der-gl11-strict",
    "omni-klein-plane",
    "omni-line",
    "omni-super-plane",
    "omni-super-plane-l2",
    "omni-z3-plane",
    "sl2",
    "sl2-killing",
    "sl2-string",
];

fn unit(n: usize, i: usize) -> Vector<Scalar> {
    Vector::unit(n, i)
}

fn subspace(vectors: &[Vector<Scalar>], bracket: Option<&ColorAlgebra<Scalar>>) -> SubspaceSpec {
    SubspaceSpec {
        vectors: vectors.iter().map(vector_spec).collect(),
        bracket: bracket.map(|b| entries_spec(b.table())),
    }
}

/// `ε(a,b) = ω^{a₁b₂ − a₂b₁}` on `Z₃ × Z₃`.
pub fn z3_eps() -> Epsilon<Scalar> {
    let g = GradingGroup::new(vec![3, 3]).expect("valid orders");
    let b = Bicharacter::new(g, 3, vec![vec![0, 1], vec![2, 0]]).expect("2x2 exponents");
    Epsilon::new(b).expect("cube roots live in Q(ζ₃)")
}

/// The omni spaces by name: the base space and its commutation factor.
pub fn omni_base(name: &str) -> Option<(GradedSpace, Epsilon<Scalar>)> {
    Some(match name {
        "omni-line" => (fx::space(&GradingGroup::trivial(), &[&[0]]), fx::trivial_eps()),
        "omni-super-plane" | "omni-super-plane-l2" => (fx::super_line_pair(), fx::super_eps()),
        "omni-klein-plane" => {
            let eps = fx::klein_eps();
            (fx::space(eps.group(), &[&[1, 0], &[0, 1]]), eps)
        }
        "omni-z3-plane" => {
            let eps = z3_eps();
            (fx::space(eps.group(), &[&[1, 0], &[0, 1]]), eps)
        }
        _ => return None,
    })
}

fn omni_file(v: GradedSpace, eps: Epsilon<Scalar>) -> AlgebraFile {
    let n = v.dim();
    let omni = OmniAlgebra::new(v.clone(), eps.clone()).expect("groups agree");
    let mut f = AlgebraFile::header(&eps);
    f.space = Some(space_spec(&v));
    let off = omni.vec_offset();
    let dim = omni.space().dim();
    // V itself is F_0, and gl(V) is the Dirac structure with D = gl(V)
    f.subspaces.insert(
        "vectors".into(),
        subspace(&(0..n).map(|i| unit(dim, off + i)).collect::<Vec<_>>(), None),
    );
    f.subspaces.insert(
        "endomorphisms".into(),
        subspace(&(0..off).map(|i| unit(dim, i)).collect::<Vec<_>>(), None),
    );
    f
}

pub fn fixture(name: &str) -> Result<AlgebraFile, CliError> {
    let f = match name {
        "abelian-z2-dim2" => {
            let g = fx::abelian_z2_dim2::<Scalar>();
            let mut f = AlgebraFile::from_algebra(&g);
            let w = ColorAlgebra::abelian(fx::space(&GradingGroup::cyclic(2), &[&[0]]), fx::super_eps())
                .expect("groups agree");
            f.subspaces.insert("W".into(), subspace(&[unit(2, 0)], Some(&w)));
            f
        }
        "broken-jacobi" => AlgebraFile::from_algebra(&fx::broken_jacobi()),
        "broken-l3" => AlgebraFile::from_two_term(&fx::broken_l3()),
        "gl-klein" => AlgebraFile::from_algebra(&fx::gl_klein()),
        "gl11" => {
            let rep = Representation::tautological(&fx::super_line_pair(), fx::super_eps());
            let mut f = AlgebraFile::from_algebra(rep.algebra());
            f.representation = Some(RepresentationSpec {
                module: Some(space_spec(rep.module())),
                maps: rep.maps().iter().map(matrix_spec).collect(),
            });
            f
        }
        "gl11-in-dim5" => {
            // gl(1|1) on a proper graded subspace of a five-dimensional space
            let v = fx::space(&GradingGroup::cyclic(2), &[&[0], &[1], &[1], &[0], &[1]]);
            let g = fx::gl11::<Scalar>();
            let mut f = AlgebraFile::header(g.epsilon());
            f.space = Some(space_spec(&v));
            let gens = [unit(5, 0), unit(5, 1).add(&unit(5, 4)), unit(5, 2), unit(5, 3)];
            f.subspaces.insert("W".into(), subspace(&gens, Some(&g)));
            f
        }
        "gl11-supertrace" => {
            let q = fx::gl11_supertrace::<Scalar>();
            let mut f = AlgebraFile::from_algebra(q.algebra());
            f.quadratic = Some(QuadraticSpec {
                gram: matrix_spec(q.gram()),
            });
            f
        }
        "inn-der-gl11" => {
            let c = CrossedModule::inner_derivations(&fx::gl11()).map_err(|e| CliError::Math(e.to_string()))?;
            let mut f = AlgebraFile::from_algebra(c.g());
            f.crossed_module = Some(crossed_module_spec(&c));
            f
        }
        "inn-der-gl11-strict" => {
            let c = CrossedModule::inner_derivations(&fx::gl11()).map_err(|e| CliError::Math(e.to_string()))?;
            AlgebraFile::from_two_term(&TwoTermAlgebra::from_crossed_module(&c))
        }
        "omni-super-plane-l2" => {
            let (v, eps) = omni_base(name).expect("known omni space");
            let omni = OmniAlgebra::new(v, eps).expect("groups agree");
            AlgebraFile::from_two_term(&TwoTermAlgebra::from_omni(&omni))
        }
        "sl2" => AlgebraFile::from_algebra(&fx::sl2()),
        "sl2-killing" => {
            let q = fx::sl2_killing::<Scalar>();
            let mut f = AlgebraFile::from_algebra(q.algebra());
            f.quadratic = Some(QuadraticSpec {
                gram: matrix_spec(q.gram()),
            });
            f
        }
        "sl2-string" => {
            let t = TwoTermAlgebra::string_from_quadratic(&fx::sl2_killing()).map_err(|e| CliError::Math(e.to_string()))?;
            AlgebraFile::from_two_term(&t)
        }
        other => match omni_base(other) {
            Some((v, eps)) => omni_file(v, eps),
            None => {
                return Err(CliError::UnknownFixture {
                    name: other.to_string(),
                    known: NAMES.join(", "),
                })
            }
        },
    };
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_algebra_file;

    #[test]
    fn every_fixture_reparses() {
        for name in NAMES {
            let f = fixture(name).unwrap();
            assert_eq!(parse_algebra_file(&f.to_json()).unwrap(), f, "{name}");
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(fixture("gl12"), Err(CliError::UnknownFixture { .. })));
    }
}
