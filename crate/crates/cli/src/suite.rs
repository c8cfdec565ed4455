//! Seeded randomized identities over the fixture corpus.
//!
//! Elements are homogeneous with small rational coordinates; every check
//! stops at its first counterexample.

use colorlie::coloralg::ColorAlgebra;
use colorlie::grading::{Degree, Epsilon};
use colorlie::gvs::GradedSpace;
use colorlie::lc2::{Lie2View, Morphism2};
use colorlie::linalg::Vector;
use colorlie::linf2::{CocycleForm, TwoTermAlgebra};
use colorlie::omni::{OmniAlgebra, OmniElement};
use colorlie::scalar::Field;
use colorlie::verdict::{render_vector, Report, Verdict, Witness};
use colorlie::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::CliError;
use crate::fixtures::{self, NAMES};
use crate::format::Model;
use crate::report::CliReport;

type V = Vector<Scalar>;

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn scalar(&mut self) -> Scalar {
        Scalar::from_ratio(self.rng.gen_range(-4..=4), self.rng.gen_range(1..=3))
    }

    /// A random nonzero homogeneous vector and its degree.
    fn homogeneous(&mut self, space: &GradedSpace) -> (Degree, V) {
        let n = space.dim();
        let i = self.rng.gen_range(0..n);
        let d = space.degree(i).clone();
        let mut v = Vector::zeros(n);
        for k in space.indices_of_degree(&d) {
            v.coords[k] = self.scalar();
        }
        if v.is_zero() {
            v.coords[i] = Scalar::from_i64(1);
        }
        (d, v)
    }

    fn any(&mut self, n: usize) -> V {
        Vector::new((0..n).map(|_| self.scalar()).collect())
    }

    fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

fn fail(space: &GradedSpace, args: &[&V], lhs: String, rhs: String) -> Verdict {
    let labels = args.iter().map(|v| render_vector(space, v)).collect();
    Verdict::Fail(Witness::new(vec![], labels, lhs, rhs))
}

/// Runs `trial` up to `trials` times and keeps the first failure.
fn repeat(trials: usize, mut trial: impl FnMut() -> Option<Verdict>) -> Verdict {
    (0..trials).find_map(|_| trial()).unwrap_or(Verdict::Pass)
}

fn vector_check(space: &GradedSpace, args: &[&V], lhs: &V, rhs: &V) -> Option<Verdict> {
    (lhs != rhs).then(|| fail(space, args, render_vector(space, lhs), render_vector(space, rhs)))
}

fn algebra_checks(name: &str, g: &ColorAlgebra<Scalar>, s: &mut Sampler, trials: usize, r: &mut Report) {
    let v = g.space();
    let eps = g.epsilon();
    let b = |x: &V, y: &V| g.bracket(x, y);
    r.push(
        format!("{name}/skew"),
        repeat(trials, || {
            let ((dx, x), (dy, y)) = (s.homogeneous(v), s.homogeneous(v));
            let rhs = b(&y, &x).scale(&-eps.eps(&dx, &dy));
            vector_check(v, &[&x, &y], &b(&x, &y), &rhs)
        }),
    );
    let mut j1_j2 = Verdict::Pass;
    let mut jacobi = Verdict::Pass;
    for _ in 0..trials {
        let ((dx, x), (dy, y), (dz, z)) = (s.homogeneous(v), s.homogeneous(v), s.homogeneous(v));
        let mut j1 = b(&b(&x, &y), &z).scale(&eps.eps(&dz, &dx));
        j1.axpy(&eps.eps(&dx, &dy), &b(&b(&y, &z), &x));
        j1.axpy(&eps.eps(&dy, &dz), &b(&b(&z, &x), &y));
        let mut j2 = b(&b(&x, &y), &z).sub(&b(&x, &b(&y, &z)));
        j2.axpy(&eps.eps(&dx, &dy), &b(&y, &b(&x, &z)));
        if j1_j2.passed() {
            if let Some(f) = vector_check(v, &[&x, &y, &z], &j1, &j2.scale(&eps.eps(&dz, &dx))) {
                j1_j2 = f;
            }
        }
        if jacobi.passed() && !j2.is_zero() {
            jacobi = fail(v, &[&x, &y, &z], render_vector(v, &j2), "0".into());
        }
    }
    r.push(format!("{name}/j1-j2"), j1_j2);
    // the broken fixtures are expected to violate Jacobi
    if !name.starts_with("broken") {
        r.push(format!("{name}/jacobi"), jacobi);
    }
}

fn omni_checks(name: &str, o: &OmniAlgebra<Scalar>, s: &mut Sampler, trials: usize, r: &mut Report) {
    let e = o.space();
    let eps = o.epsilon();
    let n = o.n();
    let el = |v: &V| OmniElement::from_coords(n, v);
    let mut leibniz = Verdict::Pass;
    let mut homotopy = Verdict::Pass;
    let mut decomposition = Verdict::Pass;
    for _ in 0..trials {
        let ((dx, x), (dy, y), (dz, z)) = (s.homogeneous(e), s.homogeneous(e), s.homogeneous(e));
        let (a, b, c) = (el(&x), el(&y), el(&z));
        if leibniz.passed() {
            let lhs = o.circ(&a, &o.circ(&b, &c)).to_coords();
            let rhs = o
                .circ(&o.circ(&a, &b), &c)
                .add(&o.circ(&b, &o.circ(&a, &c)).scale(&eps.eps(&dx, &dy)))
                .to_coords();
            if let Some(f) = vector_check(e, &[&x, &y, &z], &lhs, &rhs) {
                leibniz = f;
            }
        }
        if homotopy.passed() {
            let br = |p: &OmniElement<Scalar>, q: &OmniElement<Scalar>| o.bracket(p, q);
            let j1 = br(&br(&a, &b), &c)
                .scale(&eps.eps(&dz, &dx))
                .add(&br(&br(&b, &c), &a).scale(&eps.eps(&dx, &dy)))
                .add(&br(&br(&c, &a), &b).scale(&eps.eps(&dy, &dz)))
                .to_coords();
            let t = OmniElement::from_vec(o.homotopy(&a, &b, &c)).to_coords();
            if let Some(f) = vector_check(e, &[&x, &y, &z], &j1, &t) {
                homotopy = f;
            }
        }
        if decomposition.passed() {
            let lhs = o.circ(&a, &b).to_coords();
            let rhs = o.bracket(&a, &b).add(&OmniElement::from_vec(o.pairing(&a, &b))).to_coords();
            if let Some(f) = vector_check(e, &[&x, &y], &lhs, &rhs) {
                decomposition = f;
            }
        }
    }
    r.push(format!("{name}/leibniz"), leibniz);
    r.push(format!("{name}/homotopy"), homotopy);
    r.push(format!("{name}/decomposition"), decomposition);
}

fn morphism(s: &mut Sampler, t: &TwoTermAlgebra<Scalar>, src: V) -> Morphism2<Scalar> {
    Morphism2::new(src, s.any(t.v1().dim()))
}

fn two_term_checks(name: &str, t: &TwoTermAlgebra<Scalar>, s: &mut Sampler, trials: usize, r: &mut Report) {
    let view = Lie2View::new(t);
    let sp = &view.space;
    let (n0, n1) = (t.v0().dim(), t.v1().dim());
    let l1 = sp.morphism_space().expect("morphism basis names are distinct");
    let show = |f: &Morphism2<Scalar>| sp.to_coords(f);
    let mut assoc = Verdict::Pass;
    let mut interchange = Verdict::Pass;
    let mut coherence = Verdict::Pass;
    for _ in 0..trials {
        let x = s.any(n0);
        let f = morphism(s, t, x);
        let g = morphism(s, t, sp.target(&f));
        let h = morphism(s, t, sp.target(&g));
        if assoc.passed() {
            let lhs = sp.compose(&sp.compose(&f, &g).expect("composable"), &h).expect("composable");
            let rhs = sp.compose(&f, &sp.compose(&g, &h).expect("composable")).expect("composable");
            if let Some(v) = vector_check(&l1, &[&show(&f), &show(&g), &show(&h)], &show(&lhs), &show(&rhs)) {
                assoc = v;
            }
        }
        if interchange.passed() {
            let y = s.any(n0);
            let f2 = morphism(s, t, y);
            let g2 = morphism(s, t, sp.target(&f2));
            let outer = view
                .bracket(&sp.compose(&f, &g).expect("composable"), &sp.compose(&f2, &g2).expect("composable"))
                .expect("morphisms of this space");
            let inner = view
                .bracket(&f, &f2)
                .and_then(|a| view.bracket(&g, &g2).map(|b| (a, b)))
                .and_then(|(a, b)| sp.compose(&a, &b));
            let args = [&show(&f), &show(&g), &show(&f2), &show(&g2)];
            match inner {
                Ok(inner) => {
                    if let Some(v) = vector_check(&l1, &args, &show(&outer), &show(&inner)) {
                        interchange = v;
                    }
                }
                Err(e) => interchange = fail(&l1, &args, e.to_string(), "composable".into()),
            }
        }
        if coherence.passed() && n0 > 0 && n1 > 0 {
            let q = [s.index(n0), s.index(n0), s.index(n0), s.index(n0)];
            if let Ok((left, right)) = view.jacobiator_paths(q[0], q[1], q[2], q[3]) {
                let diff = left.lift.sub(&right.lift);
                let delta = t.delta_l3(CocycleForm::Coherent, q[0], q[1], q[2], q[3]).neg();
                if diff != delta {
                    let labels = q.iter().map(|&i| t.v0().name(i).to_string()).collect();
                    coherence = Verdict::Fail(Witness::new(
                        q.to_vec(),
                        labels,
                        render_vector(t.v1(), &diff),
                        render_vector(t.v1(), &delta),
                    ));
                }
            }
        }
    }
    r.push(format!("{name}/associativity"), assoc);
    r.push(format!("{name}/interchange"), interchange);
    r.push(format!("{name}/jacobiator-vs-cocycle"), coherence);
}

fn representation_checks(
    name: &str,
    rep: &colorlie::coloralg::Representation<Scalar>,
    s: &mut Sampler,
    trials: usize,
    r: &mut Report,
) {
    let g = rep.algebra();
    let (v, m) = (g.space(), rep.module());
    let eps: &Epsilon<Scalar> = g.epsilon();
    r.push(
        format!("{name}/representation"),
        repeat(trials, || {
            let ((dx, x), (dy, y)) = (s.homogeneous(v), s.homogeneous(v));
            let w = s.any(m.dim());
            let lhs = rep.act(&g.bracket(&x, &y), &w);
            let rhs = rep
                .act(&x, &rep.act(&y, &w))
                .sub(&rep.act(&y, &rep.act(&x, &w)).scale(&eps.eps(&dx, &dy)));
            vector_check(m, &[&x, &y, &w], &lhs, &rhs)
        }),
    );
}

fn crossed_checks(
    name: &str,
    c: &colorlie::linf2::CrossedModule<Scalar>,
    s: &mut Sampler,
    trials: usize,
    r: &mut Report,
) {
    let (g, h) = (c.g(), &c.h);
    r.push(
        format!("{name}/equivariance"),
        repeat(trials, || {
            let ((_, x), (_, k)) = (s.homogeneous(g.space()), s.homogeneous(h.space()));
            let lhs = c.phi.apply(&c.action.act(&x, &k));
            let rhs = g.bracket(&x, &c.phi.apply(&k));
            vector_check(g.space(), &[&x, &k], &lhs, &rhs)
        }),
    );
    r.push(
        format!("{name}/peiffer"),
        repeat(trials, || {
            let ((_, a), (_, b)) = (s.homogeneous(h.space()), s.homogeneous(h.space()));
            let lhs = c.action.act(&c.phi.apply(&a), &b);
            vector_check(h.space(), &[&a, &b], &lhs, &h.bracket(&a, &b))
        }),
    );
}

fn fixture_checks(name: &str, m: &Model, s: &mut Sampler, trials: usize) -> Result<Report, CliError> {
    let f = m.file;
    let mut r = Report::new();
    if f.space.is_some() {
        if f.bracket.is_some() {
            algebra_checks(name, &m.algebra()?, s, trials, &mut r);
        } else if name.starts_with("omni-") {
            let o = OmniAlgebra::new(m.space()?, m.epsilon()?).map_err(|e| CliError::Math(e.to_string()))?;
            omni_checks(name, &o, s, trials, &mut r);
        }
    }
    if f.representation.is_some() {
        representation_checks(name, &m.representation()?, s, trials, &mut r);
    }
    if f.two_term.is_some() {
        two_term_checks(name, &m.two_term()?, s, trials, &mut r);
    }
    if f.crossed_module.is_some() {
        crossed_checks(name, &m.crossed_module()?, s, trials, &mut r);
    }
    Ok(r)
}

pub fn run(seed: u64, trials: usize, max_dim: usize) -> CliReport {
    let files: Result<Vec<_>, _> = NAMES.iter().map(|n| fixtures::fixture(n)).collect();
    let files = match files {
        Ok(f) => f,
        Err(e) => {
            let mut r = CliReport::new("suite", b"");
            r.fail_with(&e);
            return r;
        }
    };
    let corpus: String = files.iter().map(|f| f.to_json()).collect();
    let mut report = CliReport::new("suite", corpus.as_bytes());
    report.seed = Some(seed);
    let mut sampler = Sampler {
        rng: ChaCha8Rng::seed_from_u64(seed),
    };
    for (name, file) in NAMES.iter().zip(&files) {
        match fixture_checks(name, &Model::new(file, max_dim), &mut sampler, trials) {
            Ok(r) => report.add(&r),
            Err(e) => {
                report.fail_with(&e);
                return report;
            }
        }
    }
    report.output = Some(json!({ "fixtures": NAMES, "trials": trials }));
    report
}
