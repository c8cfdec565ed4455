//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
//!
//! Each criterion is decided by the library verdicts and, where an identity is
//! involved, by an independent dense re-evaluation written out below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use colorlie::coloralg::ColorAlgebra;
use colorlie::fixtures as fx;
use colorlie::grading::{Degree, Epsilon};
use colorlie::gvs::GradedSpace;
use colorlie::lc2::{self, Lie2View};
use colorlie::linalg::{Matrix, Vector};
use colorlie::linf2::{CocycleForm, CrossedModule, HForm, TwoTermAlgebra};
use colorlie::omni::OmniAlgebra;
use colorlie::scalar::Field;
use colorlie::verdict::{Report, Verdict};
use colorlie::Scalar;
use colorlie_cli::fixtures as cli_fx;
use colorlie_cli::format::Model;

type S = Scalar;
type Eps = Epsilon<S>;
type Outcome = Result<String, String>;

fn c(n: i64) -> S {
    S::from_i64(n)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_failure(r: &Report) -> String {
    match r.first_failure() {
        Some(c) => format!("{}: {}", c.name, c.verdict.witness().map(|w| w.to_string()).unwrap_or_default()),
        None => "none".into(),
    }
}

fn space_of(eps: &Eps, raw: &[Vec<i64>]) -> GradedSpace {
    let refs: Vec<&[i64]> = raw.iter().map(Vec::as_slice).collect();
    fx::space(eps.group(), &refs)
}

/// `V` of dimension 1..=max over the trivial group, `Z₂` and `Z₂ × Z₂`.
fn configurations(max: usize) -> Vec<(String, GradedSpace, Eps)> {
    let mut out = Vec::new();
    for k in 1..=max {
        let triv = fx::trivial_eps::<S>();
        out.push((format!("trivial dim {k}"), space_of(&triv, &vec![vec![0]; k]), triv));
        let sup = fx::super_eps::<S>();
        let raw: Vec<Vec<i64>> = (0..k).map(|i| vec![(i % 2) as i64]).collect();
        out.push((format!("Z2 dim {k}"), space_of(&sup, &raw), sup));
        let klein = fx::klein_eps::<S>();
        let raw: Vec<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1]][..k].to_vec();
        out.push((format!("Z2xZ2 dim {k}"), space_of(&klein, &raw), klein));
    }
    out
}

type Table = Vec<Vec<Vec<S>>>;

fn zeros(n: usize) -> Vec<S> {
    vec![c(0); n]
}

fn axpy(acc: &mut [S], k: &S, v: &[S]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = a.clone() + &(k.clone() * x);
    }
}

/// `Σ_b u_b t[a][b]`
fn left(t: &Table, a: usize, u: &[S], out_dim: usize) -> Vec<S> {
    let mut acc = zeros(out_dim);
    for (b, ub) in u.iter().enumerate() {
        if *ub != c(0) {
            axpy(&mut acc, ub, &t[a][b]);
        }
    }
    acc
}

/// `Σ_a u_a t[a][b]`
fn right(t: &Table, u: &[S], b: usize, out_dim: usize) -> Vec<S> {
    let mut acc = zeros(out_dim);
    for (a, ua) in u.iter().enumerate() {
        if *ua != c(0) {
            axpy(&mut acc, ua, &t[a][b]);
        }
    }
    acc
}

fn scaled(k: &S, v: &[S]) -> Vec<S> {
    v.iter().map(|x| k.clone() * x).collect()
}

/// `gl(V) ⊕ V` tabulated straight from the matrix-unit formulas.
struct OmniOracle {
    n: usize,
    deg: Vec<Degree>,
    eps: Eps,
    circ: Table,
    bracket: Table,
    pairing: Table,
}

impl OmniOracle {
    fn new(v: &GradedSpace, eps: &Eps) -> Self {
        let n = v.dim();
        let d = n * n + n;
        let vdeg: Vec<Degree> = (0..n).map(|i| v.degree(i).clone()).collect();
        let mut deg: Vec<Degree> = Vec::with_capacity(d);
        for i in 0..n {
            for j in 0..n {
                deg.push(eps.sub(&vdeg[i], &vdeg[j]));
            }
        }
        deg.extend(vdeg.iter().cloned());
        let half = S::from_ratio(1, 2);
        let unit = |dim: usize, i: usize, k: &S| {
            let mut v = zeros(dim);
            v[i] = k.clone();
            v
        };
        let mut circ = vec![vec![zeros(d); d]; d];
        let mut bracket = vec![vec![zeros(d); d]; d];
        let mut pairing = vec![vec![zeros(n); d]; d];
        for a in 0..d {
            for b in 0..d {
                let e = eps.eps(&deg[a], &deg[b]);
                match (a < n * n, b < n * n) {
                    (true, true) => {
                        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
                        let mut m = zeros(d);
                        if j == k {
                            m[i * n + l] = m[i * n + l].clone() + &c(1);
                        }
                        if l == i {
                            m[k * n + j] = m[k * n + j].clone() - e.clone();
                        }
                        circ[a][b] = m.clone();
                        bracket[a][b] = m;
                    }
                    (true, false) => {
                        let (i, j, k) = (a / n, a % n, b - n * n);
                        if j == k {
                            circ[a][b] = unit(d, n * n + i, &c(1));
                            bracket[a][b] = unit(d, n * n + i, &half);
                            pairing[a][b] = unit(n, i, &half);
                        }
                    }
                    (false, true) => {
                        let (k, i, j) = (a - n * n, b / n, b % n);
                        if j == k {
                            bracket[a][b] = unit(d, n * n + i, &-(half.clone() * &e));
                            pairing[a][b] = unit(n, i, &(half.clone() * &e));
                        }
                    }
                    (false, false) => {}
                }
            }
        }
        OmniOracle {
            n,
            deg,
            eps: eps.clone(),
            circ,
            bracket,
            pairing,
        }
    }

    fn dim(&self) -> usize {
        self.deg.len()
    }

    fn e(&self, a: usize, b: usize) -> S {
        self.eps.eps(&self.deg[a], &self.deg[b])
    }

    /// `x∘(y∘z) − (x∘y)∘z − ε(x,y) y∘(x∘z)`
    fn leibniz_defect(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let d = self.dim();
        let t = &self.circ;
        let mut out = left(t, x, &t[y][z], d);
        axpy(&mut out, &c(-1), &right(t, &t[x][y], z, d));
        axpy(&mut out, &-self.e(x, y), &left(t, y, &t[x][z], d));
        out
    }

    fn j1(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let d = self.dim();
        let b = &self.bracket;
        let mut out = scaled(&self.e(z, x), &right(b, &b[x][y], z, d));
        axpy(&mut out, &self.e(x, y), &right(b, &b[y][z], x, d));
        axpy(&mut out, &self.e(y, z), &right(b, &b[z][x], y, d));
        out
    }

    /// `T(x,y,z)` as a vector of `V`.
    fn t(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let (b, p, n) = (&self.bracket, &self.pairing, self.n);
        let mut out = scaled(&self.e(z, x), &right(p, &b[x][y], z, n));
        axpy(&mut out, &self.e(x, y), &right(p, &b[y][z], x, n));
        axpy(&mut out, &self.e(y, z), &right(p, &b[z][x], y, n));
        scaled(&S::from_ratio(1, 3), &out)
    }

    fn embed(&self, v: &[S]) -> Vec<S> {
        let mut out = zeros(self.n * self.n);
        out.extend(v.iter().cloned());
        out
    }
}

/// Dense bracket of a color algebra, read off its structure constants.
struct BracketOracle {
    deg: Vec<Degree>,
    eps: Eps,
    t: Table,
}

impl BracketOracle {
    fn new(g: &ColorAlgebra<S>) -> Self {
        let n = g.dim();
        let mut t = vec![vec![zeros(n); n]; n];
        for (i, j, k, v) in g.entries() {
            t[i][j][k] = v;
        }
        BracketOracle {
            deg: (0..n).map(|i| g.space().degree(i).clone()).collect(),
            eps: g.epsilon().clone(),
            t,
        }
    }

    fn e(&self, a: usize, b: usize) -> S {
        self.eps.eps(&self.deg[a], &self.deg[b])
    }

    fn skew(&self) -> bool {
        let n = self.deg.len();
        (0..n).all(|x| (0..n).all(|y| self.t[x][y] == scaled(&-self.e(x, y), &self.t[y][x])))
    }

    /// `ε(z,x)[x,[y,z]] + ε(x,y)[y,[z,x]] + ε(y,z)[z,[x,y]]`
    fn jacobi(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let n = self.deg.len();
        let t = &self.t;
        let mut out = scaled(&self.e(z, x), &left(t, x, &t[y][z], n));
        axpy(&mut out, &self.e(x, y), &left(t, y, &t[z][x], n));
        axpy(&mut out, &self.e(y, z), &left(t, z, &t[x][y], n));
        out
    }

    fn is_lie(&self) -> bool {
        let n = self.deg.len();
        let zero = zeros(n);
        self.skew() && triples(n).all(|(x, y, z)| self.jacobi(x, y, z) == zero)
    }

    /// `J₁ − ε(z,x)J₂` with `J₁ = ε(z,x)[[x,y],z] + cyclic` and
    /// `J₂ = [[x,y],z] − [x,[y,z]] + ε(x,y)[y,[x,z]]`.
    fn j1_minus_j2(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let n = self.deg.len();
        let t = &self.t;
        let mut j1 = scaled(&self.e(z, x), &right(t, &t[x][y], z, n));
        axpy(&mut j1, &self.e(x, y), &right(t, &t[y][z], x, n));
        axpy(&mut j1, &self.e(y, z), &right(t, &t[z][x], y, n));
        let mut j2 = right(t, &t[x][y], z, n);
        axpy(&mut j2, &c(-1), &left(t, x, &t[y][z], n));
        axpy(&mut j2, &self.e(x, y), &left(t, y, &t[x][z], n));
        axpy(&mut j1, &-self.e(z, x), &j2);
        j1
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn algebra(eps: Eps, raw: &[Vec<i64>], names: &[&str], entries: &[(usize, usize, usize, i64)]) -> ColorAlgebra<S> {
    let degs: Vec<Degree> = raw.iter().map(|r| eps.group().degree(r).unwrap()).collect();
    let space = GradedSpace::new(
        eps.group().clone(),
        names.iter().zip(degs).map(|(n, d)| (n.to_string(), d)),
    )
    .unwrap();
    let entries: Vec<_> = entries.iter().map(|&(i, j, k, v)| (i, j, k, c(v))).collect();
    ColorAlgebra::new(space, eps, &entries).unwrap()
}

/// ε-skew brackets, some Lie and some not.
fn corpus() -> Vec<(&'static str, ColorAlgebra<S>)> {
    let triv = || fx::trivial_eps::<S>();
    let zero3 = vec![vec![0]; 3];
    vec![
        ("zero on K^{1|1}", fx::abelian_z2_dim2()),
        ("sl(2)", fx::sl2()),
        ("gl(1|1)", fx::gl11()),
        ("gl over Z2xZ2", fx::gl_klein()),
        (
            "Heisenberg",
            algebra(triv(), &zero3, &["x", "y", "z"], &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        ),
        (
            "super [o,o] = e",
            algebra(fx::super_eps(), &[vec![0], vec![1]], &["e", "o"], &[(1, 1, 0, 1)]),
        ),
        ("broken Jacobi", fx::broken_jacobi()),
        (
            "[x,y] = z, [x,z] = x",
            algebra(
                triv(),
                &zero3,
                &["x", "y", "z"],
                &[(0, 1, 2, 1), (1, 0, 2, -1), (0, 2, 0, 1), (2, 0, 0, -1)],
            ),
        ),
        (
            "super [a,b] = b, [b,b] = a",
            algebra(
                fx::super_eps(),
                &[vec![0], vec![1]],
                &["a", "b"],
                &[(0, 1, 1, 1), (1, 0, 1, -1), (1, 1, 0, 1)],
            ),
        ),
        (
            "sl(2) with [e,f] = h + e",
            algebra(
                triv(),
                &zero3,
                &["h", "e", "f"],
                &[
                    (0, 1, 1, 2),
                    (1, 0, 1, -2),
                    (0, 2, 2, -2),
                    (2, 0, 2, 2),
                    (1, 2, 0, 1),
                    (2, 1, 0, -1),
                    (1, 2, 1, 1),
                    (2, 1, 1, -1),
                ],
            ),
        ),
        (
            "Z2xZ2 [a,b] = c, [a,c] = b",
            algebra(
                fx::klein_eps(),
                &[vec![1, 0], vec![0, 1], vec![1, 1]],
                &["a", "b", "c"],
                &[(0, 1, 2, 1), (1, 0, 2, 1), (0, 2, 1, 1), (2, 0, 1, 1)],
            ),
        ),
    ]
}

fn omni_of(g: &ColorAlgebra<S>) -> OmniAlgebra<S> {
    OmniAlgebra::new(g.space().clone(), g.epsilon().clone()).unwrap()
}

fn crit_leibniz() -> Outcome {
    let mut triples_seen = 0;
    for (name, v, eps) in configurations(3) {
        let omni = OmniAlgebra::new(v.clone(), eps.clone()).map_err(|e| e.to_string())?;
        ensure(omni.check_leibniz().passed(), || format!("{name}: {:?}", omni.check_leibniz()))?;
        let o = OmniOracle::new(&v, &eps);
        let zero = zeros(o.dim());
        for (x, y, z) in triples(o.dim()) {
            ensure(o.leibniz_defect(x, y, z) == zero, || format!("{name}: oracle defect at {x},{y},{z}"))?;
            triples_seen += 1;
        }
    }
    Ok(format!("{triples_seen} basis triples over 9 configurations, 0 violations"))
}

fn crit_homotopy() -> Outcome {
    let mut triples_seen = 0;
    for (name, v, eps) in configurations(3) {
        let omni = OmniAlgebra::new(v.clone(), eps.clone()).map_err(|e| e.to_string())?;
        ensure(omni.check_homotopy().passed(), || format!("{name}: {:?}", omni.check_homotopy()))?;
        let o = OmniOracle::new(&v, &eps);
        for (x, y, z) in triples(o.dim()) {
            ensure(o.j1(x, y, z) == o.embed(&o.t(x, y, z)), || format!("{name}: oracle J1 != T at {x},{y},{z}"))?;
            triples_seen += 1;
        }
    }
    Ok(format!("{triples_seen} basis triples over 9 configurations, 0 violations"))
}

fn crit_from_omni(printed_note: &mut String) -> Outcome {
    let mut quads = 0;
    let mut printed_fail = Vec::new();
    for (name, v, eps) in configurations(2) {
        let omni = OmniAlgebra::new(v.clone(), eps.clone()).map_err(|e| e.to_string())?;
        let t = TwoTermAlgebra::from_omni(&omni);
        let r = t
            .check_axioms(HForm::Corrected, CocycleForm::Coherent)
            .map_err(|e| e.to_string())?;
        ensure(r.passed() && r.checks.iter().all(|c| c.verdict.passed()), || {
            format!("{name}: {}", first_failure(&r))
        })?;
        let o = OmniOracle::new(&v, &eps);
        for (x, y, z) in triples(o.dim()) {
            let expected = scaled(&-o.e(z, x), &o.t(x, y, z));
            ensure(t.l3().get(x, y, z).coords == expected, || format!("{name}: l3 at {x},{y},{z}"))?;
        }
        quads += o.dim().pow(4);
        if let Verdict::Fail(w) = t.check_i(CocycleForm::Printed) {
            printed_fail.push(format!("{name} at ({})", w.labels.join(", ")));
        }
    }
    *printed_note = if printed_fail.is_empty() {
        "printed form of (i) passes on every configuration".into()
    } else {
        format!("printed form of (i) fails on {}", printed_fail.join("; "))
    };
    Ok(format!("(a)-(i) pass on 6 configurations, {quads} quadruples for (i)"))
}

fn crit_dirac_lie() -> Outcome {
    let (mut lie, mut non_lie) = (0, 0);
    for (name, g) in corpus() {
        let omni = omni_of(&g);
        let f = omni.graph_of_adjoint(&g).map_err(|e| format!("{name}: {e}"))?;
        let dirac = omni.is_dirac(&f).map_err(|e| e.to_string())?.passed();
        let oracle = BracketOracle::new(&g).is_lie();
        ensure(dirac == oracle && oracle == g.is_lie(), || {
            format!("{name}: dirac {dirac}, oracle Lie {oracle}, check_lie {}", g.is_lie())
        })?;
        if oracle {
            lie += 1;
        } else {
            non_lie += 1;
        }
    }
    ensure(lie >= 3 && non_lie >= 3, || format!("corpus has {lie} Lie and {non_lie} non-Lie"))?;
    Ok(format!("{} brackets ({lie} Lie, {non_lie} not), all agree", lie + non_lie))
}

fn crit_characteristic_pairs() -> Outcome {
    let (mut pass, mut fail) = (0, 0);
    for (name, g) in corpus() {
        let omni = omni_of(&g);
        let f = omni.graph_of_adjoint(&g).map_err(|e| e.to_string())?;
        let dirac = omni.is_dirac(&f).map_err(|e| e.to_string())?.passed();
        let pair = omni.characteristic_pair(&f).map_err(|e| format!("{name}: {e}"))?;
        let r = pair.report();
        if dirac {
            ensure(r.checks.iter().all(|c| c.verdict.passed()), || format!("{name}: {}", first_failure(&r)))?;
            pass += 1;
        } else {
            ensure(r.first_failure().and_then(|c| c.verdict.witness()).is_some(), || {
                format!("{name}: non-Dirac but all conditions hold")
            })?;
            fail += 1;
        }
    }
    Ok(format!("{pass} Dirac members pass, {fail} non-Dirac members fail with witnesses"))
}

fn dirac_roundtrip(name: &str, v: &GradedSpace, gens: &[Vector<S>], g: &ColorAlgebra<S>) -> Result<(), String> {
    let omni = OmniAlgebra::new(v.clone(), g.epsilon().clone()).map_err(|e| e.to_string())?;
    let l = omni.dirac_from_lie(gens, g).map_err(|e| format!("{name}: {e}"))?;
    let r = omni.is_dirac(&l).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{name}: {}", first_failure(&r)))?;
    let back = omni.lie_from_dirac_in_basis(&l, gens).map_err(|e| format!("{name}: {e}"))?;
    ensure(back.entries() == g.entries(), || format!("{name}: structure constants differ"))
}

fn crit_dirac_roundtrip() -> Outcome {
    let units = |n: usize| (0..n).map(|i| Vector::unit(n, i)).collect::<Vec<_>>();
    let gl11 = fx::gl11::<S>();
    dirac_roundtrip("gl(1|1), W = V", gl11.space(), &units(4), &gl11)?;

    let sup = fx::super_eps::<S>();
    let v5 = space_of(&sup, &[vec![0], vec![1], vec![1], vec![0], vec![1]]);
    let e = |i| Vector::<S>::unit(5, i);
    let gens = vec![e(0), e(1).add(&e(4)), e(2), e(3)];
    dirac_roundtrip("gl(1|1) in dim 5", &v5, &gens, &gl11)?;

    let ab = fx::abelian_z2_dim2::<S>();
    dirac_roundtrip("abelian, W = V", ab.space(), &units(2), &ab)?;
    let line = ColorAlgebra::abelian(space_of(&sup, &[vec![0]]), sup.clone()).map_err(|e| e.to_string())?;
    dirac_roundtrip("abelian, W = span(v0)", ab.space(), &[Vector::unit(2, 0)], &line)?;
    Ok("4 roundtrips reproduce the structure constants".into())
}

fn crit_derivations() -> Outcome {
    let mut dims = Vec::new();
    for (name, g) in [("gl(1|1)", fx::gl11::<S>()), ("gl over Z2xZ2", fx::gl_klein())] {
        let omni = omni_of(&g);
        let d = omni.derivations(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(d.der == d.normalizer && d.agree.passed(), || format!("{name}: Der != N(F)"))?;
        ensure(d.closed.passed(), || format!("{name}: {:?}", d.closed))?;

        let n = g.dim();
        let o = BracketOracle::new(&g);
        let br = |u: &[S], w: &[S]| {
            let mut acc = zeros(n);
            for (a, ua) in u.iter().enumerate() {
                if *ua != c(0) {
                    axpy(&mut acc, ua, &left(&o.t, a, w, n));
                }
            }
            acc
        };
        let basis = d.der.homogeneous_basis().map_err(|e| e.to_string())?;
        let mats: Vec<(Degree, Matrix<S>)> = basis
            .iter()
            .map(|(deg, v)| (deg.clone(), Matrix::from_flat(n, n, &v.coords)))
            .collect();
        for (delta, m) in &mats {
            for (x, y, _) in triples(n).filter(|t| t.2 == 0) {
                let (ex, ey) = (Vector::<S>::unit(n, x), Vector::<S>::unit(n, y));
                let lhs = m.apply(&Vector::new(br(&ex.coords, &ey.coords))).coords;
                let mut rhs = br(&m.apply(&ex).coords, &ey.coords);
                let sign = g.epsilon().eps(delta, g.space().degree(x));
                axpy(&mut rhs, &sign, &br(&ex.coords, &m.apply(&ey).coords));
                ensure(lhs == rhs, || format!("{name}: basis element of degree {delta} is not a derivation"))?;
            }
        }
        for (d1, a) in &mats {
            for (d2, b) in &mats {
                let comm = a.mul(b).sub(&b.mul(a).scale(&g.epsilon().eps(d1, d2)));
                ensure(d.der.contains(&comm.flatten()), || format!("{name}: [Der, Der] not in Der"))?;
            }
        }
        for i in 0..n {
            ensure(d.der.contains(&g.ad_basis(i).flatten()), || format!("{name}: ad not in Der"))?;
        }
        dims.push(format!("{name}: dim {}", d.der.dim()));
    }
    Ok(dims.join(", "))
}

fn crit_roundtrips() -> Outcome {
    let string = TwoTermAlgebra::string_from_quadratic(&fx::sl2_killing::<S>()).map_err(|e| e.to_string())?;
    let q = string.to_quadruple().map_err(|e| e.to_string())?;
    ensure(q.to_two_term() == string, || "skeletal -> quadruple -> skeletal differs".into())?;
    let q2 = fx::broken_l3::<S>().to_quadruple().map_err(|e| e.to_string())?;
    ensure(q2.to_two_term().to_quadruple().map_err(|e| e.to_string())? == q2, || {
        "quadruple -> skeletal -> quadruple differs".into()
    })?;

    let c = CrossedModule::inner_derivations(&fx::gl11::<S>()).map_err(|e| e.to_string())?;
    let r = c.check();
    ensure(r.checks.iter().all(|c| c.verdict.passed()), || format!("Inn -> Der: {}", first_failure(&r)))?;
    let strict = TwoTermAlgebra::from_crossed_module(&c);
    let back = strict.to_crossed_module().map_err(|e| e.to_string())?;
    ensure(back == c, || "crossed -> strict -> crossed differs".into())?;
    ensure(TwoTermAlgebra::from_crossed_module(&back) == strict, || {
        "strict -> crossed -> strict differs".into()
    })?;
    Ok(format!("Inn(gl(1|1)) of dim {} -> Der(gl(1|1)) of dim {}", c.h.dim(), c.g().dim()))
}

fn crit_string() -> Outcome {
    for (name, q) in [("sl(2) + Killing", fx::sl2_killing::<S>()), ("gl(1|1) + supertrace", fx::gl11_supertrace())] {
        let t = TwoTermAlgebra::string_from_quadratic(&q).map_err(|e| e.to_string())?;
        let r = t
            .check_axioms(HForm::Corrected, CocycleForm::Coherent)
            .map_err(|e| e.to_string())?;
        ensure(r.checks.iter().all(|c| c.verdict.passed()), || format!("{name}: {}", first_failure(&r)))?;
        ensure(t.check_d().passed(), || format!("{name}: l3 not skew"))?;
        let v0 = t.v0();
        let e = |a: usize, b: usize| t.epsilon().eps(v0.degree(a), v0.degree(b));
        for (x, y, z) in triples(v0.dim()) {
            let l3 = |a, b, c| t.l3().get(a, b, c).clone();
            ensure(l3(x, y, z) == l3(y, x, z).scale(&-e(x, y)), || format!("{name}: l3 skew in 1,2"))?;
            ensure(l3(x, y, z) == l3(x, z, y).scale(&-e(y, z)), || format!("{name}: l3 skew in 2,3"))?;
        }
    }
    Ok("both pass (a)-(i); l3 ε-skew on all triples".into())
}

/// Every 2-term algebra obtainable from the command-line fixtures.
fn two_term_fixtures() -> Result<Vec<(String, TwoTermAlgebra<S>)>, String> {
    let mut out = Vec::new();
    for &name in cli_fx::NAMES {
        let file = cli_fx::fixture(name).map_err(|e| e.to_string())?;
        let m = Model::new(&file, 64);
        let err = |e: colorlie_cli::CliError| format!("{name}: {e}");
        if file.two_term.is_some() {
            out.push((name.to_string(), m.two_term().map_err(err)?));
        }
        if file.quadratic.is_some() {
            let t = TwoTermAlgebra::string_from_quadratic(&m.quadratic().map_err(err)?).map_err(|e| e.to_string())?;
            out.push((format!("{name} (string)"), t));
        }
        if file.crossed_module.is_some() {
            let cm = m.crossed_module().map_err(err)?;
            out.push((format!("{name} (strict)"), TwoTermAlgebra::from_crossed_module(&cm)));
        }
        if let Some((v, eps)) = cli_fx::omni_base(name) {
            let omni = OmniAlgebra::new(v, eps).map_err(|e| e.to_string())?;
            out.push((format!("{name} (omni)"), TwoTermAlgebra::from_omni(&omni)));
        }
        if file.space.is_some() && file.bracket.is_some() {
            out.push((format!("{name} (V1 = 0)"), TwoTermAlgebra::from_lie(&m.algebra().map_err(err)?)));
        }
    }
    Ok(out)
}

fn crit_jacobiator() -> Outcome {
    let fixtures = two_term_fixtures()?;
    let (mut agree_fail, mut roundtrips, mut excluded) = (Vec::new(), 0, Vec::new());
    for (name, t) in &fixtures {
        let axioms = t
            .check_axioms(HForm::Corrected, CocycleForm::Coherent)
            .map_err(|e| e.to_string())?;
        // (i) is compared only where the other axioms make the data a 2-term algebra
        if axioms.checks.iter().any(|c| c.name != "i" && !c.verdict.passed()) {
            excluded.push(format!("{name} [{}]", first_failure(&axioms).split(':').next().unwrap_or("")));
            continue;
        }
        let r = Lie2View::new(t).check_jacobiator_identity();
        ensure(r.get("composable").is_some_and(Verdict::passed), || format!("{name}: {}", first_failure(&r)))?;
        let jac = r.get("jacobiator-identity").cloned().unwrap_or(Verdict::Pass);
        let axiom = t.check_i(CocycleForm::Coherent);
        match (&jac, &axiom) {
            (Verdict::Pass, Verdict::Pass) => {}
            (Verdict::Fail(a), Verdict::Fail(b)) if a.tuple == b.tuple => agree_fail.push(name.clone()),
            _ => return Err(format!("{name}: jacobiator {jac:?} vs (i) {axiom:?}")),
        }
        if axioms.checks.iter().all(|c| c.verdict.passed()) {
            let back = lc2::roundtrip(t).map_err(|e| format!("{name}: {e}"))?;
            ensure(&back == t, || format!("{name}: roundtrip differs"))?;
            roundtrips += 1;
        }
    }
    ensure(agree_fail.iter().any(|n| n.starts_with("broken-l3")), || "broken-l3 did not fail".into())?;
    Ok(format!(
        "{} fixtures agree ({} failing with the same witness: {}); {roundtrips} exact roundtrips; \
         not 2-term algebras: {}",
        fixtures.len() - excluded.len(),
        agree_fail.len(),
        agree_fail.join(", "),
        if excluded.is_empty() { "none".into() } else { excluded.join(", ") }
    ))
}

fn crit_j1_j2() -> Outcome {
    let mut brackets: Vec<(String, ColorAlgebra<S>)> =
        corpus().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    for (name, v, eps) in configurations(2) {
        let omni = OmniAlgebra::new(v, eps).map_err(|e| e.to_string())?;
        brackets.push((format!("omni bracket, {name}"), omni.bracket_algebra()));
    }
    let (v, eps) = cli_fx::omni_base("omni-z3-plane").expect("known fixture");
    brackets.push(("omni bracket, Z3xZ3".into(), OmniAlgebra::new(v, eps).unwrap().bracket_algebra()));
    let mut count = 0;
    for (name, g) in &brackets {
        let o = BracketOracle::new(g);
        ensure(o.skew(), || format!("{name}: not ε-skew"))?;
        ensure(g.check_j1_j2_relation().passed(), || format!("{name}: {:?}", g.check_j1_j2_relation()))?;
        let zero = zeros(g.dim());
        for (x, y, z) in triples(g.dim()) {
            ensure(o.j1_minus_j2(x, y, z) == zero, || format!("{name}: oracle at {x},{y},{z}"))?;
            count += 1;
        }
    }
    Ok(format!("{} brackets, {count} triples", brackets.len()))
}

fn report(n: usize, what: &str, limit: Option<u64>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let late = limit.is_some_and(|l| elapsed > Duration::from_secs(l));
    let ok = result.is_ok() && !late;
    let detail = match result {
        Ok(d) | Err(d) => d,
    };
    let limit = limit.map(|l| format!(", limit {l}s")).unwrap_or_default();
    println!(
        "{} {n:>2}. {what}: {detail} [{:.2}s{limit}]",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}

fn main() -> ExitCode {
    let mut printed = String::new();
    let results = [
        report(1, "Leibniz rule for the circle product", Some(10), crit_leibniz),
        report(2, "omni Jacobiator equals T", Some(10), crit_homotopy),
        report(3, "2-term algebra of the omni construction", Some(60), || crit_from_omni(&mut printed)),
        report(4, "Dirac graphs are exactly Lie brackets", None, crit_dirac_lie),
        report(5, "characteristic pair conditions", None, crit_characteristic_pairs),
        report(6, "Dirac structure to Lie algebra roundtrip", None, crit_dirac_roundtrip),
        report(7, "derivations equal the normalizer", None, crit_derivations),
        report(8, "skeletal and strict roundtrips", None, crit_roundtrips),
        report(9, "string 2-algebras", None, crit_string),
        report(10, "Jacobiator identity against axiom (i)", Some(120), crit_jacobiator),
        report(11, "J1 = ε(z,x) J2 for ε-skew brackets", None, crit_j1_j2),
    ];
    if !printed.is_empty() {
        println!("note: {printed}");
    }
    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
