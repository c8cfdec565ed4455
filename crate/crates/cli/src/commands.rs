//! One function per command; each turns a parsed file into keyed verdicts.

use std::io::Read as _;

use colorlie::coloralg::{AlgebraError, ColorAlgebra};
use colorlie::gvs::{GradedSpace, Subspace};
use colorlie::lc2::{self, Lie2View};
use colorlie::linalg::Vector;
use colorlie::linf2::{CocycleForm, HForm, L2Error, TwoTermAlgebra};
use colorlie::omni::{OmniAlgebra, OmniError};
use colorlie::verdict::{Report, Verdict, Witness};
use colorlie::Scalar;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::{
    crossed_module_spec, entries_spec, matrix_spec, parse_algebra_file, space_spec, two_term_spec, vector_spec,
    AlgebraFile, Model,
};
use crate::report::CliReport;
use crate::{fixtures, suite, CheckCmd, Cli, Command, Input, L2Cmd, Lc2Cmd, OmniCmd};

/// Verdicts and an optional constructed object.
#[derive(Default)]
pub struct Outcome {
    pub report: Report,
    pub output: Option<Value>,
}

impl Outcome {
    fn new(report: Report) -> Self {
        Outcome { report, output: None }
    }

    fn with_output(mut self, v: Value) -> Self {
        self.output = Some(v);
        self
    }
}

struct Opts {
    h: HForm,
    i: CocycleForm,
    subspace: Option<String>,
}

pub fn dispatch(cli: &Cli) -> CliReport {
    let (name, input): (&str, &Input) = match &cli.command {
        Command::Check(c) => match c {
            CheckCmd::Bicharacter(i) => ("check bicharacter", i),
            CheckCmd::Lie(i) => ("check lie", i),
            CheckCmd::Leibniz(i) => ("check leibniz", i),
            CheckCmd::Representation(i) => ("check representation", i),
            CheckCmd::Quadratic(i) => ("check quadratic", i),
        },
        Command::Omni(c) => match c {
            OmniCmd::Leibniz(i) => ("omni leibniz", i),
            OmniCmd::Homotopy(i) => ("omni homotopy", i),
            OmniCmd::Dirac(i) => ("omni dirac", i),
            OmniCmd::DiracFromLie(i) => ("omni dirac-from-lie", i),
            OmniCmd::LieFromDirac(i) => ("omni lie-from-dirac", i),
            OmniCmd::Derivations(i) => ("omni derivations", i),
        },
        Command::L2(c) => match c {
            L2Cmd::Check(i) => ("l2 check", i),
            L2Cmd::FromOmni(i) => ("l2 from-omni", i),
            L2Cmd::String(i) => ("l2 string", i),
            L2Cmd::Skeletal(i) => ("l2 skeletal", i),
            L2Cmd::StrictToCrossed(i) => ("l2 strict-to-crossed", i),
            L2Cmd::CrossedToStrict(i) => ("l2 crossed-to-strict", i),
        },
        Command::Lc2(c) => match c {
            Lc2Cmd::Jacobiator(i) => ("lc2 jacobiator", i),
            Lc2Cmd::Roundtrip(i) => ("lc2 roundtrip", i),
        },
        Command::Suite { trials } => return suite::run(cli.seed, *trials, cli.max_dim),
        Command::Fixtures { .. } => unreachable!("handled before dispatch"),
    };
    let bytes = match load(input) {
        Ok(b) => b,
        Err(e) => {
            let mut r = CliReport::new(name, b"");
            r.fail_with(&e);
            return r;
        }
    };
    let mut report = CliReport::new(name, &bytes);
    let opts = Opts {
        h: cli.h_form.into(),
        i: cli.i_form.into(),
        subspace: input.subspace.clone(),
    };
    let result = std::str::from_utf8(&bytes)
        .map_err(|e| CliError::Parse {
            line: 0,
            column: 0,
            message: e.to_string(),
        })
        .and_then(parse_algebra_file)
        .and_then(|file| run_command(name, &Model::new(&file, cli.max_dim), &opts));
    match result {
        Ok(out) => {
            report.add(&out.report);
            report.output = out.output;
        }
        Err(e) => report.fail_with(&e),
    }
    report
}

fn load(input: &Input) -> Result<Vec<u8>, CliError> {
    match (&input.file, &input.fixture) {
        (_, Some(name)) => Ok(fixtures::fixture(name)?.to_json().into_bytes()),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map_err(|source| CliError::Io {
                path: "-".into(),
                source,
            })?;
            Ok(buf)
        }
        (Some(p), None) => std::fs::read(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        (None, None) => Err(CliError::Usage("an algebra file or --fixture is required".into())),
    }
}

fn run_command(name: &str, m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    match name {
        "check bicharacter" => check_bicharacter(m),
        "check lie" => check_lie(m),
        "check leibniz" => check_leibniz(m),
        "check representation" => check_representation(m),
        "check quadratic" => check_quadratic(m),
        "omni leibniz" => omni_leibniz(m),
        "omni homotopy" => omni_homotopy(m),
        "omni dirac" => omni_dirac(m, o),
        "omni dirac-from-lie" => omni_dirac_from_lie(m, o),
        "omni lie-from-dirac" => omni_lie_from_dirac(m, o),
        "omni derivations" => omni_derivations(m),
        "l2 check" => l2_check(m, o),
        "l2 from-omni" => l2_from_omni(m, o),
        "l2 string" => l2_string(m, o),
        "l2 skeletal" => l2_skeletal(m, o),
        "l2 strict-to-crossed" => l2_strict_to_crossed(m, o),
        "l2 crossed-to-strict" => l2_crossed_to_strict(m, o),
        "lc2 jacobiator" => lc2_jacobiator(m, o),
        "lc2 roundtrip" => lc2_roundtrip(m, o),
        other => Err(CliError::UnknownCommand(other.to_string())),
    }
}

fn math(e: impl std::fmt::Display) -> CliError {
    CliError::Math(e.to_string())
}

fn l2_err(e: L2Error) -> CliError {
    match e {
        L2Error::UnboundSymbol => CliError::UnboundSymbol,
        other => math(other),
    }
}

/// Pass when the two renderings agree, otherwise a witness carrying both.
fn same(label: &str, lhs: &Value, rhs: &Value) -> Verdict {
    if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness::new(vec![], vec![label.to_string()], lhs.to_string(), rhs.to_string()))
    }
}

fn all_passed(r: &Report) -> bool {
    r.checks.iter().all(|c| c.verdict.passed())
}

fn check_bicharacter(m: &Model) -> Result<Outcome, CliError> {
    let b = m.bicharacter();
    let e = b.exponents();
    let order = b.order();
    let n = b.group().orders();
    let mut symmetry = Verdict::Pass;
    let mut well_defined = Verdict::Pass;
    let violations = b.validate().violations;
    for v in &violations {
        match *v {
            colorlie::grading::BicharacterViolation::Symmetry { i, j } if symmetry.passed() => {
                symmetry = Verdict::Fail(Witness::new(
                    vec![i, j],
                    vec![format!("g{i}"), format!("g{j}")],
                    format!("E[{i}][{j}] + E[{j}][{i}] = {}", (e[i][j] + e[j][i]) % order),
                    format!("0 mod {order}"),
                ));
            }
            colorlie::grading::BicharacterViolation::WellDefined { i, j, row } if well_defined.passed() => {
                let k = if row { i } else { j };
                well_defined = Verdict::Fail(Witness::new(
                    vec![i, j],
                    vec![format!("g{i}"), format!("g{j}")],
                    format!("n{k} * E[{i}][{j}] = {}", (n[k] as u64 * e[i][j] as u64) % order as u64),
                    format!("0 mod {order}"),
                ));
            }
            _ => {}
        }
    }
    let listed: Vec<String> = violations.iter().map(ToString::to_string).collect();
    Ok(Outcome::new(Report::new().with("skew-symmetry", symmetry).with("well-defined", well_defined))
        .with_output(json!({ "violations": listed })))
}

fn lie_report(g: &ColorAlgebra<Scalar>) -> Report {
    let mut r = g.check_lie();
    r.push("j1-j2-relation", g.check_j1_j2_relation());
    r
}

fn check_lie(m: &Model) -> Result<Outcome, CliError> {
    let g = m.algebra()?;
    Ok(Outcome::new(lie_report(&g)).with_output(json!({ "dim": g.dim() })))
}

fn check_leibniz(m: &Model) -> Result<Outcome, CliError> {
    let g = m.algebra()?;
    let report = match g.check_leibniz() {
        Ok(v) => Report::new().with("graded", Verdict::Pass).with("leibniz", v),
        Err(AlgebraError::NotGraded(w)) => Report::new()
            .with("graded", Verdict::Fail(w))
            .with("leibniz", Verdict::Skipped("bracket is not graded".into())),
        Err(e) => return Err(math(e)),
    };
    Ok(Outcome::new(report))
}

fn check_representation(m: &Model) -> Result<Outcome, CliError> {
    let rep = m.representation()?;
    let mut r = Report::new();
    r.extend("algebra-", rep.algebra().check_lie());
    r.push("representation", rep.check());
    Ok(Outcome::new(r))
}

fn check_quadratic(m: &Model) -> Result<Outcome, CliError> {
    let q = m.quadratic()?;
    let mut r = Report::new();
    r.extend("lie-", q.algebra().check_lie());
    r.extend("", q.check());
    Ok(Outcome::new(r))
}

fn omni(m: &Model) -> Result<OmniAlgebra<Scalar>, CliError> {
    OmniAlgebra::new(m.space()?, m.epsilon()?).map_err(math)
}

fn omni_leibniz(m: &Model) -> Result<Outcome, CliError> {
    let o = omni(m)?;
    let r = Report::new()
        .with("leibniz", o.check_leibniz())
        .with("decomposition", o.check_decomposition());
    Ok(Outcome::new(r).with_output(json!({ "dim_v": o.n(), "dim_e": o.space().dim() })))
}

fn omni_homotopy(m: &Model) -> Result<Outcome, CliError> {
    let o = omni(m)?;
    Ok(Outcome::new(Report::new().with("homotopy", o.check_homotopy())))
}

fn omni_error(e: OmniError) -> CliError {
    math(e)
}

fn vectors_json(vs: &[Vector<Scalar>]) -> Value {
    serde_json::to_value(vs.iter().map(vector_spec).collect::<Vec<_>>()).expect("literals serialize")
}

/// `is-dirac` followed, for maximal isotropic `L`, by the characteristic pair conditions.
fn dirac_report(o: &OmniAlgebra<Scalar>, l: &Subspace<Scalar>) -> Result<(Report, Value), CliError> {
    let mut r = o.is_dirac(l).map_err(omni_error)?;
    let mut info = json!({ "dim": l.dim() });
    let maximal_isotropic = ["isotropic", "maximal"]
        .iter()
        .all(|n| r.get(n).is_some_and(Verdict::passed));
    if maximal_isotropic {
        let pair = o.characteristic_pair(l).map_err(omni_error)?;
        info["dim_d"] = json!(pair.d.dim());
        info["dim_d0"] = json!(pair.d0.dim());
        r.extend("pair-", pair.report());
    }
    Ok((r, info))
}

fn omni_dirac(m: &Model, o_: &Opts) -> Result<Outcome, CliError> {
    let o = omni(m)?;
    let l = match &o_.subspace {
        Some(name) => {
            let (vs, _) = m.subspace(name)?;
            check_lengths(&vs, o.space())?;
            Subspace::span(o.space(), &vs).map_err(math)?
        }
        None => o.graph_of_adjoint(&m.algebra()?).map_err(omni_error)?,
    };
    let (r, info) = dirac_report(&o, &l)?;
    Ok(Outcome::new(r).with_output(info))
}

fn check_lengths(vs: &[Vector<Scalar>], space: &GradedSpace) -> Result<(), CliError> {
    match vs.iter().position(|v| v.dim() != space.dim()) {
        Some(i) => Err(CliError::Schema {
            field: format!("vector {i}"),
            message: format!("expected {} coordinates", space.dim()),
        }),
        None => Ok(()),
    }
}

fn omni_dirac_from_lie(m: &Model, opts: &Opts) -> Result<Outcome, CliError> {
    let o = omni(m)?;
    let (gens, bracket) = match &opts.subspace {
        Some(name) => {
            let (gens, entries) = m.subspace(name)?;
            let entries = entries.ok_or_else(|| CliError::Schema {
                field: format!("subspaces.{name}.bracket"),
                message: "missing".into(),
            })?;
            let g = m.algebra_on(&gens, entries, o.base())?;
            (gens, g)
        }
        None => {
            let g = m.algebra()?;
            ((0..g.dim()).map(|i| Vector::unit(g.dim(), i)).collect(), g)
        }
    };
    let mut r = Report::new();
    r.extend("lie-", bracket.check_lie());
    if !all_passed(&r) {
        return Ok(Outcome::new(r));
    }
    let l = o.dirac_from_lie(&gens, &bracket).map_err(omni_error)?;
    let (dirac, _) = dirac_report(&o, &l)?;
    r.extend("dirac-", dirac);
    let back = o.lie_from_dirac_in_basis(&l, &gens).map_err(omni_error)?;
    r.push(
        "roundtrip",
        same(
            "structure constants",
            &json!(entries_spec(back.table())),
            &json!(entries_spec(bracket.table())),
        ),
    );
    Ok(Outcome::new(r).with_output(json!({ "subspace": vectors_json(l.basis()) })))
}

fn omni_lie_from_dirac(m: &Model, opts: &Opts) -> Result<Outcome, CliError> {
    let o = omni(m)?;
    let name = opts
        .subspace
        .as_ref()
        .ok_or_else(|| CliError::Usage("--subspace is required".into()))?;
    let (vs, _) = m.subspace(name)?;
    check_lengths(&vs, o.space())?;
    let l = Subspace::span(o.space(), &vs).map_err(math)?;
    let mut r = Report::new();
    r.extend("dirac-", o.is_dirac(&l).map_err(omni_error)?);
    if !all_passed(&r) {
        return Ok(Outcome::new(r));
    }
    let (basis, g) = o.lie_from_dirac(&l).map_err(omni_error)?;
    r.extend("lie-", g.check_lie());
    Ok(Outcome::new(r).with_output(json!({
        "basis": vectors_json(&basis),
        "space": space_spec(g.space()),
        "bracket": entries_spec(g.table()),
    })))
}

fn omni_derivations(m: &Model) -> Result<Outcome, CliError> {
    let o = omni(m)?;
    let g = m.algebra()?;
    let d = o.derivations(&g).map_err(omni_error)?;
    Ok(Outcome::new(d.report()).with_output(json!({
        "dim_der": d.der.dim(),
        "dim_normalizer": d.normalizer.dim(),
        "der": vectors_json(d.der.basis()),
    })))
}

fn axioms(t: &TwoTermAlgebra<Scalar>, o: &Opts) -> Result<Report, CliError> {
    t.check_axioms(o.h, o.i).map_err(l2_err)
}

fn l2_check(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let t = m.two_term()?;
    Ok(Outcome::new(axioms(&t, o)?))
}

fn l2_from_omni(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let t = TwoTermAlgebra::from_omni(&omni(m)?);
    Ok(Outcome::new(axioms(&t, o)?).with_output(json!(two_term_spec(&t))))
}

fn l2_string(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let q = m.quadratic()?;
    let mut r = Report::new();
    r.extend("quadratic-lie-", q.algebra().check_lie());
    r.extend("quadratic-", q.check());
    if !all_passed(&r) {
        return Ok(Outcome::new(r));
    }
    let t = TwoTermAlgebra::string_from_quadratic(&q).map_err(l2_err)?;
    r.extend("", axioms(&t, o)?);
    Ok(Outcome::new(r).with_output(json!(two_term_spec(&t))))
}

fn l2_skeletal(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let t = m.two_term()?;
    let q = t.to_quadruple().map_err(l2_err)?;
    let mut r = Report::new();
    r.extend("quadruple-", q.check(o.i));
    r.push(
        "roundtrip",
        same("two-term algebra", &json!(two_term_spec(&q.to_two_term())), &json!(two_term_spec(&t))),
    );
    Ok(Outcome::new(r).with_output(json!({
        "algebra": { "space": space_spec(q.algebra().space()), "bracket": entries_spec(q.algebra().table()) },
        "module": space_spec(q.rep.module()),
        "maps": q.rep.maps().iter().map(matrix_spec).collect::<Vec<_>>(),
        "cocycle": two_term_spec(&t).l3,
    })))
}

fn crossed_json(c: &colorlie::linf2::CrossedModule<Scalar>) -> Value {
    let mut f = AlgebraFile::from_algebra(c.g());
    f.crossed_module = Some(crossed_module_spec(c));
    json!(f)
}

fn l2_strict_to_crossed(m: &Model, _o: &Opts) -> Result<Outcome, CliError> {
    let t = m.two_term()?;
    let c = t.to_crossed_module().map_err(l2_err)?;
    let mut r = c.check();
    let back = TwoTermAlgebra::from_crossed_module(&c);
    r.push(
        "roundtrip",
        same("two-term algebra", &json!(two_term_spec(&back)), &json!(two_term_spec(&t))),
    );
    Ok(Outcome::new(r).with_output(crossed_json(&c)))
}

fn l2_crossed_to_strict(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let c = m.crossed_module()?;
    let mut r = c.check();
    let t = TwoTermAlgebra::from_crossed_module(&c);
    r.extend("l2-", axioms(&t, o)?);
    let back = t.to_crossed_module().map_err(l2_err)?;
    r.push("roundtrip", same("crossed module", &crossed_json(&back), &crossed_json(&c)));
    Ok(Outcome::new(r).with_output(json!(two_term_spec(&t))))
}

fn lc2_jacobiator(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let t = m.two_term()?;
    let view = Lie2View::new(&t);
    let mut r = Report::new().with("targets", view.check_jacobiator_targets());
    for (slot, name) in ["x", "y", "z"].iter().enumerate() {
        r.push(format!("naturality-{name}"), view.check_naturality(slot));
    }
    let identity = view.check_jacobiator_identity();
    let axiom_i = t.check_i(o.i);
    let lhs = identity.get("jacobiator-identity").cloned().unwrap_or(Verdict::Pass);
    let agree = match (&lhs, &axiom_i) {
        (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
        (Verdict::Fail(a), Verdict::Fail(b)) if a.tuple == b.tuple => Verdict::Pass,
        _ => Verdict::Fail(Witness::new(
            vec![],
            vec!["first failing quadruple".into()],
            describe(&lhs),
            describe(&axiom_i),
        )),
    };
    r.extend("", identity);
    r.push("agrees-with-axiom-i", agree);
    Ok(Outcome::new(r))
}

fn describe(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::Fail(w) => format!("({})", w.labels.join(", ")),
        Verdict::Skipped(why) => format!("skipped: {why}"),
    }
}

fn lc2_roundtrip(m: &Model, o: &Opts) -> Result<Outcome, CliError> {
    let t = m.two_term()?;
    let mut r = Report::new();
    r.extend("l2-", axioms(&t, o)?);
    if !all_passed(&r) {
        r.push("roundtrip", Verdict::Skipped("not a 2-term algebra".into()));
        return Ok(Outcome::new(r));
    }
    let back = lc2::roundtrip(&t).map_err(math)?;
    r.push(
        "roundtrip",
        same("two-term algebra", &json!(two_term_spec(&back)), &json!(two_term_spec(&t))),
    );
    Ok(Outcome::new(r))
}
