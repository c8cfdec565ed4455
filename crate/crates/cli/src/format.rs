//! The JSON algebra file: structural parsing, validation and conversion to and
//! from the core types.

use std::collections::BTreeMap;
use std::fmt;

use colorlie::coloralg::{ColorAlgebra, QuadraticForm, Representation};
use colorlie::cyclotomic::Cyclotomic;
use colorlie::grading::{Bicharacter, Epsilon, GradingGroup};
use colorlie::gvs::GradedSpace;
use colorlie::linalg::{Matrix, Vector};
use colorlie::linf2::{CrossedModule, TwoTermAlgebra};
use colorlie::tensor::{Bilinear, Trilinear};
use colorlie::Scalar;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// A scalar literal such as `1/2*z - 3`. Integers are accepted in place of strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Literal(pub String);

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Int(i) => Literal(i.to_string()),
            Raw::Text(s) => Literal(s),
        })
    }
}

impl From<&Scalar> for Literal {
    fn from(c: &Scalar) -> Self {
        Literal(c.to_string())
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type MatrixSpec = Vec<Vec<Literal>>;

/// Generators of a named subspace and the bracket given on them, if any.
pub type SubspaceData<'a> = (Vec<Vector<Scalar>>, Option<&'a [Entry]>);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub cyclic_orders: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicharacterSpec {
    pub exponents: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisSpec {
    pub name: String,
    pub degree: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub basis: Vec<BasisSpec>,
}

/// `[b_i, b_j] ∋ coeff · b_k`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Literal,
}

/// `l₃(b_i, b_j, b_k) ∋ coeff · h_out`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub out: usize,
    pub coeff: Literal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub entries: Vec<Entry>,
}

/// The acting algebra is the file's `space` with its `bracket`; the module
/// defaults to the same space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<SpaceSpec>,
    pub maps: Vec<MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadraticSpec {
    pub gram: MatrixSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoTermSpec {
    pub v0: SpaceSpec,
    pub v1: SpaceSpec,
    /// `V₀`-rows by `V₁`-columns.
    pub d: MatrixSpec,
    pub l2_00: Vec<Entry>,
    /// `l₂(x, h)` with `i` in `V₀` and `j`, `k` in `V₁`.
    pub l2_01: Vec<Entry>,
    pub l3: Vec<TripleEntry>,
}

/// `φ: h → g`, where `g` is the file's `space` with its `bracket`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleSpec {
    pub h: SpaceSpec,
    pub bracket: Vec<Entry>,
    /// `g`-rows by `h`-columns.
    pub phi: MatrixSpec,
    /// One `h × h` matrix per basis element of `g`.
    pub action: Vec<MatrixSpec>,
}

/// A list of vectors; with a bracket, a Lie color algebra on their span in
/// the basis they form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceSpec {
    pub vectors: Vec<Vec<Literal>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub cyclotomic_order: u32,
    pub group: GroupSpec,
    pub bicharacter: BicharacterSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<BracketSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadratic: Option<QuadraticSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_term: Option<TwoTermSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossed_module: Option<CrossedModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, SubspaceSpec>,
}

/// Parses and structurally validates a file. No identity is checked here.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let file: AlgebraFile = match serde_path_to_error::deserialize(&mut de) {
        Ok(f) => f,
        Err(e) => {
            let path = e.path().to_string();
            let inner = e.into_inner();
            return Err(if inner.is_data() {
                CliError::Schema {
                    field: path,
                    message: inner.to_string(),
                }
            } else {
                CliError::Parse {
                    line: inner.line(),
                    column: inner.column(),
                    message: inner.to_string(),
                }
            });
        }
    };
    de.end().map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Validator { text, file: &file }.run()?;
    Ok(file)
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema {
        field: field.into(),
        message: message.into(),
    }
}

struct Validator<'a> {
    text: &'a str,
    file: &'a AlgebraFile,
}

impl Validator<'_> {
    fn run(&self) -> Result<(), CliError> {
        let f = self.file;
        if f.cyclotomic_order == 0 {
            return Err(schema("cyclotomic_order", "must be at least 1"));
        }
        let k = f.group.cyclic_orders.len();
        if k == 0 || f.group.cyclic_orders.contains(&0) {
            return Err(schema("group.cyclic_orders", "orders must be nonempty and each at least 1"));
        }
        let e = &f.bicharacter.exponents;
        if e.len() != k || e.iter().any(|r| r.len() != k) {
            return Err(schema("bicharacter.exponents", format!("expected a {k}x{k} matrix")));
        }
        let n = match &f.space {
            Some(s) => Some(self.space(s, "space")?),
            None => None,
        };
        let need_space = |what: &str| n.ok_or_else(|| schema("space", format!("required by `{what}`")));
        if let Some(b) = &f.bracket {
            let n = need_space("bracket")?;
            self.entries(&b.entries, "bracket.entries", (n, n, n))?;
        }
        if let Some(r) = &f.representation {
            let n = need_space("representation")?;
            let m = match &r.module {
                Some(s) => self.space(s, "representation.module")?,
                None => n,
            };
            if r.maps.len() != n {
                return Err(schema("representation.maps", format!("expected {n} maps")));
            }
            for (i, map) in r.maps.iter().enumerate() {
                self.matrix(map, &format!("representation.maps[{i}]"), m, m)?;
            }
        }
        if let Some(q) = &f.quadratic {
            let n = need_space("quadratic")?;
            self.matrix(&q.gram, "quadratic.gram", n, n)?;
        }
        if let Some(t) = &f.two_term {
            let n0 = self.space(&t.v0, "two_term.v0")?;
            let n1 = self.space(&t.v1, "two_term.v1")?;
            self.matrix(&t.d, "two_term.d", n0, n1)?;
            self.entries(&t.l2_00, "two_term.l2_00", (n0, n0, n0))?;
            self.entries(&t.l2_01, "two_term.l2_01", (n0, n1, n1))?;
            for (p, e) in t.l3.iter().enumerate() {
                let field = format!("two_term.l3[{p}]");
                if e.i >= n0 || e.j >= n0 || e.k >= n0 || e.out >= n1 {
                    return Err(schema(field, "index out of range"));
                }
                self.literal(&e.coeff, &format!("{field}.coeff"))?;
            }
        }
        if let Some(c) = &f.crossed_module {
            let n = need_space("crossed_module")?;
            let m = self.space(&c.h, "crossed_module.h")?;
            self.entries(&c.bracket, "crossed_module.bracket", (m, m, m))?;
            self.matrix(&c.phi, "crossed_module.phi", n, m)?;
            if c.action.len() != n {
                return Err(schema("crossed_module.action", format!("expected {n} maps")));
            }
            for (i, map) in c.action.iter().enumerate() {
                self.matrix(map, &format!("crossed_module.action[{i}]"), m, m)?;
            }
        }
        for (name, s) in &f.subspaces {
            let field = format!("subspaces.{name}");
            for (i, v) in s.vectors.iter().enumerate() {
                for (j, x) in v.iter().enumerate() {
                    self.literal(x, &format!("{field}.vectors[{i}][{j}]"))?;
                }
            }
            let len = s.vectors.first().map_or(0, Vec::len);
            if s.vectors.iter().any(|v| v.len() != len) {
                return Err(schema(format!("{field}.vectors"), "vectors differ in length"));
            }
            if let Some(b) = &s.bracket {
                let k = s.vectors.len();
                self.entries(b, &format!("{field}.bracket"), (k, k, k))?;
            }
        }
        Ok(())
    }

    fn space(&self, s: &SpaceSpec, field: &str) -> Result<usize, CliError> {
        let orders = &self.file.group.cyclic_orders;
        let mut seen = std::collections::HashSet::new();
        for (i, b) in s.basis.iter().enumerate() {
            if b.degree.len() != orders.len() {
                return Err(schema(
                    format!("{field}.basis[{i}].degree"),
                    format!("expected {} residues", orders.len()),
                ));
            }
            if !seen.insert(&b.name) {
                return Err(schema(format!("{field}.basis[{i}].name"), format!("duplicate name {:?}", b.name)));
            }
        }
        Ok(s.basis.len())
    }

    fn entries(&self, es: &[Entry], field: &str, (a, b, c): (usize, usize, usize)) -> Result<(), CliError> {
        for (p, e) in es.iter().enumerate() {
            if e.i >= a || e.j >= b || e.k >= c {
                return Err(schema(format!("{field}[{p}]"), "index out of range"));
            }
            self.literal(&e.coeff, &format!("{field}[{p}].coeff"))?;
        }
        Ok(())
    }

    fn matrix(&self, m: &MatrixSpec, field: &str, rows: usize, cols: usize) -> Result<(), CliError> {
        if m.len() != rows || m.iter().any(|r| r.len() != cols) {
            return Err(schema(field, format!("expected a {rows}x{cols} matrix")));
        }
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                self.literal(x, &format!("{field}[{i}][{j}]"))?;
            }
        }
        Ok(())
    }

    fn literal(&self, lit: &Literal, field: &str) -> Result<(), CliError> {
        Cyclotomic::parse(&lit.0, self.file.cyclotomic_order).map(|_| ()).map_err(|e| {
            let (line, column) = locate(self.text, &lit.0);
            CliError::Parse {
                line,
                column,
                message: format!("{field}: {e}"),
            }
        })
    }
}

/// Line and column (1-based) of the first quoted occurrence of `literal`.
fn locate(text: &str, literal: &str) -> (usize, usize) {
    let quoted = serde_json::to_string(literal).expect("strings serialize");
    let Some(offset) = text.find(&quoted) else {
        return (0, 0);
    };
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, column)
}

/// Semantic view of a validated file: builds core objects on demand.
pub struct Model<'a> {
    pub file: &'a AlgebraFile,
    max_dim: usize,
}

impl<'a> Model<'a> {
    pub fn new(file: &'a AlgebraFile, max_dim: usize) -> Self {
        Model { file, max_dim }
    }

    fn m(&self) -> u32 {
        self.file.cyclotomic_order
    }

    pub fn scalar(&self, lit: &Literal) -> Scalar {
        Cyclotomic::parse(&lit.0, self.m()).expect("literals are validated on parse")
    }

    pub fn group(&self) -> GradingGroup {
        GradingGroup::new(self.file.group.cyclic_orders.clone()).expect("orders are validated on parse")
    }

    pub fn bicharacter(&self) -> Bicharacter {
        Bicharacter::new(self.group(), self.m(), self.file.bicharacter.exponents.clone())
            .expect("shape is validated on parse")
    }

    /// The commutation factor; refuses an exponent matrix that is not a bicharacter.
    pub fn epsilon(&self) -> Result<Epsilon<Scalar>, CliError> {
        let b = self.bicharacter();
        let report = b.validate();
        if let Some(v) = report.violations.first() {
            return Err(CliError::InvalidBicharacter(v.to_string()));
        }
        Epsilon::new(b).map_err(|e| CliError::Math(e.to_string()))
    }

    fn build_space(&self, s: &SpaceSpec) -> Result<GradedSpace, CliError> {
        if s.basis.len() > self.max_dim {
            return Err(CliError::TooLarge {
                dim: s.basis.len(),
                max: self.max_dim,
            });
        }
        let g = self.group();
        let basis = s
            .basis
            .iter()
            .map(|b| Ok((b.name.clone(), g.degree(&b.degree)?)))
            .collect::<Result<Vec<_>, colorlie::grading::GradingError>>()
            .map_err(|e| CliError::Math(e.to_string()))?;
        GradedSpace::new(g, basis).map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn space(&self) -> Result<GradedSpace, CliError> {
        let s = self.file.space.as_ref().ok_or_else(|| schema("space", "missing"))?;
        self.build_space(s)
    }

    fn triples(&self, es: &[Entry]) -> Vec<(usize, usize, usize, Scalar)> {
        es.iter().map(|e| (e.i, e.j, e.k, self.scalar(&e.coeff))).collect()
    }

    pub fn matrix(&self, m: &MatrixSpec) -> Matrix<Scalar> {
        Matrix::from_rows(m.iter().map(|r| r.iter().map(|x| self.scalar(x)).collect()).collect())
    }

    pub fn vector(&self, v: &[Literal]) -> Vector<Scalar> {
        Vector::new(v.iter().map(|x| self.scalar(x)).collect())
    }

    /// The bracket on `space`; a missing `bracket` section means the zero bracket.
    pub fn algebra(&self) -> Result<ColorAlgebra<Scalar>, CliError> {
        let entries = self.file.bracket.as_ref().map(|b| self.triples(&b.entries)).unwrap_or_default();
        ColorAlgebra::new(self.space()?, self.epsilon()?, &entries).map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn representation(&self) -> Result<Representation<Scalar>, CliError> {
        let r = self
            .file
            .representation
            .as_ref()
            .ok_or_else(|| schema("representation", "missing"))?;
        let module = match &r.module {
            Some(s) => self.build_space(s)?,
            None => self.space()?,
        };
        let maps = r.maps.iter().map(|m| self.matrix(m)).collect();
        Representation::new(self.algebra()?, module, maps).map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn quadratic(&self) -> Result<QuadraticForm<Scalar>, CliError> {
        let q = self.file.quadratic.as_ref().ok_or_else(|| schema("quadratic", "missing"))?;
        QuadraticForm::new(self.algebra()?, self.matrix(&q.gram)).map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn two_term(&self) -> Result<TwoTermAlgebra<Scalar>, CliError> {
        let t = self.file.two_term.as_ref().ok_or_else(|| schema("two_term", "missing"))?;
        let v0 = self.build_space(&t.v0)?;
        let v1 = self.build_space(&t.v1)?;
        let (n0, n1) = (v0.dim(), v1.dim());
        let l2_00 = Bilinear::from_entries(n0, n0, n0, &self.triples(&t.l2_00)).expect("indices are validated");
        let l2_01 = Bilinear::from_entries(n0, n1, n1, &self.triples(&t.l2_01)).expect("indices are validated");
        let l3_entries: Vec<_> = t
            .l3
            .iter()
            .map(|e| (e.i, e.j, e.k, e.out, self.scalar(&e.coeff)))
            .collect();
        let l3 = Trilinear::from_entries(n0, n1, &l3_entries).expect("indices are validated");
        TwoTermAlgebra::new(self.epsilon()?, v0, v1, self.matrix(&t.d), l2_00, l2_01, l3)
            .map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn crossed_module(&self) -> Result<CrossedModule<Scalar>, CliError> {
        let c = self
            .file
            .crossed_module
            .as_ref()
            .ok_or_else(|| schema("crossed_module", "missing"))?;
        let h_space = self.build_space(&c.h)?;
        let h = ColorAlgebra::new(h_space.clone(), self.epsilon()?, &self.triples(&c.bracket))
            .map_err(|e| CliError::Math(e.to_string()))?;
        let maps = c.action.iter().map(|m| self.matrix(m)).collect();
        let action =
            Representation::new(self.algebra()?, h_space, maps).map_err(|e| CliError::Math(e.to_string()))?;
        CrossedModule::new(h, self.matrix(&c.phi), action).map_err(|e| CliError::Math(e.to_string()))
    }

    pub fn subspace(&self, name: &str) -> Result<SubspaceData<'a>, CliError> {
        let s = self
            .file
            .subspaces
            .get(name)
            .ok_or_else(|| schema(format!("subspaces.{name}"), "missing"))?;
        let vs = s.vectors.iter().map(|v| self.vector(v)).collect();
        Ok((vs, s.bracket.as_deref()))
    }

    /// A color algebra on generator coordinates, with degrees read off the generators.
    pub fn algebra_on(
        &self,
        generators: &[Vector<Scalar>],
        entries: &[Entry],
        ambient: &GradedSpace,
    ) -> Result<ColorAlgebra<Scalar>, CliError> {
        let mut degrees = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != ambient.dim() {
                return Err(schema(format!("generator {i}"), format!("expected {} coordinates", ambient.dim())));
            }
            match ambient.homogeneity(g) {
                colorlie::gvs::Homogeneity::Homogeneous(d) => degrees.push(d),
                _ => return Err(CliError::Math(format!("generator {i} is not homogeneous"))),
            }
        }
        let space =
            GradedSpace::with_degrees(self.group(), "w", degrees).map_err(|e| CliError::Math(e.to_string()))?;
        ColorAlgebra::new(space, self.epsilon()?, &self.triples(entries)).map_err(|e| CliError::Math(e.to_string()))
    }
}

pub fn space_spec(v: &GradedSpace) -> SpaceSpec {
    SpaceSpec {
        basis: v
            .basis()
            .iter()
            .map(|b| BasisSpec {
                name: b.name.clone(),
                degree: b.degree.residues().iter().map(|&r| r as i64).collect(),
            })
            .collect(),
    }
}

pub fn matrix_spec(m: &Matrix<Scalar>) -> MatrixSpec {
    m.to_rows().iter().map(|r| r.iter().map(Literal::from).collect()).collect()
}

pub fn vector_spec(v: &Vector<Scalar>) -> Vec<Literal> {
    v.coords.iter().map(Literal::from).collect()
}

pub fn entries_spec(b: &Bilinear<Scalar>) -> Vec<Entry> {
    b.entries()
        .into_iter()
        .map(|(i, j, k, c)| Entry {
            i,
            j,
            k,
            coeff: Literal::from(&c),
        })
        .collect()
}

pub fn two_term_spec(t: &TwoTermAlgebra<Scalar>) -> TwoTermSpec {
    TwoTermSpec {
        v0: space_spec(t.v0()),
        v1: space_spec(t.v1()),
        d: matrix_spec(t.d()),
        l2_00: entries_spec(t.l2_00()),
        l2_01: entries_spec(t.l2_01()),
        l3: t
            .l3()
            .entries()
            .into_iter()
            .map(|(i, j, k, out, c)| TripleEntry {
                i,
                j,
                k,
                out,
                coeff: Literal::from(&c),
            })
            .collect(),
    }
}

pub fn crossed_module_spec(c: &CrossedModule<Scalar>) -> CrossedModuleSpec {
    CrossedModuleSpec {
        h: space_spec(c.h.space()),
        bracket: entries_spec(c.h.table()),
        phi: matrix_spec(&c.phi),
        action: c.action.maps().iter().map(matrix_spec).collect(),
    }
}

impl AlgebraFile {
    /// A file with only the grading data of `eps`.
    pub fn header(eps: &Epsilon<Scalar>) -> Self {
        let b = eps.bicharacter();
        AlgebraFile {
            cyclotomic_order: b.order(),
            group: GroupSpec {
                cyclic_orders: b.group().orders().to_vec(),
            },
            bicharacter: BicharacterSpec {
                exponents: b
                    .exponents()
                    .iter()
                    .map(|r| r.iter().map(|&e| e as i64).collect())
                    .collect(),
            },
            space: None,
            bracket: None,
            representation: None,
            quadratic: None,
            two_term: None,
            crossed_module: None,
            subspaces: BTreeMap::new(),
        }
    }

    /// A file holding `g` as `space` and `bracket`.
    pub fn from_algebra(g: &ColorAlgebra<Scalar>) -> Self {
        let mut f = Self::header(g.epsilon());
        f.space = Some(space_spec(g.space()));
        f.bracket = Some(BracketSpec {
            entries: entries_spec(g.table()),
        });
        f
    }

    pub fn from_two_term(t: &TwoTermAlgebra<Scalar>) -> Self {
        let mut f = Self::header(t.epsilon());
        f.two_term = Some(two_term_spec(t));
        f
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("files serialize") + "\n"
    }
}
