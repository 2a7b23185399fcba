//! Job configuration files.
//!
//! A configuration is a JSON object. Scalars are integers or strings such
//! as `"-3/4"`; floating point numbers are rejected. Every error carries the
//! JSON pointer of the offending field.

use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::group::FiniteGroup;
use crate::hopf::{HopfData, YDCoalgebra};
use crate::matrix::Matrix;
use crate::vecg::CenterCoalgebra;

pub const DEFAULT_MAX_DEGREE: usize = 3;
pub const DEFAULT_SAMPLES: usize = 10;
pub const DEFAULT_MEMORY_CAP: usize = 200_000;

/// Largest group order accepted over the rationals and over prime fields.
pub const MAX_GROUP_ORDER_Q: usize = 8;
pub const MAX_GROUP_ORDER_FP: usize = 12;
pub const MAX_HOPF_DIM: usize = 8;
/// Largest degree for which cohomology is computed.
pub const MAX_COHOMOLOGY_DEGREE_VECG: usize = 4;
pub const MAX_COHOMOLOGY_DEGREE_HOPF: usize = 3;
/// Largest degree of any cochain formed by a check suite.
pub const MAX_CHECK_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub field: FieldSpec,
    pub backend: BackendSpec,
    pub max_degree: usize,
    pub seed: u64,
    pub samples: usize,
    pub memory_cap: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BackendSpec {
    VecG {
        group: GroupSpec,
        coefficient: VecGCoefficient,
    },
    Hopf {
        hopf: HopfSpec,
        coefficient: YDSpec,
    },
}

/// A scalar as written in the file, parsed once the field is known.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalar {
    pub text: String,
    pub pointer: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalarMatrix {
    pub pointer: String,
    pub rows: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    KleinFour,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Table {
        elements: Option<Vec<String>>,
        table: Vec<Vec<usize>>,
    },
}

/// A group element given by index or by name.
#[derive(Debug, Clone, PartialEq)]
pub enum ElementRef {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum VecGCoefficient {
    Unit,
    Grouplike { support: Vec<(ElementRef, String)> },
    Regular,
    UpperTriangular,
    Explicit {
        grade_dims: Vec<usize>,
        action: Vec<ScalarMatrix>,
        comul: ScalarMatrix,
        counit: ScalarMatrix,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum HopfSpec {
    GroupAlgebra(GroupSpec),
    DualGroupAlgebra(GroupSpec),
    Sweedler,
    Explicit {
        mult: ScalarMatrix,
        unit: Vec<Scalar>,
        comul: ScalarMatrix,
        counit: ScalarMatrix,
        antipode: ScalarMatrix,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum YDSpec {
    Trivial,
    UpperTriangular,
    GroupRegular,
    Adjoint,
    Explicit {
        action: ScalarMatrix,
        coaction: ScalarMatrix,
        comul: ScalarMatrix,
        counit: ScalarMatrix,
    },
}

/// A JSON value together with its pointer.
#[derive(Clone, Copy)]
struct Node<'a> {
    value: &'a Value,
    pointer: &'a str,
}

struct Owned<'a> {
    value: &'a Value,
    pointer: String,
}

impl<'a> Owned<'a> {
    fn node(&self) -> Node<'_> {
        Node {
            value: self.value,
            pointer: &self.pointer,
        }
    }
}

fn child_pointer(parent: &str, key: impl std::fmt::Display) -> String {
    let key = key.to_string().replace('~', "~0").replace('/', "~1");
    format!("{parent}/{key}")
}

impl<'a> Node<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::config(self.pointer, message)
    }

    fn object(&self, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
        let map = self.value.as_object().ok_or_else(|| self.err("expected an object"))?;
        if let Some(key) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::config(child_pointer(self.pointer, key), "unknown field"));
        }
        Ok(map)
    }

    fn get(&self, key: &str) -> Option<Owned<'a>> {
        self.value.get(key).map(|value| Owned {
            value,
            pointer: child_pointer(self.pointer, key),
        })
    }

    fn require(&self, key: &str) -> Result<Owned<'a>> {
        self.get(key)
            .ok_or_else(|| Error::config(child_pointer(self.pointer, key), "missing required field"))
    }

    fn items(&self) -> Result<Vec<Owned<'a>>> {
        let arr = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, value)| Owned {
                value,
                pointer: child_pointer(self.pointer, i),
            })
            .collect())
    }

    fn string(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn u64(&self) -> Result<u64> {
        self.value
            .as_u64()
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    fn usize(&self) -> Result<usize> {
        usize::try_from(self.u64()?).map_err(|_| self.err("integer out of range"))
    }

    fn positive(&self) -> Result<usize> {
        match self.usize()? {
            0 => Err(self.err("must be positive")),
            n => Ok(n),
        }
    }

    fn scalar(&self) -> Result<Scalar> {
        let text = match self.value {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            Value::Number(_) => return Err(self.err("floating point scalars are not accepted; write \"p/q\"")),
            _ => return Err(self.err("expected an integer or a string \"p/q\"")),
        };
        Ok(Scalar {
            text,
            pointer: self.pointer.to_string(),
        })
    }

    fn scalars(&self) -> Result<Vec<Scalar>> {
        self.items()?.iter().map(|o| o.node().scalar()).collect()
    }

    fn matrix(&self) -> Result<ScalarMatrix> {
        let rows = self.items()?.iter().map(|r| r.node().scalars()).collect::<Result<Vec<_>>>()?;
        Ok(ScalarMatrix {
            pointer: self.pointer.to_string(),
            rows,
        })
    }

    fn preset(&self) -> Result<Option<&'a str>> {
        match self.value.get("preset") {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(Error::config(child_pointer(self.pointer, "preset"), "expected a string")),
        }
    }
}

impl Scalar {
    pub fn parse<K: Field>(&self, k: &K) -> Result<K::Elem> {
        k.parse(&self.text).map_err(|e| Error::config(&self.pointer, e.to_string()))
    }
}

impl ScalarMatrix {
    /// Parses the entries over `k`, requiring the given shape.
    pub fn build<K: Field>(&self, k: &K, rows: usize, cols: usize) -> Result<Matrix<K>> {
        if self.rows.len() != rows {
            return Err(Error::config(
                &self.pointer,
                format!("expected {rows} rows, found {}", self.rows.len()),
            ));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::config(
                    child_pointer(&self.pointer, i),
                    format!("expected {cols} entries, found {}", row.len()),
                ));
            }
            for s in row {
                data.push(s.parse(k)?);
            }
        }
        Matrix::from_vec(k, rows, cols, data)
    }

    fn cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

fn group_spec(n: Node<'_>) -> Result<GroupSpec> {
    if let Some(p) = n.preset()? {
        let order = |n: Node<'_>| -> Result<usize> { n.require("n")?.node().positive() };
        return match p {
            "cyclic" => {
                n.object(&["preset", "n"])?;
                Ok(GroupSpec::Cyclic(order(n)?))
            }
            "dihedral" => {
                n.object(&["preset", "n"])?;
                Ok(GroupSpec::Dihedral(order(n)?))
            }
            "symmetric" => {
                n.object(&["preset", "n"])?;
                Ok(GroupSpec::Symmetric(order(n)?))
            }
            "klein_four" => {
                n.object(&["preset"])?;
                Ok(GroupSpec::KleinFour)
            }
            "direct_product" => {
                n.object(&["preset", "factors"])?;
                let factors = n.require("factors")?;
                let items = factors.node().items()?;
                if items.len() != 2 {
                    return Err(factors.node().err("expected exactly two factors"));
                }
                Ok(GroupSpec::DirectProduct(
                    Box::new(group_spec(items[0].node())?),
                    Box::new(group_spec(items[1].node())?),
                ))
            }
            other => Err(n.require("preset")?.node().err(format!("unknown group preset {other:?}"))),
        };
    }
    n.object(&["elements", "table"])?;
    let elements = match n.get("elements") {
        None => None,
        Some(e) => Some(
            e.node()
                .items()?
                .iter()
                .map(|x| x.node().string().map(str::to_string))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    let table = n
        .require("table")?
        .node()
        .items()?
        .iter()
        .map(|row| row.node().items()?.iter().map(|x| x.node().usize()).collect())
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(GroupSpec::Table { elements, table })
}

impl GroupSpec {
    fn build_inner(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::KleinFour => FiniteGroup::klein_four(),
            GroupSpec::DirectProduct(a, b) => FiniteGroup::direct_product(&a.build_inner()?, &b.build_inner()?),
            GroupSpec::Table { elements, table } => FiniteGroup::from_table(table.clone(), elements.clone()),
        }
    }

    /// Builds the group, reporting failures at `pointer`.
    pub fn build(&self, pointer: &str) -> Result<FiniteGroup> {
        self.build_inner().map_err(|e| Error::config(pointer, e.to_string()))
    }
}

fn element_ref(n: Node<'_>) -> Result<ElementRef> {
    match n.value {
        Value::String(s) => Ok(ElementRef::Name(s.clone())),
        _ => n
            .usize()
            .map(ElementRef::Index)
            .map_err(|_| n.err("expected an element index or name")),
    }
}

fn resolve(group: &FiniteGroup, r: &ElementRef, pointer: &str) -> Result<usize> {
    match r {
        ElementRef::Index(i) if *i < group.order() => Ok(*i),
        ElementRef::Index(i) => Err(Error::config(
            pointer,
            format!("element index {i} out of range for a group of order {}", group.order()),
        )),
        ElementRef::Name(s) => group
            .index_of(s)
            .ok_or_else(|| Error::config(pointer, format!("no element named {s:?}"))),
    }
}

fn vecg_coefficient(n: Node<'_>) -> Result<VecGCoefficient> {
    match n.preset()? {
        Some("unit") => {
            n.object(&["preset"])?;
            Ok(VecGCoefficient::Unit)
        }
        Some("regular") => {
            n.object(&["preset"])?;
            Ok(VecGCoefficient::Regular)
        }
        Some("upper_triangular") => {
            n.object(&["preset"])?;
            Ok(VecGCoefficient::UpperTriangular)
        }
        Some("grouplike") => {
            n.object(&["preset", "support"])?;
            let support = n
                .require("support")?
                .node()
                .items()?
                .iter()
                .map(|x| Ok((element_ref(x.node())?, x.pointer.clone())))
                .collect::<Result<_>>()?;
            Ok(VecGCoefficient::Grouplike { support })
        }
        Some(other) => Err(n
            .require("preset")?
            .node()
            .err(format!("unknown coefficient preset {other:?}"))),
        None => {
            n.object(&["grade_dims", "action", "comul", "counit"])?;
            let grade_dims = n
                .require("grade_dims")?
                .node()
                .items()?
                .iter()
                .map(|x| x.node().usize())
                .collect::<Result<_>>()?;
            let action = n
                .require("action")?
                .node()
                .items()?
                .iter()
                .map(|m| m.node().matrix())
                .collect::<Result<_>>()?;
            Ok(VecGCoefficient::Explicit {
                grade_dims,
                action,
                comul: n.require("comul")?.node().matrix()?,
                counit: n.require("counit")?.node().matrix()?,
            })
        }
    }
}

fn hopf_spec(n: Node<'_>) -> Result<HopfSpec> {
    match n.preset()? {
        Some("sweedler") => {
            n.object(&["preset"])?;
            Ok(HopfSpec::Sweedler)
        }
        Some(p @ ("group_algebra" | "dual_group_algebra")) => {
            n.object(&["preset", "group"])?;
            let g = group_spec(n.require("group")?.node())?;
            Ok(if p == "group_algebra" {
                HopfSpec::GroupAlgebra(g)
            } else {
                HopfSpec::DualGroupAlgebra(g)
            })
        }
        Some(other) => Err(n
            .require("preset")?
            .node()
            .err(format!("unknown Hopf algebra preset {other:?}"))),
        None => {
            n.object(&["mult", "unit", "comul", "counit", "antipode"])?;
            Ok(HopfSpec::Explicit {
                mult: n.require("mult")?.node().matrix()?,
                unit: n.require("unit")?.node().scalars()?,
                comul: n.require("comul")?.node().matrix()?,
                counit: n.require("counit")?.node().matrix()?,
                antipode: n.require("antipode")?.node().matrix()?,
            })
        }
    }
}

fn yd_spec(n: Node<'_>) -> Result<YDSpec> {
    let simple = |s: YDSpec| -> Result<YDSpec> {
        n.object(&["preset"])?;
        Ok(s)
    };
    match n.preset()? {
        Some("trivial") => simple(YDSpec::Trivial),
        Some("upper_triangular") => simple(YDSpec::UpperTriangular),
        Some("group_regular") => simple(YDSpec::GroupRegular),
        Some("adjoint") => simple(YDSpec::Adjoint),
        Some(other) => Err(n
            .require("preset")?
            .node()
            .err(format!("unknown coefficient preset {other:?}"))),
        None => {
            n.object(&["action", "coaction", "comul", "counit"])?;
            Ok(YDSpec::Explicit {
                action: n.require("action")?.node().matrix()?,
                coaction: n.require("coaction")?.node().matrix()?,
                comul: n.require("comul")?.node().matrix()?,
                counit: n.require("counit")?.node().matrix()?,
            })
        }
    }
}

impl JobConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::config("", format!("invalid JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config("", format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let root = Node { value, pointer: "" };
        root.object(&[
            "field",
            "backend",
            "group",
            "coefficient",
            "hopf",
            "max_degree",
            "seed",
            "samples",
            "memory_cap",
        ])?;
        let field_node = root.require("field")?;
        let field = field_node
            .node()
            .string()?
            .parse::<FieldSpec>()
            .map_err(|e| field_node.node().err(e.to_string()))?;
        let backend_node = root.require("backend")?;
        let coefficient = root.require("coefficient")?;
        let backend = match backend_node.node().string()? {
            "vec_g" => {
                if let Some(h) = root.get("hopf") {
                    return Err(h.node().err("not used by the vec_g backend"));
                }
                BackendSpec::VecG {
                    group: group_spec(root.require("group")?.node())?,
                    coefficient: vecg_coefficient(coefficient.node())?,
                }
            }
            "hopf" => {
                if let Some(g) = root.get("group") {
                    return Err(g.node().err("the hopf backend takes its group inside /hopf"));
                }
                BackendSpec::Hopf {
                    hopf: hopf_spec(root.require("hopf")?.node())?,
                    coefficient: yd_spec(coefficient.node())?,
                }
            }
            other => {
                return Err(backend_node
                    .node()
                    .err(format!("unknown backend {other:?}; expected \"vec_g\" or \"hopf\"")))
            }
        };
        let opt = |key: &str, default: usize, positive: bool| -> Result<usize> {
            match root.get(key) {
                None => Ok(default),
                Some(o) if positive => o.node().positive(),
                Some(o) => o.node().usize(),
            }
        };
        let config = JobConfig {
            field,
            backend,
            max_degree: opt("max_degree", DEFAULT_MAX_DEGREE, false)?,
            seed: root.get("seed").map(|o| o.node().u64()).transpose()?.unwrap_or(0),
            samples: opt("samples", DEFAULT_SAMPLES, true)?,
            memory_cap: opt("memory_cap", DEFAULT_MEMORY_CAP, true)?,
        };
        config.check_degree()?;
        Ok(config)
    }

    /// Rejects a `max_degree` above the ceiling for check suites.
    pub fn check_degree(&self) -> Result<()> {
        if self.max_degree > MAX_CHECK_DEGREE {
            return Err(Error::config(
                "/max_degree",
                format!("{} exceeds the maximum of {MAX_CHECK_DEGREE}", self.max_degree),
            ));
        }
        Ok(())
    }

    /// Rejects a `max_degree` above the cohomology cap of the backend.
    pub fn check_cohomology_degree(&self) -> Result<()> {
        let cap = self.cohomology_cap();
        if self.max_degree > cap {
            return Err(Error::config(
                "/max_degree",
                format!("cohomology is computed up to degree {cap} for this backend"),
            ));
        }
        Ok(())
    }

    pub fn cohomology_cap(&self) -> usize {
        match self.backend {
            BackendSpec::VecG { .. } => MAX_COHOMOLOGY_DEGREE_VECG,
            BackendSpec::Hopf { .. } => MAX_COHOMOLOGY_DEGREE_HOPF,
        }
    }

    fn check_group_order(&self, group: &FiniteGroup, pointer: &str) -> Result<()> {
        let cap = match self.field {
            FieldSpec::Rationals => MAX_GROUP_ORDER_Q,
            FieldSpec::Prime(_) => MAX_GROUP_ORDER_FP,
        };
        if group.order() > cap {
            return Err(Error::config(
                pointer,
                format!("group of order {} exceeds the cap of {cap} over {}", group.order(), self.field),
            ));
        }
        Ok(())
    }

    /// The coefficient of a `vec_g` job over `k`.
    pub fn vecg_coefficient<K: Field>(&self, k: &K) -> Result<CenterCoalgebra<K>> {
        let BackendSpec::VecG { group, coefficient } = &self.backend else {
            return Err(Error::config("/backend", "not a vec_g job"));
        };
        let g = group.build("/group")?;
        self.check_group_order(&g, "/group")?;
        let at = |e: Error| Error::config("/coefficient", e.to_string());
        match coefficient {
            VecGCoefficient::Unit => CenterCoalgebra::unit(k, g).map_err(at),
            VecGCoefficient::Regular => CenterCoalgebra::regular(k, g).map_err(at),
            VecGCoefficient::UpperTriangular => CenterCoalgebra::upper_triangular(k, g).map_err(at),
            VecGCoefficient::Grouplike { support } => {
                let s = support
                    .iter()
                    .map(|(r, p)| resolve(&g, r, p))
                    .collect::<Result<Vec<_>>>()?;
                CenterCoalgebra::grouplike(k, g, &s).map_err(|e| Error::config("/coefficient/support", e.to_string()))
            }
            VecGCoefficient::Explicit {
                grade_dims,
                action,
                comul,
                counit,
            } => {
                if grade_dims.len() != g.order() {
                    return Err(Error::config(
                        "/coefficient/grade_dims",
                        format!("expected {} entries, one per group element", g.order()),
                    ));
                }
                if action.len() != g.order() {
                    return Err(Error::config(
                        "/coefficient/action",
                        format!("expected {} matrices, one per group element", g.order()),
                    ));
                }
                let du: usize = grade_dims.iter().sum();
                if du == 0 {
                    return Err(Error::config("/coefficient/grade_dims", "the coefficient is zero"));
                }
                let action = action.iter().map(|m| m.build(k, du, du)).collect::<Result<Vec<_>>>()?;
                let comul = comul.build(k, du * du, du)?;
                let counit = counit.build(k, 1, du)?;
                CenterCoalgebra::new(k, g, grade_dims.clone(), action, comul, counit).map_err(at)
            }
        }
    }

    /// The Hopf algebra and coefficient of a `hopf` job over `k`.
    pub fn hopf_data<K: Field>(&self, k: &K) -> Result<(HopfData<K>, YDCoalgebra<K>)> {
        let BackendSpec::Hopf { hopf, coefficient } = &self.backend else {
            return Err(Error::config("/backend", "not a hopf job"));
        };
        let at_hopf = |e: Error| Error::config("/hopf", e.to_string());
        let mut group = None;
        let h = match hopf {
            HopfSpec::Sweedler => HopfData::sweedler(k).map_err(at_hopf)?,
            HopfSpec::GroupAlgebra(g) | HopfSpec::DualGroupAlgebra(g) => {
                let grp = g.build("/hopf/group")?;
                self.check_group_order(&grp, "/hopf/group")?;
                let h = if matches!(hopf, HopfSpec::GroupAlgebra(_)) {
                    group = Some(grp.clone());
                    HopfData::group_algebra(k, &grp)
                } else {
                    HopfData::dual_group_algebra(k, &grp)
                };
                h.map_err(at_hopf)?
            }
            HopfSpec::Explicit {
                mult,
                unit,
                comul,
                counit,
                antipode,
            } => {
                let d = unit.len();
                if d == 0 {
                    return Err(Error::config("/hopf/unit", "the algebra is zero"));
                }
                if d > MAX_HOPF_DIM {
                    return Err(Error::config(
                        "/hopf/unit",
                        format!("dimension {d} exceeds the cap of {MAX_HOPF_DIM}"),
                    ));
                }
                let unit = unit.iter().map(|s| s.parse(k)).collect::<Result<Vec<_>>>()?;
                HopfData::new(
                    k,
                    mult.build(k, d, d * d)?,
                    unit,
                    comul.build(k, d * d, d)?,
                    counit.build(k, 1, d)?,
                    antipode.build(k, d, d)?,
                )
                .map_err(at_hopf)?
            }
        };
        if h.dim() > MAX_HOPF_DIM {
            return Err(Error::config(
                "/hopf",
                format!("dimension {} exceeds the cap of {MAX_HOPF_DIM}", h.dim()),
            ));
        }
        let at = |e: Error| Error::config("/coefficient", e.to_string());
        let u = match coefficient {
            YDSpec::Trivial => YDCoalgebra::trivial(&h).map_err(at)?,
            YDSpec::UpperTriangular => YDCoalgebra::upper_triangular(&h).map_err(at)?,
            YDSpec::Adjoint => YDCoalgebra::adjoint(&h).map_err(at)?,
            YDSpec::GroupRegular => {
                let g = group.ok_or_else(|| {
                    Error::config("/coefficient/preset", "group_regular needs the group_algebra preset")
                })?;
                YDCoalgebra::group_regular(k, &g).map_err(at)?
            }
            YDSpec::Explicit {
                action,
                coaction,
                comul,
                counit,
            } => {
                let du = counit.cols();
                if du == 0 {
                    return Err(Error::config("/coefficient/counit", "the coefficient is zero"));
                }
                let d = h.dim();
                YDCoalgebra::new(
                    k,
                    d,
                    action.build(k, du, d * du)?,
                    coaction.build(k, d * du, du)?,
                    comul.build(k, du * du, du)?,
                    counit.build(k, 1, du)?,
                )
                .map_err(at)?
            }
        };
        Ok((h, u))
    }

    pub fn backend_name(&self) -> &'static str {
        match self.backend {
            BackendSpec::VecG { .. } => "vec_g",
            BackendSpec::Hopf { .. } => "hopf",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn pointer(text: &str) -> String {
        match JobConfig::parse(text) {
            Err(Error::Config { pointer, .. }) => pointer,
            other => panic!("expected a config error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_vecg() {
        let c = JobConfig::parse(
            r#"{"field":"F2","backend":"vec_g","group":{"preset":"cyclic","n":2},"coefficient":{"preset":"unit"}}"#,
        )
        .unwrap();
        assert_eq!(c.field, FieldSpec::Prime(2));
        assert_eq!(c.max_degree, DEFAULT_MAX_DEGREE);
        assert_eq!(c.memory_cap, DEFAULT_MEMORY_CAP);
        let u = c.vecg_coefficient(&PrimeField::new(2).unwrap()).unwrap();
        assert_eq!(u.dim(), 1);
    }

    #[test]
    fn pointers_name_the_offending_field() {
        assert_eq!(pointer(r#"{"backend":"vec_g"}"#), "/field");
        assert_eq!(
            pointer(r#"{"field":"F4","backend":"vec_g","group":{"preset":"klein_four"},"coefficient":{"preset":"unit"}}"#),
            "/field"
        );
        assert_eq!(
            pointer(r#"{"field":"Q","backend":"vec_g","group":{"preset":"cyclic","n":0},"coefficient":{"preset":"unit"}}"#),
            "/group/n"
        );
        assert_eq!(
            pointer(r#"{"field":"Q","backend":"vec_g","group":{"preset":"cyclic","n":2},"coefficient":{"preset":"unit","x":1}}"#),
            "/coefficient/x"
        );
        assert_eq!(
            pointer(r#"{"field":"Q","backend":"hopf","hopf":{"preset":"sweedler"},"coefficient":{"preset":"trivial"},"max_degree":9}"#),
            "/max_degree"
        );
        assert_eq!(
            pointer(r#"{"field":"Q","backend":"hopf","hopf":{"mult":[[1]],"unit":[1.5],"comul":[[1]],"counit":[[1]],"antipode":[[1]]},"coefficient":{"preset":"trivial"}}"#),
            "/hopf/unit/0"
        );
    }

    #[test]
    fn explicit_matrices_parse_rationals() {
        let c = JobConfig::parse(
            r#"{"field":"Q","backend":"hopf",
                "hopf":{"mult":[[1]],"unit":["1"],"comul":[[1]],"counit":[[1]],"antipode":[[1]]},
                "coefficient":{"action":[[1]],"coaction":[[1]],"comul":[[1]],"counit":[["2/2"]]}}"#,
        )
        .unwrap();
        let (h, u) = c.hopf_data(&Rationals).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(u.validate(&h).unwrap().passed());
    }

    #[test]
    fn build_errors_carry_pointers() {
        let c = JobConfig::parse(
            r#"{"field":"F3","backend":"vec_g","group":{"preset":"symmetric","n":3},
                "coefficient":{"preset":"grouplike","support":["(0 1)", 7]}}"#,
        )
        .unwrap();
        let err = c.vecg_coefficient(&PrimeField::new(3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Config { ref pointer, .. } if pointer.starts_with("/coefficient/support/")));

        let big = JobConfig::parse(
            r#"{"field":"Q","backend":"vec_g","group":{"preset":"cyclic","n":9},"coefficient":{"preset":"unit"}}"#,
        )
        .unwrap();
        let err = big.vecg_coefficient(&Rationals).unwrap_err();
        assert!(matches!(err, Error::Config { ref pointer, .. } if pointer == "/group"));

        let sw = JobConfig::parse(
            r#"{"field":"F2","backend":"hopf","hopf":{"preset":"sweedler"},"coefficient":{"preset":"trivial"}}"#,
        )
        .unwrap();
        let err = sw.hopf_data(&PrimeField::new(2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Config { ref pointer, .. } if pointer == "/hopf"));
    }
}
