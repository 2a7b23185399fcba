//! Runs one command of a job configuration and assembles its reports.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cochain::ComplexBackend;
use crate::cohomology::{check_gerstenhaber_equivariant, check_graded_commutativity, Cohomology};
use crate::comp::{
    check_complex, check_derivation, check_dga, check_equivariant, check_jacobi, check_recovery, check_weak_comp,
    CompMode, Sampling, Space,
};
use crate::config::{BackendSpec, JobConfig};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::hopf::{HopfBackend, HopfModel};
use crate::report::{CheckEntry, CheckReport};
use crate::vecg::VecGBackend;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Complex,
    CupDerivation,
    WeakComp,
    Recovery,
    Dga,
    Equivariant,
    GradedCommutativity,
    Gerstenhaber,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Complex,
        Suite::CupDerivation,
        Suite::WeakComp,
        Suite::Recovery,
        Suite::Dga,
        Suite::Equivariant,
        Suite::GradedCommutativity,
        Suite::Gerstenhaber,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Complex => "complex",
            Suite::CupDerivation => "cup-derivation",
            Suite::WeakComp => "weak-comp",
            Suite::Recovery => "recovery",
            Suite::Dga => "dga",
            Suite::Equivariant => "equivariant",
            Suite::GradedCommutativity => "graded-commutativity",
            Suite::Gerstenhaber => "gerstenhaber",
        }
    }

    fn needs_cohomology(self) -> bool {
        matches!(self, Suite::GradedCommutativity | Suite::Gerstenhaber)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::config("/suite", format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Structure axioms of the input data.
    Validate,
    /// Betti numbers of the full complex, or of the equivariant subcomplex.
    Betti { equivariant: bool },
    Check { suite: Suite },
    /// Everything above.
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Betti { .. } => "betti",
            Command::Check { .. } => "check",
            Command::Report => "report",
        }
    }
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub field: Option<FieldSpec>,
    pub max_degree: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

impl Overrides {
    pub fn apply(&self, c: &mut JobConfig) -> Result<()> {
        if let Some(f) = self.field {
            c.field = f;
        }
        if let Some(d) = self.max_degree {
            c.max_degree = d;
        }
        if let Some(s) = self.seed {
            c.seed = s;
        }
        if let Some(s) = self.samples {
            if s == 0 {
                return Err(Error::config("/samples", "must be positive"));
            }
            c.samples = s;
        }
        c.check_degree()
    }
}

/// Contents of `report.json`. Identical inputs give identical bytes.
#[derive(Debug, Clone, Serialize)]
pub struct JobReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub config_sha256: String,
    pub field: String,
    pub backend: String,
    pub max_degree: usize,
    pub seed: u64,
    pub samples: usize,
    pub memory_cap: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti_equivariant: Option<Vec<usize>>,
    pub suites: Vec<CheckReport>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub suite: String,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub struct JobOutput {
    pub report: JobReport,
    pub timings: Vec<Timing>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn betti_csv(table: &[usize]) -> String {
    let mut s = String::from("degree,dimension\n");
    for (n, b) in table.iter().enumerate() {
        let _ = writeln!(s, "{n},{b}");
    }
    s
}

impl JobOutput {
    pub fn passed(&self) -> bool {
        self.report.passed
    }

    /// Writes `report.json`, `timings.json` and the Betti tables into `dir`.
    pub fn write(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.json"), pretty(&self.report))?;
        std::fs::write(dir.join("timings.json"), pretty(&self.timings))?;
        if let Some(b) = &self.report.betti {
            std::fs::write(dir.join("betti.csv"), betti_csv(b))?;
        }
        if let Some(b) = &self.report.betti_equivariant {
            std::fs::write(dir.join("betti_equivariant.csv"), betti_csv(b))?;
        }
        Ok(())
    }

    /// Human-readable summary.
    pub fn summary(&self) -> String {
        let r = &self.report;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} {} over {}, max degree {}, seed {}",
            r.command, r.backend, r.field, r.max_degree, r.seed
        );
        if let Some(b) = &r.betti {
            let _ = writeln!(s, "betti: {b:?}");
        }
        if let Some(b) = &r.betti_equivariant {
            let _ = writeln!(s, "betti (equivariant): {b:?}");
        }
        for rep in &r.suites {
            let fails: Vec<&CheckEntry> = rep.failures().collect();
            let status = if fails.is_empty() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{status} {}: {} entries, {} instances",
                rep.suite,
                rep.results.len(),
                rep.checked()
            );
            for e in fails {
                let detail = e.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or("");
                let _ = writeln!(s, "  failed {} {detail}", e.identity);
            }
        }
        let total: f64 = self.timings.iter().map(|t| t.seconds).sum();
        let _ = writeln!(s, "wall time {total:.2}s");
        let _ = writeln!(s, "{}", if r.passed { "all checks passed" } else { "some checks failed" });
        s
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Converts resource errors into configuration errors that name the
/// setting to change.
fn as_config(e: Error) -> Error {
    match e {
        Error::CapExceeded { .. } => Error::config("/memory_cap", e.to_string()),
        Error::DegreeCap { .. } => Error::config("/max_degree", e.to_string()),
        e => e,
    }
}

/// Runs `command` on `config`; `config_sha256` identifies the input file.
pub fn run(command: Command, config: &JobConfig, config_sha256: &str) -> Result<JobOutput> {
    match config.field {
        FieldSpec::Rationals => run_over(&Rationals, command, config, config_sha256),
        FieldSpec::Prime(p) => {
            let k = PrimeField::new(p as u64).map_err(|e| Error::config("/field", e.to_string()))?;
            run_over(&k, command, config, config_sha256)
        }
    }
    .map_err(as_config)
}

enum Built<K: Field> {
    VecG(VecGBackend<K>),
    Hopf(HopfBackend<K>),
}

impl<K: Field> Built<K> {
    fn new(k: &K, c: &JobConfig) -> Result<Self> {
        let at = |e: Error| match e {
            Error::Coefficient(_) | Error::NotConjugationStable { .. } => Error::config("/coefficient", e.to_string()),
            Error::Hopf(_) => Error::config("/hopf", e.to_string()),
            e => e,
        };
        Ok(match c.backend {
            BackendSpec::VecG { .. } => {
                Built::VecG(VecGBackend::new(c.vecg_coefficient(k)?, c.max_degree, c.memory_cap).map_err(at)?)
            }
            BackendSpec::Hopf { .. } => {
                let (h, u) = c.hopf_data(k)?;
                Built::Hopf(HopfModel::backend(h, u, c.max_degree, c.memory_cap).map_err(at)?)
            }
        })
    }

    fn backend(&self) -> &dyn ComplexBackend<K> {
        match self {
            Built::VecG(b) => b,
            Built::Hopf(b) => b,
        }
    }
}

/// Structure axioms of the input data. For Hopf data that passes them, the
/// components of basis cochains are also checked for naturality.
fn validate<K: Field>(k: &K, c: &JobConfig) -> Result<Vec<CheckReport>> {
    match c.backend {
        BackendSpec::VecG { .. } => Ok(vec![c.vecg_coefficient(k)?.validate()]),
        BackendSpec::Hopf { .. } => {
            let (h, u) = c.hopf_data(k)?;
            let mut out = vec![h.validate(), u.validate(&h)?];
            if out.iter().all(CheckReport::passed) {
                let b = HopfModel::backend(h, u, c.max_degree, c.memory_cap)?;
                let m = b.model();
                let mut nat = CheckReport::new("naturality");
                for n in 1..=c.max_degree.min(2) {
                    let dim = b.cochain_dim(n);
                    let witness = (0..dim).find_map(|j| m.check_naturality(&b.basis_cochain(n, j)));
                    nat.push(CheckEntry::from_outcome(format!("naturality/basis/({n})"), dim, witness));
                }
                out.push(nat);
            }
            Ok(out)
        }
    }
}

fn run_suite<K: Field>(b: &dyn ComplexBackend<K>, suite: Suite, s: &Sampling) -> Result<CheckReport> {
    let d = s.max_degree;
    match suite {
        Suite::Complex => check_complex(b, d),
        Suite::CupDerivation => check_derivation(b, s),
        Suite::WeakComp => {
            let mut r = check_weak_comp(b, s, CompMode::Weak)?;
            r.extend(check_weak_comp(b, s, CompMode::Full)?);
            Ok(r)
        }
        Suite::Recovery => check_recovery(b, s),
        Suite::Dga => check_dga(b, s),
        Suite::Equivariant => {
            let mut r = check_equivariant(b, s)?;
            r.extend(check_jacobi(b, &Space::equivariant(b, d)?, s)?);
            Ok(r)
        }
        Suite::GradedCommutativity => {
            let coh = Cohomology::new(b);
            let mut r = CheckReport::new("graded-commutativity");
            for m in 0..=d {
                for n in 0..=d - m {
                    r.extend(check_graded_commutativity(&coh, m, n)?);
                }
            }
            Ok(r)
        }
        Suite::Gerstenhaber => check_gerstenhaber_equivariant(&Cohomology::equivariant(b), s),
    }
}

fn run_over<K: Field>(k: &K, command: Command, c: &JobConfig, hash: &str) -> Result<JobOutput> {
    let needs_cohomology = match command {
        Command::Betti { .. } | Command::Report => true,
        Command::Check { suite } => suite.needs_cohomology(),
        Command::Validate => false,
    };
    if needs_cohomology {
        c.check_cohomology_degree()?;
    }
    if command == Command::Validate {
        let start = Instant::now();
        let suites = validate(k, c)?;
        let timings = vec![Timing {
            suite: "validate".into(),
            seconds: start.elapsed().as_secs_f64(),
        }];
        return Ok(finish(command, c, hash, suites, timings, None, None));
    }
    let built = Built::new(k, c)?;
    let b = built.backend();
    let s = Sampling {
        seed: c.seed,
        samples: c.samples,
        max_degree: c.max_degree,
    };
    let mut suites = Vec::new();
    let mut timings = Vec::new();
    let mut betti = None;
    let mut betti_equivariant = None;
    let mut timed = |name: &str, f: &mut dyn FnMut() -> Result<Vec<CheckReport>>| -> Result<()> {
        let start = Instant::now();
        suites.extend(f()?);
        timings.push(Timing {
            suite: name.into(),
            seconds: start.elapsed().as_secs_f64(),
        });
        Ok(())
    };
    let table = |equivariant: bool| -> Result<Vec<usize>> {
        Cohomology::with_mode(b, equivariant).betti_table(c.max_degree)
    };

    match command {
        Command::Validate => unreachable!("handled above"),
        Command::Betti { equivariant } => {
            let mut t = None;
            timed("betti", &mut || {
                t = Some(table(equivariant)?);
                Ok(vec![])
            })?;
            if equivariant {
                betti_equivariant = t;
            } else {
                betti = t;
            }
        }
        Command::Check { suite } => timed(suite.name(), &mut || Ok(vec![run_suite(b, suite, &s)?]))?,
        Command::Report => {
            timed("validate", &mut || validate(k, c))?;
            timed("betti", &mut || {
                betti = Some(table(false)?);
                betti_equivariant = Some(table(true)?);
                Ok(vec![])
            })?;
            for suite in Suite::ALL {
                timed(suite.name(), &mut || Ok(vec![run_suite(b, suite, &s)?]))?;
            }
        }
    }

    Ok(finish(command, c, hash, suites, timings, betti, betti_equivariant))
}

fn finish(
    command: Command,
    c: &JobConfig,
    hash: &str,
    suites: Vec<CheckReport>,
    timings: Vec<Timing>,
    betti: Option<Vec<usize>>,
    betti_equivariant: Option<Vec<usize>>,
) -> JobOutput {
    let passed = suites.iter().all(CheckReport::passed);
    let suite = match command {
        Command::Check { suite } => Some(suite.name().to_string()),
        _ => None,
    };
    JobOutput {
        report: JobReport {
            tool: "dycoh",
            version: env!("CARGO_PKG_VERSION"),
            command: command.name().into(),
            suite,
            config_sha256: hash.into(),
            field: c.field.to_string(),
            backend: c.backend_name().into(),
            max_degree: c.max_degree,
            seed: c.seed,
            samples: c.samples,
            memory_cap: c.memory_cap,
            betti,
            betti_equivariant,
            suites,
            passed,
        },
        timings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> JobConfig {
        JobConfig::parse(text).unwrap()
    }

    const Z2_UNIT_F2: &str =
        r#"{"field":"F2","backend":"vec_g","group":{"preset":"cyclic","n":2},"coefficient":{"preset":"unit"}}"#;

    #[test]
    fn betti_of_z2_over_f2() {
        let out = run(Command::Betti { equivariant: false }, &config(Z2_UNIT_F2), "x").unwrap();
        assert_eq!(out.report.betti, Some(vec![1, 1, 1, 1]));
        assert!(out.passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let c = config(Z2_UNIT_F2);
        let cmd = Command::Check {
            suite: Suite::CupDerivation,
        };
        let a = serde_json::to_string(&run(cmd, &c, "h").unwrap().report).unwrap();
        let b = serde_json::to_string(&run(cmd, &c, "h").unwrap().report).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cohomology_degree_cap_is_a_config_error() {
        let mut c = config(r#"{"field":"Q","backend":"hopf","hopf":{"preset":"sweedler"},"coefficient":{"preset":"trivial"}}"#);
        c.max_degree = 4;
        let err = run(Command::Betti { equivariant: false }, &c, "h").unwrap_err();
        assert!(matches!(err, Error::Config { ref pointer, .. } if pointer == "/max_degree"));
    }

    #[test]
    fn memory_cap_is_a_config_error() {
        let mut c = config(Z2_UNIT_F2);
        c.memory_cap = 4;
        let err = run(Command::Betti { equivariant: false }, &c, "h").unwrap_err();
        assert!(matches!(err, Error::Config { ref pointer, .. } if pointer == "/memory_cap"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
