//! Picard-level data of homogeneous varieties and the degree classification
//! of their very general hypersurfaces.
//!
//! A [`VarietyDescriptor`] records the dimension `D` and the canonical
//! coefficients `a_i` with `K = Σ a_i H_i`. For a hypersurface of
//! multidegree `(d_1..d_m)`:
//!
//! - `d_i >= D - a_i - 2` for all `i` (and `D >= 4`): algebraically hyperbolic;
//! - `d_i <= D - a_i - 4` for some `i`: contains `H_i`-lines;
//! - otherwise some `d_i = D - a_i - 3` and the case is open.

mod counterexamples;

use std::fmt;

use serde::{Serialize, Serializer};

pub use counterexamples::{known_counterexamples, Counterexample};

use crate::error::{Error, Result};

/// One factor of a (product) variety, as the user named it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Factor {
    Projective { n: u32 },
    Grassmannian { k: u32, n: u32 },
    Orthogonal { k: u32, n: u32 },
    Symplectic { k: u32, n: u32 },
    Flag { ks: Vec<u32>, n: u32 },
}

impl Factor {
    /// Dimension `r` when the factor is a projective space `P^r`.
    pub fn projective_dim(&self) -> Option<u32> {
        match self {
            Factor::Projective { n } => Some(*n),
            Factor::Grassmannian { k, n } if *k == 1 || *k + 1 == *n => Some(n - 1),
            Factor::Flag { ks, n } if ks.len() == 1 && (ks[0] == 1 || ks[0] + 1 == *n) => {
                Some(n - 1)
            }
            _ => None,
        }
    }

    pub fn descriptor(&self) -> Result<VarietyDescriptor> {
        match self {
            Factor::Projective { n } => projective(*n),
            Factor::Grassmannian { k, n } => grassmannian(*k, *n),
            Factor::Orthogonal { k, n } => orthogonal(*k, *n),
            Factor::Symplectic { k, n } => symplectic(*k, *n),
            Factor::Flag { ks, n } => flag(ks, *n),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Projective { n } => write!(f, "P({n})"),
            Factor::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            Factor::Orthogonal { k, n } => write!(f, "OG({k},{n})"),
            Factor::Symplectic { k, n } => write!(f, "SG({k},{n})"),
            Factor::Flag { ks, n } => {
                let ks: Vec<String> = ks.iter().map(u32::to_string).collect();
                write!(f, "Fl({};{n})", ks.join(","))
            }
        }
    }
}

/// Dimension and canonical class of a homogeneous variety whose Picard group
/// is generated by hyperplane classes `H_1..H_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyDescriptor {
    name: String,
    dim: u32,
    canonical: Vec<i64>,
    factors: Vec<Factor>,
}

impl VarietyDescriptor {
    fn single(factor: Factor, dim: u32, canonical: Vec<i64>) -> Result<Self> {
        let v = VarietyDescriptor {
            name: factor.to_string(),
            dim,
            canonical,
            factors: vec![factor],
        };
        v.validate()?;
        Ok(v)
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(self.invalid("dimension must be at least 1".into()));
        }
        if let Some(a) = self.canonical.iter().find(|&&a| a > -2) {
            return Err(self.invalid(format!(
                "canonical coefficient {a} > -2; lines would not cover the variety"
            )));
        }
        Ok(())
    }

    fn invalid(&self, reason: String) -> Error {
        Error::InvalidVariety {
            name: self.name.clone(),
            reason,
        }
    }

    /// Canonical text form, e.g. `Gr(2,4)xP(2)`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension `D`.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Picard rank `m`.
    pub fn picard_rank(&self) -> usize {
        self.canonical.len()
    }

    /// Canonical coefficients `a_1..a_m`.
    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    fn margin(&self, i: usize) -> i64 {
        self.dim as i64 - self.canonical[i]
    }

    /// Dimension `D - a_i - 3` of the space of `H_i`-lines.
    pub fn fano_lines_dimension(&self, i: usize) -> Result<i64> {
        if i >= self.picard_rank() {
            return Err(Error::InvalidArgument(format!(
                "hyperplane index {i} out of range for {}",
                self.name
            )));
        }
        Ok(self.margin(i) - 3)
    }

    /// Mismatches between printed closed forms and the values derived from
    /// `(D, a)`; one entry per affected factor.
    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        self.factors.iter().flat_map(factor_discrepancies).collect()
    }

    pub fn check_degrees(&self, d: &DegreeVector) -> Result<()> {
        if d.len() != self.picard_rank() {
            return Err(Error::LengthMismatch {
                expected: self.picard_rank(),
                found: d.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `P^n`, i.e. `G(1,n+1)`.
pub fn projective(n: u32) -> Result<VarietyDescriptor> {
    if n == 0 {
        return Err(Error::InvalidVariety {
            name: "P(0)".into(),
            reason: "projective space needs n >= 1".into(),
        });
    }
    VarietyDescriptor::single(Factor::Projective { n }, n, vec![-(n as i64 + 1)])
}

/// `G(k,n)`: `D = k(n-k)`, `K = -nH`.
pub fn grassmannian(k: u32, n: u32) -> Result<VarietyDescriptor> {
    if k == 0 || k >= n {
        return Err(Error::InvalidVariety {
            name: format!("Gr({k},{n})"),
            reason: "need 1 <= k < n".into(),
        });
    }
    VarietyDescriptor::single(Factor::Grassmannian { k, n }, k * (n - k), vec![-(n as i64)])
}

fn isotropic(factor: Factor, k: u32, doubled_dim: i64, a: i64) -> Result<VarietyDescriptor> {
    let name = factor.to_string();
    let invalid = |reason: String| Error::InvalidVariety {
        name: name.clone(),
        reason,
    };
    if k == 0 {
        return Err(invalid("need k >= 1".into()));
    }
    if doubled_dim % 2 != 0 {
        return Err(invalid(format!("dimension {doubled_dim}/2 is not an integer")));
    }
    if doubled_dim < 2 {
        return Err(invalid(format!("dimension {}/2 is below 1", doubled_dim)));
    }
    VarietyDescriptor::single(factor, (doubled_dim / 2) as u32, vec![a])
}

/// `OG(k,n)`: `D = k(2n-3k-1)/2`, `K = (-n+3k-1)H`. Parameters are accepted
/// when `D` is a positive integer and the canonical coefficient is at most -2.
pub fn orthogonal(k: u32, n: u32) -> Result<VarietyDescriptor> {
    let (k64, n64) = (k as i64, n as i64);
    isotropic(
        Factor::Orthogonal { k, n },
        k,
        k64 * (2 * n64 - 3 * k64 - 1),
        -n64 + 3 * k64 - 1,
    )
}

/// `SG(k,n)`: `D = k(2n-3k+1)/2`, `K = (-n+3k-2)H`, with the same validity
/// gate as [`orthogonal`].
pub fn symplectic(k: u32, n: u32) -> Result<VarietyDescriptor> {
    let (k64, n64) = (k as i64, n as i64);
    isotropic(
        Factor::Symplectic { k, n },
        k,
        k64 * (2 * n64 - 3 * k64 + 1),
        -n64 + 3 * k64 - 2,
    )
}

/// Partial flags `F(k_1 < ... < k_m; n)` with hyperplane classes pulled back
/// from each `G(k_i,n)`: `a_i = -(k_{i+1} - k_{i-1})` with `k_0 = 0`,
/// `k_{m+1} = n`, and `D = Σ k_i (k_{i+1} - k_i)`.
pub fn flag(ks: &[u32], n: u32) -> Result<VarietyDescriptor> {
    let factor = Factor::Flag {
        ks: ks.to_vec(),
        n,
    };
    let strict = !ks.is_empty()
        && ks[0] > 0
        && ks.windows(2).all(|w| w[0] < w[1])
        && *ks.last().unwrap() < n;
    if !strict {
        return Err(Error::InvalidVariety {
            name: factor.to_string(),
            reason: "need 0 < k_1 < ... < k_m < n".into(),
        });
    }
    let ext = extended_flag(ks, n);
    let canonical = (1..=ks.len())
        .map(|i| -((ext[i + 1] - ext[i - 1]) as i64))
        .collect();
    let dim = (1..=ks.len()).map(|i| ext[i] * (ext[i + 1] - ext[i])).sum();
    VarietyDescriptor::single(factor, dim, canonical)
}

fn extended_flag(ks: &[u32], n: u32) -> Vec<u32> {
    let mut ext = Vec::with_capacity(ks.len() + 2);
    ext.push(0);
    ext.extend_from_slice(ks);
    ext.push(n);
    ext
}

/// The closed form `Σ_{i=0}^{m} k_{i+1}(k_{i+1} - k_i)` displayed for flag
/// dimensions; it disagrees with the true dimension (e.g. 11 vs 5 for
/// `F(1,2;4)`) and is kept only for reporting.
pub fn flag_displayed_dimension(ks: &[u32], n: u32) -> u32 {
    let ext = extended_flag(ks, n);
    (0..=ks.len()).map(|i| ext[i + 1] * (ext[i + 1] - ext[i])).sum()
}

/// Product of varieties: dimensions add, canonical coefficients concatenate.
pub fn product(parts: &[VarietyDescriptor]) -> Result<VarietyDescriptor> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("product of zero varieties".into()));
    }
    let v = VarietyDescriptor {
        name: parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("x"),
        dim: parts.iter().map(|p| p.dim).sum(),
        canonical: parts.iter().flat_map(|p| p.canonical.iter().copied()).collect(),
        factors: parts.iter().flat_map(|p| p.factors.iter().cloned()).collect(),
    };
    v.validate()?;
    Ok(v)
}

/// Minimal degrees `D - a_i - 2` for algebraic hyperbolicity.
pub fn hyperbolicity_threshold(v: &VarietyDescriptor) -> Vec<i64> {
    (0..v.picard_rank()).map(|i| v.margin(i) - 2).collect()
}

/// Maximal degrees `D - a_i - 4` forcing `H_i`-lines.
pub fn lines_threshold(v: &VarietyDescriptor) -> Vec<i64> {
    (0..v.picard_rank()).map(|i| v.margin(i) - 4).collect()
}

/// Multidegree of a hypersurface; every entry is at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(d: impl Into<Vec<u32>>) -> Result<Self> {
        let d = d.into();
        if d.is_empty() {
            return Err(Error::InvalidArgument("empty degree vector".into()));
        }
        if d.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "degrees must be positive, got {d:?}"
            )));
        }
        Ok(DegreeVector(d))
    }

    /// The same degree on each of `m` hyperplane classes.
    pub fn uniform(d: u32, m: usize) -> Result<Self> {
        Self::new(vec![d; m])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Copy with entry `i` replaced.
    pub fn with(&self, i: usize, value: u32) -> Result<Self> {
        let mut d = self.0.clone();
        d[i] = value;
        Self::new(d)
    }

    pub fn from_thresholds(t: &[i64]) -> Result<Self> {
        let d: Vec<u32> = t
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::InvalidArgument(format!("degree {x}"))))
            .collect::<Result<_>>()?;
        Self::new(d)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Outcome of the degree classification. Indices are zero-based; rendered
/// output numbers hyperplane classes from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Hyperbolic,
    ContainsLines { witness: usize },
    OpenGap { indices: Vec<usize> },
    LowDimension,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Hyperbolic => "Hyperbolic",
            Classification::ContainsLines { .. } => "ContainsLines",
            Classification::OpenGap { .. } => "OpenGap",
            Classification::LowDimension => "LowDimension",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::ContainsLines { witness } => {
                write!(f, "ContainsLines(H{})", witness + 1)
            }
            Classification::OpenGap { indices } => {
                let idx: Vec<String> = indices.iter().map(|i| format!("H{}", i + 1)).collect();
                write!(f, "OpenGap({})", idx.join(","))
            }
            other => f.write_str(other.label()),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", self.label())?;
        match self {
            Classification::ContainsLines { witness } => {
                map.serialize_entry("witness", &(witness + 1))?;
            }
            Classification::OpenGap { indices } => {
                let one_based: Vec<usize> = indices.iter().map(|i| i + 1).collect();
                map.serialize_entry("indices", &one_based)?;
            }
            _ => {}
        }
        map.end()
    }
}

/// Classifies a very general hypersurface of multidegree `d`.
pub fn classify(v: &VarietyDescriptor, d: &DegreeVector) -> Result<Classification> {
    v.check_degrees(d)?;
    if v.dim < 4 {
        return Ok(Classification::LowDimension);
    }
    let lines = lines_threshold(v);
    let hyp = hyperbolicity_threshold(v);
    let degs = d.as_slice();
    if let Some(i) = (0..degs.len()).find(|&i| degs[i] as i64 <= lines[i]) {
        return Ok(Classification::ContainsLines { witness: i });
    }
    if (0..degs.len()).all(|i| degs[i] as i64 >= hyp[i]) {
        return Ok(Classification::Hyperbolic);
    }
    let indices = (0..degs.len())
        .filter(|&i| degs[i] as i64 == hyp[i] - 1)
        .collect();
    Ok(Classification::OpenGap { indices })
}

/// A printed closed form that does not match the value derived from the
/// catalog data. Reported, never silently corrected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Discrepancy {
    /// The symplectic bounds are printed as `n+3k+D` / `n+3k-2+D`, while
    /// `K = (-n+3k-2)H` gives `D-a-2 = D+n-3k` / `D-a-4 = D+n-3k-2`.
    SymplecticThresholdSign {
        factor: String,
        printed_hyperbolic: i64,
        derived_hyperbolic: i64,
        printed_lines: i64,
        derived_lines: i64,
    },
    /// The displayed flag dimension formula differs from the true dimension.
    FlagDimensionDisplay {
        factor: String,
        displayed: u32,
        standard: u32,
    },
    /// The flag lines clause is printed with `>=`; the classification uses
    /// `d_i <= D - a_i - 4`.
    FlagLinesInequality { factor: String },
    /// The printed canonical coefficient of an isotropic Grassmannian
    /// differs from the index of the standard Fano structure
    /// (`n-k-1` for `OG`, `n-k+1` for `SG`). The catalog keeps the printed
    /// value; this entry records the standard one.
    CanonicalIndex {
        factor: String,
        printed_a: i64,
        standard_a: i64,
    },
}

fn canonical_index(f: &Factor, printed_a: i64, standard_a: i64) -> Option<Discrepancy> {
    (printed_a != standard_a).then(|| Discrepancy::CanonicalIndex {
        factor: f.to_string(),
        printed_a,
        standard_a,
    })
}

fn factor_discrepancies(f: &Factor) -> Vec<Discrepancy> {
    match f {
        Factor::Symplectic { k, n } => {
            let Ok(v) = symplectic(*k, *n) else {
                return Vec::new();
            };
            let (k, n, dim) = (*k as i64, *n as i64, v.dim as i64);
            let mut out = vec![Discrepancy::SymplecticThresholdSign {
                factor: f.to_string(),
                printed_hyperbolic: n + 3 * k + dim,
                derived_hyperbolic: hyperbolicity_threshold(&v)[0],
                printed_lines: n + 3 * k - 2 + dim,
                derived_lines: lines_threshold(&v)[0],
            }];
            out.extend(canonical_index(f, v.canonical[0], -(n - k + 1)));
            out
        }
        Factor::Orthogonal { k, n } => {
            let Ok(v) = orthogonal(*k, *n) else {
                return Vec::new();
            };
            let (k, n) = (*k as i64, *n as i64);
            canonical_index(f, v.canonical[0], -(n - k - 1)).into_iter().collect()
        }
        Factor::Flag { ks, n } => {
            let Ok(v) = flag(ks, *n) else {
                return Vec::new();
            };
            let mut out = Vec::new();
            let displayed = flag_displayed_dimension(ks, *n);
            if displayed != v.dim {
                out.push(Discrepancy::FlagDimensionDisplay {
                    factor: f.to_string(),
                    displayed,
                    standard: v.dim,
                });
            }
            out.push(Discrepancy::FlagLinesInequality {
                factor: f.to_string(),
            });
            out
        }
        _ => Vec::new(),
    }
}

/// Summary used by the CLI `info` and `threshold` commands.
#[derive(Clone, Debug, Serialize)]
pub struct VarietyReport {
    pub name: String,
    #[serde(rename = "D")]
    pub dim: u32,
    pub m: usize,
    pub a: Vec<i64>,
    pub hyperbolicity_threshold: Vec<i64>,
    pub lines_threshold: Vec<i64>,
    pub fano_lines_dimension: Vec<i64>,
    pub factors: Vec<Factor>,
    pub discrepancies: Vec<Discrepancy>,
}

pub fn describe(v: &VarietyDescriptor) -> VarietyReport {
    VarietyReport {
        name: v.name.clone(),
        dim: v.dim,
        m: v.picard_rank(),
        a: v.canonical.clone(),
        hyperbolicity_threshold: hyperbolicity_threshold(v),
        lines_threshold: lines_threshold(v),
        fano_lines_dimension: (0..v.picard_rank()).map(|i| v.margin(i) - 3).collect(),
        factors: v.factors.clone(),
        discrepancies: v.discrepancies(),
    }
}
