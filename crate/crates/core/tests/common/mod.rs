//! Helpers shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use num_bigint::BigInt;
use num_traits::Zero;

use hypercert::grassmann_chow::{pieri, pieri_vertical, ChowElement, RingContext};
use hypercert::variety_catalog::{
    flag, grassmannian, orthogonal, product, projective, symplectic, VarietyDescriptor,
};

/// `∏ (iα + (d-i)β)` written in `e1 = α+β`, `e2 = αβ` by pairing the
/// factors `i` and `d-i`, plus `(d/2) e1` for even `d`. Keys are
/// `(power of e1, power of e2)`.
pub fn top_chern_in_e1_e2(d: u32) -> BTreeMap<(u32, u32), BigInt> {
    let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::from([((0, 0), BigInt::from(1))]);
    let mut times = |factor: &[((u32, u32), BigInt)]| {
        let mut next: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((a, b), c) in &acc {
            for ((x, y), f) in factor {
                *next.entry((a + x, b + y)).or_default() += c * f;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    };
    for i in 0..d.div_ceil(2) {
        let (i, di) = (i as i64, (d - i) as i64);
        // (iα + (d-i)β)((d-i)α + iβ) = i(d-i) e1² + (d-2i)² e2
        times(&[((2, 0), BigInt::from(i * di)), ((0, 1), BigInt::from((di - i) * (di - i)))]);
    }
    if d.is_multiple_of(2) {
        times(&[((1, 0), BigInt::from(d / 2))]);
    }
    acc
}

/// Evaluates an `e1, e2` polynomial in the Chow ring of `G(2,N)` using only
/// Pieri steps: `e1 = σ_1` horizontally and `e2 = σ_{1,1}` vertically.
pub fn evaluate_e1_e2(poly: &BTreeMap<(u32, u32), BigInt>, big_n: u32) -> ChowElement {
    let ctx = RingContext::new(2, big_n).unwrap();
    let mut out = ChowElement::zero(ctx);
    for ((a, b), c) in poly {
        let mut x = ChowElement::one(ctx);
        for _ in 0..*a {
            x = pieri(1, &x);
        }
        for _ in 0..*b {
            x = pieri_vertical(2, &x);
        }
        out = (&out + &x.scale(c)).unwrap();
    }
    out
}

/// Lines on a general degree `2n-3` hypersurface in `ℙⁿ`, via the
/// Pieri-only route.
pub fn line_count_oracle(n: u32) -> BigInt {
    evaluate_e1_e2(&top_chern_in_e1_e2(2 * n - 3), n + 1).integrate()
}

/// Single-factor catalog instances with `1 <= D <= max_dim`.
pub fn catalog_singles(max_dim: u32) -> Vec<VarietyDescriptor> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        out.push(projective(n).unwrap());
    }
    for n in 4..=max_dim + 2 {
        for k in 2..=n - 2 {
            if let Ok(g) = grassmannian(k, n) {
                if g.dim() <= max_dim {
                    out.push(g);
                }
            }
        }
    }
    for n in 3..=2 * max_dim + 4 {
        for k in 1..=n / 2 {
            for v in [orthogonal(k, n), symplectic(k, n)].into_iter().flatten() {
                if v.dim() <= max_dim {
                    out.push(v);
                }
            }
        }
    }
    for n in 3..=7u32 {
        // flags with at least two steps; single steps are Grassmannians
        for mask in 0u32..(1 << (n - 1)) {
            let ks: Vec<u32> = (1..n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
            if ks.len() < 2 {
                continue;
            }
            if let Ok(f) = flag(&ks, n) {
                if f.dim() <= max_dim {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// Singles plus products of two and three singles, all with
/// `min_dim <= D <= max_dim`.
pub fn catalog_grid(min_dim: u32, max_dim: u32) -> Vec<VarietyDescriptor> {
    let singles = catalog_singles(max_dim);
    let mut out: Vec<VarietyDescriptor> = singles.clone();
    for i in 0..singles.len() {
        for j in i..singles.len() {
            let dij = singles[i].dim() + singles[j].dim();
            if dij > max_dim {
                continue;
            }
            out.push(product(&[singles[i].clone(), singles[j].clone()]).unwrap());
            for l in j..singles.len() {
                if dij + singles[l].dim() <= max_dim {
                    out.push(
                        product(&[singles[i].clone(), singles[j].clone(), singles[l].clone()])
                            .unwrap(),
                    );
                }
            }
        }
    }
    out.retain(|v| v.dim() >= min_dim);
    out
}

pub fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_hypercert"))
}

pub fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

/// A fixed command set touching every module, paired with the schema its
/// `--json` output must satisfy.
pub fn command_set() -> Vec<(Vec<&'static str>, &'static str)> {
    vec![
        (vec!["info", "Gr(2,4)xP(2)"], "variety_report"),
        (vec!["info", "SG(2,6)"], "variety_report"),
        (vec!["info", "Fl(1,2;4)"], "variety_report"),
        (vec!["threshold", "OG(2,9)"], "threshold"),
        (vec!["classify", "Gr(2,4)", "--deg", "9"], "classify"),
        (vec!["classify", "P(2)xP(2)", "--deg", "4,5"], "classify"),
        (vec!["fano-class", "--d", "4", "--N", "7"], "fano_class"),
        (vec!["line-count", "--n", "4"], "line_count"),
        (vec!["schubert", "mul", "--k", "2", "--n", "5", "s[2,1]", "s[1] + s[2]"], "chow_element"),
        (vec!["schubert", "integrate", "--k", "3", "--n", "6", "s[3,3,3] + 4*s[1]"], "schubert_integrate"),
        (vec!["schubert", "dual", "--k", "2", "--n", "6", "[3,1]"], "schubert_dual"),
        (vec!["genus-bound", "P(4)", "--deg", "7", "--s", "2", "--e", "5"], "genus_bound"),
        (vec!["certify", "Gr(2,5)xP(2)", "--deg", "13,11"], "certificate"),
        (vec!["section-dom", "P(3)xP(1)", "--deg", "4,2"], "section_dom"),
        (vec!["section-dom"], "section_dom"),
        (vec!["sweep", "P(4)", "--range", "2..12"], "sweep"),
        (vec!["sweep", "P(2)xP(2)", "--range", "3..7"], "sweep"),
        (vec!["sweep", "Gr(2,5)", "--range", "5..14", "--jobs", "3"], "sweep"),
    ]
}

/// Runs the binary; returns (exit code, stdout, stderr).
pub fn run_binary(args: &[&str]) -> (i32, Vec<u8>, String) {
    let out = Command::new(binary()).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        out.stdout,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// Validates `instance` against `schemas/<name>.json`; returns the error
/// messages.
pub fn schema_errors(name: &str, instance: &serde_json::Value) -> Vec<String> {
    let path = schema_dir().join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    validator.iter_errors(instance).map(|e| e.to_string()).collect()
}
