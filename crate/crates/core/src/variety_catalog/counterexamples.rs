use serde::{Deserialize, Serialize};

use super::{hyperbolicity_threshold, DegreeVector, VarietyDescriptor};

const TABLE: &str = include_str!("counterexamples.json");

#[derive(Clone, Debug, Deserialize)]
struct Entry {
    id: String,
    /// Projective dimensions of the factors, in the order the degree
    /// indices below refer to.
    factors: Vec<u32>,
    condition: Condition,
    description: String,
    citation: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Condition {
    /// Some listed degree equals `value`.
    DegreeEquals { any_of: Vec<usize>, value: u32 },
    /// `d_i >= D - a_i - 3` for all `i`, with equality somewhere.
    Boundary,
}

/// A known failure of algebraic hyperbolicity outside the range covered by
/// the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub id: String,
    pub description: String,
    pub citation: String,
}

fn table() -> Vec<Entry> {
    serde_json::from_str(TABLE).expect("embedded counterexample table is valid JSON")
}

/// Entries of the static counterexample table matching `(v, d)`. Products
/// of projective spaces match in any factor order.
pub fn known_counterexamples(v: &VarietyDescriptor, d: &DegreeVector) -> Vec<Counterexample> {
    if d.len() != v.picard_rank() {
        return Vec::new();
    }
    let dims: Option<Vec<u32>> = v.factors().iter().map(|f| f.projective_dim()).collect();
    let Some(dims) = dims else {
        return Vec::new();
    };
    if dims.len() != v.picard_rank() {
        return Vec::new();
    }
    table()
        .into_iter()
        .filter(|e| e.factors.len() == dims.len())
        .filter(|e| {
            permutations(dims.len())
                .into_iter()
                .filter(|perm| perm.iter().enumerate().all(|(t, &i)| dims[i] == e.factors[t]))
                .any(|perm| holds(&e.condition, &perm, v, d))
        })
        .map(|e| Counterexample {
            id: e.id,
            description: e.description,
            citation: e.citation,
        })
        .collect()
}

fn holds(c: &Condition, perm: &[usize], v: &VarietyDescriptor, d: &DegreeVector) -> bool {
    match c {
        Condition::DegreeEquals { any_of, value } => {
            any_of.iter().any(|&t| d.get(perm[t]) == *value)
        }
        Condition::Boundary => {
            let open: Vec<i64> = hyperbolicity_threshold(v).iter().map(|t| t - 1).collect();
            let degs = d.as_slice();
            degs.iter().zip(&open).all(|(&x, &o)| x as i64 >= o)
                && degs.iter().zip(&open).any(|(&x, &o)| x as i64 == o)
        }
    }
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for perm in permutations(m - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, m - 1);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety_catalog::{grassmannian, product, projective};

    fn deg(d: &[u32]) -> DegreeVector {
        DegreeVector::new(d.to_vec()).unwrap()
    }

    fn ids(v: &VarietyDescriptor, d: &[u32]) -> Vec<String> {
        known_counterexamples(v, &deg(d)).into_iter().map(|c| c.id).collect()
    }

    #[test]
    fn table_parses() {
        assert_eq!(table().len(), 4);
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn p2_times_p2() {
        let v = product(&[projective(2).unwrap(), projective(2).unwrap()]).unwrap();
        assert_eq!(ids(&v, &[4, 9]), vec!["p2xp2-elliptic"]);
        assert_eq!(ids(&v, &[9, 4]), vec!["p2xp2-elliptic"]);
        assert!(ids(&v, &[5, 5]).is_empty());
    }

    #[test]
    fn p2_p1_p1_in_any_order() {
        let p1 = projective(1).unwrap();
        let p2 = projective(2).unwrap();
        let v = product(&[p2.clone(), p1.clone(), p1.clone()]).unwrap();
        assert_eq!(ids(&v, &[4, 7, 7]), vec!["p2xp1xp1-elliptic"]);
        assert!(ids(&v, &[5, 4, 4]).is_empty());
        let w = product(&[p1.clone(), p2, p1]).unwrap();
        assert_eq!(ids(&w, &[7, 4, 7]), vec!["p2xp1xp1-elliptic"]);
    }

    #[test]
    fn boundary_failures() {
        let p1 = projective(1).unwrap();
        let v = product(&[p1.clone(), p1.clone(), p1.clone()]).unwrap();
        // D = 3, a = -2: boundary degree 2
        assert_eq!(ids(&v, &[2, 3, 3]), vec!["p1xp1xp1-boundary"]);
        assert!(ids(&v, &[3, 3, 3]).is_empty());
        let w = product(&[projective(2).unwrap(), p1]).unwrap();
        assert_eq!(ids(&w, &[3, 2]), vec!["p2xp1-boundary"]);
    }

    #[test]
    fn grassmannians_have_no_entries() {
        let g = grassmannian(2, 5).unwrap();
        for d in 1..20 {
            assert!(ids(&g, &[d]).is_empty());
        }
        // Gr(1,3) is P2
        let v = product(&[grassmannian(1, 3).unwrap(), projective(2).unwrap()]).unwrap();
        assert_eq!(ids(&v, &[4, 6]), vec!["p2xp2-elliptic"]);
    }
}
