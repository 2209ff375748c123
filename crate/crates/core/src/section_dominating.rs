//! Section domination of `O(d)` by the hyperplane class on `ℙⁿ` and products.
//!
//! At `p = (1:0:…:0)` the sections of `O(1)` vanishing at `p` are spanned by
//! `x_1..x_n`. The check builds the multiplication map
//! `H⁰(O(1)⊗I_p) ⊗ H⁰(O(d-1)) → H⁰(O(d)⊗I_p)` as an exact rational matrix
//! and compares its rank with the dimension of the target, which is spanned
//! by every degree `d` monomial other than `x_0^d`. One point suffices since
//! the automorphism group acts transitively.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Degree `d` monomials in `x_0..x_n`, as exponent vectors in graded
/// lexicographic order (`x_0^d` first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSpace {
    n: u32,
    d: u32,
    basis: Vec<Vec<u32>>,
}

impl MonomialSpace {
    pub fn new(n: u32, d: u32) -> Self {
        let mut basis = Vec::new();
        let mut cur = vec![0u32; n as usize + 1];
        fill(&mut cur, 0, d, &mut basis);
        MonomialSpace { n, d, basis }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, m: &[u32]) -> Option<usize> {
        self.basis.iter().position(|b| b.as_slice() == m)
    }
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// A sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, BigRational>;

/// Rank of a rational matrix given as dense rows.
pub fn rational_rank(rows: Vec<Vec<BigRational>>) -> usize {
    sparse_rank(rows.into_iter().map(|r| {
        r.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }))
}

/// Rank of a rational matrix by incremental row reduction: each row is
/// reduced against the pivots found so far and becomes a new pivot if
/// anything survives.
pub fn sparse_rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, value)) = row.iter().next() {
            let Some(pivot) = pivots.get(&lead) else {
                let inv = BigRational::one() / value;
                let normalized = row.into_iter().map(|(c, x)| (c, x * &inv)).collect();
                pivots.insert(lead, normalized);
                break;
            };
            let f = value.clone();
            for (c, p) in pivot {
                let entry = row.entry(*c).or_insert_with(BigRational::zero);
                *entry -= &f * p;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
        }
    }
    pivots.len()
}

/// Outcome of a single `ℙⁿ` check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionDomination {
    pub n: u32,
    pub d: u32,
    /// Rank of the multiplication map.
    pub rank: usize,
    /// Dimension of the target, `C(n+d, d) - 1`.
    pub target_dimension: usize,
    /// Number of products `x_j·m` spanning the image.
    pub columns: usize,
    pub passes: bool,
}

/// Checks that `x_1..x_n` times degree `d-1` forms span all degree `d` forms
/// without an `x_0^d` term.
pub fn check_projective_space(n: u32, d: u32) -> Result<SectionDomination> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "section domination needs n >= 1 and d >= 1, got n={n}, d={d}"
        )));
    }
    let target = MonomialSpace::new(n, d);
    let source = MonomialSpace::new(n, d - 1);
    let index: HashMap<&[u32], usize> = target
        .basis()
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let mut pure = vec![0; n as usize + 1];
    pure[0] = d;
    let x0d = index[pure.as_slice()];

    // rows of the transpose: one per product x_j·m, over the target basis
    let mut rows: Vec<SparseRow> = Vec::with_capacity(n as usize * source.len());
    for j in 1..=n as usize {
        for m in source.basis() {
            let mut prod = m.clone();
            prod[j] += 1;
            rows.push(SparseRow::from([(index[prod.as_slice()], BigRational::one())]));
        }
    }
    let columns = rows.len();
    let hits_x0d = rows.iter().any(|r| r.contains_key(&x0d));
    let rank = sparse_rank(rows);
    let target_dimension = target.len() - 1;
    Ok(SectionDomination {
        n,
        d,
        rank,
        target_dimension,
        columns,
        passes: rank == target_dimension && !hits_x0d,
    })
}

/// Factor-wise outcome for a product `ℙ^{n_1} × … × ℙ^{n_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductDomination {
    pub factors: Vec<SectionDomination>,
    pub passes: bool,
}

/// Passes when every factor passes [`check_projective_space`].
pub fn check_product(factors: &[(u32, u32)]) -> Result<ProductDomination> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("product needs at least one factor".into()));
    }
    let factors = factors
        .iter()
        .map(|&(n, d)| check_projective_space(n, d))
        .collect::<Result<Vec<_>>>()?;
    let passes = factors.iter().all(|f| f.passes);
    Ok(ProductDomination { factors, passes })
}
