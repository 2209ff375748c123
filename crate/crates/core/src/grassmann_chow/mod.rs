//! The Chow ring of the Grassmannian `G(k,n)`.
//!
//! Schubert classes `σ_λ` are indexed by partitions in the `k x (n-k)` box;
//! anything that leaves the box is zero. Products are computed by expanding
//! one factor with the Jacobi–Trudi determinant into special classes and
//! applying the Pieri rules term by term. [`schur_oracle_multiply`] computes
//! the same products through Schur polynomials and serves as an independent
//! check.

mod element;
mod oracle;
mod partition;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

pub use element::ChowElement;
pub use oracle::schur_oracle_multiply;
pub use partition::{Partition, RingContext};

use crate::error::Result;

/// `σ_λ` in `ctx`, or zero when `λ` leaves the box.
pub fn make_class(ctx: RingContext, lambda: Partition) -> ChowElement {
    ChowElement::class(ctx, lambda)
}

/// Multiplies by the special class `σ_p` (horizontal-strip Pieri rule).
pub fn pieri(p: u32, x: &ChowElement) -> ChowElement {
    let ctx = x.context();
    let mut out = ChowElement::zero(ctx);
    for (lambda, c) in x.terms() {
        for mu in horizontal_strips(ctx, lambda, p) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// Multiplies by `σ_{1^p}` (vertical-strip Pieri rule).
pub fn pieri_vertical(p: u32, x: &ChowElement) -> ChowElement {
    let ctx = x.context();
    let mut out = ChowElement::zero(ctx);
    for (lambda, c) in x.terms() {
        for mu in vertical_strips(ctx, lambda, p) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// Shapes `μ ⊇ λ` inside the box with `μ/λ` a horizontal strip of `p` boxes:
/// `μ_1 >= λ_1 >= μ_2 >= λ_2 >= ...`.
pub(crate) fn horizontal_strips(ctx: RingContext, lambda: &Partition, p: u32) -> Vec<Partition> {
    fn go(
        row: usize,
        rows: usize,
        left: u32,
        lambda: &Partition,
        width: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let base = lambda.part(row);
        let cap = if row == 0 { width } else { lambda.part(row - 1) };
        if base > cap {
            return;
        }
        for add in 0..=left.min(cap - base) {
            cur.push(base + add);
            go(row + 1, rows, left - add, lambda, width, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if !ctx.contains(lambda) {
        return out;
    }
    go(0, ctx.k() as usize, p, lambda, ctx.width(), &mut Vec::new(), &mut out);
    out
}

/// Shapes `μ ⊇ λ` inside the box with `μ/λ` a vertical strip of `p` boxes.
pub(crate) fn vertical_strips(ctx: RingContext, lambda: &Partition, p: u32) -> Vec<Partition> {
    fn go(
        row: usize,
        rows: usize,
        left: u32,
        lambda: &Partition,
        width: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if left as usize > rows - row {
            return;
        }
        if row == rows {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let base = lambda.part(row);
        for add in [0, 1] {
            if add > left {
                break;
            }
            let v = base + add;
            let ok_above = row == 0 || cur[row - 1] >= v;
            if ok_above && v <= width {
                cur.push(v);
                go(row + 1, rows, left - add, lambda, width, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !ctx.contains(lambda) {
        return out;
    }
    go(0, ctx.k() as usize, p, lambda, ctx.width(), &mut Vec::new(), &mut out);
    out
}

/// The product in the Chow ring.
///
/// Each term `σ_λ` of `x` is expanded as a Jacobi–Trudi determinant in
/// special classes (rows `σ_{λ_i + j - i}`, or the dual form in `σ_{1^p}`
/// when `λ` has more rows than columns) and the determinant is applied to
/// `y` by Laplace expansion, memoised over column subsets.
pub fn multiply(x: &ChowElement, y: &ChowElement) -> Result<ChowElement> {
    x.check_same_ring(y)?;
    let mut out = ChowElement::zero(x.context());
    for (lambda, c) in x.terms() {
        let prod = giambelli_apply(lambda, y);
        out.add_scaled(&prod, c);
    }
    Ok(out)
}

/// Product of a list of elements; the empty product is the unit.
pub fn multiply_all<'a, I>(ctx: RingContext, factors: I) -> Result<ChowElement>
where
    I: IntoIterator<Item = &'a ChowElement>,
{
    let mut acc = ChowElement::one(ctx);
    for f in factors {
        acc = multiply(f, &acc)?;
    }
    Ok(acc)
}

/// `σ_λ · y` via the Jacobi–Trudi determinant.
fn giambelli_apply(lambda: &Partition, y: &ChowElement) -> ChowElement {
    let dual = (lambda.first() as usize) < lambda.len();
    let (rows, special): (Partition, fn(u32, &ChowElement) -> ChowElement) = if dual {
        (lambda.conjugate(), pieri_vertical)
    } else {
        (lambda.clone(), pieri)
    };
    let size = rows.len();
    if size == 0 {
        return y.clone();
    }
    let mut memo: HashMap<u64, ChowElement> = HashMap::new();
    det_apply(&rows, special, (1u64 << size) - 1, y, &mut memo)
}

/// Applies the minor of the Jacobi–Trudi matrix with the remaining column
/// set `cols` (and the bottom `|cols|` rows) to `y`.
fn det_apply(
    rows: &Partition,
    special: fn(u32, &ChowElement) -> ChowElement,
    cols: u64,
    y: &ChowElement,
    memo: &mut HashMap<u64, ChowElement>,
) -> ChowElement {
    if cols == 0 {
        return y.clone();
    }
    if let Some(hit) = memo.get(&cols) {
        return hit.clone();
    }
    let size = rows.len();
    let row = size - cols.count_ones() as usize;
    let mut out = ChowElement::zero(y.context());
    let mut position = 0usize;
    for col in 0..size {
        if cols & (1 << col) == 0 {
            continue;
        }
        let index = rows.part(row) as i64 + col as i64 - row as i64;
        let sign = if position.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        position += 1;
        if index < 0 {
            continue;
        }
        let minor = det_apply(rows, special, cols & !(1 << col), y, memo);
        if minor.is_zero() {
            continue;
        }
        let term = if index == 0 {
            minor
        } else {
            special(index as u32, &minor)
        };
        out.add_scaled(&term, &sign);
    }
    memo.insert(cols, out.clone());
    out
}

/// Degree of `x`: the coefficient of the point class.
pub fn integrate(x: &ChowElement) -> BigInt {
    x.coefficient(&x.context().top())
}

/// The Poincaré-dual partition: `μ_j = (n-k) - λ_{k+1-j}`.
pub fn complement(ctx: RingContext, lambda: &Partition) -> Result<Partition> {
    ctx.require(lambda)?;
    let k = ctx.k() as usize;
    let parts = (0..k).map(|j| ctx.width() - lambda.part(k - 1 - j)).collect();
    Ok(Partition::from_sorted(parts))
}

/// The transposed partition in the dual Grassmannian `G(n-k,n)`.
pub fn transpose_dual(ctx: RingContext, lambda: &Partition) -> Result<(RingContext, Partition)> {
    ctx.require(lambda)?;
    Ok((ctx.dual(), lambda.conjugate()))
}

/// `σ_2 · σ_{(2^{N-3-d}, 1^{d+1})}` in `G(N-2,N)`: the dual class of
/// `σ_{(N-2, N-3-d)}` times `σ_2`. The vanishing of this product is the
/// computational witness that lines in such a class pass through finitely
/// many fixed points. Requires `d >= 2` and `N >= d + 3`.
pub fn dual_class_pieri_witness(d: u32, big_n: u32) -> Result<ChowElement> {
    use crate::error::Error;
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "dual-class vanishing needs d >= 2, got {d}"
        )));
    }
    if big_n < d + 3 {
        return Err(Error::InvalidArgument(format!(
            "need N >= d + 3 = {}, got {big_n}",
            d + 3
        )));
    }
    let lines = RingContext::new(2, big_n)?;
    let lambda = Partition::new(vec![big_n - 2, big_n - 3 - d])?;
    let (dual_ctx, dual) = transpose_dual(lines, &lambda)?;
    Ok(pieri(2, &make_class(dual_ctx, dual)))
}

/// True when every coefficient is positive; used to spot-check
/// Littlewood–Richardson positivity.
pub fn has_nonnegative_structure_constants(x: &ChowElement) -> bool {
    x.is_nonnegative() || x.is_zero()
}

impl ChowElement {
    pub fn mul(&self, other: &ChowElement) -> Result<ChowElement> {
        multiply(self, other)
    }

    pub fn pow(&self, e: u32) -> ChowElement {
        let mut acc = ChowElement::one(self.context());
        for _ in 0..e {
            acc = multiply(self, &acc).expect("same ring");
        }
        acc
    }

    pub fn integrate(&self) -> BigInt {
        integrate(self)
    }
}
