//! Schur-polynomial route to Chow ring products.
//!
//! `σ_λ` is represented by `s_λ(x_1..x_k)`, built by enumerating semistandard
//! tableaux. A product of Schur polynomials is re-expanded in the Schur basis
//! by multiplying with the Vandermonde `∏_{i<j}(x_i - x_j)` and reading off
//! the coefficients of strictly decreasing exponent vectors `ν + δ`. Shapes
//! wider than `n - k` are then dropped. Nothing here touches the Pieri code.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::element::ChowElement;
use super::partition::{Partition, RingContext};
use crate::error::Result;

type Monomial = Vec<u32>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    fn constant(vars: usize, c: BigInt) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &Poly, c: &BigInt) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }
}

/// `s_λ(x_1..x_vars)` as a sum over semistandard tableaux of shape `λ`.
fn schur_poly(lambda: &Partition, vars: usize) -> Poly {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut out = Poly::default();
    if shape.len() > vars {
        return out;
    }
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill(&shape, 0, 0, vars, &mut filling, &mut out);
    out
}

fn fill(
    shape: &[usize],
    row: usize,
    col: usize,
    vars: usize,
    t: &mut Vec<Vec<usize>>,
    out: &mut Poly,
) {
    if row == shape.len() {
        let mut m = vec![0u32; vars];
        for r in t.iter() {
            for &v in r {
                m[v] += 1;
            }
        }
        out.add_term(m, BigInt::one());
        return;
    }
    if col == shape[row] {
        fill(shape, row + 1, 0, vars, t, out);
        return;
    }
    let left = if col > 0 { t[row][col - 1] } else { 0 };
    let above = if row > 0 { t[row - 1][col] + 1 } else { 0 };
    for v in left.max(above)..vars {
        t[row][col] = v;
        fill(shape, row, col + 1, vars, t, out);
    }
}

fn vandermonde(vars: usize) -> Poly {
    let mut acc = Poly::constant(vars, BigInt::one());
    for i in 0..vars {
        for j in i + 1..vars {
            let mut f = Poly::default();
            let mut xi = vec![0; vars];
            xi[i] = 1;
            let mut xj = vec![0; vars];
            xj[j] = 1;
            f.add_term(xi, BigInt::one());
            f.add_term(xj, -BigInt::one());
            acc = acc.mul(&f);
        }
    }
    acc
}

/// Expands a symmetric polynomial in the Schur basis, truncated to `ctx`.
fn to_schur_basis(ctx: RingContext, f: &Poly) -> ChowElement {
    let vars = ctx.k() as usize;
    let alt = f.mul(&vandermonde(vars));
    let mut out = ChowElement::zero(ctx);
    for (m, c) in &alt.terms {
        if m.windows(2).all(|w| w[0] > w[1]) {
            let nu = m
                .iter()
                .enumerate()
                .map(|(i, &e)| e - (vars - 1 - i) as u32)
                .collect::<Vec<_>>();
            out.add_term(Partition::from_sorted(nu), c.clone());
        }
    }
    out
}

fn element_poly(x: &ChowElement) -> Poly {
    let vars = x.context().k() as usize;
    let mut out = Poly::default();
    for (lambda, c) in x.terms() {
        out.add_scaled(&schur_poly(lambda, vars), c);
    }
    out
}

/// The Chow ring product computed through Schur polynomials in `k`
/// variables. Intended for small `k` and small degrees.
pub fn schur_oracle_multiply(x: &ChowElement, y: &ChowElement) -> Result<ChowElement> {
    x.check_same_ring(y)?;
    let prod = element_poly(x).mul(&element_poly(y));
    Ok(to_schur_basis(x.context(), &prod))
}
