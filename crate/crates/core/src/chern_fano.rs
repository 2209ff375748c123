//! Chern classes of `Sym^d S*` on the Grassmannian of lines `G(2,N)`.
//!
//! With Chern roots `α, β` of `S*` (so `α + β = σ_1`, `αβ = σ_{1,1}`), the
//! total Chern class of `Sym^d S*` factors as `∏_{i=0}^{d} (1 + iα + (d-i)β)`.
//! Its top part `c_{d+1}` is the class of the Fano scheme of lines of a
//! degree-`d` hypersurface. Symmetric polynomials in `α, β` are moved to the
//! Schubert basis through the bialternant `s_{(a,b)} = (α^{a+1}β^b -
//! α^bβ^{a+1}) / (α - β)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann_chow::{
    integrate, make_class, multiply, ChowElement, Partition, RingContext,
};

/// A linear form `constant + alpha·α + beta·β` in the Chern roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: i64,
    pub alpha: i64,
    pub beta: i64,
}

/// A polynomial in the Chern roots `α, β`; keys are `(deg_α, deg_β)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChernRootPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl ChernRootPoly {
    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(a: u32, b: u32, c: BigInt) -> Self {
        let mut p = ChernRootPoly::default();
        p.add_term(a, b, c);
        p
    }

    pub fn linear(form: LinearForm) -> Self {
        let mut p = ChernRootPoly::default();
        p.add_term(0, 0, form.constant.into());
        p.add_term(1, 0, form.alpha.into());
        p.add_term(0, 1, form.beta.into());
        p
    }

    fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &ChernRootPoly) -> ChernRootPoly {
        let mut out = ChernRootPoly::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    /// The part of total degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> ChernRootPoly {
        ChernRootPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b == deg)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.terms.keys().all(|&(a, b)| a + b == deg)
    }

    /// Invariance under `α ↔ β`.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(a, b), c)| self.terms.get(&(b, a)) == Some(c))
    }

    /// Coefficients in the Schur basis `s_{(a,b)}(α,β)`, `a >= b`.
    ///
    /// Multiplies by `α - β` and reads the resulting alternant; fails if the
    /// polynomial is not symmetric, since then the alternant does not split
    /// into `α^{a+1}β^b - α^bβ^{a+1}` pairs.
    pub fn to_schur(&self) -> Result<BTreeMap<(u32, u32), BigInt>> {
        if !self.is_symmetric() {
            return Err(Error::Invariant(
                "Chern root polynomial is not symmetric in α, β".into(),
            ));
        }
        let vandermonde = {
            let mut v = ChernRootPoly::default();
            v.add_term(1, 0, BigInt::one());
            v.add_term(0, 1, -BigInt::one());
            v
        };
        let alt = self.mul(&vandermonde);
        let mut out = BTreeMap::new();
        for (&(p, q), c) in &alt.terms {
            if p == q || alt.coefficient(q, p) != -c {
                return Err(Error::Invariant(format!(
                    "alternant term α^{p}β^{q} has no antisymmetric partner"
                )));
            }
            if p > q {
                out.insert((p - 1, q), c.clone());
            }
        }
        Ok(out)
    }

    /// The Schubert class in `G(2,N)` represented by this symmetric
    /// polynomial, truncated to the box.
    pub fn to_chow(&self, ctx: RingContext) -> Result<ChowElement> {
        if ctx.k() != 2 {
            return Err(Error::InvalidArgument(format!(
                "Chern root polynomials live on G(2,N), got {ctx}"
            )));
        }
        let schur = self.to_schur()?;
        Ok(ChowElement::from_terms(
            ctx,
            schur
                .into_iter()
                .map(|((a, b), c)| (Partition::from_sorted(vec![a, b]), c)),
        ))
    }
}

/// The `d + 1` linear factors of `c(Sym^d S*)`, with the `α` coefficient
/// running `d, d-1, ..., 0`.
pub fn chern_factors(d: u32) -> Result<Vec<LinearForm>> {
    if d == 0 {
        return Err(Error::InvalidArgument("symmetric power needs d >= 1".into()));
    }
    Ok((0..=d)
        .rev()
        .map(|i| LinearForm {
            constant: 1,
            alpha: i as i64,
            beta: (d - i) as i64,
        })
        .collect())
}

/// Total Chern class `c(Sym^d S*)` as a polynomial in the roots.
pub fn total_chern_sym(d: u32) -> Result<ChernRootPoly> {
    Ok(chern_factors(d)?
        .into_iter()
        .fold(ChernRootPoly::one(), |acc, f| acc.mul(&ChernRootPoly::linear(f))))
}

/// `c_{d+1}(Sym^d S*) = ∏ (iα + (d-i)β)` as a root polynomial.
pub fn top_chern_roots(d: u32) -> Result<ChernRootPoly> {
    let poly = chern_factors(d)?.into_iter().fold(ChernRootPoly::one(), |acc, f| {
        acc.mul(&ChernRootPoly::linear(LinearForm { constant: 0, ..f }))
    });
    debug_assert!(poly.is_homogeneous_of(d + 1));
    Ok(poly)
}

/// `c_{d+1}(Sym^d S*)` in the Chow ring of `G(2,N)`.
pub fn top_chern_sym(d: u32, big_n: u32) -> Result<ChowElement> {
    if big_n < 4 {
        return Err(Error::InvalidArgument(format!(
            "need N >= 4 for G(2,N), got {big_n}"
        )));
    }
    let ctx = RingContext::new(2, big_n)?;
    top_chern_roots(d)?.to_chow(ctx)
}

/// The class of the Fano scheme of lines of a degree-`d` hypersurface in
/// `P^{N-1}` and its positivity profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoClassReport {
    pub d: u32,
    #[serde(rename = "N")]
    pub big_n: u32,
    #[serde(serialize_with = "serialize_text")]
    pub expansion: ChowElement,
    pub missing_class_ok: bool,
    #[serde(serialize_with = "serialize_pairs")]
    pub positive_coefficients: Vec<(Partition, BigInt)>,
    /// Number of lines, when the class has top degree (never under the
    /// `N - 2 >= d + 1` precondition, so always absent in practice).
    #[serde(serialize_with = "serialize_opt_big")]
    pub line_count: Option<BigInt>,
}

fn serialize_text<S: serde::Serializer>(x: &ChowElement, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn serialize_pairs<S: serde::Serializer>(
    pairs: &[(Partition, BigInt)],
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Pair<'a> {
        partition: &'a [u32],
        coeff: String,
    }
    let mut seq = s.serialize_seq(Some(pairs.len()))?;
    for (p, c) in pairs {
        seq.serialize_element(&Pair {
            partition: p.parts(),
            coeff: c.to_string(),
        })?;
    }
    seq.end()
}

pub(crate) fn serialize_opt_big<S: serde::Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

/// Expansion of `[F_1] = c_{d+1}(Sym^d S*)` with the check that `σ_{(d+1)}`
/// is the only degree `d+1` class missing and all `σ_{(i,j)}`, `j >= 1`,
/// appear with positive coefficient.
pub fn fano_class(d: u32, big_n: u32) -> Result<FanoClassReport> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "Fano class report needs d >= 2, got {d}"
        )));
    }
    if big_n < d + 3 {
        return Err(Error::InvalidArgument(format!(
            "box width N - 2 = {} is below d + 1 = {}; raise N to at least {}",
            big_n.saturating_sub(2),
            d + 1,
            d + 3
        )));
    }
    let expansion = top_chern_sym(d, big_n)?;
    if !expansion.is_homogeneous_of(d + 1) {
        return Err(Error::Invariant(format!(
            "c_{}(Sym^{d} S*) is not of pure degree {}",
            d + 1,
            d + 1
        )));
    }
    let row_absent = expansion.coefficient(&Partition::row(d + 1)).is_zero();
    let mixed_positive = (1..=d.div_ceil(2)).all(|j| {
        expansion
            .coefficient(&Partition::from_sorted(vec![d + 1 - j, j]))
            .is_positive()
    });
    let positive_coefficients = expansion
        .terms()
        .filter(|(_, c)| c.is_positive())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    let line_count =
        (d + 1 == expansion.context().dimension()).then(|| integrate(&expansion));
    Ok(FanoClassReport {
        d,
        big_n,
        expansion,
        missing_class_ok: row_absent && mixed_positive,
        positive_coefficients,
        line_count,
    })
}

/// The even-`d` route: pair `[iα+(d-i)β][(d-i)α+iβ] = i(d-i)σ_1² +
/// (d-2i)²σ_{1,1}` and multiply in the Chow ring:
/// `d²σ_{1,1} · ∏_{i=1}^{d/2-1}[i(d-i)σ_1² + (d-2i)²σ_{1,1}] · (d/2)σ_1`.
pub fn paired_rearrangement(d: u32, big_n: u32) -> Result<ChowElement> {
    if d < 2 || d % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "paired rearrangement needs even d >= 2, got {d}; use top_chern_sym"
        )));
    }
    if big_n < 4 {
        return Err(Error::InvalidArgument(format!(
            "need N >= 4 for G(2,N), got {big_n}"
        )));
    }
    let ctx = RingContext::new(2, big_n)?;
    let s1 = make_class(ctx, Partition::row(1));
    let s11 = make_class(ctx, Partition::column(2));
    let s1_sq = multiply(&s1, &s1)?;
    let dd = BigInt::from(d);

    let mut acc = s11.scale(&(&dd * &dd));
    for i in 1..d / 2 {
        let mixed = BigInt::from(i) * BigInt::from(d - i);
        let diff = BigInt::from(d as i64 - 2 * i as i64);
        let pair = (&s1_sq.scale(&mixed) + &s11.scale(&(&diff * &diff)))?;
        acc = multiply(&pair, &acc)?;
    }
    multiply(&s1.scale(&BigInt::from(d / 2)), &acc)
}

/// Number of lines on a general hypersurface of degree `2n - 3` in `P^n`:
/// `∫_{G(2,n+1)} c_{2n-2}(Sym^{2n-3} S*)`.
pub fn line_count(n: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "line counts need n >= 3, got {n}"
        )));
    }
    Ok(integrate(&top_chern_sym(2 * n - 3, n + 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u32) -> RingContext {
        RingContext::new(2, n).unwrap()
    }

    #[test]
    fn factor_lists() {
        let f = |d| {
            chern_factors(d)
                .unwrap()
                .iter()
                .map(|l| (l.alpha, l.beta))
                .collect::<Vec<_>>()
        };
        assert_eq!(f(1), vec![(1, 0), (0, 1)]);
        assert_eq!(f(2), vec![(2, 0), (1, 1), (0, 2)]);
        assert_eq!(f(3), vec![(3, 0), (2, 1), (1, 2), (0, 3)]);
        assert!(chern_factors(0).is_err());
        for d in 1..12 {
            assert_eq!(chern_factors(d).unwrap().len(), d as usize + 1);
        }
    }

    #[test]
    fn top_chern_examples() {
        assert_eq!(top_chern_sym(1, 4).unwrap().to_string(), "s[1,1]");
        assert_eq!(top_chern_sym(2, 5).unwrap().to_string(), "4*s[2,1]");
        // frozen from an independent alternant computation
        assert_eq!(top_chern_sym(3, 5).unwrap().to_string(), "18*s[3,1] + 27*s[2,2]");
        assert_eq!(top_chern_sym(3, 4).unwrap().to_string(), "27*s[2,2]");
        assert_eq!(top_chern_sym(4, 7).unwrap().to_string(), "96*s[4,1] + 320*s[3,2]");
        assert!(top_chern_sym(3, 3).is_err());
    }

    #[test]
    fn total_class_contains_top_class() {
        for d in 1..8 {
            let total = total_chern_sym(d).unwrap();
            assert!(total.is_symmetric());
            assert_eq!(total.homogeneous_part(d + 1), top_chern_roots(d).unwrap());
            assert!(total.homogeneous_part(d + 2).is_zero());
            assert_eq!(total.coefficient(0, 0), BigInt::one());
        }
    }

    #[test]
    fn asymmetric_polynomial_is_rejected() {
        let p = ChernRootPoly::monomial(2, 0, BigInt::one());
        assert!(matches!(p.to_schur(), Err(Error::Invariant(_))));
    }

    #[test]
    fn fano_class_examples() {
        let r = fano_class(2, 5).unwrap();
        assert_eq!(r.expansion.to_string(), "4*s[2,1]");
        assert!(r.missing_class_ok);
        assert_eq!(r.line_count, None);
        let r = fano_class(4, 7).unwrap();
        assert!(r.missing_class_ok);
        assert!(r.expansion.coefficient(&Partition::row(5)).is_zero());
        assert!(fano_class(3, 4).is_err());
        assert!(fano_class(1, 6).is_err());
    }

    #[test]
    fn paired_route_examples() {
        assert_eq!(paired_rearrangement(2, 5).unwrap().to_string(), "4*s[2,1]");
        assert_eq!(paired_rearrangement(4, 7).unwrap(), top_chern_sym(4, 7).unwrap());
        assert!(paired_rearrangement(3, 6).is_err());
        assert!(paired_rearrangement(0, 6).is_err());
    }

    #[test]
    fn classical_line_counts() {
        assert_eq!(line_count(3).unwrap(), BigInt::from(27));
        assert_eq!(line_count(4).unwrap(), BigInt::from(2875));
        assert_eq!(line_count(5).unwrap(), BigInt::from(698005));
        assert!(line_count(2).is_err());
    }

    #[test]
    fn d1_is_sigma11() {
        assert_eq!(top_chern_sym(1, 6).unwrap(), make_class(ctx(6), Partition::column(2)));
    }
}
