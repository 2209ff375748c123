use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{Partition, RingContext};
use crate::error::{Error, Result};

/// A formal integer combination of Schubert classes of a fixed `G(k,n)`.
///
/// Zero coefficients are never stored and every stored partition fits the
/// box of the context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowElement {
    ctx: RingContext,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowElement {
    pub fn zero(ctx: RingContext) -> Self {
        ChowElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class `σ_∅`.
    pub fn one(ctx: RingContext) -> Self {
        Self::class(ctx, Partition::empty())
    }

    /// `σ_λ`, or zero when `λ` does not fit the box.
    pub fn class(ctx: RingContext, lambda: Partition) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(lambda, BigInt::one());
        out
    }

    /// Builds an element from `(partition, coefficient)` pairs; out-of-box
    /// partitions are dropped.
    pub fn from_terms<I>(ctx: RingContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = Self::zero(ctx);
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms; see [`ChowElement::is_zero`] for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in canonical order: partitions lexicographically descending.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Adds `coeff * σ_λ` in place, applying box truncation.
    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() || !self.ctx.contains(&lambda) {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &ChowElement, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * scale);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> ChowElement {
        let mut out = Self::zero(self.ctx);
        out.add_scaled(self, factor);
        out
    }

    /// Set of degrees `|λ|` present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// True when every term has degree `deg` (the zero element qualifies).
    pub fn is_homogeneous_of(&self, deg: u32) -> bool {
        self.terms.keys().all(|p| p.size() == deg)
    }

    /// Every stored coefficient is positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub(crate) fn check_same_ring(&self, other: &ChowElement) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                self.ctx.k(),
                self.ctx.n(),
                other.ctx.k(),
                other.ctx.n(),
            ))
        }
    }

    /// Parses the text form, e.g. `3*s[2,1] + 5*s[1,1,1] - s[]`. A bare
    /// integer stands for a multiple of the unit class. Partitions outside
    /// the box are truncated to zero.
    pub fn parse(ctx: RingContext, text: &str) -> Result<ChowElement> {
        TermParser::new(text).parse(ctx)
    }
}

impl Add for &ChowElement {
    type Output = Result<ChowElement>;

    fn add(self, rhs: &ChowElement) -> Result<ChowElement> {
        self.check_same_ring(rhs)?;
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        Ok(out)
    }
}

impl Sub for &ChowElement {
    type Output = Result<ChowElement>;

    fn sub(self, rhs: &ChowElement) -> Result<ChowElement> {
        self.check_same_ring(rhs)?;
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        Ok(out)
    }
}

impl Neg for &ChowElement {
    type Output = ChowElement;

    fn neg(self) -> ChowElement {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "s{p}")?;
            } else {
                write!(f, "{mag}*s{p}")?;
            }
        }
        Ok(())
    }
}

struct TermParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> TermParser<'a> {
    fn new(src: &'a str) -> Self {
        TermParser { src, pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{want}'")))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn partition(&mut self) -> Result<Partition> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if !self.eat(']') {
            loop {
                let at = self.pos;
                let d = self.digits().ok_or_else(|| self.err("expected a part"))?;
                let v: u32 = d.parse().map_err(|_| Error::Parse {
                    position: at,
                    message: "part out of range".into(),
                })?;
                parts.push(v);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Partition::new(parts).map_err(|e| self.err(e.to_string()))
    }

    fn parse(mut self, ctx: RingContext) -> Result<ChowElement> {
        let mut out = ChowElement::zero(ctx);
        self.skip_ws();
        if self.pos == self.src.len() {
            return Err(self.err("empty expression"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos == self.src.len() {
                break;
            }
            let mut sign = BigInt::one();
            if self.eat('-') {
                sign = -sign;
            } else if !self.eat('+') && !first {
                return Err(self.err("expected '+' or '-'"));
            }
            first = false;
            let coeff = match self.digits() {
                Some(d) => {
                    let c: BigInt = d.parse().expect("digit run parses");
                    if self.eat('*') {
                        Some(c)
                    } else {
                        out.add_term(Partition::empty(), sign * c);
                        continue;
                    }
                }
                None => None,
            };
            if !self.eat('s') {
                return Err(self.err("expected 's[...]'"));
            }
            let lambda = self.partition()?;
            out.add_term(lambda, sign * coeff.unwrap_or_else(BigInt::one));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    k: u32,
    n: u32,
    terms: Vec<TermJson>,
}

impl Serialize for ChowElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            k: self.ctx.k(),
            n: self.ctx.n(),
            terms: self
                .terms()
                .map(|(p, c)| TermJson {
                    partition: p.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChowElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ElementJson::deserialize(d)?;
        let ctx = RingContext::new(raw.k, raw.n).map_err(D::Error::custom)?;
        let mut out = ChowElement::zero(ctx);
        for t in raw.terms {
            let p = Partition::new(t.partition).map_err(D::Error::custom)?;
            ctx.require(&p).map_err(D::Error::custom)?;
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            out.add_term(p, c);
        }
        Ok(out)
    }
}
