use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros. Indexes the Schubert class `σ_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, trimming trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(p)`.
    pub fn row(p: u32) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition(vec![p])
        }
    }

    /// The one-column partition `(1^p)`.
    pub fn column(p: u32) -> Self {
        Partition(vec![1; p as usize])
    }

    /// Internal constructor for parts already known to be a partition.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of boxes `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn fits(&self, rows: u32, cols: u32) -> bool {
        self.len() <= rows as usize && self.first() <= cols
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The Grassmannian `G(k,n)` of `k`-planes in an `n`-dimensional space,
/// viewed through its Chow ring: classes live in the `k x (n-k)` box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    k: u32,
    n: u32,
}

impl RingContext {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || n <= k {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(RingContext { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Box width `n - k`.
    pub fn width(&self) -> u32 {
        self.n - self.k
    }

    /// Complex dimension `k(n-k)`, the top grading degree.
    pub fn dimension(&self) -> u32 {
        self.k * self.width()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits(self.k, self.width())
    }

    /// The full box partition indexing the point class.
    pub fn top(&self) -> Partition {
        Partition(vec![self.width(); self.k as usize])
    }

    pub(crate) fn require(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::OutsideBox {
                partition: lambda.parts().to_vec(),
                rows: self.k,
                cols: self.width(),
            })
        }
    }

    /// The dual Grassmannian `G(n-k,n)`.
    pub fn dual(&self) -> RingContext {
        RingContext {
            k: self.n - self.k,
            n: self.n,
        }
    }

    /// All partitions in the box, grouped by increasing size.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for size in 0..=self.dimension() {
            out.extend(self.partitions_of(size));
        }
        out
    }

    /// Partitions of `size` fitting the box, in descending lexicographic order.
    pub fn partitions_of(&self, size: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, rows: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, self.width(), self.k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_validates() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![0, 0]).unwrap().is_empty());
    }

    #[test]
    fn conjugate_of_hook() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(Partition::empty().conjugate().is_empty());
    }

    #[test]
    fn box_enumeration_counts() {
        // binomial(n, k) partitions in the k x (n-k) box
        let ctx = RingContext::new(3, 7).unwrap();
        assert_eq!(ctx.partitions().len(), 35);
        let ctx = RingContext::new(2, 4).unwrap();
        assert_eq!(ctx.partitions_of(2).len(), 2);
        assert_eq!(ctx.top().parts(), &[2, 2]);
    }

    #[test]
    fn rejects_bad_context() {
        assert!(RingContext::new(0, 3).is_err());
        assert!(RingContext::new(3, 3).is_err());
    }
}
