//! Integer partitions as module types over a DVR quotient.

use std::fmt;

use super::AlgebraError;

/// Weakly decreasing tuple of positive integers, with implicit trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, AlgebraError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(m^n)`.
    pub fn rectangle(m: u32, n: u32) -> Self {
        if m == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![m; n as usize] }
    }

    /// `(1^r)`.
    pub fn column(r: u32) -> Self {
        Partition::rectangle(1, r)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `i`-th part, zero beyond the length (0-based).
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Conjugate parts padded with zeros to length `m`.
    pub fn conjugate_padded(&self, m: usize) -> Vec<i64> {
        let c = self.conjugate();
        (0..m.max(c.len())).map(|i| c.part(i) as i64).collect()
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Complement in the rectangle `(m^n)`: `nu_i = m - lambda_{n+1-i}`.
    pub fn complement(&self, m: u32, n: u32) -> Result<Partition, AlgebraError> {
        if !Partition::rectangle(m, n).contains(self) {
            return Err(AlgebraError::NotInRectangle { m, n });
        }
        let parts = (0..n as usize)
            .map(|i| m - self.part(n as usize - 1 - i))
            .collect();
        Ok(Partition::from_unsorted(parts))
    }

    /// Multiset union of parts.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Each part repeated twice.
    pub fn duplicate(&self) -> Partition {
        self.concat(self)
    }

    /// Each part `k` replaced by `ceil(k/2)` and `floor(k/2)`.
    pub fn half_split(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .flat_map(|&k| [k.div_ceil(2), k / 2])
            .collect();
        Partition::from_unsorted(parts)
    }

    /// All partitions contained in this one, in lexicographic order of parts.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn rec(bound: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::from_unsorted(cur.clone()));
            if i == bound.len() {
                return;
            }
            for v in 1..=cap.min(bound[i]) {
                cur.push(v);
                rec(bound, i + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, self.largest(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = AlgebraError;

    /// Parses `"3,2,1"`, `"(3,2,1)"`, or an empty string.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| AlgebraError::InvalidPartition(format!("bad part '{x}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
    }
}
