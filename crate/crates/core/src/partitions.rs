//! Partitions and Young diagrams.
//!
//! Diagrams are drawn with parts as column heights: part `λ_i` is the height
//! of column `i`, and the box `(i, j)` (column `i`, row `j`, both 1-based) is
//! present iff `j ≤ λ_i`. With this orientation
//!
//! * arm `a(s) = λ_i - j` counts boxes above `s` in its column,
//! * leg `l(s) = λ'_j - i` counts boxes right of `s` in its row,
//! * coarm `a'(s) = j - 1`, coleg `l'(s) = i - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Weakly decreasing sequence of positive integers.
///
/// `Ord` sorts by size, then by *descending* lexicographic order of parts,
/// so within one size the order is the dominance-refining total order used
/// everywhere in this crate (`[3] < [2,1] < [1,1,1]`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A square of a Young diagram, `(column, row)`, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Square {
    pub column: usize,
    pub row: usize,
}

impl Square {
    pub fn new(column: usize, row: usize) -> Self {
        Square { column, row }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.column, self.row)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HookData {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

/// Outcome of comparing `mu` against `lam` in dominance order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dominance {
    /// `lam` strictly dominates `mu`.
    Less,
    Equal,
    /// `mu` strictly dominates `lam`.
    Greater,
    Incomparable,
    DifferentSize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=top)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_square(&self, s: Square) -> bool {
        s.column >= 1 && s.row >= 1 && s.row <= self.part(s.column)
    }

    /// Squares column by column, bottom to top.
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (1..=h).map(move |j| Square::new(i + 1, j)))
    }

    /// Length of row `j`, i.e. `λ'_j`.
    pub fn row_length(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn arm_leg(&self, s: Square) -> Result<HookData, Error> {
        if !self.contains_square(s) {
            return Err(Error::BoxOutside {
                partition: self.to_string(),
                column: s.column,
                row: s.row,
            });
        }
        Ok(HookData {
            arm: self.part(s.column) - s.row,
            leg: self.row_length(s.row) - s.column,
            coarm: s.row - 1,
            coleg: s.column - 1,
        })
    }

    /// `(arm, leg)` for a square known to be inside the diagram.
    pub(crate) fn hook(&self, s: Square) -> (usize, usize) {
        debug_assert!(self.contains_square(s));
        (self.part(s.column) - s.row, self.row_length(s.row) - s.column)
    }

    /// `n(λ) = Σ (i - 1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `z_λ = Π_v v^{m_v} m_v!` over distinct part values `v`.
    pub fn z_stat(&self) -> u64 {
        let mut z: u64 = 1;
        for (v, m) in self.multiplicities() {
            for i in 1..=m {
                z *= v as u64 * i as u64;
            }
        }
        z
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplicity of the part value `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn dominance_leq(mu: &Partition, lam: &Partition) -> Dominance {
        if mu.size() != lam.size() {
            return Dominance::DifferentSize;
        }
        if mu == lam {
            return Dominance::Equal;
        }
        let (mut sm, mut sl) = (0usize, 0usize);
        let (mut mu_above, mut lam_above) = (false, false);
        for i in 1..=mu.len().max(lam.len()) {
            sm += mu.part(i);
            sl += lam.part(i);
            match sm.cmp(&sl) {
                Ordering::Less => lam_above = true,
                Ordering::Greater => mu_above = true,
                Ordering::Equal => {}
            }
        }
        match (mu_above, lam_above) {
            (false, true) => Dominance::Less,
            (true, false) => Dominance::Greater,
            _ => Dominance::Incomparable,
        }
    }

    /// `self ≤ other` in dominance order (equality included).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(
            Partition::dominance_leq(self, other),
            Dominance::Less | Dominance::Equal
        )
    }

    /// All partitions obtained by adding one box, with the added square.
    pub fn add_box_targets(&self) -> Vec<(Partition, Square)> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let cur = self.parts.get(i).copied().unwrap_or(0);
            let allowed = i == 0 || self.parts[i - 1] > cur;
            if !allowed {
                continue;
            }
            let mut parts = self.parts.clone();
            if i == parts.len() {
                parts.push(1);
            } else {
                parts[i] += 1;
            }
            out.push((Partition { parts }, Square::new(i + 1, cur + 1)));
        }
        out
    }

    /// All partitions obtained by removing one box.
    pub fn remove_box_targets(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            if self.parts[i] > next {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// The square `λ - μ` when `λ` covers `μ` by exactly one box.
    pub fn added_square(mu: &Partition, lam: &Partition) -> Result<Square, Error> {
        let not_cover = || Error::NotACover {
            mu: mu.to_string(),
            lam: lam.to_string(),
        };
        if lam.size() != mu.size() + 1 || lam.len() < mu.len() {
            return Err(not_cover());
        }
        let mut added = None;
        for i in 1..=lam.len() {
            let (l, m) = (lam.part(i), mu.part(i));
            if l < m || l > m + 1 {
                return Err(not_cover());
            }
            if l == m + 1 {
                if added.is_some() {
                    return Err(not_cover());
                }
                added = Some(Square::new(i, l));
            }
        }
        added.ok_or_else(not_cover)
    }

    /// Squares of `μ` in the row of the added square `λ - μ`.
    pub fn pieri_r(mu: &Partition, lam: &Partition) -> Result<Vec<Square>, Error> {
        let added = Partition::added_square(mu, lam)?;
        Ok((1..=mu.len())
            .map(|i| Square::new(i, added.row))
            .filter(|s| s.column != added.column && mu.contains_square(*s))
            .collect())
    }
}

/// Partitions of `n` in descending lexicographic order.
pub fn enumerate(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// [`enumerate`] guarded by a degree cap.
pub fn enumerate_checked(n: usize, cap: usize) -> Result<Vec<Partition>, Error> {
    if n > cap {
        return Err(Error::DegreeCap { degree: n, cap });
    }
    Ok(enumerate(n))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the JSON array form, e.g. `"[3,1,1]"` or `"[]"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<usize> = serde_json::from_str(s.trim())
            .map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(Partition::dominance_leq(&p(&[2, 2]), &p(&[3, 1])), Dominance::Less);
        assert_eq!(
            Partition::dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])),
            Dominance::Incomparable
        );
        assert_eq!(
            Partition::dominance_leq(&p(&[2]), &p(&[1, 1, 1])),
            Dominance::DifferentSize
        );
        assert_eq!(Partition::dominance_leq(&p(&[3, 1]), &p(&[2, 2])), Dominance::Greater);
    }

    #[test]
    fn arm_leg_examples() {
        let h = p(&[1]).arm_leg(Square::new(1, 1)).unwrap();
        assert_eq!(
            h,
            HookData {
                arm: 0,
                leg: 0,
                coarm: 0,
                coleg: 0
            }
        );
        let h = p(&[2]).arm_leg(Square::new(1, 1)).unwrap();
        assert_eq!((h.arm, h.leg), (1, 0));
        let h = p(&[1, 1]).arm_leg(Square::new(1, 1)).unwrap();
        assert_eq!((h.arm, h.leg), (0, 1));
        assert!(matches!(
            p(&[1, 1]).arm_leg(Square::new(1, 2)),
            Err(Error::BoxOutside { .. })
        ));
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[2]).n_stat(), 0);
        assert_eq!(p(&[1, 1]).n_stat(), 1);
        assert_eq!(p(&[3, 2]).n_stat(), 2);
        assert_eq!(p(&[1]).z_stat(), 1);
        assert_eq!(p(&[2, 1, 1]).z_stat(), 4);
        assert_eq!(p(&[3, 3]).z_stat(), 18);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(0), vec![p(&[])]);
        assert_eq!(enumerate(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(
            enumerate(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert!(matches!(enumerate_checked(13, 12), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn ord_matches_enumeration() {
        let mut all: Vec<Partition> = (0..=6).flat_map(enumerate).collect();
        let expected = all.clone();
        all.reverse();
        all.sort();
        assert_eq!(all, expected);
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(
            p(&[1]).add_box_targets(),
            vec![(p(&[2]), Square::new(1, 2)), (p(&[1, 1]), Square::new(2, 1))]
        );
        assert_eq!(p(&[]).add_box_targets(), vec![(p(&[1]), Square::new(1, 1))]);
        assert_eq!(
            p(&[2, 1]).add_box_targets(),
            vec![
                (p(&[3, 1]), Square::new(1, 3)),
                (p(&[2, 2]), Square::new(2, 2)),
                (p(&[2, 1, 1]), Square::new(3, 1))
            ]
        );
    }

    #[test]
    fn pieri_r_examples() {
        assert!(Partition::pieri_r(&p(&[1]), &p(&[2])).unwrap().is_empty());
        assert_eq!(
            Partition::pieri_r(&p(&[1]), &p(&[1, 1])).unwrap(),
            vec![Square::new(1, 1)]
        );
        assert!(Partition::pieri_r(&p(&[2, 2]), &p(&[3, 2])).unwrap().is_empty());
        assert!(matches!(
            Partition::pieri_r(&p(&[2]), &p(&[2, 2])),
            Err(Error::NotACover { .. })
        ));
        assert!(Partition::pieri_r(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), p(&[]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
    }
}
