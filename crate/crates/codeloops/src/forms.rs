//! Characteristic vectors and the polarized forms Q, C, A on `F2^n`.
//!
//! A rank-`n` code loop fixes a basis `a_1 .. a_n` and records one bit per
//! basis square, commutator and associator:
//!
//! ```text
//! a_i^2         = (-1)^{lambda_i}
//! [a_i, a_j]    = (-1)^{lambda_{ij}}      (i < j)
//! (a_i,a_j,a_k) = (-1)^{lambda_{ijk}}     (i < j < k)
//! ```
//!
//! The loop identities `(xy)^2 = x^2 y^2 [x,y]`, `[xy,z] = [x,z][y,z](x,y,z)`
//! and `(wx,y,z) = (w,y,z)(x,y,z)` extend these bits to every subset of the
//! basis.  Written additively over GF(2) the extensions are the squaring
//! form `Q`, its polarization `C` (symmetric), and the polarization of `C`,
//! the trilinear alternating form `A`:
//!
//! ```text
//! Q(v ^ w)   = Q(v) + Q(w) + C(v, w)
//! C(v ^ w,u) = C(v, u) + C(w, u) + A(v, w, u)
//! ```
//!
//! This module evaluates Q, C, A by their closed forms (sums of vector
//! coordinates over index tuples); the recursions above are checked against
//! them exhaustively in the test suite.

use crate::{Error, Result};

/// A subset of the basis index set `{1, .., n}`, packed as bits
/// (index `i` occupies bit `i - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mask(u32);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn from_bits(bits: u32) -> Mask {
        Mask(bits)
    }

    /// The singleton `{i}`, `i` being a 1-based basis index.
    pub fn singleton(i: u32) -> Mask {
        debug_assert!(i >= 1);
        Mask(1 << (i - 1))
    }

    pub fn from_elems(elems: &[u32]) -> Mask {
        elems.iter().fold(Mask::EMPTY, |m, &i| m.delta(Mask::singleton(i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Position of the mask in the element indexing: `int(v) = sum 2^{i-1}`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn card(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u32) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    /// Largest index in the set, if any.
    pub fn max_elem(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros())
        }
    }

    /// Symmetric difference.
    pub fn delta(self, other: Mask) -> Mask {
        Mask(self.0 ^ other.0)
    }

    pub fn without_max(self) -> Mask {
        match self.max_elem() {
            Some(m) => self.delta(Mask::singleton(m)),
            None => self,
        }
    }

    pub fn is_valid_for(self, rank: u32) -> bool {
        rank >= 32 || self.0 < (1u32 << rank)
    }

    /// Ascending basis indices of the set.
    pub fn elems(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() + 1;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All `2^rank` masks in index order (`int(v)` ascending).
    pub fn all(rank: u32) -> impl Iterator<Item = Mask> {
        (0u32..1 << rank).map(Mask)
    }

    /// All masks sorted by the canonical order: cardinality first, then by
    /// maximum element, then recursively on the set minus its maximum.
    pub fn sorted(rank: u32) -> Vec<Mask> {
        let mut v: Vec<Mask> = Mask::all(rank).collect();
        v.sort();
        v
    }

    pub fn to_set_string(self) -> String {
        let elems: Vec<String> = self.elems().map(|i| i.to_string()).collect();
        format!("{{{}}}", elems.join(","))
    }
}

/// The canonical total order on masks: smaller cardinality first; on equal
/// cardinality, compare maxima and recurse on the sets minus their maxima.
/// For equal cardinality that recursion coincides with comparing the packed
/// bits as integers, which is how it is evaluated here.
impl Ord for Mask {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.card(), self.0).cmp(&(other.card(), other.0))
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Mask{}", self.to_set_string())
    }
}

impl std::fmt::Display for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_set_string())
    }
}

/// The characteristic vector of a code loop: squares, commutators and
/// associators on the basis, in coordinate order
/// `lambda_1 .. lambda_n, lambda_{1,2} .. lambda_{n-1,n},
/// lambda_{1,2,3} .. lambda_{n-2,n-1,n}` (tuples ordered lexicographically).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharVec {
    rank: u32,
    bits: Vec<u8>,
}

fn choose2(n: u32) -> usize {
    (n as usize) * (n as usize - 1) / 2
}

fn choose3(n: u32) -> usize {
    if n < 3 {
        0
    } else {
        (n as usize) * (n as usize - 1) * (n as usize - 2) / 6
    }
}

/// Position of the pair `{i,j}`, `i < j`, in lexicographic order.
fn pair_pos(n: u32, i: u32, j: u32) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let (n, i, j) = (n as usize, i as usize, j as usize);
    // pairs starting below i, then offset within the block of first entry i
    (i - 1) * n - i * (i - 1) / 2 + (j - i - 1)
}

/// Position of the triple `{i,j,k}`, `i < j < k`, in lexicographic order.
fn triple_pos(n: u32, i: u32, j: u32, k: u32) -> usize {
    debug_assert!(1 <= i && i < j && j < k && k <= n);
    let before_i: usize = (1..i).map(|t| choose2(n - t)).sum();
    before_i + pair_pos(n - i, j - i, k - i)
}

impl CharVec {
    /// Length of the full coordinate vector at a given rank.
    pub fn full_len(rank: u32) -> usize {
        rank as usize + choose2(rank) + choose3(rank)
    }

    /// Length of the classification shorthand (squares and commutators only).
    pub fn shorthand_len(rank: u32) -> usize {
        rank as usize + choose2(rank)
    }

    pub fn new(rank: u32, bits: Vec<u8>) -> Result<CharVec> {
        if rank < 1 {
            return Err(Error::BadCharVec("rank must be at least 1".into()));
        }
        if bits.len() != Self::full_len(rank) {
            return Err(Error::BadCharVec(format!(
                "rank {} needs {} coordinates, got {}",
                rank,
                Self::full_len(rank),
                bits.len()
            )));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::BadCharVec(format!("coordinate {b} is not a bit")));
        }
        Ok(CharVec { rank, bits })
    }

    pub fn from_bit_str(rank: u32, s: &str) -> Result<CharVec> {
        Self::new(rank, parse_bits(s)?)
    }

    /// Parse a full-length vector, inferring the rank from the string length.
    pub fn parse_full(s: &str) -> Result<CharVec> {
        let len = s.trim().len();
        for rank in 1..=32 {
            if Self::full_len(rank) == len {
                return Self::from_bit_str(rank, s);
            }
            if Self::full_len(rank) > len {
                break;
            }
        }
        Err(Error::Parse(format!(
            "string of length {len} is not a full characteristic vector at any rank"
        )))
    }

    /// Complete a classification shorthand: rank 3 appends the forced
    /// associator bit `1`, rank 4 the nuclear-basis block `1000`.
    pub fn from_shorthand(rank: u32, s: &str) -> Result<CharVec> {
        let mut bits = parse_bits(s)?;
        if bits.len() != Self::shorthand_len(rank) {
            return Err(Error::Parse(format!(
                "shorthand at rank {} needs {} bits, got {}",
                rank,
                Self::shorthand_len(rank),
                bits.len()
            )));
        }
        match rank {
            3 => bits.push(1),
            4 => bits.extend_from_slice(&[1, 0, 0, 0]),
            _ => {
                return Err(Error::Parse(format!(
                    "no shorthand completion is defined at rank {rank}"
                )))
            }
        }
        Self::new(rank, bits)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|b| char::from(b'0' + b)).collect()
    }

    /// `lambda_i`.
    pub fn square(&self, i: u32) -> u8 {
        debug_assert!(1 <= i && i <= self.rank);
        self.bits[i as usize - 1]
    }

    /// `lambda_{ij}` extended alternately: zero when `i == j`.
    pub fn pair(&self, i: u32, j: u32) -> u8 {
        if i == j {
            return 0;
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.bits[self.rank as usize + pair_pos(self.rank, i, j)]
    }

    /// `lambda_{ijk}` extended alternately: zero unless `i, j, k` are
    /// pairwise distinct.
    pub fn triple(&self, i: u32, j: u32, k: u32) -> u8 {
        if i == j || j == k || i == k {
            return 0;
        }
        let mut t = [i, j, k];
        t.sort_unstable();
        let base = self.rank as usize + choose2(self.rank);
        self.bits[base + triple_pos(self.rank, t[0], t[1], t[2])]
    }

    /// A loop built from this vector is nonassociative iff some associator
    /// coordinate is set.
    pub fn is_nonassociative(&self) -> bool {
        let base = self.rank as usize + choose2(self.rank);
        self.bits[base..].iter().any(|&b| b == 1)
    }

    fn check_mask(&self, v: Mask) -> Result<()> {
        if v.is_valid_for(self.rank) {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, got: v.bits() })
        }
    }

    /// The squaring form `Q(v) = sum lambda_i + sum lambda_{ij} + sum
    /// lambda_{ijk}` over indices and index tuples inside `v`.
    pub fn square_form(&self, v: Mask) -> Result<u8> {
        self.check_mask(v)?;
        Ok(self.q(v))
    }

    /// The commutator form, symmetric in its arguments.
    pub fn comm_form(&self, v: Mask, w: Mask) -> Result<u8> {
        self.check_mask(v)?;
        self.check_mask(w)?;
        Ok(self.c(v, w))
    }

    /// The associator form, trilinear and symmetric under every argument
    /// permutation, vanishing whenever two arguments coincide.
    pub fn assoc_form(&self, u: Mask, v: Mask, w: Mask) -> Result<u8> {
        self.check_mask(u)?;
        self.check_mask(v)?;
        self.check_mask(w)?;
        Ok(self.a(u, v, w))
    }

    pub(crate) fn q(&self, v: Mask) -> u8 {
        let mut acc = 0u8;
        let elems: Vec<u32> = v.elems().collect();
        for (p, &i) in elems.iter().enumerate() {
            acc ^= self.square(i);
            for (q, &j) in elems.iter().enumerate().skip(p + 1) {
                acc ^= self.pair(i, j);
                for &k in elems.iter().skip(q + 1) {
                    acc ^= self.triple(i, j, k);
                }
            }
        }
        acc
    }

    pub(crate) fn c(&self, v: Mask, w: Mask) -> u8 {
        let mut acc = 0u8;
        let vs: Vec<u32> = v.elems().collect();
        let ws: Vec<u32> = w.elems().collect();
        for &i in &vs {
            for &j in &ws {
                acc ^= self.pair(i, j);
            }
        }
        for (p, &i) in vs.iter().enumerate() {
            for &i2 in vs.iter().skip(p + 1) {
                for &j in &ws {
                    acc ^= self.triple(i, i2, j);
                }
            }
        }
        for &i in &vs {
            for (q, &j) in ws.iter().enumerate() {
                for &j2 in ws.iter().skip(q + 1) {
                    acc ^= self.triple(i, j, j2);
                }
            }
        }
        acc
    }

    pub(crate) fn a(&self, u: Mask, v: Mask, w: Mask) -> u8 {
        let mut acc = 0u8;
        for i in u.elems() {
            for j in v.elems() {
                for k in w.elems() {
                    acc ^= self.triple(i, j, k);
                }
            }
        }
        acc
    }
}

fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::Parse(format!("unexpected character {other:?} in bit string"))),
        })
        .collect()
}
