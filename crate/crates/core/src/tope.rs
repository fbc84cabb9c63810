//! Sign vectors with entries in `{-1, +1}` and the metric/poset structure
//! they carry.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_len, Error, Result};

/// A tope: a sign vector of length `t >= 1` with entries `-1` or `+1`.
///
/// Topes order lexicographically by their `+`/`-` string form, so `+`
/// precedes `-` and the all-positive tope is the smallest of its length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tope {
    signs: Vec<i8>,
}

impl Tope {
    /// Builds a tope from integer entries, rejecting anything outside `{-1, +1}`.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut signs = Vec::new();
        for (i, e) in entries.into_iter().enumerate() {
            match e.into() {
                1 => signs.push(1),
                -1 => signs.push(-1),
                _ => return Err(Error::BadEntry(i)),
            }
        }
        if signs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Tope { signs })
    }

    /// The all-`+1` tope `T^(+)` of length `t`.
    pub fn positive(t: usize) -> Self {
        assert!(t >= 1, "a tope has at least one element");
        Tope { signs: vec![1; t] }
    }

    pub(crate) fn from_signs_unchecked(signs: Vec<i8>) -> Self {
        debug_assert!(!signs.is_empty() && signs.iter().all(|&s| s == 1 || s == -1));
        Tope { signs }
    }

    /// Decodes `mask` so that bit `i` set means entry `i` is `-1`.
    pub fn from_negative_mask(t: usize, mask: u64) -> Self {
        assert!((1..=64).contains(&t));
        let signs = (0..t)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        Tope { signs }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Entry at 0-based position `i`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn negate(&self) -> Tope {
        Tope {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// Flips the entry at 0-based position `i`.
    pub fn flip(&self, i: usize) -> Tope {
        let mut signs = self.signs.clone();
        signs[i] = -signs[i];
        Tope { signs }
    }

    pub fn is_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.signs.iter().map(|&s| s as i64).collect()
    }

    /// `<T', T''> = sum_i T'_i T''_i`.
    pub fn inner_product(&self, other: &Tope) -> Result<i64> {
        check_len(self.len(), other.len())?;
        Ok(self
            .signs
            .iter()
            .zip(&other.signs)
            .map(|(&a, &b)| (a * b) as i64)
            .sum())
    }

    /// Elements (1-based) on which the two topes disagree.
    pub fn separation_set(&self, other: &Tope) -> Result<Vec<usize>> {
        check_len(self.len(), other.len())?;
        Ok(self
            .signs
            .iter()
            .zip(&other.signs)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i + 1)
            .collect())
    }

    /// Tope-graph distance `(t - <T', T''>) / 2`.
    pub fn distance(&self, other: &Tope) -> Result<usize> {
        let ip = self.inner_product(other)?;
        Ok(((self.len() as i64 - ip) / 2) as usize)
    }

    /// Poset rank of `self` in the tope poset based at `base`.
    pub fn rank(&self, base: &Tope) -> Result<usize> {
        base.distance(self)
    }

    /// `self <= other` in the tope poset based at `base`: the separation set
    /// from the base to `self` is contained in the one to `other`.
    pub fn poset_leq(&self, other: &Tope, base: &Tope) -> Result<bool> {
        check_len(base.len(), self.len())?;
        check_len(base.len(), other.len())?;
        Ok(base
            .signs
            .iter()
            .zip(self.signs.iter().zip(&other.signs))
            .all(|(b, (x, y))| x == b || y != b))
    }
}

/// Three independent closed forms of the tope-graph distance, returned as
/// `(|S(T',T'')|, (t - <T',T''>)/2, t - |T''+T'|^2/4, |T''-T'|^2/4)`.
pub fn distance_forms(a: &Tope, b: &Tope) -> Result<[i64; 4]> {
    check_len(a.len(), b.len())?;
    let t = a.len() as i64;
    let sep = a.separation_set(b)?.len() as i64;
    let half = (t - a.inner_product(b)?) / 2;
    let mut plus = 0i64;
    let mut minus = 0i64;
    for (&x, &y) in a.signs().iter().zip(b.signs()) {
        let (x, y) = (x as i64, y as i64);
        plus += (y + x) * (y + x);
        minus += (y - x) * (y - x);
    }
    Ok([sep, half, t - plus / 4, minus / 4])
}

impl Ord for Tope {
    fn cmp(&self, other: &Self) -> Ordering {
        // '+' < '-' in the string form, i.e. +1 sorts before -1.
        let key = |s: &i8| -s;
        self.signs.iter().map(key).cmp(other.signs.iter().map(key))
    }
}

impl PartialOrd for Tope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tope({self})")
    }
}

impl FromStr for Tope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '+' => signs.push(1),
                '-' => signs.push(-1),
                _ => return Err(Error::BadEntry(i)),
            }
        }
        if signs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Tope { signs })
    }
}

impl Serialize for Tope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Entrywise integer sum of a collection of topes of length `t`.
pub fn sign_sum<'a, I>(t: usize, topes: I) -> Vec<i64>
where
    I: IntoIterator<Item = &'a Tope>,
{
    let mut acc = vec![0i64; t];
    for tope in topes {
        for (a, &s) in acc.iter_mut().zip(tope.signs()) {
            *a += s as i64;
        }
    }
    acc
}
