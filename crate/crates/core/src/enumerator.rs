//! Distance enumerators `D_{B,S}(x) = sum_{T in S} x^{d(B,T)}` and their
//! halfspace rewriting `x^{t/2} sum_{T in S.} (x^{-<B,T>/2} + x^{<B,T>/2})`.

use std::collections::BTreeMap;
use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{check_len, Error, Result};
use crate::tope::Tope;

/// Laurent polynomial in `x^{1/2}`: exponents are stored as counts of halves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HalfExpPoly {
    terms: BTreeMap<i64, i64>,
}

impl HalfExpPoly {
    pub fn zero() -> Self {
        HalfExpPoly::default()
    }

    /// `coefficient * x^{half_exponent / 2}`.
    pub fn monomial(half_exponent: i64, coefficient: i64) -> Self {
        let mut p = HalfExpPoly::zero();
        p.add_term(half_exponent, coefficient);
        p
    }

    pub fn add_term(&mut self, half_exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let c = self.terms.entry(half_exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&half_exponent);
        }
    }

    /// Tallies of half exponents in `0..counts.len()`.
    fn from_counts(counts: &[i64]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, &c) in counts.iter().enumerate() {
            if c != 0 {
                terms.insert(e as i64, c);
            }
        }
        HalfExpPoly { terms }
    }

    /// `(half_exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, half_exponent: i64) -> i64 {
        self.terms.get(&half_exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every exponent is a whole number.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Value at `x = 1`.
    pub fn value_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Coefficients `c_0, .., c_deg` of an ordinary polynomial, or `None`
    /// when some exponent is negative or fractional.
    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        if !self.has_integer_exponents() || self.terms.keys().any(|&e| e < 0) {
            return None;
        }
        let deg = self.terms.keys().last().map_or(0, |&e| e / 2);
        Some((0..=deg).map(|k| self.coefficient(2 * k)).collect())
    }
}

impl std::ops::Add for &HalfExpPoly {
    type Output = HalfExpPoly;

    fn add(self, rhs: &HalfExpPoly) -> HalfExpPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl std::ops::Mul for &HalfExpPoly {
    type Output = HalfExpPoly;

    fn mul(self, rhs: &HalfExpPoly) -> HalfExpPoly {
        let mut out = HalfExpPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for HalfExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let sep = if i > 0 { " " } else { "" };
            let mag = c.abs();
            let exp = if e % 2 == 0 {
                format!("{}", e / 2)
            } else {
                format!("{e}/2")
            };
            let body = match (e, mag) {
                (0, m) => format!("{m}"),
                (2, 1) => "x".to_string(),
                (2, m) => format!("{m}x"),
                (_, 1) => format!("x^{exp}"),
                (_, m) => format!("{m}x^{exp}"),
            };
            write!(f, "{sep}{sign}{}{body}", if i > 0 { " " } else { "" })?;
        }
        Ok(())
    }
}

/// Serialized as a list of `[half_exponent, coefficient]` pairs.
impl Serialize for HalfExpPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(e, c)| [e, c]))
    }
}

/// `sum_{T in S} x^{d(B,T)}`.
pub fn distance_enumerator<'a, I>(base: &Tope, topes: I) -> Result<HalfExpPoly>
where
    I: IntoIterator<Item = &'a Tope>,
{
    let mut counts = vec![0i64; 2 * base.len() + 1];
    for tope in topes {
        counts[2 * base.distance(tope)?] += 1;
    }
    Ok(HalfExpPoly::from_counts(&counts))
}

/// Picks one tope from each antipodal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Halfspace {
    /// Topes positive on the given 1-based element.
    PositiveOn(usize),
    /// An explicit list, such as `t` consecutive vertices of a symmetric cycle.
    Explicit(Vec<Tope>),
}

impl Halfspace {
    /// Resolves the selector against `topes`, checking that exactly one
    /// member of each antipodal pair is chosen.
    pub fn select(&self, topes: &[Tope]) -> Result<Vec<Tope>> {
        let t = topes.first().ok_or(Error::EmptyInput)?.len();
        let all: HashSet<&Tope> = topes.iter().collect();
        if topes.iter().any(|x| !all.contains(&x.negate())) {
            return Err(Error::NotNegationClosed);
        }
        let chosen: Vec<Tope> = match self {
            Halfspace::PositiveOn(e) => {
                if *e == 0 || *e > t {
                    return Err(Error::BadSelector(format!("element {e} outside 1..={t}")));
                }
                topes
                    .iter()
                    .filter(|x| x.sign(e - 1) > 0)
                    .cloned()
                    .collect()
            }
            Halfspace::Explicit(list) => {
                if let Some(x) = list.iter().find(|x| !all.contains(x)) {
                    return Err(Error::BadSelector(format!("{x} is not in the set")));
                }
                list.clone()
            }
        };
        let picked: HashSet<&Tope> = chosen.iter().collect();
        if picked.len() != chosen.len() {
            return Err(Error::BadSelector("a tope is selected twice".into()));
        }
        for x in topes {
            let both = picked.contains(x) && picked.contains(&x.negate());
            let neither = !picked.contains(x) && !picked.contains(&x.negate());
            if both || neither {
                return Err(Error::BadSelector(format!(
                    "{} of {x} and {} selected",
                    if both { "both" } else { "neither" },
                    x.negate()
                )));
            }
        }
        Ok(chosen)
    }
}

/// `x^{t/2} sum_{T in S.} (x^{-<B,T>/2} + x^{<B,T>/2})` for the halfspace
/// `S.` of `topes` picked by `selector`.
pub fn halfspace_form(base: &Tope, topes: &[Tope], selector: &Halfspace) -> Result<HalfExpPoly> {
    halfspace_sum(base, &selector.select(topes)?)
}

/// The halfspace sum over an already selected halfspace.
pub fn halfspace_sum(base: &Tope, chosen: &[Tope]) -> Result<HalfExpPoly> {
    let t = base.len() as i64;
    let mut counts = vec![0i64; 2 * base.len() + 1];
    for tope in chosen {
        check_len(base.len(), tope.len())?;
        let ip = base.inner_product(tope)?;
        counts[(t - ip) as usize] += 1;
        counts[(t + ip) as usize] += 1;
    }
    Ok(HalfExpPoly::from_counts(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::SymmetricCycle;
    use crate::tope_set::TopeSet;

    fn tp(s: &str) -> Tope {
        s.parse().unwrap()
    }

    fn hexagon() -> SymmetricCycle {
        SymmetricCycle::from_vertices(
            ["-++", "-+-", "++-", "+--", "+-+", "--+"]
                .iter()
                .map(|s| tp(s))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn square_enumerator() {
        let sq = TopeSet::hypercube(2);
        let p = distance_enumerator(&tp("++"), sq.iter()).unwrap();
        assert_eq!(p.integer_coefficients(), Some(vec![1, 2, 1]));
        assert_eq!(p.value_at_one(), 4);
        let p = distance_enumerator(&tp("++"), [tp("++")].iter()).unwrap();
        assert_eq!(p, HalfExpPoly::monomial(0, 1));
    }

    #[test]
    fn hexagon_enumerator() {
        let p = distance_enumerator(&tp("+++"), hexagon().vertices()).unwrap();
        assert_eq!(p.integer_coefficients(), Some(vec![0, 3, 3]));
        assert_eq!(p.to_string(), "3x + 3x^2");
    }

    #[test]
    fn halfspace_examples() {
        let sq = TopeSet::hypercube(2);
        let p = halfspace_form(&tp("++"), sq.topes(), &Halfspace::PositiveOn(1)).unwrap();
        assert_eq!(p.integer_coefficients(), Some(vec![1, 2, 1]));

        let square =
            SymmetricCycle::from_vertices(vec![tp("++"), tp("-+"), tp("--"), tp("+-")]).unwrap();
        let window = Halfspace::Explicit(square.vertices()[..2].to_vec());
        let p = halfspace_form(&tp("++"), square.vertices(), &window).unwrap();
        assert_eq!(p.integer_coefficients(), Some(vec![1, 2, 1]));

        let hex = hexagon();
        let window = Halfspace::Explicit(hex.vertices()[..3].to_vec());
        let p = halfspace_form(&tp("+++"), hex.vertices(), &window).unwrap();
        assert_eq!(p, distance_enumerator(&tp("+++"), hex.vertices()).unwrap());
    }

    #[test]
    fn selector_errors() {
        let sq = TopeSet::hypercube(2);
        let both = Halfspace::Explicit(vec![tp("++"), tp("--"), tp("+-")]);
        assert!(matches!(
            halfspace_form(&tp("++"), sq.topes(), &both),
            Err(Error::BadSelector(_))
        ));
        let neither = Halfspace::Explicit(vec![tp("++")]);
        assert!(matches!(
            halfspace_form(&tp("++"), sq.topes(), &neither),
            Err(Error::BadSelector(_))
        ));
        assert!(matches!(
            halfspace_form(&tp("++"), sq.topes(), &Halfspace::PositiveOn(3)),
            Err(Error::BadSelector(_))
        ));
        let open = [tp("++"), tp("+-")];
        assert_eq!(
            halfspace_form(&tp("++"), &open, &Halfspace::PositiveOn(1)),
            Err(Error::NotNegationClosed)
        );
    }

    #[test]
    fn polynomial_arithmetic_and_export() {
        let a = HalfExpPoly::monomial(1, 2);
        let b = HalfExpPoly::monomial(-1, 3);
        assert_eq!(&a * &b, HalfExpPoly::monomial(0, 6));
        let c = &a + &HalfExpPoly::monomial(1, -2);
        assert!(c.is_zero());
        assert!(!a.has_integer_exponents());
        assert_eq!(a.to_string(), "2x^1/2");
        let json =
            serde_json::to_string(&(&HalfExpPoly::monomial(0, 1) + &HalfExpPoly::monomial(2, 2)))
                .unwrap();
        assert_eq!(json, "[[0,1],[2,2]]");
    }
}
