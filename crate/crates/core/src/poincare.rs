//! Exact integer polynomials and the Poincaré polynomials of compact
//! symmetric spaces `G_U/K` built from fundamental degrees.
//!
//! For degrees `p_1..p_l` of `G_U` and `q_1..q_m` of `K`, an assignment of the
//! `p`'s to positions gives
//!
//! ```text
//! P(t) = ∏_{j>m} (1 + t^(2p_j - 1)) · ∏_{i≤m} (1 - t^(2p_i)) / (1 - t^(2q_i))
//! ```
//!
//! and only assignments for which the quotient is a polynomial are kept.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense polynomial in `t` with integer coefficients; index is the degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial {
            coefficients: vec![BigInt::one()],
        }
    }

    pub fn new(coefficients: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coefficients };
        p.trim();
        p
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + sign·t^k`
    pub fn binomial(k: usize, sign: i64) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] += sign;
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, d: usize) -> BigInt {
        self.coefficients.get(d).cloned().unwrap_or_default()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    /// Degrees carrying a negative coefficient.
    pub fn negative_degrees(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(i, _)| i)
            .collect()
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// Coefficients serialize as JSON integers, falling back to strings for
// values outside i64.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoefficient {
    Small(i64),
    Big(String),
}

/// Serde helpers for lists of big integers, using the same wire format as
/// polynomial coefficients.
pub mod wire {
    use super::WireCoefficient;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| match c.to_i64() {
            Some(x) => WireCoefficient::Small(x),
            None => WireCoefficient::Big(c.to_string()),
        }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<WireCoefficient>::deserialize(d)?
            .into_iter()
            .map(|w| match w {
                WireCoefficient::Small(x) => Ok(BigInt::from(x)),
                WireCoefficient::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        wire::serialize(&self.coefficients, serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(IntPolynomial::new(wire::deserialize(deserializer)?))
    }
}

/// Quotient of `numerator / denominator` if it is a polynomial with integer
/// coefficients, `None` otherwise.
pub fn exact_divide(
    numerator: &IntPolynomial,
    denominator: &IntPolynomial,
) -> Result<Option<IntPolynomial>> {
    let Some(dd) = denominator.degree() else {
        return Err(Error::ZeroDivisor);
    };
    let Some(nd) = numerator.degree() else {
        return Ok(Some(IntPolynomial::zero()));
    };
    if nd < dd {
        return Ok(None);
    }
    let lead = &denominator.coefficients[dd];
    let mut rem = numerator.coefficients.clone();
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let top = &rem[k + dd];
        if top.is_zero() {
            continue;
        }
        if !(top % lead).is_zero() {
            return Ok(None);
        }
        let c = top / lead;
        for (j, dc) in denominator.coefficients.iter().enumerate() {
            if !dc.is_zero() {
                rem[k + j] -= &c * dc;
            }
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Ok(None);
    }
    Ok(Some(IntPolynomial::new(quot)))
}

/// Fundamental degrees of `G_U` (`p`, length `l`) and of `K` (`q`, length `m`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeData {
    pub big_degrees: Vec<u32>,
    pub compact_degrees: Vec<u32>,
}

impl DegreeData {
    pub fn new(big_degrees: Vec<u32>, compact_degrees: Vec<u32>) -> Result<Self> {
        if compact_degrees.len() > big_degrees.len() {
            return Err(Error::SizeMismatch(format!(
                "{} compact degrees exceed {} ambient degrees",
                compact_degrees.len(),
                big_degrees.len()
            )));
        }
        if big_degrees.iter().chain(&compact_degrees).any(|&p| p < 2) {
            return Err(Error::Input("fundamental degrees are at least 2".into()));
        }
        Ok(DegreeData {
            big_degrees,
            compact_degrees,
        })
    }

    /// Degree of every candidate polynomial: `2Σp - 2Σq - (l - m)`, i.e. `dim G_U/K`.
    pub fn expected_degree(&self) -> usize {
        let sp: u32 = self.big_degrees.iter().sum();
        let sq: u32 = self.compact_degrees.iter().sum();
        (2 * sp - 2 * sq) as usize - (self.big_degrees.len() - self.compact_degrees.len())
    }
}

/// Evaluates the closed form for one ordering of the ambient degrees: the
/// first `q.len()` entries of `assignment` are paired with `q`.
pub fn formula_one(assignment: &[u32], q: &[u32]) -> Result<Option<IntPolynomial>> {
    if q.len() > assignment.len() {
        return Err(Error::SizeMismatch(format!(
            "{} compact degrees against an assignment of length {}",
            q.len(),
            assignment.len()
        )));
    }
    let m = q.len();
    let mut numerator = IntPolynomial::one();
    for &p in &assignment[m..] {
        numerator = &numerator * &IntPolynomial::binomial(2 * p as usize - 1, 1);
    }
    for &p in &assignment[..m] {
        numerator = &numerator * &IntPolynomial::binomial(2 * p as usize, -1);
    }
    let mut denominator = IntPolynomial::one();
    for &qi in q {
        denominator = &denominator * &IntPolynomial::binomial(2 * qi as usize, -1);
    }
    exact_divide(&numerator, &denominator)
}

/// All polynomials produced by the closed form over every ordering of the
/// ambient degrees.
///
/// Orderings are enumerated as injective maps from the `m` compact positions
/// into the `l` ambient degrees (`l!/(l-m)!` of them); the order of the
/// unpaired tail never changes the product. The value of the formula depends
/// only on the multiset of paired ambient degrees, so each distinct multiset
/// is evaluated once.
pub fn candidate_polynomials(dd: &DegreeData) -> Result<BTreeSet<IntPolynomial>> {
    let l = dd.big_degrees.len();
    let m = dd.compact_degrees.len();
    let mut memo: HashMap<Vec<u32>, Option<IntPolynomial>> = HashMap::new();
    for image in (0..l).permutations(m) {
        let mut key: Vec<u32> = image.iter().map(|&i| dd.big_degrees[i]).collect();
        key.sort_unstable();
        if memo.contains_key(&key) {
            continue;
        }
        let mut assignment: Vec<u32> = image.iter().map(|&i| dd.big_degrees[i]).collect();
        assignment.extend(
            (0..l)
                .filter(|i| !image.contains(i))
                .map(|i| dd.big_degrees[i]),
        );
        let value = formula_one(&assignment, &dd.compact_degrees)?;
        memo.insert(key, value);
    }
    Ok(memo.into_values().flatten().collect())
}

pub fn coefficient(p: &IntPolynomial, d: usize) -> BigInt {
    p.coefficient(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn one_minus(k: usize) -> IntPolynomial {
        IntPolynomial::binomial(k, -1)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(poly(&[1, 0, 0]), poly(&[1]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0]).degree(), None);
    }

    #[test]
    fn geometric_division() {
        let q = exact_divide(&one_minus(10), &one_minus(2)).unwrap();
        assert_eq!(q, Some(poly(&[1, 0, 1, 0, 1, 0, 1, 0, 1])));
        assert_eq!(
            exact_divide(&one_minus(4), &one_minus(4)).unwrap(),
            Some(poly(&[1]))
        );
        assert_eq!(exact_divide(&one_minus(6), &one_minus(4)).unwrap(), None);
    }

    #[test]
    fn non_integral_quotient_is_rejected() {
        // (2t + 2) / (2t + 1) is not a polynomial; (1 + t) / (2) isn't integral
        assert_eq!(exact_divide(&poly(&[2, 2]), &poly(&[1, 2])).unwrap(), None);
        assert_eq!(exact_divide(&poly(&[1, 1]), &poly(&[2])).unwrap(), None);
        assert_eq!(
            exact_divide(&poly(&[2, 4]), &poly(&[2])).unwrap(),
            Some(poly(&[1, 2]))
        );
    }

    #[test]
    fn zero_divisor_errors() {
        assert!(matches!(
            exact_divide(&poly(&[1]), &IntPolynomial::zero()),
            Err(Error::ZeroDivisor)
        ));
        assert_eq!(
            exact_divide(&IntPolynomial::zero(), &poly(&[1, 1])).unwrap(),
            Some(IntPolynomial::zero())
        );
    }

    #[test]
    fn formula_g2() {
        let p = formula_one(&[2, 6], &[2, 2]).unwrap().unwrap();
        assert_eq!(p, poly(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        // other ordering: (1-t^12)(1-t^4)/((1-t^4)(1-t^4)) is the same product
        assert_eq!(formula_one(&[6, 2], &[2, 2]).unwrap().unwrap(), p);
    }

    #[test]
    fn formula_identical_lists_is_one() {
        let p = [2, 4, 6, 8];
        assert_eq!(formula_one(&p, &p).unwrap(), Some(IntPolynomial::one()));
    }

    #[test]
    fn formula_e6_over_c4() {
        let got = formula_one(&[2, 6, 8, 12, 5, 9], &[2, 4, 6, 8])
            .unwrap()
            .unwrap();
        assert_eq!(got.degree(), Some(42));
        // (1+t^9)(1+t^17)(1+t^8+t^16)
        let expected = &(&IntPolynomial::binomial(9, 1) * &IntPolynomial::binomial(17, 1))
            * &poly(&[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(got, expected);
    }

    #[test]
    fn formula_size_mismatch() {
        assert!(matches!(
            formula_one(&[2], &[2, 2]),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn candidates_small_cases() {
        let g2 = DegreeData::new(vec![2, 6], vec![2, 2]).unwrap();
        let set = candidate_polynomials(&g2).unwrap();
        assert_eq!(
            set.into_iter().collect::<Vec<_>>(),
            vec![poly(&[1, 0, 0, 0, 1, 0, 0, 0, 1])]
        );

        let a1 = DegreeData::new(vec![2], vec![2]).unwrap();
        let set = candidate_polynomials(&a1).unwrap();
        assert_eq!(
            set.into_iter().collect::<Vec<_>>(),
            vec![IntPolynomial::one()]
        );
    }

    #[test]
    fn candidates_e6_over_c4() {
        let dd = DegreeData::new(vec![2, 5, 6, 8, 9, 12], vec![2, 4, 6, 8]).unwrap();
        let set = candidate_polynomials(&dd).unwrap();
        assert!(!set.is_empty());
        for p in &set {
            assert_eq!(p.degree(), Some(42));
            assert_eq!(p.coefficient(1), BigInt::zero());
            assert_eq!(p.coefficient(2), BigInt::zero());
        }
    }

    #[test]
    fn degree_data_validation() {
        assert!(DegreeData::new(vec![2], vec![2, 3]).is_err());
        assert!(DegreeData::new(vec![1, 2], vec![2]).is_err());
        assert_eq!(
            DegreeData::new(vec![2, 6], vec![2, 2])
                .unwrap()
                .expected_degree(),
            8
        );
    }

    #[test]
    fn coefficient_lookup() {
        let p = poly(&[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(coefficient(&p, 2), BigInt::zero());
        assert_eq!(coefficient(&p, 4), BigInt::one());
        assert_eq!(coefficient(&IntPolynomial::zero(), 7), BigInt::zero());
        assert_eq!(coefficient(&p, 100), BigInt::zero());
    }

    #[test]
    fn display_and_negatives() {
        let p = poly(&[1, -2, 0, 1]);
        assert_eq!(p.to_string(), "1 - 2t + t^3");
        assert_eq!(p.negative_degrees(), vec![1]);
    }

    #[test]
    fn json_roundtrip_keeps_big_coefficients() {
        let big: BigInt = BigInt::from(i64::MAX) * 4;
        let p = IntPolynomial::new(vec![BigInt::one(), big]);
        let s = serde_json::to_string(&p).unwrap();
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&poly(&[1, 0, 1])).unwrap(), "[1,0,1]");
    }

    proptest! {
        #[test]
        fn division_roundtrip(
            a in prop::collection::vec(-20i64..20, 0..8),
            b in prop::collection::vec(-20i64..20, 1..6),
        ) {
            let a = poly(&a);
            let b = poly(&b);
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(exact_divide(&prod, &b).unwrap(), Some(a));
        }

        #[test]
        fn candidates_are_palindromic_with_unit_constant(
            big in prop::collection::vec(2u32..9, 1..5),
            take in 0usize..5,
        ) {
            let m = take.min(big.len());
            let mut q = big.clone();
            q.sort_unstable();
            q.truncate(m);
            let dd = DegreeData::new(big, q).unwrap();
            for p in candidate_polynomials(&dd).unwrap() {
                prop_assert!(p.is_palindromic());
                prop_assert_eq!(p.coefficient(0), BigInt::one());
                prop_assert_eq!(p.degree(), Some(dd.expected_degree()));
            }
        }
    }
}
