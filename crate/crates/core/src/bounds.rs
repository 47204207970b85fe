//! Exact evaluation of the necessary conditions for `K_{m,n}` to lie in
//! `B_k` or `B_k^m`, and a catalog of known membership facts.
//!
//! Every inequality is reported as `lhs <= rhs`; a violated inequality is a
//! certificate of non-membership.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("no closed form for m = {0}")]
    UnsupportedM(u64),
}

fn q(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// One inequality `lhs <= rhs` evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub name: String,
    pub m: u64,
    pub n: u64,
    pub k: u64,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
    pub violated: bool,
}

impl BoundVerdict {
    fn new(name: &str, m: u64, n: u64, k: u64, lhs: BigRational, rhs: BigRational) -> Self {
        let violated = lhs > rhs;
        Self { name: name.to_owned(), m, n, k, lhs, rhs, violated }
    }
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(m={}, n={}, k={}): {} {} {} -> {}",
            self.name,
            self.m,
            self.n,
            self.k,
            self.lhs,
            if self.violated { ">" } else { "<=" },
            self.rhs,
            if self.violated { "violated" } else { "holds" }
        )
    }
}

fn check_mn(m: u64, n: u64) -> Result<(), BoundError> {
    if m < 3 || m > n {
        return Err(BoundError::Range(format!("need 3 <= m <= n, got m={m}, n={n}")));
    }
    Ok(())
}

fn floor_ceil_half(x: u64) -> (u64, u64) {
    (x / 2, x.div_ceil(2))
}

/// `(k+1)(m+n) >= mn + sqrt(2k(m+n))` for `B_k`, squared with a sign guard:
/// with `d = (k+1)(m+n) - mn` the verdict compares `2k(m+n)` against `d·|d|`.
pub fn lbl1(m: u64, n: u64, k: u64) -> Result<BoundVerdict, BoundError> {
    check_mn(m, n)?;
    let s = q(m + n);
    let d = q(k + 1) * &s - q(m * n);
    let lhs = q(2 * k) * s;
    let rhs = d.abs() * d;
    Ok(BoundVerdict::new("lbl1", m, n, k, lhs, rhs))
}

/// `n(2m - k - 2) <= 2c + 2(k+1)m`, given the crossing count `c` of the
/// m-side paths.
pub fn lbl_crossings(m: u64, n: u64, k: u64, c: u64) -> Result<BoundVerdict, BoundError> {
    check_mn(m, n)?;
    let lhs = q(n) * (q(2 * m) - q(k) - q(2));
    let rhs = q(2 * c) + q(2 * (k + 1) * m);
    Ok(BoundVerdict::new("lbl_crossings", m, n, k, lhs, rhs))
}

/// `n(m - ceil((k+1)/2)) <= a + 2c + p` over the m-side paths.
pub fn acp_lower(m: u64, n: u64, k: u64, a: u64, c: u64, p: u64) -> Result<BoundVerdict, BoundError> {
    check_mn(m, n)?;
    let (_, ce) = floor_ceil_half(k + 1);
    let lhs = q(n) * (q(m) - q(ce));
    let rhs = q(a) + q(2 * c) + q(p);
    Ok(BoundVerdict::new("acp_lower", m, n, k, lhs, rhs))
}

/// `n(2m - k - 2) <= k(m-1)m + m²/2 + 2(k+1)m` for `B_k^m`.
pub fn mlbl(m: u64, n: u64, k: u64) -> Result<BoundVerdict, BoundError> {
    check_mn(m, n)?;
    let lhs = q(n) * (q(2 * m) - q(k) - q(2));
    let rhs = q(k * (m - 1) * m) + q(m * m) * frac(1, 2) + q(2 * (k + 1) * m);
    Ok(BoundVerdict::new("mlbl", m, n, k, lhs, rhs))
}

/// `n(m - ⌈(k+1)/2⌉) <= C(m,2)(2⌊(k+1)/2⌋⌈(k+1)/2⌉ + k) + m²/4 (1 + (⌈⌉-⌊⌋)²)`
/// for `B_k^m`.
pub fn mlbl2(m: u64, n: u64, k: u64) -> Result<BoundVerdict, BoundError> {
    check_mn(m, n)?;
    let (fl, ce) = floor_ceil_half(k + 1);
    let lhs = q(n) * (q(m) - q(ce));
    let pairs = q(m * (m - 1) / 2);
    let rhs = pairs * q(2 * fl * ce + k) + q(m * m) * frac(1, 4) * q(1 + (ce - fl) * (ce - fl));
    Ok(BoundVerdict::new("mlbl2", m, n, k, lhs, rhs))
}

/// `2m³ - m²/2 - m + 1`: from this `n` on, `K_{m,n}` is not in `B_{2m-3}^m`.
pub fn threshold_b2m3(m: u64) -> Result<BigRational, BoundError> {
    if m < 3 {
        return Err(BoundError::Range(format!("need m >= 3, got {m}")));
    }
    Ok(q(2 * m * m * m) - q(m * m) * frac(1, 2) - q(m) + q(1))
}

/// The `n` for which `K_{m,n}` is in `B_{m-1}` but not in `B_{m-2}`; defined
/// for even `m >= 4` and odd `m >= 7`.
pub fn heldt_n(m: u64) -> Result<u64, BoundError> {
    let v = if m >= 4 && m.is_multiple_of(2) {
        q(m * m * m) * frac(1, 4) - q(m * m) * frac(1, 2) - q(m) + q(4)
    } else if m >= 7 {
        q(m * m * m) * frac(1, 4) - q(m * m) + q(3 * m) * frac(1, 4)
    } else {
        return Err(BoundError::UnsupportedM(m));
    };
    debug_assert!(v.is_integer());
    Ok(v.to_integer().try_into().expect("small positive integer"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownStatus {
    pub in_class: Membership,
    pub reason: String,
}

impl KnownStatus {
    fn yes(reason: impl Into<String>) -> Self {
        Self { in_class: Membership::Yes, reason: reason.into() }
    }
    fn no(reason: impl Into<String>) -> Self {
        Self { in_class: Membership::No, reason: reason.into() }
    }
}

fn b_k2n(n: u64) -> u64 {
    if n <= 4 {
        1
    } else {
        2
    }
}

/// Decides `K_{m,n} ∈ B_k` (or `B_k^m` when `monotonic`) when a known rule
/// or a violated inequality settles it.
pub fn verdict(m: u64, n: u64, k: u64, monotonic: bool) -> Result<KnownStatus, BoundError> {
    if m > n {
        return Err(BoundError::Range(format!("need m <= n, got m={m}, n={n}")));
    }
    if m <= 1 {
        return Ok(KnownStatus::yes(format!("star: K_{{{m},{n}}} is in B_0^m")));
    }
    if m == 2 {
        let b = b_k2n(n);
        let rule = format!("K_{{2,n}} table: b(K_{{2,{n}}}) = b^m(K_{{2,{n}}}) = {b}");
        return Ok(if k >= b { KnownStatus::yes(rule) } else { KnownStatus::no(rule) });
    }
    if k >= 2 * m - 2 {
        return Ok(KnownStatus::yes(format!("staircase: K_{{m,n}} is in B_{}^m", 2 * m - 2)));
    }

    let l = lbl1(m, n, k)?;
    if l.violated {
        return Ok(KnownStatus::no(l.to_string()));
    }
    let hkn_no = q(m.pow(4)) - q(2 * m.pow(3)) + q(5 * m * m) - q(4 * m) + q(1);
    if q(n) >= hkn_no {
        return Ok(KnownStatus::no(format!(
            "b(K_{{m,n}}) = 2m-2 for n >= m^4 - 2m^3 + 5m^2 - 4m + 1 = {hkn_no}"
        )));
    }
    if monotonic {
        for v in [mlbl(m, n, k)?, mlbl2(m, n, k)?] {
            if v.violated {
                return Ok(KnownStatus::no(v.to_string()));
            }
        }
    } else {
        if let Ok(h) = heldt_n(m) {
            if n <= h && k + 1 >= m {
                return Ok(KnownStatus::yes(format!(
                    "B_(m-1) construction: K_{{{m},{h}}} is in B_{}",
                    m - 1
                )));
            }
        }
        if m == 5 && n <= 10 && k >= 4 {
            return Ok(KnownStatus::yes("B_(m-1) construction: K_{5,10} is in B_4"));
        }
        let cap = q(m.pow(4)) - q(2 * m.pow(3)) + q(5 * m * m) * frac(1, 2) - q(2 * m) - q(4);
        if k + 3 >= 2 * m && q(n) <= cap {
            return Ok(KnownStatus::yes(format!(
                "K_{{m,n}} is in B_{} for n <= m^4 - 2m^3 + 5m^2/2 - 2m - 4 = {cap}",
                2 * m - 3
            )));
        }
    }
    Ok(KnownStatus {
        in_class: Membership::Unknown,
        reason: "no catalog rule or inequality applies".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn is_int(x: &BigRational, v: i64) -> bool {
        *x == BigRational::from_integer(v.into())
    }

    #[test]
    fn lbl1_examples() {
        let v = lbl1(4, 6, 2).unwrap();
        assert!(v.violated);
        assert!(is_int(&v.lhs, 40) && is_int(&v.rhs, 36));
        assert!(lbl1(5, 11, 3).unwrap().violated);
        let h = lbl1(3, 3, 2).unwrap();
        assert!(!h.violated);
        assert!(is_int(&h.rhs, 81));
        assert!(lbl1(2, 3, 0).is_err());
        assert!(lbl1(4, 3, 0).is_err());
    }

    #[test]
    fn lbl1_negative_d() {
        // d = 1·20 - 100 < 0
        let v = lbl1(10, 10, 0).unwrap();
        assert!(v.violated);
        assert!(v.rhs < BigRational::zero());
    }

    #[test]
    fn crossing_and_acp_examples() {
        let v = lbl_crossings(3, 10, 1, 0).unwrap();
        assert!(v.violated && is_int(&v.lhs, 30) && is_int(&v.rhs, 12));
        assert!(!lbl_crossings(3, 3, 4, 0).unwrap().violated);
        let w = lbl_crossings(4, 8, 2, 12).unwrap();
        assert!(!w.violated && is_int(&w.lhs, 32) && is_int(&w.rhs, 48));

        let a = acp_lower(3, 4, 1, 0, 0, 0).unwrap();
        assert!(a.violated && is_int(&a.lhs, 8));
        assert!(!acp_lower(3, 4, 5, 0, 0, 0).unwrap().violated);
    }

    #[test]
    fn monotone_bound_examples() {
        let v = mlbl(4, 156, 5).unwrap();
        assert!(v.violated && is_int(&v.lhs, 156) && is_int(&v.rhs, 116));
        let w = mlbl(4, 49, 4).unwrap();
        assert!(w.violated && is_int(&w.lhs, 98) && is_int(&w.rhs, 96));
        let h = mlbl(3, 36, 3).unwrap();
        assert!(!h.violated);
        assert_eq!(h.rhs.to_string(), "93/2");

        let v2 = mlbl2(3, 36, 3).unwrap();
        assert!(v2.violated);
        assert_eq!((v2.lhs.to_string(), v2.rhs.to_string()), ("36".into(), "141/4".into()));
        assert!(!mlbl2(3, 35, 3).unwrap().violated);
        assert!(!mlbl2(4, 1000, 7).unwrap().violated);
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold_b2m3(3).unwrap(), frac(95, 2));
        assert_eq!(threshold_b2m3(4).unwrap(), frac(117, 1));
        assert!(threshold_b2m3(2).is_err());
        assert_eq!(heldt_n(4), Ok(8));
        assert_eq!(heldt_n(6), Ok(34));
        assert_eq!(heldt_n(7), Ok(42));
        assert_eq!(heldt_n(5), Err(BoundError::UnsupportedM(5)));
        assert_eq!(heldt_n(3), Err(BoundError::UnsupportedM(3)));
    }

    #[test]
    fn serializes_fractions() {
        let s = serde_json::to_value(mlbl2(3, 36, 3).unwrap()).unwrap();
        assert_eq!(s["lhs"], "36");
        assert_eq!(s["rhs"], "141/4");
        assert_eq!(s["violated"], true);
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(verdict(2, 5, 1, false).unwrap().in_class, Membership::No);
        assert_eq!(verdict(2, 4, 1, true).unwrap().in_class, Membership::Yes);
        let v = verdict(3, 36, 3, true).unwrap();
        assert_eq!(v.in_class, Membership::No);
        assert!(v.reason.starts_with("mlbl2"));
        assert_eq!(verdict(3, 36, 4, true).unwrap().in_class, Membership::Yes);
        assert_eq!(verdict(1, 9, 0, true).unwrap().in_class, Membership::Yes);
        assert_eq!(verdict(5, 10, 3, false).unwrap().in_class, Membership::Unknown);
        assert_eq!(verdict(5, 10, 4, false).unwrap().in_class, Membership::Yes);
        assert_eq!(verdict(5, 10, 2, false).unwrap().in_class, Membership::No);
        assert_eq!(verdict(4, 156, 5, false).unwrap().in_class, Membership::Yes);
        assert_eq!(verdict(4, 156, 5, true).unwrap().in_class, Membership::No);
        assert!(verdict(4, 3, 1, true).is_err());
    }
}
