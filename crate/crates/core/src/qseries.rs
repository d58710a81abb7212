//! Truncated formal q-expansions over `Rational`: Eisenstein series, Δ, the
//! Miller basis of level-one cusp forms, eigenforms in one-dimensional
//! weights, and the two binary-quadratic theta series.
//!
//! Products are schoolbook and truncate to the minimum operand precision;
//! at the precisions this crate uses (a few thousand coefficients at most)
//! nothing faster is warranted.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::bernoulli::bernoulli_number;
use crate::exact::Rational;
use crate::{Error, Result};

/// Formal power series in q truncated to `precision` coefficients
/// (q^0 .. q^{precision-1}). Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a QSeries stores at least q^0");
        QSeries { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        QSeries::from_coeffs(vec![Rational::zero(); precision.max(1)])
    }

    pub fn one(precision: usize) -> Self {
        let mut s = QSeries::zero(precision);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of q^n. Reading beyond the stored precision is a bug in
    /// the caller, hence a panic rather than a silent zero.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_cusp_form_shape(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn truncate(&self, precision: usize) -> QSeries {
        QSeries::from_coeffs(self.coeffs[..precision.min(self.coeffs.len())].to_vec())
    }

    /// Truncated Cauchy product at precision min(|a|, |b|).
    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += &(a * b);
            }
        }
        QSeries::from_coeffs(out)
    }

    pub fn add(&self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries::from_coeffs(
            (0..n)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries::from_coeffs(
            (0..n)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut acc = QSeries::one(self.precision());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.coeffs.iter().take(8).map(|c| c.to_string());
        write!(
            f,
            "QSeries[{}{}; N={}]",
            shown.collect::<Vec<_>>().join(", "),
            if self.precision() > 8 { ", ..." } else { "" },
            self.precision()
        )
    }
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QSeries", 2)?;
        st.serialize_field("precision", &self.precision())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            precision: usize,
            coeffs: Vec<Rational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.precision != raw.coeffs.len() || raw.coeffs.is_empty() {
            return Err(de::Error::custom("precision does not match coefficient count"));
        }
        Ok(QSeries::from_coeffs(raw.coeffs))
    }
}

/// σ_e(n) = Σ_{d|n} d^e, exactly.
pub fn sigma_power(e: u32, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument {
            value: 0,
            reason: "sigma_power needs n >= 1",
        });
    }
    let mut sum = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            sum += BigInt::from(d).pow(e);
            let q = n / d;
            if q != d {
                sum += BigInt::from(q).pow(e);
            }
        }
        d += 1;
    }
    Ok(sum)
}

/// Normalized Eisenstein series
/// E_k = 1 + (2/ζ(1-k)) Σ_{n≥1} σ_{k-1}(n) q^n, with ζ(1-k) = -B_k/k.
pub fn eisenstein_qexp(k: u32, precision: usize) -> Result<QSeries> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "Eisenstein series need even k >= 4",
        });
    }
    // 2/zeta(1-k) = -2k/B_k
    let factor = Rational::from_integer(-2 * k as i64).div(&bernoulli_number(k))?;
    let mut coeffs = Vec::with_capacity(precision.max(1));
    coeffs.push(Rational::one());
    for n in 1..precision as u64 {
        coeffs.push(&factor * Rational::from_bigint(sigma_power(k - 1, n)?));
    }
    Ok(QSeries::from_coeffs(coeffs))
}

/// Coefficients of Π_{n≥1}(1-q^n) by the pentagonal number theorem, as the
/// sparse list of (exponent, ±1) pairs below `precision`.
fn pentagonal_terms(precision: usize) -> Vec<(usize, i64)> {
    let mut terms = vec![(0usize, 1i64)];
    let mut j = 1i64;
    loop {
        let p1 = (j * (3 * j - 1) / 2) as usize;
        let p2 = (j * (3 * j + 1) / 2) as usize;
        if p1 >= precision && p2 >= precision {
            break;
        }
        let s = if j % 2 == 0 { 1 } else { -1 };
        if p1 < precision {
            terms.push((p1, s));
        }
        if p2 < precision {
            terms.push((p2, s));
        }
        j += 1;
    }
    terms.sort_unstable();
    terms
}

/// Δ = q Π_{n≥1} (1-q^n)^24. Integer coefficients (the Ramanujan τ values),
/// computed over BigInt and wrapped at the end.
pub fn delta_qexp(precision: usize) -> Result<QSeries> {
    if precision < 2 {
        return Err(Error::InsufficientPrecision {
            need: 2,
            have: precision,
        });
    }
    let n = precision - 1; // coefficients of eta^24 below q^n
    let pent = pentagonal_terms(n);
    let mut acc = vec![BigInt::zero(); n];
    acc[0] = BigInt::one();
    for _ in 0..24 {
        let mut next = vec![BigInt::zero(); n];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(p, s) in &pent {
                if i + p >= n {
                    break;
                }
                if s > 0 {
                    next[i + p] += a;
                } else {
                    next[i + p] -= a;
                }
            }
        }
        acc = next;
    }
    let mut coeffs = Vec::with_capacity(precision);
    coeffs.push(Rational::zero());
    coeffs.extend(acc.into_iter().map(Rational::from_bigint));
    Ok(QSeries::from_coeffs(coeffs))
}

/// dim S_k(SL_2(Z)) for even k (0 for odd or small k).
pub fn dim_cusp_forms(k: u32) -> usize {
    if k % 2 != 0 || k < 12 {
        return 0;
    }
    let d = (k / 12) as usize;
    if k % 12 == 2 {
        d - 1
    } else {
        d
    }
}

/// Echelonized (Miller) basis of S_k(SL_2(Z)) from monomials Δ^i E_4^a E_6^b:
/// element i (0-based) has q^{i+1}-coefficient 1 and q^{j+1}-coefficient 0
/// for the other j < dim.
pub fn miller_basis(k: u32, precision: usize) -> Result<Vec<QSeries>> {
    if k % 2 != 0 || k < 12 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "Miller basis needs even k >= 12",
        });
    }
    let dim = dim_cusp_forms(k);
    if dim == 0 {
        return Ok(Vec::new());
    }
    if precision <= dim {
        return Err(Error::InsufficientPrecision {
            need: dim + 1,
            have: precision,
        });
    }
    let e4 = eisenstein_qexp(4, precision)?;
    let e6 = eisenstein_qexp(6, precision)?;
    let delta = delta_qexp(precision)?;

    let mut basis = Vec::with_capacity(dim);
    for i in 1..=dim as u32 {
        let w = k - 12 * i;
        let (a, b) = match w % 4 {
            0 => (w / 4, 0),
            2 => ((w - 6) / 4, 1),
            _ => unreachable!("w is even"),
        };
        let mut g = delta.pow(i).mul(&e4.pow(a));
        if b == 1 {
            g = g.mul(&e6);
        }
        debug_assert!(g.coeff(i as usize) == &Rational::one());
        basis.push(g);
    }
    // back-substitution: clear columns q^{i+1}..q^{dim} of each earlier row
    for i in (0..dim).rev() {
        for j in i + 1..dim {
            let c = basis[i].coeff(j + 1).clone();
            if !c.is_zero() {
                let scaled = basis[j].scale(&c);
                basis[i] = basis[i].sub(&scaled);
            }
        }
    }
    Ok(basis)
}

/// The unique normalized eigenform of weight k when dim S_k = 1, `None`
/// when there are no cusp forms, and a typed error when dim >= 2 (those
/// eigenforms have irrational coefficients).
pub fn eigenform(k: u32, precision: usize) -> Result<Option<QSeries>> {
    let dim = dim_cusp_forms(k);
    match dim {
        0 => Ok(None),
        1 => Ok(Some(miller_basis(k, precision)?.pop().expect("dim 1"))),
        _ => Err(Error::RequiresAlgebraicEigenvalues { k, dim }),
    }
}

/// Which binary quadratic form a theta series counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    /// m² + n² (discriminant -4)
    One,
    /// m² + mn + n² (discriminant -3)
    Two,
}

/// ϑ(z) = Σ_{(m,n) ∈ Z²} q^{Q(m,n)} by bounded lattice enumeration.
/// For Q = m²+mn+n², Q >= (m²+n²)/2, so |m|, |n| <= ceil(sqrt(2N)) suffices.
pub fn theta_qexp(which: ThetaKind, precision: usize) -> QSeries {
    let n = precision.max(1);
    let bound = match which {
        ThetaKind::One => (n as f64).sqrt().ceil() as i64,
        ThetaKind::Two => (2.0 * n as f64).sqrt().ceil() as i64,
    };
    let mut counts = vec![0u64; n];
    for a in -bound..=bound {
        for b in -bound..=bound {
            let q = match which {
                ThetaKind::One => a * a + b * b,
                ThetaKind::Two => a * a + a * b + b * b,
            };
            if (q as usize) < n {
                counts[q as usize] += 1;
            }
        }
    }
    QSeries::from_coeffs(
        counts
            .into_iter()
            .map(|c| Rational::from_integer(c as i64))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::kronecker_symbol;
    use num_integer::Integer;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn qs(vals: &[i64]) -> QSeries {
        QSeries::from_coeffs(vals.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    #[test]
    fn mul_truncates_and_has_identity() {
        let a = qs(&[1, 1, 0]); // 1 + q
        let b = qs(&[1, -1, 0]); // 1 - q
        assert_eq!(a.mul(&b), qs(&[1, 0, -1]));
        let e4 = eisenstein_qexp(4, 10).unwrap();
        assert_eq!(e4.mul(&QSeries::one(10)), e4);
        // min-precision truncation
        assert_eq!(qs(&[1, 2, 3, 4]).mul(&qs(&[1, 0])).precision(), 2);
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma_power(11, 1).unwrap(), BigInt::from(1));
        assert_eq!(sigma_power(11, 2).unwrap(), BigInt::from(2049));
        assert_eq!(sigma_power(3, 6).unwrap(), BigInt::from(252));
        assert!(sigma_power(3, 0).is_err());
    }

    #[test]
    fn eisenstein_leading_coefficients() {
        let e4 = eisenstein_qexp(4, 4).unwrap();
        assert_eq!(e4.coeff(0), &Rational::one());
        assert_eq!(e4.coeff(1), &r(240, 1));
        assert_eq!(e4.coeff(2), &r(2160, 1));
        let e12 = eisenstein_qexp(12, 2).unwrap();
        assert_eq!(e12.coeff(1), &r(65520, 691));
        assert!(eisenstein_qexp(5, 4).is_err());
        assert!(eisenstein_qexp(2, 4).is_err());
    }

    #[test]
    fn delta_first_tau_values() {
        let d = delta_qexp(8).unwrap();
        let expect = [0i64, 1, -24, 252, -1472, 4830, -6048, -16744];
        for (n, &t) in expect.iter().enumerate() {
            assert_eq!(d.coeff(n), &Rational::from_integer(t), "tau({n})");
        }
        assert!(delta_qexp(1).is_err());
    }

    #[test]
    fn delta_coefficients_are_integers_and_multiplicative() {
        let d = delta_qexp(51).unwrap();
        for n in 0..51 {
            assert!(d.coeff(n).is_integer());
        }
        for m in 2..=50u64 {
            for n in 2..=(50 / m) {
                if m.gcd(&n) == 1 {
                    let lhs = d.coeff((m * n) as usize);
                    let rhs = d.coeff(m as usize) * d.coeff(n as usize);
                    assert_eq!(lhs, &rhs, "tau({m}*{n})");
                }
            }
        }
    }

    #[test]
    fn classical_identities_to_50_terms() {
        let n = 50;
        let e4 = eisenstein_qexp(4, n).unwrap();
        let e6 = eisenstein_qexp(6, n).unwrap();
        let e8 = eisenstein_qexp(8, n).unwrap();
        let e10 = eisenstein_qexp(10, n).unwrap();
        let e14 = eisenstein_qexp(14, n).unwrap();
        let delta = delta_qexp(n).unwrap();

        assert_eq!(e4.mul(&e4), e8, "E4^2 = E8");
        assert_eq!(e4.mul(&e6), e10, "E4 E6 = E10");
        assert_eq!(e6.mul(&e8), e14, "E6 E8 = E14");
        let lhs = e4.pow(3).sub(&e6.pow(2));
        assert_eq!(lhs, delta.scale(&r(1728, 1)), "E4^3 - E6^2 = 1728 delta");
    }

    #[test]
    fn tau_691_congruence() {
        let n = 2001;
        let d = delta_qexp(n).unwrap();
        let m = BigInt::from(691);
        for j in 1..n as u64 {
            let tau = d.coeff(j as usize).numer().clone();
            let s = sigma_power(11, j).unwrap();
            assert!(
                ((tau - s) % &m).is_zero(),
                "tau({j}) != sigma11({j}) mod 691"
            );
        }
    }

    #[test]
    fn dim_formula() {
        let expect = [
            (4, 0), (10, 0), (12, 1), (14, 0), (16, 1), (18, 1), (20, 1),
            (22, 1), (24, 2), (26, 1), (36, 3), (38, 2),
        ];
        for (k, d) in expect {
            assert_eq!(dim_cusp_forms(k), d, "dim S_{k}");
        }
    }

    #[test]
    fn miller_basis_shapes() {
        assert_eq!(miller_basis(12, 10).unwrap().len(), 1);
        assert_eq!(miller_basis(12, 10).unwrap()[0], delta_qexp(10).unwrap());
        assert!(miller_basis(14, 10).unwrap().is_empty());

        let b24 = miller_basis(24, 12).unwrap();
        assert_eq!(b24.len(), 2);
        for (i, g) in b24.iter().enumerate() {
            assert!(g.coeff(0).is_zero());
            for j in 0..b24.len() {
                let want = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(g.coeff(j + 1), &want, "basis {i} at q^{}", j + 1);
            }
        }
    }

    #[test]
    fn miller_basis_echelon_for_larger_weights() {
        for k in [26u32, 28, 30, 36] {
            let d = dim_cusp_forms(k);
            let basis = miller_basis(k, d + 6).unwrap();
            assert_eq!(basis.len(), d);
            for (i, g) in basis.iter().enumerate() {
                for j in 0..d {
                    let want = if i == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(g.coeff(j + 1), &want);
                }
            }
        }
    }

    #[test]
    fn eigenform_cases() {
        assert_eq!(eigenform(12, 8).unwrap().unwrap(), delta_qexp(8).unwrap());
        assert!(eigenform(14, 8).unwrap().is_none());
        assert_eq!(
            eigenform(24, 8),
            Err(Error::RequiresAlgebraicEigenvalues { k: 24, dim: 2 })
        );
    }

    #[test]
    fn theta_one_coefficients() {
        let t = theta_qexp(ThetaKind::One, 11);
        let expect = [1i64, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(t.coeff(n), &Rational::from_integer(e), "r2({n})");
        }
    }

    #[test]
    fn theta_two_coefficients() {
        let t = theta_qexp(ThetaKind::Two, 8);
        assert_eq!(t.coeff(0), &Rational::one());
        assert_eq!(t.coeff(1), &r(6, 1));
        assert_eq!(t.coeff(2), &Rational::zero());
        assert_eq!(t.coeff(3), &r(6, 1));
        assert_eq!(t.coeff(4), &r(6, 1));
        assert_eq!(t.coeff(7), &r(12, 1));
    }

    #[test]
    fn theta_one_matches_divisor_character_sum() {
        // r2(n) = 4 sum_{d|n} chi_{-4}(d), the classical two-squares count
        let t = theta_qexp(ThetaKind::One, 201);
        for n in 1..=200i64 {
            let mut s = 0i64;
            for d in 1..=n {
                if n % d == 0 {
                    s += kronecker_symbol(-4, d) as i64;
                }
            }
            assert_eq!(t.coeff(n as usize), &Rational::from_integer(4 * s), "n={n}");
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_series() -> impl Strategy<Value = QSeries> {
            proptest::collection::vec(-30i64..30, 1..12).prop_map(|v| {
                QSeries::from_coeffs(v.into_iter().map(Rational::from_integer).collect())
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                let n = a.precision().min(b.precision()).min(c.precision());
                let lhs = a.mul(&b.add(&c)).truncate(n);
                let rhs = a.mul(&b).add(&a.mul(&c)).truncate(n);
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }

            #[test]
            fn product_precision_is_min(a in arb_series(), b in arb_series()) {
                prop_assert_eq!(a.mul(&b).precision(), a.precision().min(b.precision()));
            }
        }
    }

    #[test]
    fn qseries_serde_schema() {
        let s = qs(&[1, -24]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            "{\"precision\":2,\"coeffs\":[\"1\",\"-24\"]}"
        );
        let back: QSeries = serde_json::from_str("{\"precision\":2,\"coeffs\":[\"1\",\"-24\"]}").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<QSeries>("{\"precision\":3,\"coeffs\":[\"1\"]}").is_err());
    }
}
