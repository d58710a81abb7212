//! Bernoulli numbers and polynomials, Kronecker characters, generalized
//! Bernoulli numbers, and Cohen class numbers H(r, n).
//!
//! Convention: B_1 = -1/2, so that B_r(x) = Σ_k C(r,k) B_k x^{r-k} is the
//! Bernoulli polynomial entering the generalized-Bernoulli sum. With the
//! opposite sign for B_1 the class-number values below would be wrong.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::{Error, Result};

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

static BERNOULLI_CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// B_n in the B_1 = -1/2 convention, by the recurrence
/// Σ_{j=0}^{n} C(n+1, j) B_j = 0. Values are memoized; the cache is
/// internally synchronized so concurrent warm-up is safe.
pub fn bernoulli_number(n: u32) -> Rational {
    let n = n as usize;
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        let mut sum = Rational::zero();
        for (j, bj) in cache.iter().enumerate() {
            sum += &(Rational::from_bigint(binomial(m as u64 + 1, j as u64)) * bj);
        }
        let bm = (-sum)
            .div(&Rational::from_integer(m as i64 + 1))
            .expect("m + 1 > 0");
        cache.push(bm);
    }
    cache[n].clone()
}

/// Snapshot of the memoized Bernoulli numbers B_0..B_m (for the CLI cache
/// file). The companion [`seed_bernoulli_cache`] trusts its input.
pub fn bernoulli_cache_snapshot() -> Vec<Rational> {
    BERNOULLI_CACHE.lock().unwrap().clone()
}

/// Replace the memo table with `values` (B_0, B_1, ...). The values are
/// trusted as-is; a corrupted seed surfaces as verification failures, which
/// is the intended detection path for the CLI `--cache` option.
pub fn seed_bernoulli_cache(values: Vec<Rational>) {
    *BERNOULLI_CACHE.lock().unwrap() = values;
}

/// Bernoulli polynomial B_r(x) = Σ_{k=0}^{r} C(r,k) B_k x^{r-k}, exactly.
pub fn bernoulli_polynomial(r: u32, x: &Rational) -> Rational {
    let mut sum = Rational::zero();
    // x^{r-k} accumulated from x^0 upward by iterating k downward
    let mut xpow = Rational::one();
    for k in (0..=r).rev() {
        let term = Rational::from_bigint(binomial(r as u64, k as u64)) * bernoulli_number(k);
        sum += &(term * &xpow);
        if k > 0 {
            xpow *= x;
        }
    }
    sum
}

fn squarefree(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    let mut d = 2u64;
    while d * d <= m {
        if m % (d * d) == 0 {
            return false;
        }
        while m % d == 0 {
            m /= d;
        }
        d += 1;
    }
    true
}

/// True when `d` is a fundamental discriminant: d ≡ 1 (mod 4) squarefree, or
/// d = 4m with m ≡ 2, 3 (mod 4) squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    if d.rem_euclid(4) == 1 {
        return squarefree(d);
    }
    if d % 4 == 0 {
        let m = d / 4;
        let r = m.rem_euclid(4);
        return (r == 2 || r == 3) && squarefree(m);
    }
    false
}

/// Kronecker symbol (a/n), fully general: multiplicative in n with the
/// standard conventions (a/2), (a/-1), (a/0).
pub fn kronecker_symbol(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut a = a;
    let mut n = n;
    let mut sign = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    // (a/2)^v for the 2-part of n
    let mut v = 0u32;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    if v % 2 == 1 {
        match a.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => sign = -sign,
            _ => return 0, // a even
        }
    }
    // Jacobi symbol (a/n) for odd positive n via reciprocity
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Kronecker symbol (D/j) for a fundamental discriminant D; rejects
/// non-fundamental D.
pub fn kronecker_chi(d: i64, j: i64) -> Result<i32> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::NonFundamentalDiscriminant(d));
    }
    Ok(kronecker_symbol(d, j))
}

/// The Kronecker character χ_D of a fundamental discriminant D, tabulated
/// mod |D|. Evaluation at any integer uses the periodic extension
/// χ_D(j) = χ_D(j mod |D|), which agrees with the Kronecker symbol (D/j)
/// for j > 0 and is totally multiplicative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantCharacter {
    d: i64,
    modulus: u64,
    values: Vec<i8>,
}

impl DiscriminantCharacter {
    pub fn new(d: i64) -> Result<Self> {
        if !is_fundamental_discriminant(d) {
            return Err(Error::NonFundamentalDiscriminant(d));
        }
        let modulus = d.unsigned_abs();
        let values = (0..modulus)
            .map(|j| kronecker_symbol(d, j as i64) as i8)
            .collect();
        Ok(DiscriminantCharacter { d, modulus, values })
    }

    pub fn discriminant(&self) -> i64 {
        self.d
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn eval(&self, j: i64) -> i32 {
        self.values[j.rem_euclid(self.modulus as i64) as usize] as i32
    }
}

/// Generalized Bernoulli number
/// B_{r,χ_D} = |D|^{r-1} Σ_{j=0}^{|D|} χ_D(j) B_r(j/|D|).
///
/// The j = 0 and j = |D| endpoint terms both carry χ_D = 0 for |D| > 1, so
/// summing 0..=|D| as written equals the usual 1..|D|-1 sum.
pub fn generalized_bernoulli(r: u32, d: i64) -> Result<Rational> {
    let chi = DiscriminantCharacter::new(d)?;
    let q = chi.modulus() as i64;
    let mut sum = Rational::zero();
    for j in 0..=q {
        let c = chi.eval(j);
        if c == 0 {
            continue;
        }
        let x = Rational::new(j, q)?;
        sum += &(Rational::from_integer(c as i64) * bernoulli_polynomial(r, &x));
    }
    Ok(Rational::from_integer(q).pow(r as i32 - 1).expect("q > 0") * sum)
}

/// Exact L(1-r, χ_D) = -B_{r,χ_D}/r for fundamental D.
pub fn dirichlet_l_exact_negative(r: u32, d: i64) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidArgument {
            value: 0,
            reason: "r must be positive",
        });
    }
    (-generalized_bernoulli(r, d)?).div(&Rational::from_integer(r as i64))
}

/// Cohen class number H(r, n) for the index set this crate needs:
/// H(r, 0) = ζ(1-2r) = -B_{2r}/(2r), and for n > 0 with D = (-1)^r n a
/// fundamental discriminant, H(r, n) = L(1-r, χ_D) = -B_{r,χ_D}/r.
/// Anything else (general Cohen H) is a typed error.
pub fn cohen_h(r: u32, n: i64) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidArgument {
            value: 0,
            reason: "r must be positive",
        });
    }
    if n == 0 {
        return (-bernoulli_number(2 * r)).div(&Rational::from_integer(2 * r as i64));
    }
    if n < 0 {
        return Err(Error::NonFundamentalCohenIndex { r, n });
    }
    let d = if r % 2 == 0 { n } else { -n };
    if !is_fundamental_discriminant(d) {
        return Err(Error::NonFundamentalCohenIndex { r, n });
    }
    dirichlet_l_exact_negative(r, d)
}
