//! Prime factorization for display of exact coefficients.
//!
//! Trial division clears small primes, Miller–Rabin certifies what is left,
//! and Pollard–Brent splits the rest. Rho gets a bounded budget; a composite it
//! cannot split is reported as an unfactored cofactor rather than looping.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExactRational;

const TRIAL_LIMIT: u32 = 1 << 16;
const RHO_BUDGET: u64 = 1 << 21;
const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: BigUint,
    pub exponent: u32,
}

/// Factorization of a positive integer: sorted prime powers, plus whatever
/// composite part could not be split within budget.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pub primes: Vec<PrimePower>,
    pub unfactored: Vec<BigUint>,
}

impl Factorization {
    pub fn is_one(&self) -> bool {
        self.primes.is_empty() && self.unfactored.is_empty()
    }

    pub fn product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for pp in &self.primes {
            acc *= pp.prime.pow(pp.exponent);
        }
        for c in &self.unfactored {
            acc *= c;
        }
        acc
    }

    fn push(&mut self, p: BigUint) {
        match self.primes.iter_mut().find(|pp| pp.prime == p) {
            Some(pp) => pp.exponent += 1,
            None => self.primes.push(PrimePower { prime: p, exponent: 1 }),
        }
    }
}

impl fmt::Display for Factorization {
    /// `2^39 · 3^10 · 5`; `1` for the empty product; unfactored parts in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self
            .primes
            .iter()
            .map(|pp| match pp.exponent {
                1 => pp.prime.to_string(),
                e => format!("{}^{}", pp.prime, e),
            })
            .collect();
        parts.extend(self.unfactored.iter().map(|c| format!("[{c}]")));
        write!(f, "{}", parts.join(" · "))
    }
}

/// Render `|q|` as `num / (den)` in factored form, e.g. `691 · 3617 / (2^38 · 3^10)`.
pub fn format_factored(q: &ExactRational) -> String {
    let num = factorize(&q.numer().magnitude().clone());
    let den = factorize(&q.denom().magnitude().clone());
    let sign = if q.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
    if den.is_one() {
        return format!("{sign}{num}");
    }
    let den_str = if den.primes.len() + den.unfactored.len() == 1 {
        den.to_string()
    } else {
        format!("({den})")
    };
    format!("{sign}{num} / {den_str}")
}

/// Factor a positive integer. Zero and one give the empty factorization.
pub fn factorize(n: &BigUint) -> Factorization {
    let mut out = Factorization::default();
    if n.is_zero() {
        return out;
    }
    let mut rest = n.clone();
    for p in small_primes(TRIAL_LIMIT) {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            out.push(bp.clone());
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if m < BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT) || is_probable_prime(&m) {
            out.push(m);
            continue;
        }
        match pollard_brent(&m) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => out.unfactored.push(m),
        }
    }
    out.primes.sort_by(|a, b| a.prime.cmp(&b.prime));
    out.unfactored.sort();
    out
}

fn small_primes(limit: u32) -> impl Iterator<Item = u32> {
    let limit = limit as usize;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    if limit > 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i < limit {
        if sieve[i] {
            let mut j = i * i;
            while j < limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .into_iter()
        .enumerate()
        .filter_map(|(i, is_p)| is_p.then_some(i as u32))
}

/// Strong-pseudoprime test to the first twelve prime bases. Deterministic
/// below 3.3e24; beyond that a composite passing all twelve is not known.
pub(crate) fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in &MR_BASES {
        let bp = BigUint::from(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let shift = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> shift;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..shift {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for c in 1u32..=8 {
        if let Some(d) = brent_attempt(n, &BigUint::from(c)) {
            return Some(d);
        }
    }
    None
}

fn brent_attempt(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let step = |v: &BigUint| (v * v + c) % n;
    let batch = 128u64;
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut r = 1u64;
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = step(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = q * diff % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        spent += 2 * r;
        r *= 2;
        if spent > RHO_BUDGET {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = step(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
