//! Small integer helpers: primes, prime powers, π-numbers.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if n == 0 {
        return 0;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(k)` when `n == p^k`.
pub fn log_p(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    log_p(n, p).is_some()
}

/// True when every prime divisor of `n` lies in `primes`.
pub fn is_pi_number(n: u64, primes: &[u64]) -> bool {
    prime_divisors(n).iter().all(|q| primes.contains(q))
}

/// Powers `p^1, p^2, ...` strictly between 1 and `bound`.
pub fn p_powers_below(p: u64, bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = p;
    while d < bound {
        out.push(d);
        d *= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_and_parts() {
        assert_eq!(prime_divisors(24), [2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(6, 5), 1);
        assert_eq!(log_p(16, 2), Some(4));
        assert_eq!(log_p(12, 2), None);
        assert_eq!(log_p(1, 3), Some(0));
        assert!(is_pi_number(1, &[]));
        assert!(!is_pi_number(3, &[2]));
        assert_eq!(p_powers_below(2, 16), [2, 4, 8]);
        assert_eq!(gcd(12, 18), 6);
    }
}
