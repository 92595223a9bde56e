//! Small-integer arithmetic on group orders.

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

/// Distinct prime divisors of `n`, ascending.
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
        return 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// True when `n` is `p^k` for some `k ≥ 0`.
pub fn is_power_of(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// The prime `p` with `n = p^k`, `k ≥ 1`; `None` for 1 or mixed orders.
pub fn prime_of_power(n: u64) -> Option<u64> {
    match prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}
