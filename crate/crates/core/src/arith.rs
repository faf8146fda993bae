//! Small integer arithmetic: gcd, sieves, trial-division factorization.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// All primes `p <= bound`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Prime factorization as `(p, k)` pairs with `p` ascending. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut push = |n: &mut u64, p: u64| {
        let mut k = 0;
        while n.is_multiple_of(p) {
            *n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
    };
    push(&mut n, 2);
    push(&mut n, 3);
    let mut p = 5;
    while p * p <= n {
        push(&mut n, p);
        push(&mut n, p + 2);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` when `q = p^k` with `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    match factorize(q).as_slice() {
        [single] => Some(*single),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_small() {
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(17, 4), 1);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(1 << 20, 48), 16);
    }

    #[test]
    fn sieve_counts() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }

    #[test]
    fn factor_and_prime_powers() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(999_999_000_001), vec![(999_999_000_001, 1)]);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn gcd_matches_euclid() {
        fn euclid(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                euclid(b, a % b)
            }
        }
        for a in 0..60 {
            for b in 0..60 {
                assert_eq!(gcd(a, b), euclid(a, b), "{a} {b}");
            }
        }
    }
}
