use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Extended Euclid: returns `(g, alpha, beta)` with `g = gcd(|a|, |b|) >= 0`
/// and `alpha * a + beta * b = g`. `(0, 0)` maps to `(0, 0, 0)`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else if old_r.is_zero() {
        (BigInt::zero(), BigInt::zero(), BigInt::zero())
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

pub fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Mathematical remainder in `[0, |m|)`.
pub(crate) fn modulo(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(&m.abs())
}

pub(crate) fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Smallest-|coefficient| Bezout pair found by scanning a box; used only
    /// to confirm the identity holds and the gcd is right.
    fn brute_gcd(a: i64, b: i64) -> i64 {
        (1..=a.abs().max(b.abs()))
            .rev()
            .find(|d| a % d == 0 && b % d == 0)
            .unwrap_or(0)
    }

    #[test]
    fn worked_examples() {
        assert_eq!(extended_gcd(&bi(2), &bi(1)), (bi(1), bi(0), bi(1)));
        assert_eq!(extended_gcd(&bi(0), &bi(0)), (bi(0), bi(0), bi(0)));
        assert_eq!(extended_gcd(&bi(6), &bi(4)), (bi(2), bi(1), bi(-1)));
    }

    #[test]
    fn bezout_identity_small_box() {
        for a in -12..=12 {
            for b in -12..=12 {
                let (g, x, y) = extended_gcd(&bi(a), &bi(b));
                assert_eq!(g, bi(brute_gcd(a, b)), "gcd({a},{b})");
                assert_eq!(&x * bi(a) + &y * bi(b), g, "bezout({a},{b})");
            }
        }
    }

    #[test]
    fn rounding_divisions() {
        assert_eq!(floor_div(&bi(-7), &bi(2)), bi(-4));
        assert_eq!(ceil_div(&bi(-7), &bi(2)), bi(-3));
        assert_eq!(ceil_div(&bi(7), &bi(2)), bi(4));
        assert_eq!(ceil_div(&bi(7), &bi(-2)), bi(-3));
        assert_eq!(modulo(&bi(-1), &bi(3)), bi(2));
        assert_eq!(modulo(&bi(6), &bi(3)), bi(0));
    }
}
