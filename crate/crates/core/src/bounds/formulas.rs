//! The closed-form bound expressions, in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn pow(base: i64, e: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(e))
}

/// Upper bound for the complete graph on `n >= 3` vertices with `f`
/// firefighters (cyclic orientation; for even `n` one extra sink).
pub fn complete_upper(n: usize, f: usize) -> BigRational {
    let (n, f) = (n as i64, f as i64);
    if n % 2 == 1 {
        // f < (n-1)/4  <=>  4f < n-1
        if 4 * f < n - 1 {
            int(n - 3 * f)
        } else if 2 * f < n - 1 {
            int((n - 1) / 2 - f + 1)
        } else {
            int(1)
        }
    } else if 4 * f < n - 2 {
        int(n - 3 * f)
    } else if 2 * f < n - 2 {
        int(n / 2 - f + 1)
    } else if 2 * f < n {
        int(2)
    } else {
        int(1)
    }
}

/// Exact value for the complete graph with one firefighter.
pub fn complete_exact_one(n: usize) -> usize {
    match n {
        0..=3 => 1,
        4 => 2,
        _ => n - 3,
    }
}

/// Lower bound for `K_{p,q}`: `pq/(p+q) + 1 - f`, or `+ 2 - f` when
/// `f <= pq/(p+q) - 1`.
pub fn bipartite_lower(p: usize, q: usize, f: usize) -> BigRational {
    let h = ratio((p * q) as i64, (p + q) as i64);
    let f = int(f as i64);
    if f <= &h - int(1) {
        h + int(2) - f
    } else {
        h + int(1) - f
    }
}

/// `1 + min{Δ(A), Δ(B)} - f`, never below one.
pub fn bipartite_upper(delta_a: usize, delta_b: usize, f: usize) -> BigRational {
    let v = 1 + delta_a.min(delta_b) as i64 - f as i64;
    int(v.max(1))
}

/// Burn counts per time step for the colour-class layering:
/// `S_1 = 1`, `S_2 = Δ - f`, `S_t = (Δ-1) S_{t-1} - f`.
pub fn colour_layer_sizes(delta: usize, k: usize, f: usize) -> Vec<BigRational> {
    let mut s = vec![int(1)];
    if k >= 2 {
        s.push(int(delta as i64 - f as i64));
    }
    while s.len() < k {
        let next = int(delta as i64 - 1) * s.last().expect("nonempty") - int(f as i64);
        s.push(next);
    }
    s
}

/// `1 + S_2 + ... + S_k` by iterating the recurrence.
pub fn refined_recurrence(delta: usize, k: usize, f: usize) -> BigRational {
    colour_layer_sizes(delta, k, f).into_iter().fold(BigRational::zero(), |a, b| a + b)
}

/// Closed form `(Δ(Δ-1)^{k-1} - 2)/(Δ-2) - f((Δ-1)^k - Δk + 2k - 1)/(Δ-2)^2`
/// for `Δ > 2`.
pub fn refined_closed(delta: usize, k: usize, f: usize) -> BigRational {
    let (d, k_, f) = (delta as i64, k as i64, f as i64);
    assert!(d > 2, "closed form needs Δ > 2");
    let first = (int(d) * pow(d - 1, k as u32 - 1) - int(2)) / int(d - 2);
    let second = int(f) * (pow(d - 1, k as u32) - int(d * k_) + int(2 * k_ - 1)) / int((d - 2) * (d - 2));
    first - second
}

/// `1 + floor(diam/2)(k - f) - f`, the branch for `f <= 2k/diam`.
pub fn ktree_near(k: usize, diam: usize, f: usize) -> BigRational {
    int(1 + (diam / 2) as i64 * (k as i64 - f as i64) - f as i64)
}

/// `1 + k(floor(k/f) - 1)`, the branch for `f > 2k/diam`.
pub fn ktree_far(k: usize, f: usize) -> BigRational {
    int(1 + k as i64 * ((k / f) as i64 - 1))
}

/// `1 + ceil(k/2)` when `f >= floor(k/2)`.
pub fn ktree_half(k: usize) -> BigRational {
    int(1 + k.div_ceil(2) as i64)
}

pub fn fvs_upper(size: usize, f: usize) -> BigRational {
    int((size as i64 - f as i64 + 2).max(1))
}

/// `Δ^k`.
pub fn chromatic_upper(delta: usize, k: usize) -> BigRational {
    pow(delta as i64, k as u32)
}

/// Which value to use for four as the base of the degree ladder.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum LadderSeed {
    /// The dedicated degree-4 result, 5.
    #[default]
    Five,
    /// Pure recursion from the subcubic value, giving 6.
    Six,
}

/// Upper bound on the largest value over graphs of maximum degree `d >= 3`
/// with one firefighter: `β_3 = 2`, `β_4` from the seed, then
/// `β_d <= max{d, β_{d-1}(d-2) + 2}`, capped by `(d-1)!` at each level.
pub fn beta_d_ladder(d: usize, seed: LadderSeed) -> BigInt {
    assert!(d >= 3, "ladder starts at d = 3");
    let mut beta = BigInt::from(2);
    let mut fact = BigInt::from(2); // (d-1)! at d = 3
    for level in 4..=d {
        fact *= BigInt::from(level - 1);
        let rec = (beta.clone() * BigInt::from(level - 2) + BigInt::from(2)).max(BigInt::from(level));
        let raw = if level == 4 && seed == LadderSeed::Five { BigInt::from(5) } else { rec };
        beta = raw.min(fact.clone());
    }
    beta
}

/// Density ratio `m/n`.
pub fn density(m: usize, n: usize) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    ratio(m as i64, n as i64)
}

/// Smallest integer at least `r`.
pub fn ceil(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

/// Largest integer at most `r`.
pub fn floor(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_matches_closed_form() {
        for delta in 3..=6 {
            for k in 2..=5 {
                for f in 1..delta {
                    assert_eq!(refined_recurrence(delta, k, f), refined_closed(delta, k, f), "Δ={delta} k={k} f={f}");
                }
            }
        }
    }

    #[test]
    fn refined_examples() {
        assert_eq!(refined_closed(3, 3, 1), int(6));
        assert_eq!(refined_closed(4, 4, 1), int(35));
    }

    #[test]
    fn complete_bands() {
        assert_eq!(complete_upper(9, 2), int(3));
        assert_eq!(complete_upper(9, 1), int(6));
        assert_eq!(complete_upper(9, 4), int(1));
        assert_eq!(complete_upper(5, 1), int(2));
        assert_eq!(complete_upper(7, 1), int(4));
        assert_eq!(complete_upper(4, 1), int(2));
        assert_eq!(complete_upper(6, 1), int(3));
        assert_eq!(complete_upper(6, 2), int(2));
        assert_eq!(complete_upper(6, 3), int(1));
        assert_eq!(complete_upper(10, 1), int(7));
        assert_eq!(complete_upper(10, 2), int(4));
        assert_eq!(complete_upper(3, 1), int(1));
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(bipartite_lower(4, 4, 1), int(3));
        assert_eq!(bipartite_lower(2, 2, 1), int(1));
        assert_eq!(bipartite_lower(3, 3, 1), ratio(3, 2));
        assert_eq!(bipartite_upper(3, 3, 1), int(3));
        assert_eq!(bipartite_upper(1, 5, 3), int(1));
    }

    #[test]
    fn ladder() {
        let v: Vec<BigInt> = (3..=6).map(|d| beta_d_ladder(d, LadderSeed::Five)).collect();
        assert_eq!(v, [2, 5, 17, 70].map(BigInt::from));
        assert_eq!(beta_d_ladder(4, LadderSeed::Six), BigInt::from(6));
        let mut last = BigInt::from(0);
        for d in 3..=15 {
            let b = beta_d_ladder(d, LadderSeed::Five);
            assert!(b >= last);
            last = b;
        }
    }

    #[test]
    fn small_formulas() {
        assert_eq!(fvs_upper(3, 1), int(4));
        assert_eq!(fvs_upper(0, 3), int(1));
        assert_eq!(ktree_half(2), int(2));
        assert_eq!(ktree_far(3, 2), int(1));
        assert_eq!(ceil(&ratio(4, 5)), BigInt::from(1));
        assert_eq!(floor(&ratio(7, 2)), BigInt::from(3));
    }
}
