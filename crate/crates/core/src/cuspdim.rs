//! Dimensions of cusp form spaces S_k(Γ₀(N)) from the classical genus formula.
//!
//! Used only as an oracle for the period polynomial computations, so it is
//! written from the standard invariants (index, elliptic points, cusps, genus)
//! and shares no code with them.

fn prime_factors(mut n: u64) -> alloc::vec::Vec<(u64, u32)> {
    let mut out = alloc::vec::Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Invariants of X₀(N): index μ, elliptic counts ν₂, ν₃, cusp count c, genus g.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gamma0Invariants {
    pub index: u64,
    pub nu2: u64,
    pub nu3: u64,
    pub cusps: u64,
    pub genus: u64,
}

pub fn gamma0_invariants(level: u64) -> Gamma0Invariants {
    assert!(level >= 1, "level must be positive");
    let factors = prime_factors(level);
    let index = factors.iter().fold(level, |acc, &(p, _)| acc / p * (p + 1));
    let nu2 = if level.is_multiple_of(4) {
        0
    } else {
        factors
            .iter()
            .map(|&(p, _)| match p {
                2 => 1,
                p if p % 4 == 1 => 2,
                _ => 0,
            })
            .product()
    };
    let nu3 = if level.is_multiple_of(9) {
        0
    } else {
        factors
            .iter()
            .map(|&(p, _)| match p {
                3 => 1,
                p if p % 3 == 1 => 2,
                _ => 0,
            })
            .product()
    };
    let cusps = (1..=level)
        .filter(|d| level.is_multiple_of(*d))
        .map(|d| euler_phi(gcd(d, level / d)))
        .sum();
    // 12g = 12 + μ - 3ν₂ - 4ν₃ - 6c
    let twelve_g = 12 + index as i64 - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * cusps as i64;
    debug_assert!(twelve_g >= 0 && twelve_g % 12 == 0);
    Gamma0Invariants { index, nu2, nu3, cusps, genus: (twelve_g / 12) as u64 }
}

/// dim S_k(Γ₀(N)) for even k ≥ 2.
pub fn cusp_form_dimension(weight: u32, level: u64) -> u64 {
    assert!(weight.is_multiple_of(2) && weight >= 2, "weight must be even and ≥ 2");
    let inv = gamma0_invariants(level);
    if weight == 2 {
        return inv.genus;
    }
    let k = weight as i64;
    let d = (k - 1) * (inv.genus as i64 - 1)
        + (k / 2 - 1) * inv.cusps as i64
        + inv.nu2 as i64 * (k / 4)
        + inv.nu3 as i64 * (k / 3);
    d.max(0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one() {
        for k in (4..=40).step_by(2) {
            let expected = if k % 12 == 2 { k / 12 - 1 } else { k / 12 };
            assert_eq!(cusp_form_dimension(k, 1), expected as u64, "k={k}");
        }
    }

    #[test]
    fn known_genera() {
        assert_eq!(gamma0_invariants(11).genus, 1);
        assert_eq!(gamma0_invariants(23).genus, 2);
        assert_eq!(gamma0_invariants(37).genus, 2);
        assert_eq!(gamma0_invariants(2).cusps, 2);
    }

    #[test]
    fn level_two() {
        assert_eq!(cusp_form_dimension(4, 2), 0);
        assert_eq!(cusp_form_dimension(6, 2), 0);
        assert_eq!(cusp_form_dimension(8, 2), 1);
        assert_eq!(cusp_form_dimension(12, 2), 2);
    }
}
