//! Parameter arithmetic for degree-regular triangulations and equivelar
//! polyhedral maps.
//!
//! For a degree-regular triangulated closed surface on `n` vertices with
//! every vertex in `d` edges, double counting gives `nd = 2·f1 = 3·f2`, so
//! `χ = n − nd/2 + nd/3 = n(6−d)/6`. For an equivelar map of type `{p, q}`
//! (all faces `p`-gons, every vertex in `q` of them) the same count reads
//! `χ = n − nq/2 + nq/p`. These identities invert to a finite candidate list
//! for fixed `χ ≠ 0`; the `χ = 0` family `(n, 6)` is infinite and is capped
//! at [`TORUS_FAMILY_CAP`] vertices.

/// Cap on `n` for the flat (`χ = 0`) families, which otherwise admit every
/// sufficiently large `n`.
pub const TORUS_FAMILY_CAP: usize = 12;

/// All `(n, d)` for which a degree-regular triangulation with Euler
/// characteristic `chi` is arithmetically possible: `χ = n(6−d)/6`, `d ≥ 3`,
/// `n ≥ d + 1`, and `nd ≡ 0 (mod 6)`. Sorted by `n`.
pub fn admissible_parameters(chi: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match chi {
        0 => {
            for n in 7..=TORUS_FAMILY_CAP {
                if n * 6 % 6 == 0 {
                    out.push((n, 6));
                }
            }
        }
        c if c > 0 => {
            // n(6−d) = 6χ with 3 ≤ d ≤ 5.
            for d in 3..=5usize {
                let num = 6 * c as usize;
                if num % (6 - d) == 0 {
                    let n = num / (6 - d);
                    if n >= d + 1 && n * d % 6 == 0 {
                        out.push((n, d));
                    }
                }
            }
        }
        c => {
            // n(d−6) = 6|χ|: n runs over the divisors.
            let num = (6 * -c) as usize;
            for n in 1..=num {
                if num % n == 0 {
                    let d = 6 + num / n;
                    if n >= d + 1 && n * d % 6 == 0 {
                        out.push((n, d));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All `(n, p, q)` for which an equivelar polyhedral map of type `{p, q}`
/// with Euler characteristic `chi` is arithmetically possible:
/// `χ = n − nq/2 + nq/p` with `p, q ≥ 3`, integral edge and face counts,
/// `n ≥ p`, `n ≥ q + 1`, and enough vertex pairs to host every face-corner
/// pair: `nq(p−3)/2 + nq/2 ≤ n(n−1)/2`. Sorted by `n`, then `p`.
pub fn admissible_equivelar_parameters(chi: i64) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut push_checked = |n: usize, p: usize, q: usize| {
        let nq = n * q;
        if n >= p && n >= q + 1 && nq % 2 == 0 && nq % p == 0 && nq * (p - 3) / 2 + nq / 2 <= n * (n - 1) / 2 {
            out.push((n, p, q));
        }
    };
    if chi == 0 {
        // (p−2)(q−2) = 4: the three flat types, any n up to the cap.
        for (p, q) in [(3, 6), (4, 4), (6, 3)] {
            for n in (q + 1)..=TORUS_FAMILY_CAP {
                push_checked(n, p, q);
            }
        }
    } else {
        // n((p−2)(q−2) − 4) = −2pχ; the factor (p−2)(q−2) − 4 must have the
        // sign of −χ, and |(p−2)(q−2) − 4| ≤ 2|χ| since n ≥ p.
        let bound = (2 * chi.unsigned_abs() as usize) + 6;
        for p in 3..=bound {
            for q in 3..=bound {
                let denom = (p as i64 - 2) * (q as i64 - 2) - 4;
                let num = -2 * p as i64 * chi;
                if denom != 0 && num % denom == 0 && num / denom > 0 {
                    push_checked((num / denom) as usize, p, q);
                }
            }
        }
    }
    out.sort_unstable();
    out
}
