//! Scalar math shims, deterministic hashing/RNG and a small symmetric
//! eigensolver.
//!
//! Float transcendentals go through the `flt` shim so the crate works both
//! with `std` (hardware/libstd math) and without it (libm). All randomness
//! in the crate derives from [`SplitMix64`] / [`mix64`]; there is no global
//! generator, so every pipeline stage is reproducible from explicit seeds.

pub(crate) mod flt {
    #![allow(dead_code)]

    #[inline]
    pub fn abs(x: f64) -> f64 {
        f64::from_bits(x.to_bits() & 0x7fff_ffff_ffff_ffff)
    }

    macro_rules! shim {
        ($($name:ident),* $(,)?) => {
            $(
                #[cfg(feature = "std")]
                #[inline]
                pub fn $name(x: f64) -> f64 {
                    x.$name()
                }
                #[cfg(not(feature = "std"))]
                #[inline]
                pub fn $name(x: f64) -> f64 {
                    libm::$name(x)
                }
            )*
        };
    }

    shim!(sqrt, sin, cos, acos, exp, floor, ceil, round);

    #[cfg(feature = "std")]
    #[inline]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }
    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
}

/// The splitmix64 finalizer: a bijective 64-bit mix with good avalanche.
///
/// This is the single mixing primitive behind gradient hashing, sub-seed
/// derivation and [`SplitMix64`]; its constants are fixed so seeded outputs
/// stay bit-stable across releases.
#[inline]
pub fn mix64(mut x: u64) -> u64 {
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    x
}

/// Derives an independent sub-seed from `seed` and a salt (class index,
/// octave index, stage tag, ...).
#[inline]
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    mix64(seed ^ mix64(salt.wrapping_add(0x9e37_79b9_7f4a_7c15)))
}

/// Deterministic 64-bit generator (splitmix64) used for all seeded sampling.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of mantissa.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, n)`. `n` must be nonzero.
    #[inline]
    pub fn next_below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform in `[lo, hi)`.
    #[inline]
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.next_f64() * (hi - lo)
    }

    /// Standard normal draw via Box-Muller (consumes two uniforms).
    pub fn normal(&mut self) -> f64 {
        let u1 = (self.next_u64() >> 11).max(1) as f64 * (1.0 / (1u64 << 53) as f64);
        let u2 = self.next_f64();
        flt::sqrt(-2.0 * flt::ln(u1)) * flt::cos(core::f64::consts::TAU * u2)
    }
}

/// Row-major 3x3 matrix.
pub type Mat3 = [[f64; 3]; 3];

pub(crate) fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

pub(crate) fn mat3_transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a[j][i];
        }
    }
    out
}

/// Eigendecomposition of a symmetric 3x3 matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching unit eigenvectors
/// as columns of the returned matrix (`vecs[r][k]` is component `r` of
/// eigenvector `k`).
pub fn sym_eigen3(m: &Mat3) -> ([f64; 3], Mat3) {
    let mut a = *m;
    let mut v: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

    let mut frob = 0.0;
    for row in &a {
        for x in row {
            frob += x * x;
        }
    }
    let frob = flt::sqrt(frob);
    let stop = 1e-15 * frob.max(f64::MIN_POSITIVE);

    for _sweep in 0..32 {
        let off = flt::sqrt(
            a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2],
        );
        if off <= stop {
            break;
        }
        for &(p, q) in &[(0usize, 1usize), (0, 2), (1, 2)] {
            let apq = a[p][q];
            if flt::abs(apq) <= stop * 1e-3 {
                continue;
            }
            let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
            let t = if tau >= 0.0 {
                1.0 / (tau + flt::sqrt(1.0 + tau * tau))
            } else {
                1.0 / (tau - flt::sqrt(1.0 + tau * tau))
            };
            let c = 1.0 / flt::sqrt(1.0 + t * t);
            let s = t * c;

            let app = a[p][p];
            let aqq = a[q][q];
            a[p][p] = app - t * apq;
            a[q][q] = aqq + t * apq;
            a[p][q] = 0.0;
            a[q][p] = 0.0;
            for r in 0..3 {
                if r == p || r == q {
                    continue;
                }
                let arp = a[r][p];
                let arq = a[r][q];
                a[r][p] = c * arp - s * arq;
                a[p][r] = a[r][p];
                a[r][q] = s * arp + c * arq;
                a[q][r] = a[r][q];
            }
            for row in &mut v {
                let vrp = row[p];
                let vrq = row[q];
                row[p] = c * vrp - s * vrq;
                row[q] = s * vrp + c * vrq;
            }
        }
    }

    let mut order = [0usize, 1, 2];
    // Insertion sort on three eigenvalues.
    if a[order[1]][order[1]] < a[order[0]][order[0]] {
        order.swap(0, 1);
    }
    if a[order[2]][order[2]] < a[order[1]][order[1]] {
        order.swap(1, 2);
        if a[order[1]][order[1]] < a[order[0]][order[0]] {
            order.swap(0, 1);
        }
    }

    let vals = [
        a[order[0]][order[0]],
        a[order[1]][order[1]],
        a[order[2]][order[2]],
    ];
    let mut vecs = [[0.0; 3]; 3];
    for (k, &src) in order.iter().enumerate() {
        for r in 0..3 {
            vecs[r][k] = v[r][src];
        }
    }
    (vals, vecs)
}

/// Wall-clock stage timer. Without `std` there is no clock and every stage
/// reports 0 ms.
#[derive(Debug)]
pub(crate) struct Stopwatch {
    #[cfg(feature = "std")]
    start: std::time::Instant,
}

impl Stopwatch {
    #[inline]
    pub fn start() -> Self {
        Self {
            #[cfg(feature = "std")]
            start: std::time::Instant::now(),
        }
    }

    /// Milliseconds since `start`, and restarts the watch.
    #[inline]
    pub fn lap_ms(&mut self) -> f64 {
        #[cfg(feature = "std")]
        {
            let now = std::time::Instant::now();
            let ms = now.duration_since(self.start).as_secs_f64() * 1e3;
            self.start = now;
            ms
        }
        #[cfg(not(feature = "std"))]
        {
            0.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(43);
        assert_ne!(SplitMix64::new(42).next_u64(), c.next_u64());
    }

    #[test]
    fn next_f64_in_unit_interval() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..10_000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn normal_moments_are_plausible() {
        let mut rng = SplitMix64::new(11);
        let n = 50_000;
        let (mut sum, mut sum2) = (0.0, 0.0);
        for _ in 0..n {
            let x = rng.normal();
            sum += x;
            sum2 += x * x;
        }
        let mean = sum / n as f64;
        let var = sum2 / n as f64 - mean * mean;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }

    #[test]
    fn jacobi_recovers_diagonal() {
        let m = [[3.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 2.0]];
        let (vals, _) = sym_eigen3(&m);
        assert_eq!(vals, [-1.0, 2.0, 3.0]);
    }

    #[test]
    fn jacobi_satisfies_eigen_equation() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let a = rng.uniform(-2.0, 2.0);
            let b = rng.uniform(-2.0, 2.0);
            let c = rng.uniform(-2.0, 2.0);
            let d = rng.uniform(-2.0, 2.0);
            let e = rng.uniform(-2.0, 2.0);
            let f = rng.uniform(-2.0, 2.0);
            let m = [[a, b, c], [b, d, e], [c, e, f]];
            let (vals, vecs) = sym_eigen3(&m);
            assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
            for k in 0..3 {
                for r in 0..3 {
                    let mv: f64 = (0..3).map(|j| m[r][j] * vecs[j][k]).sum();
                    assert!(
                        (mv - vals[k] * vecs[r][k]).abs() < 1e-9,
                        "eigpair residual too large"
                    );
                }
                let norm: f64 = (0..3).map(|r| vecs[r][k] * vecs[r][k]).sum();
                assert!((norm - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mix_seed_separates_salts() {
        let s = 1234;
        assert_ne!(mix_seed(s, 0), mix_seed(s, 1));
        assert_ne!(mix_seed(s, 0), mix_seed(mix_seed(s, 0), 0));
    }
}
