use nalgebra::Matrix3;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SemiSimpleCoeffs;

/// RNG for stream `stream` of master seed `seed`. Distinct streams never overlap.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws `a, b, c` uniformly on `[-1, 1]` and projects onto the unit sphere.
pub fn sample_semisimple_with<R: Rng + ?Sized>(rng: &mut R) -> SemiSimpleCoeffs {
    loop {
        let a: f64 = rng.gen_range(-1.0..=1.0);
        let b: f64 = rng.gen_range(-1.0..=1.0);
        let c: f64 = rng.gen_range(-1.0..=1.0);
        let n = (a * a + b * b + c * c).sqrt();
        if n > 0.0 {
            return SemiSimpleCoeffs::new(a / n, b / n, c / n);
        }
    }
}

pub fn sample_semisimple(seed: u64) -> SemiSimpleCoeffs {
    sample_semisimple_with(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// A random element of SL3(C): entries uniform on the unit square, rescaled by
/// a cube root of the determinant. Badly conditioned draws are rejected.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R) -> Matrix3<Complex64> {
    loop {
        let m = Matrix3::from_fn(|_, _| {
            Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
        });
        let det = m.determinant();
        if det.norm() > 0.1 {
            let root = det.powf(1.0 / 3.0);
            return m.map(|z| z / root);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_draws() {
        let mut rng = stream_rng(5, 0);
        for _ in 0..50 {
            let m = random_unimodular(&mut rng);
            assert!((m.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(sample_semisimple(17), sample_semisimple(17));
        assert_ne!(sample_semisimple(17), sample_semisimple(18));
    }

    #[test]
    fn normalized_and_centered() {
        let mut rng = stream_rng(0, 0);
        let n = 100_000;
        let mut mean = [0.0; 3];
        for _ in 0..n {
            let p = sample_semisimple_with(&mut rng);
            assert!((p.norm_sqr() - 1.0).abs() < 1e-12);
            for (m, x) in mean.iter_mut().zip(p.to_array()) {
                *m += x / n as f64;
            }
        }
        for m in mean {
            assert!(m.abs() < 0.01, "{mean:?}");
        }
    }

    #[test]
    fn streams_differ() {
        let a = sample_semisimple_with(&mut stream_rng(3, 0));
        let b = sample_semisimple_with(&mut stream_rng(3, 1));
        assert_ne!(a, b);
    }
}
