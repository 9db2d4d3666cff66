//! Keyed, hierarchical RNG streams.
//!
//! Every random decision in a simulation is drawn from a stream addressed by
//! a path of labels under a root seed, e.g. trial -> client 3 -> round 7.
//! Stream keys are derived by hashing (parent key, label), so a stream's
//! output depends only on its path and never on how many draws any other
//! stream has consumed. Parallel execution order therefore cannot change a
//! single drawn value.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::numcore::ParamVector;

const ROOT_DOMAIN: &[u8] = b"byzfl.rng.v1";
const LABEL_TAG: u8 = 0x01;
const INDEX_TAG: u8 = 0x02;

/// A deterministic random stream identified by (root seed, label path).
///
/// Derivation (`derive`, `derive_u64`) is pure: it reads only the stream key,
/// never the draw position. Drawing mutates the local copy only; clone a
/// stream to snapshot its state.
#[derive(Clone, Debug)]
pub struct RngStream {
    key: [u8; 32],
    rng: ChaCha12Rng,
    root_seed: u64,
    path: Vec<String>,
}

impl RngStream {
    /// Root stream for a 64-bit seed.
    pub fn from_seed(seed: u64) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(ROOT_DOMAIN);
        hasher.update(seed.to_le_bytes());
        let key: [u8; 32] = hasher.finalize().into();
        Self {
            key,
            rng: ChaCha12Rng::from_seed(key),
            root_seed: seed,
            path: Vec::new(),
        }
    }

    /// Child stream for a string label. Same (parent, label) always yields an
    /// identical stream; distinct labels yield statistically independent ones.
    pub fn derive(&self, label: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(self.key);
        hasher.update([LABEL_TAG]);
        hasher.update((label.len() as u64).to_le_bytes());
        hasher.update(label.as_bytes());
        let key: [u8; 32] = hasher.finalize().into();
        let mut path = self.path.clone();
        path.push(label.to_string());
        Self {
            key,
            rng: ChaCha12Rng::from_seed(key),
            root_seed: self.root_seed,
            path,
        }
    }

    /// Child stream for a numeric label (client ids, round indices, ...).
    pub fn derive_u64(&self, index: u64) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(self.key);
        hasher.update([INDEX_TAG]);
        hasher.update(index.to_le_bytes());
        let key: [u8; 32] = hasher.finalize().into();
        let mut path = self.path.clone();
        path.push(index.to_string());
        Self {
            key,
            rng: ChaCha12Rng::from_seed(key),
            root_seed: self.root_seed,
            path,
        }
    }

    pub fn root_seed(&self) -> u64 {
        self.root_seed
    }

    pub fn path(&self) -> &[String] {
        &self.path
    }

    /// Uniform draw in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Uniform draw in [lo, hi).
    pub fn uniform_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// One standard normal draw.
    pub fn standard_normal(&mut self) -> f64 {
        self.rng.sample(rand_distr::StandardNormal)
    }

    /// `d` independent draws from N(mean, std^2). `std = 0` returns the
    /// constant mean vector without consuming any draws.
    pub fn gaussian(&mut self, mean: f64, std: f64, d: usize) -> Result<ParamVector> {
        if std < 0.0 {
            return Err(Error::invalid_parameter(
                "std",
                format!("must be >= 0, got {std}"),
            ));
        }
        if std == 0.0 {
            return Ok(ParamVector::new(vec![mean; d]));
        }
        Ok(ParamVector::new(
            (0..d).map(|_| mean + std * self.standard_normal()).collect(),
        ))
    }

    /// Gamma(shape, 1) draw; building block for Dirichlet sampling.
    pub fn gamma(&mut self, shape: f64) -> Result<f64> {
        let dist = rand_distr::Gamma::new(shape, 1.0).map_err(|e| {
            Error::invalid_parameter("shape", format!("gamma shape {shape}: {e}"))
        })?;
        Ok(self.rng.sample(dist))
    }

    /// Fisher-Yates shuffle in place.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        use rand::seq::SliceRandom;
        items.shuffle(&mut self.rng);
    }

    /// `k` distinct indices from `0..n`, returned sorted.
    pub fn sample_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut picked = rand::seq::index::sample(&mut self.rng, n, k).into_vec();
        picked.sort_unstable();
        picked
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

/// Inverse standard normal CDF (quantile function) via Acklam's rational
/// approximation; absolute error below 1.2e-9 over (0, 1).
pub fn inverse_normal_cdf(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) || p == 0.0 || p == 1.0 {
        return Err(Error::invalid_parameter(
            "p",
            format!("quantile must lie strictly in (0, 1), got {p}"),
        ));
    }

    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    let z = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    Ok(z)
}
