//! Dense state-vector algebra for small registers.
//!
//! Qubit 0 is the leftmost symbol in ket notation and the most significant
//! bit of the amplitude index, so `|011⟩` on three qubits is amplitude 3.

use std::fmt;

use num_complex::Complex64;

use crate::error::{QstsError, Result};

/// Complex amplitude carrier used throughout the crate.
pub type Amplitude = Complex64;

/// Tolerance on the unit-norm invariant of states and input qubits.
pub const NORM_TOL: f64 = 1e-10;
/// Tolerance on algebraic identities such as unitarity.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Vectors at or below this norm are treated as zero (zero-probability branches).
pub const ZERO_NORM: f64 = 1e-14;

const MAX_QUBITS: usize = 16;

pub(crate) fn c(re: f64, im: f64) -> Amplitude {
    Complex64::new(re, im)
}

/// Normalized pure state of `num_qubits` qubits.
#[derive(Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amps: Vec<Amplitude>,
}

impl fmt::Debug for PureState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PureState")
            .field("num_qubits", &self.num_qubits)
            .field("amps", &self.amps)
            .finish()
    }
}

fn check_finite(amps: &[Amplitude]) -> Result<()> {
    if amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
        Ok(())
    } else {
        Err(QstsError::arg("amplitudes must be finite"))
    }
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(QstsError::arg(format!(
            "amplitude vector length {len} is not 2^k with k >= 1"
        )));
    }
    let k = len.trailing_zeros() as usize;
    if k > MAX_QUBITS {
        return Err(QstsError::arg(format!(
            "{k} qubits exceeds the dense limit"
        )));
    }
    Ok(k)
}

pub(crate) fn norm_sqr(amps: &[Amplitude]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

impl PureState {
    /// Builds a state from amplitudes that are already normalized.
    pub fn from_amplitudes(amps: Vec<Amplitude>) -> Result<Self> {
        check_finite(&amps)?;
        let num_qubits = qubits_for_len(amps.len())?;
        let n2 = norm_sqr(&amps);
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(QstsError::arg(format!(
                "state is not normalized (squared norm {n2})"
            )));
        }
        Ok(Self { num_qubits, amps })
    }

    /// Rescales an arbitrary vector to unit norm, returning the state and the original 2-norm.
    pub fn normalize(amps: Vec<Amplitude>) -> Result<(Self, f64)> {
        check_finite(&amps)?;
        let num_qubits = qubits_for_len(amps.len())?;
        let norm = norm_sqr(&amps).sqrt();
        if norm <= ZERO_NORM {
            return Err(QstsError::ZeroVector { norm });
        }
        let amps = amps.into_iter().map(|a| a / norm).collect();
        Ok((Self { num_qubits, amps }, norm))
    }

    /// Computational basis state `|bits⟩`.
    pub fn basis_ket(num_qubits: usize, bits: &[u8]) -> Result<Self> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(QstsError::arg(format!(
                "unsupported qubit count {num_qubits}"
            )));
        }
        if bits.len() != num_qubits {
            return Err(QstsError::arg(format!(
                "expected {num_qubits} bits, got {}",
                bits.len()
            )));
        }
        let mut index = 0usize;
        for &b in bits {
            if b > 1 {
                return Err(QstsError::arg(format!("bit value {b} is not 0 or 1")));
            }
            index = (index << 1) | b as usize;
        }
        let mut amps = vec![Amplitude::default(); 1 << num_qubits];
        amps[index] = c(1.0, 0.0);
        Ok(Self { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        norm_sqr(&self.amps).sqrt()
    }

    /// `self ⊗ other`; `self` occupies the leading qubits.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        PureState {
            num_qubits: self.num_qubits + other.num_qubits,
            amps,
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner_product(&self, other: &PureState) -> Result<Amplitude> {
        self.same_dim(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|⟨self|other⟩|²`, insensitive to global phase.
    pub fn fidelity(&self, other: &PureState) -> Result<f64> {
        let overlap = self.inner_product(other)?.norm_sqr();
        Ok(overlap.min(1.0))
    }

    /// Applies `u` to qubit `target`, identity elsewhere.
    pub fn apply_unitary(&self, u: &SingleQubitUnitary, target: usize) -> Result<PureState> {
        if target >= self.num_qubits {
            return Err(QstsError::arg(format!(
                "qubit {target} out of range for {} qubits",
                self.num_qubits
            )));
        }
        let stride = 1usize << (self.num_qubits - 1 - target);
        let m = &u.entries;
        let mut amps = self.amps.clone();
        for base in 0..self.dim() {
            if base & stride != 0 {
                continue;
            }
            let a0 = self.amps[base];
            let a1 = self.amps[base | stride];
            amps[base] = m[0][0] * a0 + m[0][1] * a1;
            amps[base | stride] = m[1][0] * a0 + m[1][1] * a1;
        }
        Ok(PureState {
            num_qubits: self.num_qubits,
            amps,
        })
    }

    /// Multiplies every amplitude by `e^{iθ}`.
    pub fn with_global_phase(&self, theta: f64) -> PureState {
        let phase = Complex64::from_polar(1.0, theta);
        PureState {
            num_qubits: self.num_qubits,
            amps: self.amps.iter().map(|a| a * phase).collect(),
        }
    }

    fn same_dim(&self, other: &PureState) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            return Err(QstsError::arg(format!(
                "dimension mismatch: {} vs {} qubits",
                self.num_qubits, other.num_qubits
            )));
        }
        Ok(())
    }
}

/// Bits of `index` on `num_qubits` qubits, qubit 0 first.
pub fn index_to_bits(index: usize, num_qubits: usize) -> Vec<u8> {
    (0..num_qubits)
        .map(|q| ((index >> (num_qubits - 1 - q)) & 1) as u8)
        .collect()
}

/// The qubit handed from sender to receiver: `α|0⟩ + β|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputQubit {
    pub alpha: Amplitude,
    pub beta: Amplitude,
}

impl InputQubit {
    pub fn new(alpha: Amplitude, beta: Amplitude) -> Result<Self> {
        check_finite(&[alpha, beta])?;
        let n2 = alpha.norm_sqr() + beta.norm_sqr();
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(QstsError::arg(format!(
                "|alpha|^2 + |beta|^2 = {n2}, expected 1"
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Rescales `(alpha, beta)` to unit norm.
    pub fn normalized(alpha: Amplitude, beta: Amplitude) -> Result<Self> {
        let (state, _) = PureState::normalize(vec![alpha, beta])?;
        Ok(Self {
            alpha: state.amps[0],
            beta: state.amps[1],
        })
    }

    pub fn zero() -> Self {
        Self {
            alpha: c(1.0, 0.0),
            beta: c(0.0, 0.0),
        }
    }

    pub fn one() -> Self {
        Self {
            alpha: c(0.0, 0.0),
            beta: c(1.0, 0.0),
        }
    }

    pub fn to_state(&self) -> PureState {
        PureState {
            num_qubits: 1,
            amps: vec![self.alpha, self.beta],
        }
    }
}

/// 2×2 unitary acting on a single qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitUnitary {
    entries: [[Amplitude; 2]; 2],
}

impl SingleQubitUnitary {
    pub fn new(entries: [[Amplitude; 2]; 2]) -> Result<Self> {
        check_finite(&[entries[0][0], entries[0][1], entries[1][0], entries[1][1]])?;
        let u = Self { entries };
        let prod = u.dagger().mul(&u);
        for (i, row) in prod.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                if (v - c(expected, 0.0)).norm() > IDENTITY_TOL {
                    return Err(QstsError::arg("matrix is not unitary"));
                }
            }
        }
        Ok(u)
    }

    pub fn identity() -> Self {
        Self {
            entries: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]],
        }
    }

    pub fn pauli_x() -> Self {
        Self {
            entries: [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        }
    }

    pub fn pauli_z() -> Self {
        Self {
            entries: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        }
    }

    pub fn entries(&self) -> &[[Amplitude; 2]; 2] {
        &self.entries
    }

    /// Matrix product `self · rhs`; `rhs` acts first.
    pub fn mul(&self, rhs: &SingleQubitUnitary) -> SingleQubitUnitary {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut out = [[Amplitude::default(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        SingleQubitUnitary { entries: out }
    }

    pub fn dagger(&self) -> SingleQubitUnitary {
        let e = &self.entries;
        SingleQubitUnitary {
            entries: [
                [e[0][0].conj(), e[1][0].conj()],
                [e[0][1].conj(), e[1][1].conj()],
            ],
        }
    }
}
