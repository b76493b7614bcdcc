//! Parameterized measurement bases and partially entangled channel states.

use num_complex::Complex64;

use crate::error::{QstsError, Result};
use crate::qstate::{c, Amplitude, PureState};

/// Free parameter `m` of the sender's measurement basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisParameter(pub Amplitude);

/// Amplitude weight `n` of a partially entangled channel; `n = 1` is maximal entanglement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParameter(pub Amplitude);

fn finite(z: Amplitude, what: &str) -> Result<Amplitude> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(QstsError::arg(format!("{what} must be finite")))
    }
}

/// `1/√(1+|z|²)`.
fn weight_normalizer(z: Amplitude) -> f64 {
    1.0 / (1.0 + z.norm_sqr()).sqrt()
}

impl BasisParameter {
    pub fn new(m: Amplitude) -> Result<Self> {
        finite(m, "basis parameter").map(Self)
    }

    pub fn real(m: f64) -> Result<Self> {
        Self::new(c(m, 0.0))
    }

    pub fn value(&self) -> Amplitude {
        self.0
    }

    /// `M = 1/√(1+|m|²)`.
    pub fn normalizer(&self) -> f64 {
        weight_normalizer(self.0)
    }

    pub fn is_real(&self) -> bool {
        self.0.im == 0.0
    }
}

impl ChannelParameter {
    pub fn new(n: Amplitude) -> Result<Self> {
        finite(n, "channel parameter").map(Self)
    }

    pub fn real(n: f64) -> Result<Self> {
        Self::new(c(n, 0.0))
    }

    pub fn value(&self) -> Amplitude {
        self.0
    }

    /// `N = 1/√(1+|n|²)`.
    pub fn normalizer(&self) -> f64 {
        weight_normalizer(self.0)
    }

    pub fn is_real(&self) -> bool {
        self.0.im == 0.0
    }
}

/// Ordered, labeled orthonormal family on `subspace_qubits` qubits.
#[derive(Debug, Clone)]
pub struct BasisSet {
    pub labels: Vec<String>,
    pub states: Vec<PureState>,
    pub subspace_qubits: usize,
}

impl BasisSet {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, label: &str) -> Option<&PureState> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.states[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &PureState)> {
        self.labels.iter().map(String::as_str).zip(&self.states)
    }
}

/// `M(|s⟩ + m|t⟩)` and `M(m*|s⟩ − |t⟩)` on `k` qubits.
fn weighted_pair(k: usize, s: usize, t: usize, m: BasisParameter) -> (PureState, PureState) {
    let big_m = m.normalizer();
    let mut plus = vec![Amplitude::default(); 1 << k];
    let mut minus = plus.clone();
    plus[s] = c(big_m, 0.0);
    plus[t] = m.0 * big_m;
    minus[s] = m.0.conj() * big_m;
    minus[t] = c(-big_m, 0.0);
    // |m| is finite, so both vectors have unit norm up to roundoff
    let plus = PureState::normalize(plus).expect("non-zero pair state").0;
    let minus = PureState::normalize(minus).expect("non-zero pair state").0;
    (plus, minus)
}

fn bits_to_index(bits: &str) -> usize {
    usize::from_str_radix(bits, 2).expect("static bit pattern")
}

fn pair_family(k: usize, m: BasisParameter, pairs: &[(&str, &str, &str)]) -> BasisSet {
    let mut labels = Vec::with_capacity(2 * pairs.len());
    let mut states = Vec::with_capacity(2 * pairs.len());
    for (name, s, t) in pairs {
        let (plus, minus) = weighted_pair(k, bits_to_index(s), bits_to_index(t), m);
        labels.push(format!("{name}Plus"));
        labels.push(format!("{name}Minus"));
        states.push(plus);
        states.push(minus);
    }
    BasisSet {
        labels,
        states,
        subspace_qubits: k,
    }
}

/// Generalized Bell basis `[Φ⁺_m, Φ⁻_m, Ψ⁺_m, Ψ⁻_m]`.
pub fn generalized_bell_basis(m: BasisParameter) -> BasisSet {
    pair_family(2, m, &[("Phi", "00", "11"), ("Psi", "01", "10")])
}

/// Generalized GHZ basis `[GHZ±_m, G±_m, H±_m, Z±_m]`.
pub fn generalized_ghz_basis(m: BasisParameter) -> BasisSet {
    pair_family(
        3,
        m,
        &[
            ("GHZ", "000", "111"),
            ("G", "010", "101"),
            ("H", "100", "011"),
            ("Z", "110", "001"),
        ],
    )
}

/// `k`-qubit extension of the generalized GHZ basis.
///
/// For every `k`-bit string `s` whose last bit is 0 (taken in increasing
/// order of its leading `k − 1` bits) the pair `M(|s⟩ + m|s̄⟩)`,
/// `M(m*|s⟩ − |s̄⟩)` is emitted, `s̄` being the bitwise complement. Labels are
/// `Plus<s>` / `Minus<s>`; at `k = 3` the family coincides with
/// [`generalized_ghz_basis`] state for state.
pub fn generalized_multiqubit_basis(m: BasisParameter, k: usize) -> Result<BasisSet> {
    if !(2..=12).contains(&k) {
        return Err(QstsError::arg(format!(
            "basis size {k} qubits out of range 2..=12"
        )));
    }
    let full = (1usize << k) - 1;
    let mut labels = Vec::with_capacity(1 << k);
    let mut states = Vec::with_capacity(1 << k);
    for prefix in 0..(1usize << (k - 1)) {
        let s = prefix << 1;
        let (plus, minus) = weighted_pair(k, s, full ^ s, m);
        let bits = format!("{s:0k$b}");
        labels.push(format!("Plus{bits}"));
        labels.push(format!("Minus{bits}"));
        states.push(plus);
        states.push(minus);
    }
    Ok(BasisSet {
        labels,
        states,
        subspace_qubits: k,
    })
}

/// `|X±⟩ = (|0⟩ ± |1⟩)/√2`.
pub fn x_basis() -> BasisSet {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    BasisSet {
        labels: vec!["XPlus".into(), "XMinus".into()],
        states: vec![
            PureState::normalize(vec![c(h, 0.0), c(h, 0.0)]).unwrap().0,
            PureState::normalize(vec![c(h, 0.0), c(-h, 0.0)]).unwrap().0,
        ],
        subspace_qubits: 1,
    }
}

/// `N(|0…0⟩ + n|1…1⟩)` on `k ≥ 2` qubits.
pub fn channel_ghz_k(n: ChannelParameter, k: usize) -> Result<PureState> {
    if !(2..=12).contains(&k) {
        return Err(QstsError::arg(format!(
            "channel size {k} qubits out of range 2..=12"
        )));
    }
    let big_n = n.normalizer();
    let mut amps = vec![Amplitude::default(); 1 << k];
    amps[0] = Complex64::new(big_n, 0.0);
    amps[(1 << k) - 1] = n.0 * big_n;
    Ok(PureState::normalize(amps)?.0)
}

/// Three-party channel `|GHZ_n⟩ = N(|000⟩ + n|111⟩)`.
pub fn channel_ghz(n: ChannelParameter) -> PureState {
    channel_ghz_k(n, 3).expect("three qubits is in range")
}

/// Two-party channel `|Φ⁺_n⟩ = N(|00⟩ + n|11⟩)`.
pub fn channel_bell(n: ChannelParameter) -> PureState {
    channel_ghz_k(n, 2).expect("two qubits is in range")
}
