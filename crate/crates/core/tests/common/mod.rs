//! Brute-force reference simulator for the integration tests.
//!
//! Builds the whole register as a dense vector and contracts it against
//! explicit outcome vectors index by index. Shares no code with the library
//! beyond the input type. Qubit 0 is the most significant bit.

#![allow(dead_code)]

use num_complex::Complex64 as C;
use qsts::qstate::InputQubit;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Haar-random qubit drawn independently of the library's sampler.
pub fn random_input(rng: &mut impl Rng) -> InputQubit {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let a = ((1.0 + z) / 2.0).sqrt();
    let b = ((1.0 - z) / 2.0).sqrt();
    InputQubit::normalized(C::new(a, 0.0), C::from_polar(b, phi)).unwrap()
}

/// Haar input with both amplitudes above `floor` in magnitude.
pub fn generic_input(rng: &mut impl Rng, floor: f64) -> InputQubit {
    loop {
        let q = random_input(rng);
        if q.alpha.norm() > floor && q.beta.norm() > floor {
            return q;
        }
    }
}

fn bits(s: &str) -> usize {
    usize::from_str_radix(s, 2).unwrap()
}

/// Labelled outcome vector on a block of qubits.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub label: String,
    pub vector: Vec<C>,
}

fn pair(k: usize, name: &str, s: usize, t: usize, m: C) -> [Outcome; 2] {
    let norm = 1.0 / (1.0 + m.norm_sqr()).sqrt();
    let mut plus = vec![C::new(0.0, 0.0); 1 << k];
    let mut minus = plus.clone();
    plus[s] += norm;
    plus[t] += m * norm;
    minus[s] += m.conj() * norm;
    minus[t] -= norm;
    [
        Outcome {
            label: format!("{name}Plus"),
            vector: plus,
        },
        Outcome {
            label: format!("{name}Minus"),
            vector: minus,
        },
    ]
}

pub fn bell_basis(m: C) -> Vec<Outcome> {
    [("Phi", "00", "11"), ("Psi", "01", "10")]
        .iter()
        .flat_map(|(n, s, t)| pair(2, n, bits(s), bits(t), m))
        .collect()
}

pub fn ghz_basis(m: C) -> Vec<Outcome> {
    [
        ("GHZ", "000", "111"),
        ("G", "010", "101"),
        ("H", "100", "011"),
        ("Z", "110", "001"),
    ]
    .iter()
    .flat_map(|(n, s, t)| pair(3, n, bits(s), bits(t), m))
    .collect()
}

/// `Plus<s>` / `Minus<s>` for every `k`-bit `s` ending in 0.
pub fn multi_basis(m: C, k: usize) -> Vec<Outcome> {
    let mut out = Vec::new();
    for prefix in 0..(1usize << (k - 1)) {
        let s = prefix << 1;
        let label = format!("{s:0k$b}");
        let [p, q] = pair(k, "", s, s ^ ((1 << k) - 1), m);
        out.push(Outcome {
            label: format!("Plus{label}"),
            vector: p.vector,
        });
        out.push(Outcome {
            label: format!("Minus{label}"),
            vector: q.vector,
        });
    }
    out
}

pub fn x_basis() -> Vec<Outcome> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    vec![
        Outcome {
            label: "XPlus".into(),
            vector: vec![C::new(h, 0.0), C::new(h, 0.0)],
        },
        Outcome {
            label: "XMinus".into(),
            vector: vec![C::new(h, 0.0), C::new(-h, 0.0)],
        },
    ]
}

/// Dense register with a list of measured blocks and one untouched receiver qubit.
pub struct Setup {
    pub qubits: usize,
    pub amps: Vec<C>,
    /// Sender block: measured qubits (in basis order) and the basis.
    pub alice: (Vec<usize>, Vec<Outcome>),
    pub helpers: Vec<usize>,
    pub receiver: usize,
}

fn kron(a: &[C], b: &[C]) -> Vec<C> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

fn weighted_ghz(k: usize, n: C) -> Vec<C> {
    let norm = 1.0 / (1.0 + n.norm_sqr()).sqrt();
    let mut v = vec![C::new(0.0, 0.0); 1 << k];
    v[0] = C::new(norm, 0.0);
    v[(1 << k) - 1] = n * norm;
    v
}

fn input_vec(q: &InputQubit) -> Vec<C> {
    vec![q.alpha, q.beta]
}

/// GHZ channel over `parties` qubits: `[input, sender, party 1, …]`; receiver is a party index.
pub fn ghz_setup(q: &InputQubit, parties: usize, n: C, m: C, receiver: usize) -> Setup {
    let amps = kron(&input_vec(q), &weighted_ghz(parties, n));
    Setup {
        qubits: parties + 1,
        amps,
        alice: (vec![0, 1], bell_basis(m)),
        helpers: (1..parties)
            .filter(|&k| k != receiver)
            .map(|k| k + 1)
            .collect(),
        receiver: receiver + 1,
    }
}

/// Bell pairs `[input, s1, p1, s2, p2, …]`; the sender measures input, the helpers' halves, then the receiver's half.
pub fn bell_setup(q: &InputQubit, ns: &[C], m: C, receiver: usize) -> Setup {
    let parties = ns.len() + 1;
    let mut amps = input_vec(q);
    for n in ns {
        amps = kron(&amps, &weighted_ghz(2, *n));
    }
    let helpers: Vec<usize> = (1..parties).filter(|&k| k != receiver).collect();
    let mut targets = vec![0];
    targets.extend(helpers.iter().map(|k| 2 * k - 1));
    targets.push(2 * receiver - 1);
    let basis = if parties == 3 {
        ghz_basis(m)
    } else {
        multi_basis(m, parties)
    };
    Setup {
        qubits: 2 * ns.len() + 1,
        amps,
        alice: (targets, basis),
        helpers: helpers.into_iter().map(|k| 2 * k).collect(),
        receiver: 2 * receiver,
    }
}

fn bit(index: usize, qubit: usize, total: usize) -> usize {
    (index >> (total - 1 - qubit)) & 1
}

/// Sub-index of `qubits` within `index`, first listed qubit most significant.
fn sub_index(index: usize, qubits: &[usize], total: usize) -> usize {
    qubits
        .iter()
        .fold(0, |acc, &q| (acc << 1) | bit(index, q, total))
}

#[derive(Clone, Debug)]
pub struct OracleBranch {
    pub alice: String,
    pub helpers: Vec<String>,
    pub probability: f64,
    /// Unnormalized receiver amplitudes; their squared norm is the probability.
    pub receiver: [C; 2],
}

/// Every joint outcome, sender outcomes outermost, helper outcomes in helper order.
pub fn branches(setup: &Setup) -> Vec<OracleBranch> {
    let xb = x_basis();
    let h = setup.helpers.len();
    let mut out = Vec::new();
    for a in &setup.alice.1 {
        for combo in 0..(1usize << h) {
            let choice: Vec<&Outcome> = (0..h).map(|j| &xb[(combo >> (h - 1 - j)) & 1]).collect();
            let mut r = [C::new(0.0, 0.0); 2];
            for (idx, amp) in setup.amps.iter().enumerate() {
                if amp.norm_sqr() == 0.0 {
                    continue;
                }
                let mut w = a.vector[sub_index(idx, &setup.alice.0, setup.qubits)].conj();
                for (j, hq) in setup.helpers.iter().enumerate() {
                    w *= choice[j].vector[bit(idx, *hq, setup.qubits)].conj();
                }
                r[bit(idx, setup.receiver, setup.qubits)] += w * amp;
            }
            out.push(OracleBranch {
                alice: a.label.clone(),
                helpers: choice.iter().map(|o| o.label.clone()).collect(),
                probability: r[0].norm_sqr() + r[1].norm_sqr(),
                receiver: r,
            });
        }
    }
    out
}

/// `P` acting on a qubit; `"XZ"` applies Z first, `"ZX"` applies X first.
pub fn apply_pauli(name: &str, v: [C; 2]) -> [C; 2] {
    let x = |v: [C; 2]| [v[1], v[0]];
    let z = |v: [C; 2]| [v[0], -v[1]];
    match name {
        "I" => v,
        "X" => x(v),
        "Z" => z(v),
        "XZ" => x(z(v)),
        "ZX" => z(x(v)),
        other => panic!("unknown Pauli {other}"),
    }
}

/// `|⟨u|v⟩|² / (‖u‖²‖v‖²)`.
pub fn overlap(u: [C; 2], v: [C; 2]) -> f64 {
    let ip = u[0].conj() * v[0] + u[1].conj() * v[1];
    let nu = u[0].norm_sqr() + u[1].norm_sqr();
    let nv = v[0].norm_sqr() + v[1].norm_sqr();
    ip.norm_sqr() / (nu * nv)
}

/// Corrections read off the three-party tables, keyed by sender then helper outcome.
pub fn hand_table(alice: &str, helper: &str) -> &'static str {
    match (alice, helper) {
        ("PhiPlus", "XPlus") | ("PhiMinus", "XMinus") => "I",
        ("PhiPlus", "XMinus") | ("PhiMinus", "XPlus") => "Z",
        ("PsiPlus", "XPlus") | ("PsiMinus", "XMinus") => "X",
        ("PsiPlus", "XMinus") => "XZ",
        ("PsiMinus", "XPlus") => "ZX",
        ("GHZPlus" | "GPlus", "XPlus") | ("GHZMinus" | "GMinus", "XMinus") => "I",
        ("GHZPlus" | "GPlus", "XMinus") | ("GHZMinus" | "GMinus", "XPlus") => "Z",
        ("HPlus", "XPlus") | ("HMinus", "XMinus") | ("ZPlus", "XPlus") | ("ZMinus", "XMinus") => {
            "X"
        }
        ("HPlus", "XMinus") | ("HMinus", "XPlus") => "XZ",
        ("ZPlus", "XMinus") | ("ZMinus", "XPlus") => "ZX",
        other => panic!("no table entry {other:?}"),
    }
}
