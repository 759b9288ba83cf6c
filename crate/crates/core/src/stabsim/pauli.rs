//! Bit-packed Pauli words with phase tracking.

use crate::gf2::BitVec;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A single-qubit Pauli letter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PauliKind {
    I,
    X,
    Y,
    Z,
}

impl PauliKind {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Self::I),
            'X' => Some(Self::X),
            'Y' => Some(Self::Y),
            'Z' => Some(Self::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Self::I => 'I',
            Self::X => 'X',
            Self::Y => 'Y',
            Self::Z => 'Z',
        }
    }

    pub fn has_x(self) -> bool {
        matches!(self, Self::X | Self::Y)
    }

    pub fn has_z(self) -> bool {
        matches!(self, Self::Z | Self::Y)
    }

    /// The three non-identity letters.
    pub const NONTRIVIAL: [PauliKind; 3] = [Self::X, Self::Y, Self::Z];
}

/// An n-qubit Pauli operator `i^phase · X^x · Z^z`.
///
/// The phase exponent is tracked modulo 4 so that products obey the Pauli
/// group relations exactly; `Y = i·X·Z` under this convention.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PauliOperator {
    n: usize,
    x: BitVec,
    z: BitVec,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self { n, x: BitVec::zeros(n), z: BitVec::zeros(n), phase: 0 }
    }

    pub fn from_xz(x: BitVec, z: BitVec) -> Self {
        assert_eq!(x.len(), z.len());
        let n = x.len();
        Self { n, x, z, phase: 0 }
    }

    /// Single-qubit Pauli embedded at `qubit`.
    pub fn single(n: usize, qubit: usize, kind: PauliKind) -> Self {
        let mut p = Self::identity(n);
        p.set(qubit, kind);
        p
    }

    /// Parses a word over {I, X, Y, Z}.
    pub fn from_str_word(word: &str) -> Option<Self> {
        let mut p = Self::identity(word.chars().count());
        for (i, c) in word.chars().enumerate() {
            p.set(i, PauliKind::from_char(c)?);
        }
        Some(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn set_phase(&mut self, phase: u8) {
        self.phase = phase % 4;
    }

    pub fn x_bit(&self, i: usize) -> bool {
        self.x.get(i)
    }

    pub fn z_bit(&self, i: usize) -> bool {
        self.z.get(i)
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn kind(&self, i: usize) -> PauliKind {
        match (self.x.get(i), self.z.get(i)) {
            (false, false) => PauliKind::I,
            (true, false) => PauliKind::X,
            (true, true) => PauliKind::Y,
            (false, true) => PauliKind::Z,
        }
    }

    /// Sets the letter at `i`, adjusting the phase so the operator equals the
    /// literal product of its letters (`Y` contributes a factor `i` to `XZ`).
    pub fn set(&mut self, i: usize, kind: PauliKind) {
        // Remove any existing i-factor at this site before writing.
        if self.x.get(i) && self.z.get(i) {
            self.phase = (self.phase + 3) % 4;
        }
        self.x.set(i, kind.has_x());
        self.z.set(i, kind.has_z());
        if kind == PauliKind::Y {
            self.phase = (self.phase + 1) % 4;
        }
    }

    pub fn weight(&self) -> usize {
        (0..self.n).filter(|&i| self.kind(i) != PauliKind::I).count()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.kind(i) != PauliKind::I).collect()
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.n, other.n);
        !(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    /// In-place product `self := self · other` with exact phase.
    pub fn mul_assign(&mut self, other: &PauliOperator) {
        assert_eq!(self.n, other.n);
        // X^a Z^b · X^c Z^d = (-1)^(b·c) X^(a+c) Z^(b+d)
        if self.z.dot(&other.x) {
            self.phase = (self.phase + 2) % 4;
        }
        self.phase = (self.phase + other.phase) % 4;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    pub fn mul(&self, other: &PauliOperator) -> PauliOperator {
        let mut p = self.clone();
        p.mul_assign(other);
        p
    }

    /// Restriction to a subset of qubits, reindexed by position in `qubits`.
    pub fn restrict(&self, qubits: &[usize]) -> PauliOperator {
        let mut p = PauliOperator::identity(qubits.len());
        for (j, &q) in qubits.iter().enumerate() {
            p.x.set(j, self.x.get(q));
            p.z.set(j, self.z.get(q));
        }
        p
    }

    /// Embeds an operator on `qubits` into an n-qubit word.
    pub fn embed(&self, n: usize, qubits: &[usize]) -> PauliOperator {
        assert_eq!(self.n, qubits.len());
        let mut p = PauliOperator::identity(n);
        for (j, &q) in qubits.iter().enumerate() {
            p.x.set(q, self.x.get(j));
            p.z.set(q, self.z.get(j));
        }
        p.phase = self.phase;
        p
    }

    pub fn word_string(&self) -> String {
        (0..self.n).map(|i| self.kind(i).to_char()).collect()
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{}{}", sign, self.word_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_group_relations() {
        let x = PauliOperator::single(1, 0, PauliKind::X);
        let z = PauliOperator::single(1, 0, PauliKind::Z);
        let y = PauliOperator::single(1, 0, PauliKind::Y);

        // XZ = -ZX
        let xz = x.mul(&z);
        let zx = z.mul(&x);
        assert_eq!(xz.x_bits(), zx.x_bits());
        assert_eq!((xz.phase() + 2) % 4, zx.phase());

        // Y = iXZ, so X·Z = -i·Y
        assert_eq!(xz.phase(), (y.phase() + 3) % 4);

        // X² = Z² = Y² = I with phase +1
        for p in [&x, &z, &y] {
            let sq = p.mul(p);
            assert!(sq.is_identity_up_to_phase());
            assert_eq!(sq.phase(), 0);
        }
    }

    #[test]
    fn commutation() {
        let xi = PauliOperator::from_str_word("XI").unwrap();
        let zi = PauliOperator::from_str_word("ZI").unwrap();
        let zz = PauliOperator::from_str_word("ZZ").unwrap();
        let xx = PauliOperator::from_str_word("XX").unwrap();
        assert!(!xi.commutes_with(&zi));
        assert!(xx.commutes_with(&zz));
        assert!(xi.commutes_with(&zz) == false);
        assert!(xx.commutes_with(&zi) == false);
    }

    #[test]
    fn word_roundtrip() {
        let p = PauliOperator::from_str_word("IXYZ").unwrap();
        assert_eq!(p.word_string(), "IXYZ");
        assert_eq!(p.weight(), 3);
        // One Y contributes a single i factor.
        assert_eq!(p.phase(), 1);
    }
}
