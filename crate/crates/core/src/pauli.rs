//! Phaseless n-qubit Pauli operators in binary symplectic form, plus syndromes.
//!
//! An operator is a pair of packed bit-vectors: `z[j]` set means a Z component
//! on qubit `j`, `x[j]` an X component, both set a Y. Global phase is never
//! tracked; commutation and syndromes only need the symplectic inner product.

use std::fmt;

use crate::error::Error;

const WORD_BITS: usize = 64;

/// Packed bit-vector. Unused high bits of the last word are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the AND of two vectors, the workhorse of the symplectic product.
    pub fn dot_parity(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Single-qubit Pauli component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn anticommutes(self, other: Pauli) -> bool {
        use Pauli::*;
        !matches!((self, other), (I, _) | (_, I)) && self != other
    }

    fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Error-class signature of an operator: number of Z, X and Y components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliClass {
    pub z: usize,
    pub x: usize,
    pub y: usize,
}

/// An n-qubit Pauli operator without phase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    z: Bits,
    x: Bits,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "operator needs at least one qubit");
        PauliOperator {
            z: Bits::zeros(n),
            x: Bits::zeros(n),
        }
    }

    /// Builds an operator from (0-based qubit, Pauli) factors.
    pub fn from_factors(n: usize, factors: &[(usize, Pauli)]) -> Result<Self, Error> {
        let mut op = PauliOperator::identity(n);
        for &(q, p) in factors {
            if q >= n {
                return Err(Error::invalid_argument(format!(
                    "qubit index {} out of range for {} qubits",
                    q + 1,
                    n
                )));
            }
            op.set(q, p);
        }
        Ok(op)
    }

    /// Parses the text form used throughout the CLI: factors such as
    /// `"Z2 Z3"` or `"Y7"` with 1-based qubit labels; `"I"` is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self, Error> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "I" {
            return Ok(PauliOperator::identity(n));
        }
        let mut factors = Vec::new();
        for token in trimmed.split_whitespace() {
            let (letter, digits) = token.split_at(1);
            let pauli = match letter {
                "X" | "x" => Pauli::X,
                "Y" | "y" => Pauli::Y,
                "Z" | "z" => Pauli::Z,
                _ => {
                    return Err(Error::invalid_argument(format!(
                        "bad Pauli factor {token:?}; expected e.g. Z3"
                    )))
                }
            };
            let label: usize = digits.parse().map_err(|_| {
                Error::invalid_argument(format!("bad qubit label in factor {token:?}"))
            })?;
            if label == 0 || label > n {
                return Err(Error::invalid_argument(format!(
                    "qubit label {label} out of range 1..={n}"
                )));
            }
            factors.push((label - 1, pauli));
        }
        PauliOperator::from_factors(n, &factors)
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, q: usize) -> Pauli {
        match (self.z.get(q), self.x.get(q)) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::X,
            (true, true) => Pauli::Y,
            (true, false) => Pauli::Z,
        }
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        let (z, x) = match p {
            Pauli::I => (false, false),
            Pauli::X => (false, true),
            Pauli::Y => (true, true),
            Pauli::Z => (true, false),
        };
        self.z.set(q, z);
        self.x.set(q, x);
    }

    pub fn z_bits(&self) -> &Bits {
        &self.z
    }

    pub fn x_bits(&self) -> &Bits {
        &self.x
    }

    /// Number of qubits with a non-identity component.
    pub fn weight(&self) -> usize {
        self.z
            .words
            .iter()
            .zip(&self.x.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    /// Counts of Z, X and Y components; they sum to the weight.
    pub fn pauli_class(&self) -> PauliClass {
        let mut class = PauliClass { z: 0, x: 0, y: 0 };
        for (q, p) in self.iter_support() {
            let _ = q;
            match p {
                Pauli::Z => class.z += 1,
                Pauli::X => class.x += 1,
                Pauli::Y => class.y += 1,
                Pauli::I => unreachable!(),
            }
        }
        class
    }

    /// True iff the symplectic inner product vanishes.
    pub fn commutes(&self, other: &PauliOperator) -> Result<bool, Error> {
        if self.len() != other.len() {
            return Err(Error::invalid_argument(format!(
                "operator length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(!(self.z.dot_parity(&other.x) ^ self.x.dot_parity(&other.z)))
    }

    /// Phaseless product: component-wise XOR of both bit planes.
    pub fn compose(&self, other: &PauliOperator) -> Result<PauliOperator, Error> {
        if self.len() != other.len() {
            return Err(Error::invalid_argument(format!(
                "operator length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        let mut out = self.clone();
        out.z.xor_assign(&other.z);
        out.x.xor_assign(&other.x);
        Ok(out)
    }

    /// Swaps the Z and X planes (Y components are fixed points).
    pub fn hadamard_transform(&self) -> PauliOperator {
        PauliOperator {
            z: self.x.clone(),
            x: self.z.clone(),
        }
    }

    /// Applies a qubit permutation: component on qubit `q` moves to `perm[q]`.
    pub fn permuted(&self, perm: &[usize]) -> PauliOperator {
        debug_assert_eq!(perm.len(), self.len());
        let mut out = PauliOperator::identity(self.len());
        for (q, p) in self.iter_support() {
            out.set(perm[q], p);
        }
        out
    }

    /// Non-identity factors as (0-based qubit, Pauli), ascending by qubit.
    pub fn iter_support(&self) -> impl Iterator<Item = (usize, Pauli)> + '_ {
        (0..self.len()).filter_map(move |q| {
            let p = self.get(q);
            (p != Pauli::I).then_some((q, p))
        })
    }
}

impl fmt::Display for PauliOperator {
    /// Renders sorted factors with 1-based labels, e.g. `Z1 Z4 Y7`; identity is `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "I");
        }
        let mut first = true;
        for (q, p) in self.iter_support() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}{}", p.letter(), q + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Measurement outcome vector; bit i is set when the error anticommutes with
/// generator row i of the code it was measured against.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: Bits,
}

impl Syndrome {
    pub fn zeros(r: usize) -> Self {
        Syndrome { bits: Bits::zeros(r) }
    }

    pub fn from_bits(bits: Bits) -> Self {
        Syndrome { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits.set(i, value);
    }

    pub fn toggle(&mut self, i: usize) {
        self.bits.set(i, !self.bits.get(i));
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn xor(&self, other: &Syndrome) -> Syndrome {
        debug_assert_eq!(self.len(), other.len());
        let mut out = self.clone();
        out.bits.xor_assign(&other.bits);
        out
    }

    /// Indices of switched-on bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        let op = PauliOperator::parse(13, "Z1 Z4 Y7").unwrap();
        assert_eq!(op.to_string(), "Z1 Z4 Y7");
        assert_eq!(op.get(0), Pauli::Z);
        assert_eq!(op.get(6), Pauli::Y);
        assert_eq!(PauliOperator::identity(5).to_string(), "I");
        assert_eq!(PauliOperator::parse(5, "I").unwrap(), PauliOperator::identity(5));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(PauliOperator::parse(5, "Q3").is_err());
        assert!(PauliOperator::parse(5, "Z0").is_err());
        assert!(PauliOperator::parse(5, "Z6").is_err());
        assert!(PauliOperator::parse(5, "Zx").is_err());
    }

    #[test]
    fn compose_is_self_inverse() {
        let z1 = PauliOperator::parse(13, "Z1").unwrap();
        assert!(z1.compose(&z1).unwrap().is_identity());
    }

    #[test]
    fn z_times_x_is_y() {
        let z7 = PauliOperator::parse(13, "Z7").unwrap();
        let x7 = PauliOperator::parse(13, "X7").unwrap();
        let y7 = PauliOperator::parse(13, "Y7").unwrap();
        assert_eq!(z7.compose(&x7).unwrap(), y7);
    }

    #[test]
    fn compose_weight_example() {
        let a = PauliOperator::parse(13, "Z6 Z8").unwrap();
        let b = PauliOperator::parse(13, "Y7").unwrap();
        assert_eq!(a.compose(&b).unwrap().weight(), 3);
    }

    #[test]
    fn identity_commutes_with_everything() {
        let id = PauliOperator::identity(13);
        let g3 = PauliOperator::parse(13, "Y1 Z4 Z6").unwrap();
        assert!(id.commutes(&g3).unwrap());
    }

    #[test]
    fn z1_anticommutes_with_y1_generator() {
        let z1 = PauliOperator::parse(13, "Z1").unwrap();
        let g3 = PauliOperator::parse(13, "Y1 Z4 Z6").unwrap();
        assert!(!z1.commutes(&g3).unwrap());
    }

    #[test]
    fn length_mismatch_is_invalid_argument() {
        let a = PauliOperator::identity(3);
        let b = PauliOperator::identity(4);
        assert!(a.commutes(&b).is_err());
        assert!(a.compose(&b).is_err());
    }

    #[test]
    fn pauli_class_counts() {
        let op = PauliOperator::parse(13, "Z1 X2 Y3").unwrap();
        assert_eq!(op.pauli_class(), PauliClass { z: 1, x: 1, y: 1 });
        let zz = PauliOperator::parse(13, "Z6 Z8").unwrap();
        assert_eq!(zz.pauli_class(), PauliClass { z: 2, x: 0, y: 0 });
        let y7 = PauliOperator::parse(13, "Y7").unwrap();
        assert_eq!(y7.pauli_class(), PauliClass { z: 0, x: 0, y: 1 });
    }

    #[test]
    fn bits_iter_ones_crosses_word_boundary() {
        let mut bits = Bits::zeros(130);
        bits.set(0, true);
        bits.set(63, true);
        bits.set(64, true);
        bits.set(129, true);
        assert_eq!(bits.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(bits.count_ones(), 4);
    }
}
