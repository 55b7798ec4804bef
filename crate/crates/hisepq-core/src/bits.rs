//! Fixed-width bit strings used for measurement registers and histogram
//! states.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An `n`-bit string. Bit `i` is stored at byte `i / 8`, bit `i % 8`, so the
/// byte form is exactly the padded-to-whole-bytes layout written out by FHR.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateBits {
    bytes: Vec<u8>,
    n_bits: usize,
}

impl StateBits {
    pub fn zero(n_bits: usize) -> Self {
        Self {
            bytes: vec![0u8; n_bits.div_ceil(8)],
            n_bits,
        }
    }

    /// Builds a state from an integer; bit `i` of `value` becomes qubit `i`.
    pub fn from_u64(value: u64, n_bits: usize) -> Self {
        let mut s = Self::zero(n_bits);
        for bit in 0..n_bits.min(64) {
            if value >> bit & 1 == 1 {
                s.set(bit, true);
            }
        }
        s
    }

    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn is_empty(&self) -> bool {
        self.n_bits == 0
    }

    pub fn get(&self, bit: usize) -> bool {
        debug_assert!(bit < self.n_bits);
        self.bytes[bit / 8] >> (bit % 8) & 1 == 1
    }

    pub fn set(&mut self, bit: usize, value: bool) {
        debug_assert!(bit < self.n_bits);
        let mask = 1u8 << (bit % 8);
        if value {
            self.bytes[bit / 8] |= mask;
        } else {
            self.bytes[bit / 8] &= !mask;
        }
    }

    /// Little-endian byte view, zero-padded to whole bytes.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Interprets the low 64 bits as an integer (convenient in tests and
    /// demos with small qubit counts).
    pub fn to_u64(&self) -> u64 {
        let mut v = 0u64;
        for (i, b) in self.bytes.iter().take(8).enumerate() {
            v |= (*b as u64) << (8 * i);
        }
        v
    }
}

/// Renders with qubit `n-1` leftmost and qubit `0` rightmost.
impl fmt::Display for StateBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in (0..self.n_bits).rev() {
            f.write_str(if self.get(bit) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for StateBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateBits({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut s = StateBits::zero(10);
        s.set(0, true);
        s.set(9, true);
        assert!(s.get(0) && s.get(9));
        assert!(!s.get(5));
        assert_eq!(s.bytes(), &[0b0000_0001, 0b0000_0010]);
        s.set(9, false);
        assert!(!s.get(9));
    }

    #[test]
    fn display_msb_left() {
        let s = StateBits::from_u64(0b101, 5);
        assert_eq!(alloc::format!("{s}"), "00101");
        assert_eq!(s.to_u64(), 0b101);
    }
}
