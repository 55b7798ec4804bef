//! Gate-operation lookup table: maps the 7-bit gate identifiers carried in
//! bundles to the 8-bit micro-codes sent to the pulse backend.

use alloc::collections::BTreeMap;
use alloc::string::String;

/// Micro-code reserved for measurement; never assigned to unitary gates.
pub const MEASURE_MICRO: u8 = 0xFF;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateArity {
    /// Operates on single-qubit targets (mask registers, `S` banks).
    Single,
    /// Operates on source/target pairs (immediate registers, `T` banks).
    Pair,
}

#[derive(Debug, Clone)]
pub struct GateInfo {
    pub name: String,
    pub micro: u8,
    pub arity: GateArity,
    pub is_measure: bool,
}

/// Lookup table from gate id to micro-code, arity and measurement flag.
/// Contents are configuration, loaded at startup; [`GateOpLut::standard`]
/// provides the default assignment used by the assembler and benchmarks.
#[derive(Debug, Clone, Default)]
pub struct GateOpLut {
    by_id: BTreeMap<u8, GateInfo>,
}

impl GateOpLut {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Default table: six single-qubit gates, three two-qubit gates and
    /// measurement on id 127 with the reserved micro-code.
    pub fn standard() -> Self {
        let mut lut = Self::empty();
        let single = [
            ("H", 1u8, 0x01u8),
            ("X", 2, 0x02),
            ("Y", 3, 0x03),
            ("Z", 4, 0x04),
            ("S", 5, 0x05),
            ("T", 6, 0x06),
        ];
        for (name, id, micro) in single {
            lut.insert(id, name, micro, GateArity::Single, false);
        }
        let pair = [("CZ", 16u8, 0x10u8), ("CNOT", 17, 0x11), ("SWAP", 18, 0x12)];
        for (name, id, micro) in pair {
            lut.insert(id, name, micro, GateArity::Pair, false);
        }
        lut.insert(127, "MEASURE", MEASURE_MICRO, GateArity::Single, true);
        lut
    }

    pub fn insert(&mut self, id: u8, name: &str, micro: u8, arity: GateArity, is_measure: bool) {
        debug_assert!(id < 128, "gate ids are 7-bit");
        self.by_id.insert(
            id,
            GateInfo {
                name: String::from(name),
                micro,
                arity,
                is_measure,
            },
        );
    }

    pub fn lookup(&self, id: u8) -> Option<&GateInfo> {
        self.by_id.get(&id)
    }

    /// Case-insensitive name lookup, used by the assembler.
    pub fn id_by_name(&self, name: &str) -> Option<u8> {
        self.by_id
            .iter()
            .find(|(_, info)| info.name.eq_ignore_ascii_case(name))
            .map(|(id, _)| *id)
    }

    /// Reverse lookup by micro-code; micro-codes in one table are expected
    /// to be distinct.
    pub fn id_by_micro(&self, micro: u8) -> Option<u8> {
        self.by_id
            .iter()
            .find(|(_, info)| info.micro == micro)
            .map(|(id, _)| *id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u8, &GateInfo)> {
        self.by_id.iter().map(|(id, info)| (*id, info))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_table_sane() {
        let lut = GateOpLut::standard();
        let x = lut.lookup(2).unwrap();
        assert_eq!(x.name, "X");
        assert_eq!(x.arity, GateArity::Single);
        let cz = lut.lookup(16).unwrap();
        assert_eq!(cz.arity, GateArity::Pair);
        let m = lut.lookup(127).unwrap();
        assert!(m.is_measure);
        assert_eq!(m.micro, MEASURE_MICRO);
        assert_eq!(lut.id_by_name("cnot"), Some(17));
        assert_eq!(lut.id_by_micro(0x10), Some(16));
    }
}
