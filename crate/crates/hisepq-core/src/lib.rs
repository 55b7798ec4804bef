//! Core library for the HiSEP-Q quantum control processor toolchain.
//!
//! Everything in this crate is deterministic and `no_std`-compatible
//! (allocation is required). The crate covers:
//!
//! - [`isa`]: the binary instruction set — typed instruction model,
//!   bit-level encoding/decoding and program-size accounting.
//! - [`asm`]: a two-pass textual assembler and the matching disassembler.
//! - [`sim`]: a cycle-level simulator of the hybrid processing core,
//!   including timed per-qubit FIFOs and measurement feedback.
//! - [`histogram`]: the onboard result accumulator with streaming top-M
//!   sorting and its transmission-reduction accounting.
//! - [`bench`]: benchmark circuit generators, the compiler from circuit IR
//!   to instruction sequences, and an analytical mask-ISA cost model used
//!   for encoding-efficiency comparisons.
//!
//! File formats, JSON configuration and the command-line front end live in
//! the companion `hisepq-tools` crate.
//!
//! All types are plain values: they can be moved freely between threads but
//! are not internally synchronized. Simulation state is mutated
//! single-threaded; parallel benchmark sweeps own one state per job.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod asm;
pub mod bench;
pub mod bits;
pub mod gates;
pub mod histogram;
pub mod isa;
pub mod qreg;
pub mod sim;
#[doc(hidden)]
pub mod testutil;
