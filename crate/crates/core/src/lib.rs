//! Exact verification of character degree ratio bounds for finite simple
//! groups: symmetric and alternating groups through the hook length formula,
//! groups of Lie type through Steinberg and unipotent degrees, and
//! data-driven checks for the sporadic groups.

pub mod alternating;
pub mod arith;
pub mod degree_data;
pub mod interval;
pub mod lie;
pub mod partition;
pub mod poly;
pub mod primes;
pub mod structure;
