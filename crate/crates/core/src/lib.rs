//! Exact combinatorics of affine crystals of Kirillov-Reshetikhin type.

pub mod cache;
pub mod cartan;
pub mod classical;
pub mod crystal;
pub mod energy;
pub mod export;
pub mod kr;
pub mod lusztig;
pub mod partition;
pub mod poly;
pub mod rowtab;
pub mod splitting;
pub mod tensor;
pub mod verify;
