//! Tensor products of indexed crystals under Kashiwara's convention.
//!
//! An element is a mixed-radix integer with the first factor most
//! significant.

use crate::classical::signature;
use crate::crystal::Crystal;
use std::sync::Arc;

pub type Factor = Arc<dyn Crystal + Send + Sync>;

#[derive(Clone)]
pub struct TensorCrystal {
    pub factors: Vec<Factor>,
    strides: Vec<usize>,
    len: usize,
}

impl TensorCrystal {
    pub fn new(factors: Vec<Factor>) -> TensorCrystal {
        assert!(!factors.is_empty(), "empty tensor product");
        let rank = factors[0].rank();
        assert!(factors.iter().all(|f| f.rank() == rank), "factors of different rank");
        let mut strides = vec![1; factors.len()];
        for k in (0..factors.len() - 1).rev() {
            strides[k] = strides[k + 1] * factors[k + 1].len();
        }
        let len = strides[0] * factors[0].len();
        TensorCrystal { factors, strides, len }
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn encode(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.strides).map(|(p, s)| p * s).sum()
    }

    pub fn decode(&self, b: usize) -> Vec<usize> {
        self.strides.iter().zip(&self.factors).map(|(s, f)| (b / s) % f.len()).collect()
    }

    pub fn part(&self, b: usize, k: usize) -> usize {
        (b / self.strides[k]) % self.factors[k].len()
    }

    fn sig(&self, i: usize, b: usize) -> crate::classical::Signature {
        signature(self.factors.iter().enumerate().map(|(k, f)| {
            let x = self.part(b, k);
            (f.eps(i, x) as u32, f.phi(i, x) as u32)
        }))
    }

    /// Factor on which `e_i` acts, if `e_i b` is defined.
    pub fn e_side(&self, i: usize, b: usize) -> Option<usize> {
        self.sig(i, b).e_pos
    }

    /// Factor on which `f_i` acts, if `f_i b` is defined.
    pub fn f_side(&self, i: usize, b: usize) -> Option<usize> {
        self.sig(i, b).f_pos
    }

    fn replace(&self, b: usize, k: usize, old: usize, new: usize) -> usize {
        b - old * self.strides[k] + new * self.strides[k]
    }
}

impl Crystal for TensorCrystal {
    fn len(&self) -> usize {
        self.len
    }

    fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    fn is_affine(&self) -> bool {
        self.factors.iter().all(|f| f.is_affine())
    }

    fn e(&self, i: usize, b: usize) -> Option<usize> {
        let k = self.e_side(i, b)?;
        let x = self.part(b, k);
        let y = self.factors[k].e(i, x).expect("signature owner must act");
        Some(self.replace(b, k, x, y))
    }

    fn f(&self, i: usize, b: usize) -> Option<usize> {
        let k = self.f_side(i, b)?;
        let x = self.part(b, k);
        let y = self.factors[k].f(i, x).expect("signature owner must act");
        Some(self.replace(b, k, x, y))
    }

    fn eps(&self, i: usize, b: usize) -> usize {
        self.sig(i, b).eps as usize
    }

    fn phi(&self, i: usize, b: usize) -> usize {
        self.sig(i, b).phi as usize
    }

    fn weight(&self, b: usize) -> Vec<i32> {
        let mut w = self.factors[0].weight(self.part(b, 0));
        for k in 1..self.factors.len() {
            for (x, y) in w.iter_mut().zip(self.factors[k].weight(self.part(b, k))) {
                *x += y;
            }
        }
        w
    }

    fn label(&self, b: usize) -> String {
        let parts: Vec<String> = (0..self.factors.len()).map(|k| self.factors[k].label(self.part(b, k))).collect();
        parts.join(" ⊗ ")
    }
}
