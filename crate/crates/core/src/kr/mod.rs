//! Kirillov-Reshetikhin crystals `B^{r,s}` with their affine 0-arrows.

pub mod special;
pub mod type_a;
pub mod vertical;
pub mod virtual_crystal;

use crate::cartan::{AffineFamily, AffineType};
use crate::classical::{ClassicalGraph, Element, Tableau, NONE};
use crate::crystal::Crystal;
use crate::partition::{kr_components, Kind};
use std::collections::HashMap;

/// Default vertex cap for generation.
pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum KrError {
    #[error("rank guard violated: {0}")]
    RankGuard(String),
    #[error("vertex cap of {cap} exceeded")]
    TooLarge { cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("cache: {0}")]
    Cache(String),
}

/// An explicit KR crystal: vertices are tableaux of the classical type,
/// with edge tables for every color in `I = {0, …, rank}`.
#[derive(Clone, Debug)]
pub struct KrCrystal {
    pub aff: AffineType,
    pub r: usize,
    pub s: usize,
    pub vertices: Vec<Tableau>,
    pub index: HashMap<Tableau, u32>,
    f: Vec<Vec<u32>>,
    e: Vec<Vec<u32>>,
    eps: Vec<Vec<u16>>,
    phi: Vec<Vec<u16>>,
    weights: Vec<Vec<i32>>,
}

impl KrCrystal {
    pub fn new(aff: &AffineType, r: usize, s: usize) -> Result<KrCrystal, KrError> {
        KrCrystal::with_cap(aff, r, s, DEFAULT_CAP)
    }

    pub fn with_cap(aff: &AffineType, r: usize, s: usize, cap: usize) -> Result<KrCrystal, KrError> {
        let n = aff.n();
        if r == 0 || s == 0 {
            return Err(KrError::Unsupported("r and s must be positive".into()));
        }
        let too_big = |_| KrError::TooLarge { cap };
        match aff.family {
            AffineFamily::A1 => {
                if r >= n {
                    return Err(KrError::RankGuard(format!("r = {} must be below n = {}", r, n)));
                }
                let g = ClassicalGraph::highest_weight(aff.classical, &crate::partition::Partition::rectangle(r, s), cap)
                    .map_err(too_big)?;
                let verts: Vec<Tableau> = g.vertices.iter().map(|e| e.0[0].clone()).collect();
                let index: HashMap<Tableau, u32> = verts.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
                let pr: Vec<usize> = verts.iter().map(|t| index[&type_a::promotion(t, n)] as usize).collect();
                let mut prinv = vec![usize::MAX; verts.len()];
                for (a, &b) in pr.iter().enumerate() {
                    if prinv[b] != usize::MAX {
                        return Err(KrError::Invariant("promotion is not a bijection".into()));
                    }
                    prinv[b] = a;
                }
                let f0: Vec<u32> = (0..verts.len())
                    .map(|b| g.fv(1, pr[b]).map_or(NONE, |x| prinv[x] as u32))
                    .collect();
                KrCrystal::from_tables(aff, r, s, verts, f0)
            }
            AffineFamily::D1 | AffineFamily::A2Odd => {
                if r + 2 > n {
                    return Err(KrError::RankGuard(format!("r = {} exceeds n - 2 = {}", r, n - 2)));
                }
                let lams = kr_components(Kind::Column, n, r, s).map_err(|e| KrError::RankGuard(e.to_string()))?;
                let seeds: Vec<Element> = lams.iter().map(|l| Element::single(Tableau::highest(l))).collect();
                let g = ClassicalGraph::generate(aff.classical, &seeds, cap).map_err(too_big)?;
                let verts: Vec<Tableau> = g.vertices.iter().map(|e| e.0[0].clone()).collect();
                let engine = vertical::VerticalEngine::new(aff.classical, r, s);
                let f0: Vec<u32> = verts
                    .iter()
                    .map(|t| engine.f0(t).map_or(NONE, |x| g.index[&Element::single(x)]))
                    .collect();
                KrCrystal::from_tables(aff, r, s, verts, f0)
            }
            AffineFamily::C1 | AffineFamily::D2 => {
                if r + 2 > n + 1 {
                    return Err(KrError::RankGuard(format!("r = {} exceeds n - 1 = {}", r, n - 1)));
                }
                let mut pairs = virtual_crystal::build(aff.family, n, r, s, cap)?;
                pairs.sort();
                let verts: Vec<Tableau> = pairs.iter().map(|p| p.0.clone()).collect();
                let index: HashMap<&Tableau, u32> = verts.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
                let f0 = pairs.iter().map(|p| p.1.as_ref().map_or(NONE, |x| index[x])).collect();
                KrCrystal::from_tables(aff, r, s, verts, f0)
            }
        }
    }

    /// Builds all tables from a closed vertex set and its `f_0` table.
    pub fn from_tables(aff: &AffineType, r: usize, s: usize, vertices: Vec<Tableau>, f0: Vec<u32>) -> Result<KrCrystal, KrError> {
        let bad = |m: String| Err(KrError::Invariant(m));
        let ct = aff.classical;
        let len = vertices.len();
        if f0.len() != len {
            return bad(format!("f_0 table has {} entries for {} vertices", f0.len(), len));
        }
        if let Some(&w) = f0.iter().find(|&&w| w != NONE && w as usize >= len) {
            return bad(format!("f_0 target {} out of range", w));
        }
        let index: HashMap<Tableau, u32> = vertices.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
        if index.len() != len {
            return bad("repeated vertex".into());
        }
        let k = aff.rank();
        let mut f = vec![vec![NONE; len]; k + 1];
        f[0] = f0;
        for (v, t) in vertices.iter().enumerate() {
            for i in 1..=k {
                if let Some(x) = t.f(ct, i) {
                    match index.get(&x) {
                        Some(&w) => f[i][v] = w,
                        None => return bad(format!("{} leaves the vertex set", x)),
                    }
                }
            }
        }
        let mut e = vec![vec![NONE; len]; k + 1];
        for i in 0..=k {
            for v in 0..len {
                let w = f[i][v];
                if w != NONE {
                    if e[i][w as usize] != NONE {
                        return bad(format!("f_{} is not injective", i));
                    }
                    e[i][w as usize] = v as u32;
                }
            }
        }
        let walk = |tab: &Vec<u32>, v: usize| -> Result<u16, KrError> {
            let mut c = 0usize;
            let mut x = v;
            while tab[x] != NONE {
                x = tab[x] as usize;
                c += 1;
                if c > len {
                    return Err(KrError::Invariant("string of infinite length".into()));
                }
            }
            Ok(c as u16)
        };
        let strings = |tabs: &Vec<Vec<u32>>| -> Result<Vec<Vec<u16>>, KrError> {
            tabs.iter().map(|t| (0..len).map(|v| walk(t, v)).collect()).collect()
        };
        let eps = strings(&e)?;
        let phi = strings(&f)?;
        let weights = vertices.iter().map(|t| t.weight(ct.n)).collect();
        Ok(KrCrystal { aff: aff.clone(), r, s, vertices, index, f, e, eps, phi, weights })
    }

    pub fn kind(&self) -> Kind {
        self.aff.kind()
    }

    pub fn level(&self) -> usize {
        self.aff.level(self.r, self.s)
    }

    pub fn find(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).map(|&v| v as usize)
    }

    pub fn tableau(&self, b: usize) -> &Tableau {
        &self.vertices[b]
    }

    /// All edges `(source, target, color)` with `target = f_color(source)`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for i in 0..=self.rank() {
                if let Some(w) = self.f(i, v) {
                    out.push((v, w, i));
                }
            }
        }
        out
    }
}

impl Crystal for KrCrystal {
    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn rank(&self) -> usize {
        self.aff.rank()
    }

    fn is_affine(&self) -> bool {
        true
    }

    fn e(&self, i: usize, b: usize) -> Option<usize> {
        let w = self.e[i][b];
        (w != NONE).then_some(w as usize)
    }

    fn f(&self, i: usize, b: usize) -> Option<usize> {
        let w = self.f[i][b];
        (w != NONE).then_some(w as usize)
    }

    fn eps(&self, i: usize, b: usize) -> usize {
        self.eps[i][b] as usize
    }

    fn phi(&self, i: usize, b: usize) -> usize {
        self.phi[i][b] as usize
    }

    fn weight(&self, b: usize) -> Vec<i32> {
        self.weights[b].clone()
    }

    fn label(&self, b: usize) -> String {
        self.vertices[b].to_string()
    }
}
