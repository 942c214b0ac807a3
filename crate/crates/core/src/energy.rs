//! Combinatorial R-matrices, coenergy `H̄`, intrinsic coenergy `D̄`, energy
//! `D` and one-dimensional sums.

use crate::cartan::AffineType;
use crate::crystal::Crystal;
use crate::kr::{KrCrystal, KrError};
use crate::partition::{Kind, Partition, RectangleList};
use crate::poly::LaurentPoly;
use crate::tensor::{Factor, TensorCrystal};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EnergyError {
    #[error("R-matrix propagation conflict at {0}")]
    Conflict(String),
    #[error("R-matrix is not equivariant at {0}")]
    NotEquivariant(String),
    #[error("{0} vertices unreached by propagation")]
    Unreached(usize),
    #[error(transparent)]
    Kr(#[from] KrError),
}

/// The isomorphism `B_1 ⊗ B_2 → B_2 ⊗ B_1` with the coenergy of each
/// source vertex.
pub struct RMatrix {
    pub src: TensorCrystal,
    pub tgt: TensorCrystal,
    pub map: Vec<u32>,
    pub hbar: Vec<i32>,
}

impl RMatrix {
    /// Propagates from `u_1 ⊗ u_2 ↦ u_2 ⊗ u_1` with `H̄ = 0` along every
    /// color; across 0-arrows `H̄` moves by `−1` (LL), `+1` (RR) or `0`.
    pub fn new(b1: Factor, u1: usize, b2: Factor, u2: usize) -> Result<RMatrix, EnergyError> {
        let src = TensorCrystal::new(vec![b1.clone(), b2.clone()]);
        let tgt = TensorCrystal::new(vec![b2, b1]);
        let len = src.len();
        let mut map = vec![u32::MAX; len];
        let mut hbar = vec![i32::MIN; len];
        let start = src.encode(&[u1, u2]);
        map[start] = tgt.encode(&[u2, u1]) as u32;
        hbar[start] = 0;
        let delta = |x: usize, y: usize| match (src.e_side(0, x), tgt.e_side(0, y)) {
            (Some(0), Some(0)) => -1,
            (Some(1), Some(1)) => 1,
            _ => 0,
        };
        let colors = src.colors();
        let mut q = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(x) = q.pop_front() {
            let y = map[x] as usize;
            for &i in &colors {
                for raise in [false, true] {
                    let (xs, ys) = if raise { (src.e(i, x), tgt.e(i, y)) } else { (src.f(i, x), tgt.f(i, y)) };
                    let (x2, y2) = match (xs, ys) {
                        (Some(a), Some(b)) => (a, b),
                        (None, None) => continue,
                        _ => return Err(EnergyError::NotEquivariant(src.label(x))),
                    };
                    let h = match (i, raise) {
                        (0, true) => hbar[x] + delta(x, y),
                        (0, false) => hbar[x] - delta(x2, y2),
                        _ => hbar[x],
                    };
                    if map[x2] == u32::MAX {
                        map[x2] = y2 as u32;
                        hbar[x2] = h;
                        reached += 1;
                        q.push_back(x2);
                    } else if map[x2] != y2 as u32 || hbar[x2] != h {
                        return Err(EnergyError::Conflict(src.label(x2)));
                    }
                }
            }
        }
        if reached != len {
            return Err(EnergyError::Unreached(len - reached));
        }
        Ok(RMatrix { src, tgt, map, hbar })
    }

    /// `R(b_1 ⊗ b_2) = (b_2', b_1')`.
    pub fn apply(&self, b1: usize, b2: usize) -> (usize, usize) {
        let y = self.map[self.src.encode(&[b1, b2])] as usize;
        (self.tgt.part(y, 0), self.tgt.part(y, 1))
    }

    pub fn hbar_of(&self, b1: usize, b2: usize) -> i32 {
        self.hbar[self.src.encode(&[b1, b2])]
    }

    /// `R_{B_2,B_1} = R_{B_1,B_2}^{-1}` with `H̄_{B_2,B_1}∘R = H̄_{B_1,B_2}`.
    pub fn inverse(&self) -> RMatrix {
        let mut map = vec![u32::MAX; self.map.len()];
        let mut hbar = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y as usize] = x as u32;
            hbar[y as usize] = self.hbar[x];
        }
        RMatrix { src: self.tgt.clone(), tgt: self.src.clone(), map, hbar }
    }
}

/// `D̄_B(b) = H̄_{B,B}(m' ⊗ b) − H̄_{B,B}(m' ⊗ u)`, independent of the
/// good-arrow search on `B`.
///
/// Up to `full_limit` vertices the whole of `B ⊗ B` is propagated. Beyond
/// that the good arrows of `B` are lifted to `m' ⊗ B` and each 0-step is
/// classified with the tensor rule.
pub fn dbar_via_m_prime(k: &Arc<KrCrystal>, full_limit: usize) -> Result<Vec<i64>, EnergyError> {
    let mp = k.m_prime()?;
    let u = k.u()?;
    if k.len() <= full_limit {
        let rm = RMatrix::new(k.clone(), u, k.clone(), u)?;
        let base = rm.hbar_of(mp, u) as i64;
        return Ok((0..k.len()).map(|b| rm.hbar_of(mp, b) as i64 - base).collect());
    }
    let t = TensorCrystal::new(vec![k.clone() as Factor, k.clone() as Factor]);
    let mut d = vec![i64::MIN; k.len()];
    d[u] = 0;
    let mut q = VecDeque::from([u]);
    while let Some(x) = q.pop_front() {
        let tx = t.encode(&[mp, x]);
        for st in k.good_steps(x) {
            let (ty, side) = if st.raise { (t.e(st.color, tx), t.e_side(st.color, tx)) } else { (t.f(st.color, tx), t.f_side(st.color, tx)) };
            if side != Some(1) || ty.map(|y| t.part(y, 1)) != Some(st.to) || t.part(ty.unwrap(), 0) != mp {
                return Err(EnergyError::Conflict(format!("lift of {} at color {}", k.label(x), st.color)));
            }
            // R is the identity, so only the RR case can occur.
            let h = match (st.color, st.raise) {
                (0, true) => d[x] + 1,
                (0, false) => d[x] - i64::from(t.e_side(0, ty.unwrap()) == Some(1)),
                _ => d[x],
            };
            if d[st.to] == i64::MIN {
                d[st.to] = h;
                q.push_back(st.to);
            } else if d[st.to] != h {
                return Err(EnergyError::Conflict(k.label(st.to)));
            }
        }
    }
    if let Some(miss) = d.iter().position(|&v| v == i64::MIN) {
        return Err(EnergyError::Conflict(format!("unreached {}", k.label(miss))));
    }
    Ok(d)
}

type Rect = (usize, usize);

/// Caches KR crystals, R-matrices and single-factor `D̄` tables for one
/// affine type.
pub struct EnergyContext {
    pub aff: AffineType,
    pub cap: usize,
    krs: Mutex<HashMap<Rect, Arc<KrCrystal>>>,
    rms: Mutex<HashMap<(Rect, Rect), Arc<RMatrix>>>,
    dbars: Mutex<HashMap<Rect, Arc<Vec<i64>>>>,
    sigmas: Mutex<HashMap<Rect, Arc<Vec<usize>>>>,
    cache_dir: Option<std::path::PathBuf>,
}

impl EnergyContext {
    pub fn new(aff: AffineType) -> EnergyContext {
        EnergyContext::with_cap(aff, crate::kr::DEFAULT_CAP)
    }

    pub fn with_cap(aff: AffineType, cap: usize) -> EnergyContext {
        EnergyContext { aff, cap, krs: Mutex::default(), rms: Mutex::default(), dbars: Mutex::default(), sigmas: Mutex::default(), cache_dir: None }
    }

    /// Reads KR crystals from `dir` and stores newly generated ones there.
    pub fn with_cache_dir(mut self, dir: Option<std::path::PathBuf>) -> EnergyContext {
        self.cache_dir = dir;
        self
    }

    pub fn kr(&self, rect: Rect) -> Result<Arc<KrCrystal>, KrError> {
        if let Some(k) = self.krs.lock().unwrap().get(&rect) {
            return Ok(k.clone());
        }
        let k = match &self.cache_dir {
            Some(dir) => Arc::new(crate::cache::load_or_generate(dir, &self.aff, rect.0, rect.1, self.cap)?),
            None => Arc::new(KrCrystal::with_cap(&self.aff, rect.0, rect.1, self.cap)?),
        };
        Ok(self.krs.lock().unwrap().entry(rect).or_insert(k).clone())
    }

    /// Registers an externally built crystal, e.g. one loaded from cache.
    pub fn insert_kr(&self, k: KrCrystal) {
        self.krs.lock().unwrap().insert((k.r, k.s), Arc::new(k));
    }

    pub fn rmatrix(&self, a: Rect, b: Rect) -> Result<Arc<RMatrix>, EnergyError> {
        if let Some(m) = self.rms.lock().unwrap().get(&(a, b)) {
            return Ok(m.clone());
        }
        let rev = self.rms.lock().unwrap().get(&(b, a)).cloned();
        if let Some(r) = rev {
            let m = Arc::new(r.inverse());
            return Ok(self.rms.lock().unwrap().entry((a, b)).or_insert(m).clone());
        }
        let (ka, kb) = (self.kr(a)?, self.kr(b)?);
        let (ua, ub) = (ka.u()?, kb.u()?);
        let m = Arc::new(RMatrix::new(ka, ua, kb, ub)?);
        Ok(self.rms.lock().unwrap().entry((a, b)).or_insert(m).clone())
    }

    pub fn dbar_single(&self, rect: Rect) -> Result<Arc<Vec<i64>>, KrError> {
        if let Some(d) = self.dbars.lock().unwrap().get(&rect) {
            return Ok(d.clone());
        }
        let d = Arc::new(self.kr(rect)?.dbar()?);
        Ok(self.dbars.lock().unwrap().entry(rect).or_insert(d).clone())
    }

    pub fn sigma(&self, rect: Rect) -> Result<Arc<Vec<usize>>, KrError> {
        if let Some(x) = self.sigmas.lock().unwrap().get(&rect) {
            return Ok(x.clone());
        }
        let x = Arc::new(self.kr(rect)?.sigma()?);
        Ok(self.sigmas.lock().unwrap().entry(rect).or_insert(x).clone())
    }

    /// `σ` on a tensor product, factor by factor.
    pub fn sigma_tensor(&self, rects: &RectangleList, b: &[usize]) -> Result<Vec<usize>, KrError> {
        rects.rects().iter().zip(b).map(|(&r, &x)| Ok(self.sigma(r)?[x])).collect()
    }

    pub fn tensor(&self, rects: &RectangleList) -> Result<TensorCrystal, KrError> {
        let fs: Result<Vec<Factor>, KrError> = rects.rects().iter().map(|&r| self.kr(r).map(|k| k as Factor)).collect();
        Ok(TensorCrystal::new(fs?))
    }

    /// Moves factor `j` to the front by adjacent R-matrices; returns the
    /// element after each step, indexed by the position factor `j` reached.
    fn move_left(&self, rects: &[Rect], b: &[usize], j: usize) -> Result<Vec<usize>, EnergyError> {
        let mut cur_r = rects.to_vec();
        let mut cur = b.to_vec();
        let mut at = vec![usize::MAX; j + 1];
        at[j] = cur[j];
        for pos in (0..j).rev() {
            let rm = self.rmatrix(cur_r[pos], cur_r[pos + 1])?;
            let (y, x) = rm.apply(cur[pos], cur[pos + 1]);
            cur[pos] = y;
            cur[pos + 1] = x;
            cur_r.swap(pos, pos + 1);
            at[pos] = y;
        }
        Ok(at)
    }

    /// `D̄` of a tensor element through adjacent R-matrix shuffles.
    pub fn dbar_tensor(&self, rects: &RectangleList, b: &[usize]) -> Result<i64, EnergyError> {
        let rs = rects.rects();
        let mut total = 0i64;
        for j in 0..rs.len() {
            let at = self.move_left(rs, b, j)?;
            total += self.dbar_single(rs[j])?[at[0]];
            for i in 0..j {
                total += self.rmatrix(rs[i], rs[j])?.hbar_of(b[i], at[i + 1]) as i64;
            }
        }
        Ok(total)
    }

    /// `2/|◇|` for kinds `(1)`, `(2)`, `(1,1)`; 1 in type A.
    pub fn energy_scale(&self) -> i64 {
        match self.aff.kind() {
            Kind::Empty => 1,
            k => 2 / k.size() as i64,
        }
    }

    /// `D = (2/|◇|)‖R‖ − D̄`.
    pub fn energy_tensor(&self, rects: &RectangleList, b: &[usize]) -> Result<i64, EnergyError> {
        Ok(self.energy_scale() * rects.norm() as i64 - self.dbar_tensor(rects, b)?)
    }

    /// `H = (2/|◇|)|R_1 ∩ R_2| − H̄` on `B^{r_1,s_1} ⊗ B^{r_2,s_2}`.
    pub fn local_energy(&self, a: Rect, b: Rect, b1: usize, b2: usize) -> Result<i64, EnergyError> {
        let overlap = self.energy_scale() * (a.0.min(b.0) * a.1.min(b.1)) as i64;
        Ok(overlap - self.rmatrix(a, b)?.hbar_of(b1, b2) as i64)
    }

    /// `I_0`-highest elements of a tensor product, as factor tuples.
    pub fn highest_elements(&self, rects: &RectangleList) -> Result<Vec<Vec<usize>>, EnergyError> {
        let t = self.tensor(rects)?;
        let colors = t.classical_colors();
        let first: Vec<usize> = t.factors[0].highest_weight_vertices(&colors);
        let rest: usize = t.len() / t.factors[0].len();
        let mut out = Vec::new();
        for &a in &first {
            for k in 0..rest {
                let b = a * rest + k;
                if colors.iter().all(|&i| t.e(i, b).is_none()) {
                    out.push(t.decode(b));
                }
            }
        }
        Ok(out)
    }

    /// All one-dimensional sums `X̄_{λ,B}` with nonzero value.
    pub fn one_dim_sums(&self, rects: &RectangleList) -> Result<BTreeMap<Partition, LaurentPoly>, EnergyError> {
        let n = self.aff.n();
        let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        let t = self.tensor(rects)?;
        for b in self.highest_elements(rects)? {
            let w = t.weight(t.encode(&b));
            let lam = Partition::from_weight(&w).expect("highest weight must be dominant");
            assert!(lam.len() <= n);
            let d = self.dbar_tensor(rects, &b)?;
            out.entry(lam).or_default().add_term(1, d);
        }
        Ok(out)
    }

    /// `X̄_{λ,B}(q) = Σ q^{D̄(b)}` over `I_0`-highest `b` of weight `λ`.
    pub fn one_dim_sum(&self, rects: &RectangleList, lambda: &Partition) -> Result<LaurentPoly, EnergyError> {
        Ok(self.one_dim_sums(rects)?.remove(lambda).unwrap_or_default())
    }
}

/// Factorwise inclusion of type A rectangular tableaux into the KR
/// crystals of `target`; `None` when a tableau has no counterpart.
pub fn type_a_embed(
    source: &EnergyContext,
    target: &EnergyContext,
    rects: &RectangleList,
    b: &[usize],
) -> Result<Option<Vec<usize>>, EnergyError> {
    let mut out = Vec::with_capacity(b.len());
    for (&rect, &x) in rects.rects().iter().zip(b) {
        let t = source.kr(rect)?.tableau(x).clone();
        match target.kr(rect)?.find(&t) {
            Some(y) => out.push(y),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}
