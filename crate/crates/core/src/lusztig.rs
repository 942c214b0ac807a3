//! Parabolic Lusztig q-analogues.
//!
//! Both `K^{G,U}` (alternating sum over the Weyl group) and the stable
//! `∞K^{G,U}` (sum over `S_n`) are evaluated through a memoized q-deformed
//! Kostant partition function on roots outside the Levi. The module also
//! carries the hat construction for `𝔎` and the classical multiplicity
//! formulas of King and Littlewood.

use crate::partition::{in_diamond_set, lr_coefficient, Kind, Partition};
use crate::poly::LaurentPoly;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// Default bound on `n` for Weyl-group sums.
pub const DEFAULT_RANK_CAP: usize = 6;

/// Errors from the q-analogue routines.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LusztigError {
    #[error("rank {n} exceeds the Weyl-sum cap {cap}")]
    RankCap { n: usize, cap: usize },
    #[error("composition {eta:?} does not sum to {n}")]
    Composition { eta: Vec<usize>, n: usize },
    #[error("weight of length {got} where {want} was expected")]
    Length { got: usize, want: usize },
    #[error("block {0:?} is not a partition")]
    NotDominant(Vec<i32>),
    #[error("hat route {hat} disagrees with decomposition route {dec}")]
    Inconsistent { hat: String, dec: String },
}

/// The classical groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Gl,
    SoOdd,
    Sp,
    SoEven,
}

impl Group {
    /// The group attached to a kind: `(1)` to `SO_{2n+1}`, `(2)` to `Sp_{2n}`,
    /// `(1,1)` to `SO_{2n}`, `∅` to `GL_n`.
    pub fn of_kind(kind: Kind) -> Group {
        match kind {
            Kind::Empty => Group::Gl,
            Kind::Box => Group::SoOdd,
            Kind::Row => Group::Sp,
            Kind::Column => Group::SoEven,
        }
    }

    pub fn name(self, n: usize) -> String {
        match self {
            Group::Gl => format!("GL_{}", n),
            Group::SoOdd => format!("SO_{}", 2 * n + 1),
            Group::Sp => format!("Sp_{}", 2 * n),
            Group::SoEven => format!("SO_{}", 2 * n),
        }
    }
}

/// A positive root with its weight `L(α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub vector: Vec<i32>,
    /// 2 on long roots of `SO_{2n+1}`, 1 otherwise.
    pub length_weight: u32,
}

/// Positive roots, doubled `ρ` and Weyl group of a classical group.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub group: Group,
    pub n: usize,
    pub positive: Vec<Root>,
    pub two_rho: Vec<i32>,
}

fn unit(n: usize, i: usize, c: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

impl RootSystemData {
    pub fn new(group: Group, n: usize) -> RootSystemData {
        let mut positive = Vec::new();
        let long = if group == Group::SoOdd { 2 } else { 1 };
        for i in 0..n {
            for j in i + 1..n {
                let mut v = unit(n, i, 1);
                v[j] = -1;
                positive.push(Root { vector: v, length_weight: long });
                if group != Group::Gl {
                    let mut v = unit(n, i, 1);
                    v[j] = 1;
                    positive.push(Root { vector: v, length_weight: long });
                }
            }
            match group {
                Group::SoOdd => positive.push(Root { vector: unit(n, i, 1), length_weight: 1 }),
                Group::Sp => positive.push(Root { vector: unit(n, i, 2), length_weight: 1 }),
                _ => {}
            }
        }
        let mut two_rho = vec![0; n];
        for r in &positive {
            for (t, x) in two_rho.iter_mut().zip(&r.vector) {
                *t += x;
            }
        }
        RootSystemData { group, n, positive, two_rho }
    }

    /// The Weyl group as signed permutations; `S_n` for `GL_n`.
    pub fn weyl_group(&self) -> Vec<SignedPermutation> {
        match self.group {
            Group::Gl => SignedPermutation::symmetric(self.n),
            Group::SoEven => SignedPermutation::hyperoctahedral(self.n)
                .into_iter()
                .filter(|w| w.signs.iter().filter(|&&s| s < 0).count() % 2 == 0)
                .collect(),
            _ => SignedPermutation::hyperoctahedral(self.n),
        }
    }

    /// `2(w∘λ) = w(2λ + 2ρ) − 2ρ`.
    pub fn dot_action_doubled(&self, w: &SignedPermutation, lambda: &[i32]) -> Vec<i32> {
        let shifted: Vec<i32> = lambda.iter().zip(&self.two_rho).map(|(l, r)| 2 * l + r).collect();
        w.apply(&shifted).iter().zip(&self.two_rho).map(|(x, r)| x - r).collect()
    }
}

/// `(w v)_i = signs[i] · v[perm[i]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn symmetric(n: usize) -> Vec<SignedPermutation> {
        permutations(n)
            .into_iter()
            .map(|perm| SignedPermutation { perm, signs: vec![1; n] })
            .collect()
    }

    pub fn hyperoctahedral(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPermutation { perm: perm.clone(), signs });
            }
        }
        out
    }

    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s as i32 * v[p]).collect()
    }

    /// Determinant of the matrix of `w`, which is `(−1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut sign = 1i64;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.perm[x];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        self.signs.iter().fold(sign, |acc, &s| acc * s as i64)
    }

    /// The permutation matrix with signs, row `i` having `signs[i]` in column `perm[i]`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.perm.len();
        (0..n)
            .map(|i| (0..n).map(|j| if self.perm[i] == j { self.signs[i] as i64 } else { 0 }).collect())
            .collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// A Levi subgroup `GL_{η_1} × … × GL_{η_p}` given by a composition of `n`.
/// `U` consists of the simple roots `α_i` with `i` and `i+1` in one block,
/// so `α_n` is never in `U` for the non-GL groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeviSelection {
    pub eta: Vec<usize>,
    block: Vec<usize>,
}

impl LeviSelection {
    pub fn new(eta: &[usize]) -> LeviSelection {
        let block = eta.iter().enumerate().flat_map(|(k, &e)| std::iter::repeat_n(k, e)).collect();
        LeviSelection { eta: eta.to_vec(), block }
    }

    /// The Cartan subalgebra: every block of size one.
    pub fn torus(n: usize) -> LeviSelection {
        LeviSelection::new(&vec![1; n])
    }

    /// The whole group `GL_n`.
    pub fn full(n: usize) -> LeviSelection {
        LeviSelection::new(&[n])
    }

    pub fn n(&self) -> usize {
        self.block.len()
    }

    /// Indices `i` (1-based) of the simple roots in `U`.
    pub fn simple_roots(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.block[i - 1] == self.block[i]).collect()
    }

    /// Whether the positive root lies in `R_U^+`.
    pub fn contains(&self, root: &[i32]) -> bool {
        let nz: Vec<usize> = (0..root.len()).filter(|&i| root[i] != 0).collect();
        nz.len() == 2 && root[nz[0]] == 1 && root[nz[1]] == -1 && self.block[nz[0]] == self.block[nz[1]]
    }
}

type Memo = Mutex<HashMap<(usize, Vec<i32>), LaurentPoly>>;

/// The q-deformed partition function `𝒫_q^U`, or its `L`-weighted variant.
pub struct QPartition {
    roots: Vec<(Vec<i32>, usize, u32)>,
    last_of_lead: Vec<bool>,
    memo: Memo,
}

impl QPartition {
    pub fn new(rs: &RootSystemData, levi: &LeviSelection, weighted: bool) -> QPartition {
        let mut roots: Vec<(Vec<i32>, usize, u32)> = rs
            .positive
            .iter()
            .filter(|r| !levi.contains(&r.vector))
            .map(|r| {
                let lead = r.vector.iter().position(|&x| x != 0).expect("nonzero root");
                (r.vector.clone(), lead, if weighted { r.length_weight } else { 1 })
            })
            .collect();
        roots.sort_by_key(|r| r.1);
        let last_of_lead = (0..roots.len())
            .map(|k| k + 1 == roots.len() || roots[k + 1].1 != roots[k].1)
            .collect();
        QPartition { roots, last_of_lead, memo: Mutex::new(HashMap::new()) }
    }

    /// Coefficient of `e^β`.
    pub fn eval(&self, beta: &[i32]) -> LaurentPoly {
        self.rec(0, beta.to_vec())
    }

    fn rec(&self, k: usize, beta: Vec<i32>) -> LaurentPoly {
        if beta.iter().all(|&x| x == 0) {
            return LaurentPoly::one();
        }
        if k == self.roots.len() {
            return LaurentPoly::zero();
        }
        let lead = self.roots[k].1;
        if beta[..lead].iter().any(|&x| x != 0) {
            return LaurentPoly::zero();
        }
        let mut prefix = 0;
        for &x in &beta {
            prefix += x;
            if prefix < 0 {
                return LaurentPoly::zero();
            }
        }
        if beta[lead] < 0 {
            return LaurentPoly::zero();
        }
        let key = (k, beta);
        if let Some(p) = self.memo.lock().expect("memo").get(&key) {
            return p.clone();
        }
        let (alpha, _, weight) = &self.roots[k];
        let top = key.1[lead] / alpha[lead];
        let mut out = LaurentPoly::zero();
        let lo = if self.last_of_lead[k] {
            if key.1[lead] % alpha[lead] != 0 {
                top + 1
            } else {
                top
            }
        } else {
            0
        };
        for m in lo..=top {
            let rest: Vec<i32> = key.1.iter().zip(alpha).map(|(b, a)| b - m * a).collect();
            let sub = self.rec(k + 1, rest);
            if !sub.is_zero() {
                out += &sub.shift(m as i64 * *weight as i64);
            }
        }
        self.memo.lock().expect("memo").insert(key, out.clone());
        out
    }
}

/// Shared evaluator for `K^{G,U}` and `∞K^{G,U}` at a fixed `(G, U)`.
pub struct LusztigEvaluator {
    pub roots: RootSystemData,
    pub levi: LeviSelection,
    partition: QPartition,
    weyl: Vec<SignedPermutation>,
}

impl LusztigEvaluator {
    /// `stable` selects the `S_n` sum, with the `L`-weighted partition
    /// function for `SO_{2n+1}`.
    pub fn new(group: Group, levi: &LeviSelection, stable: bool, cap: usize) -> Result<LusztigEvaluator, LusztigError> {
        let n = levi.n();
        if n > cap {
            return Err(LusztigError::RankCap { n, cap });
        }
        let roots = RootSystemData::new(group, n);
        let weighted = stable && group == Group::SoOdd;
        let partition = QPartition::new(&roots, levi, weighted);
        let weyl = if stable { SignedPermutation::symmetric(n) } else { roots.weyl_group() };
        Ok(LusztigEvaluator { roots, levi: levi.clone(), partition, weyl })
    }

    /// `Σ_w (−1)^{ℓ(w)} 𝒫(w∘λ − μ)`.
    pub fn eval(&self, lambda: &[i32], mu: &[i32]) -> Result<LaurentPoly, LusztigError> {
        let n = self.levi.n();
        for v in [lambda, mu] {
            if v.len() != n {
                return Err(LusztigError::Length { got: v.len(), want: n });
            }
        }
        let mut out = LaurentPoly::zero();
        for w in &self.weyl {
            let d = self.roots.dot_action_doubled(w, lambda);
            let beta: Vec<i32> = d
                .iter()
                .zip(mu)
                .map(|(x, m)| {
                    debug_assert!(x % 2 == 0);
                    x / 2 - m
                })
                .collect();
            let p = self.partition.eval(&beta);
            if !p.is_zero() {
                out += &p.scaled(w.sign());
            }
        }
        Ok(out)
    }
}

/// `𝒫_q^U(β)` for a one-off query.
pub fn q_partition(group: Group, levi: &LeviSelection, beta: &[i32], weighted: bool) -> LaurentPoly {
    QPartition::new(&RootSystemData::new(group, levi.n()), levi, weighted).eval(beta)
}

/// `K^{G,U}_{λ,μ}(q)`.
pub fn lusztig_q(group: Group, levi: &LeviSelection, lambda: &[i32], mu: &[i32]) -> Result<LaurentPoly, LusztigError> {
    LusztigEvaluator::new(group, levi, false, DEFAULT_RANK_CAP)?.eval(lambda, mu)
}

/// `∞K^{G,U}_{λ,μ}(q)`.
pub fn stable_lusztig_q(group: Group, levi: &LeviSelection, lambda: &[i32], mu: &[i32]) -> Result<LaurentPoly, LusztigError> {
    LusztigEvaluator::new(group, levi, true, DEFAULT_RANK_CAP)?.eval(lambda, mu)
}

/// The data of the hat construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HatData {
    pub a: i32,
    pub lambda_hat: Vec<i32>,
    pub eta_hat: Vec<usize>,
    pub mu_hat: Vec<Vec<i32>>,
}

fn check_blocks(blocks: &[Vec<i32>], lambda: &[i32]) -> Result<(), LusztigError> {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    if lambda.len() != n {
        return Err(LusztigError::Length { got: lambda.len(), want: n });
    }
    for b in blocks.iter().chain(std::iter::once(&lambda.to_vec())) {
        if b.windows(2).any(|w| w[0] < w[1]) || b.iter().any(|&x| x < 0) {
            return Err(LusztigError::NotDominant(b.clone()));
        }
    }
    Ok(())
}

/// The hat construction. `blocks[k]` is `μ^(k)` padded with zeros to length
/// `η_k`; `μ` is their literal concatenation.
pub fn hat(blocks: &[Vec<i32>], lambda: &[i32]) -> Result<HatData, LusztigError> {
    check_blocks(blocks, lambda)?;
    let mu: Vec<i32> = blocks.concat();
    let diff: i32 = mu.iter().sum::<i32>() - lambda.iter().sum::<i32>();
    let half = (diff + 1).div_euclid(2);
    let a = [half, 0, *mu.iter().max().unwrap_or(&0), *lambda.iter().max().unwrap_or(&0)]
        .into_iter()
        .max()
        .expect("nonempty");
    let lambda_hat: Vec<i32> = lambda.iter().rev().map(|x| a - x).collect();
    let flat: Vec<i32> = mu.iter().rev().map(|x| a - x).collect();
    let eta_hat: Vec<usize> = blocks.iter().rev().map(|b| b.len()).collect();
    let mut mu_hat = Vec::new();
    let mut at = 0;
    for &e in &eta_hat {
        mu_hat.push(flat[at..at + e].to_vec());
        at += e;
    }
    Ok(HatData { a, lambda_hat, eta_hat, mu_hat })
}

/// `𝔎^{λ,◇}_{μ^(1),…,μ^(p)}(q)` through the hat construction; for `◇ = ∅`
/// this is `K^{GL_n,U}_{λ,μ}(q)`.
pub fn frak_k_hat(blocks: &[Vec<i32>], lambda: &[i32], kind: Kind, cap: usize) -> Result<LaurentPoly, LusztigError> {
    check_blocks(blocks, lambda)?;
    if kind == Kind::Empty {
        let eta: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        let ev = LusztigEvaluator::new(Group::Gl, &LeviSelection::new(&eta), false, cap)?;
        return ev.eval(lambda, &blocks.concat());
    }
    let h = hat(blocks, lambda)?;
    let ev = LusztigEvaluator::new(Group::of_kind(kind), &LeviSelection::new(&h.eta_hat), true, cap)?;
    ev.eval(&h.lambda_hat, &h.mu_hat.concat())
}

/// The decomposition route:
/// `q^{(|μ|−|λ|)/|◇|} Σ_{ν,δ} c^ν_{λδ} K^{GL_n,U}_{ν,μ}(q^{2/|◇|})`.
pub fn frak_k_decomposition(blocks: &[Vec<i32>], lambda: &[i32], kind: Kind, cap: usize) -> Result<LaurentPoly, LusztigError> {
    check_blocks(blocks, lambda)?;
    let n = lambda.len();
    let eta: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let mu: Vec<i32> = blocks.concat();
    let ev = LusztigEvaluator::new(Group::Gl, &LeviSelection::new(&eta), false, cap)?;
    if kind == Kind::Empty {
        return ev.eval(lambda, &mu);
    }
    let lam = Partition::from_weight(lambda).expect("checked dominant");
    let diff = mu.iter().sum::<i32>() - lambda.iter().sum::<i32>();
    let d = kind.size() as i32;
    if diff < 0 || diff % d != 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut sum = LaurentPoly::zero();
    for delta in Partition::of_size(diff as usize, n) {
        if !in_diamond_set(kind, &delta) {
            continue;
        }
        for nu in Partition::of_size(mu.iter().sum::<i32>() as usize, n) {
            let c = lr_coefficient(&lam, &delta, &nu);
            if c == 0 {
                continue;
            }
            let k = ev.eval(&nu.to_weight(n), &mu)?;
            sum += &k.subs_power(2 / d as i64).scaled(c as i64);
        }
    }
    Ok(sum.shift((diff / d) as i64))
}

/// `𝔎(q)` by the hat route, checked against the decomposition route.
pub fn frak_k(blocks: &[Vec<i32>], lambda: &[i32], kind: Kind, cap: usize) -> Result<LaurentPoly, LusztigError> {
    let h = frak_k_hat(blocks, lambda, kind, cap)?;
    let d = frak_k_decomposition(blocks, lambda, kind, cap)?;
    if h != d {
        return Err(LusztigError::Inconsistent { hat: h.to_string(), dec: d.to_string() });
    }
    Ok(h)
}

/// Blocks `(s^r)` of a rectangle list, followed by a zero block filling up to `n`.
pub fn rectangle_blocks(rects: &[(usize, usize)], n: usize) -> Result<Vec<Vec<i32>>, LusztigError> {
    let used: usize = rects.iter().map(|&(r, _)| r).sum();
    if used > n {
        let eta = rects.iter().map(|&(r, _)| r).collect();
        return Err(LusztigError::Composition { eta, n });
    }
    let mut blocks: Vec<Vec<i32>> = rects.iter().map(|&(r, s)| vec![s as i32; r]).collect();
    if used < n {
        blocks.push(vec![0; n - used]);
    }
    Ok(blocks)
}

/// Littlewood's restriction multiplicity
/// `Σ_{δ∈𝒫^◇, κ} c^κ_{γ⁺γ⁻} c^ν_{δκ}` of `V^{GL_n}(γ⁺,γ⁻)` in `V^G(ν)`.
pub fn littlewood_restriction(nu: &Partition, gamma_plus: &Partition, gamma_minus: &Partition, kind: Kind) -> u64 {
    let m = gamma_plus.size() + gamma_minus.size();
    if m > nu.size() {
        return 0;
    }
    let len = nu.len().max(1);
    let mut total = 0;
    for kappa in Partition::of_size(m, len) {
        let a = lr_coefficient(gamma_plus, gamma_minus, &kappa);
        if a == 0 {
            continue;
        }
        for delta in Partition::of_size(nu.size() - m, len) {
            if in_diamond_set(kind, &delta) {
                total += a * lr_coefficient(&delta, &kappa, nu);
            }
        }
    }
    total
}

/// King's stable tensor multiplicity
/// `[V(λ)⊗V(μ):V(ν)] = Σ_{δ,ξ,η} c^ν_{δξ} c^λ_{δη} c^μ_{ξη}`.
pub fn king_tensor(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut total = 0;
    for ds in 0..=lambda.size().min(nu.size()) {
        let es = lambda.size() - ds;
        if es > mu.size() {
            continue;
        }
        let xs = mu.size() - es;
        if ds + xs != nu.size() {
            continue;
        }
        for delta in Partition::of_size(ds, lambda.len().max(1)) {
            for eta in Partition::of_size(es, lambda.len().max(1)) {
                let b = lr_coefficient(&delta, &eta, lambda);
                if b == 0 {
                    continue;
                }
                for xi in Partition::of_size(xs, mu.len().max(1)) {
                    let c = lr_coefficient(&xi, &eta, mu);
                    if c != 0 {
                        total += b * c * lr_coefficient(&delta, &xi, nu);
                    }
                }
            }
        }
    }
    total
}

/// `𝔎` at `q = 1` by tensoring the modules `W_◇(μ^(k))` with King's formula.
pub fn frak_k_classical(mus: &[Partition], lambda: &Partition, kind: Kind, n: usize) -> u64 {
    let w = |mu: &Partition| -> BTreeMap<Partition, u64> {
        let mut out = BTreeMap::new();
        for ds in 0..=mu.size() {
            for delta in Partition::of_size(ds, n) {
                if !in_diamond_set(kind, &delta) {
                    continue;
                }
                for lam in Partition::of_size(mu.size() - ds, n) {
                    let c = lr_coefficient(&delta, &lam, mu);
                    if c > 0 {
                        *out.entry(lam).or_insert(0) += c;
                    }
                }
            }
        }
        out
    };
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for mu in mus {
        let wm = w(mu);
        let mut next = BTreeMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &wm {
                for size in 0..=a.size() + b.size() {
                    for nu in Partition::of_size(size, n) {
                        let m = king_tensor(a, b, &nu);
                        if m > 0 {
                            *next.entry(nu).or_insert(0) += ca * cb * m;
                        }
                    }
                }
            }
        }
        acc = next;
    }
    acc.get(lambda).copied().unwrap_or(0)
}
