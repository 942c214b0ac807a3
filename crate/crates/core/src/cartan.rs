//! Classical and affine Cartan data.
//!
//! Weights live in `Z^n` (GL_n coordinates). Affine simple roots are stored
//! by their classical projection; marks and comarks come from the null
//! space of the generalized Cartan matrix.

use crate::partition::Kind;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Classical family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

/// A classical Cartan type. `n` is the number of weight coordinates, so
/// type `A` with `n` letters is `A_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalType {
    pub family: Family,
    pub n: usize,
}

impl ClassicalType {
    pub fn new(family: Family, n: usize) -> ClassicalType {
        ClassicalType { family, n }
    }

    /// Number of classical colors; colors are `1..=num_colors()`.
    pub fn num_colors(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            _ => self.n,
        }
    }

    /// The simple root `α_i` for `1 ≤ i ≤ num_colors()`.
    pub fn simple_root(&self, i: usize) -> Vec<i32> {
        let n = self.n;
        let mut v = vec![0; n];
        if i < n {
            v[i - 1] = 1;
            v[i] = -1;
            return v;
        }
        match self.family {
            Family::A => panic!("A has no color {}", i),
            Family::B => v[n - 1] = 1,
            Family::C => v[n - 1] = 2,
            Family::D => {
                v[n - 2] = 1;
                v[n - 1] = 1;
            }
        }
        v
    }

    /// `⟨α_i^∨, w⟩`.
    pub fn pairing(&self, i: usize, w: &[i32]) -> i32 {
        let n = self.n;
        if i < n {
            return w[i - 1] - w[i];
        }
        match self.family {
            Family::A => panic!("A has no color {}", i),
            Family::B => 2 * w[n - 1],
            Family::C => w[n - 1],
            Family::D => w[n - 2] + w[n - 1],
        }
    }

    /// Classical Cartan matrix `⟨α_i^∨, α_j⟩`, indexed from 0 for color 1.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let k = self.num_colors();
        (1..=k)
            .map(|i| (1..=k).map(|j| self.pairing(i, &self.simple_root(j))).collect())
            .collect()
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.n - 1),
            fam => write!(f, "{:?}{}", fam, self.n),
        }
    }
}

/// Affine families handled with full affine structure. `A2Odd` is the
/// ambient family `A_{2N-1}^{(2)}` used to realize kinds `(2)` and `(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AffineFamily {
    /// `A_{n-1}^{(1)}`
    A1,
    /// `C_n^{(1)}`
    C1,
    /// `D_n^{(1)}`
    D1,
    /// `D_{n+1}^{(2)}`
    D2,
    /// `A_{2n-1}^{(2)}`
    A2Odd,
}

/// Affine Cartan data over `I = {0, …, rank}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineType {
    pub family: AffineFamily,
    pub classical: ClassicalType,
    pub cartan: Vec<Vec<i32>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
}

impl AffineType {
    /// `n` is the number of classical weight coordinates.
    pub fn new(family: AffineFamily, n: usize) -> AffineType {
        let classical = match family {
            AffineFamily::A1 => ClassicalType::new(Family::A, n),
            AffineFamily::C1 | AffineFamily::A2Odd => ClassicalType::new(Family::C, n),
            AffineFamily::D1 => ClassicalType::new(Family::D, n),
            AffineFamily::D2 => ClassicalType::new(Family::B, n),
        };
        let k = classical.num_colors();
        let mut roots = vec![alpha0(family, n)];
        roots.extend((1..=k).map(|i| classical.simple_root(i)));
        let dot = |a: &[i32], b: &[i32]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i32>();
        let cartan: Vec<Vec<i32>> = roots
            .iter()
            .map(|ai| roots.iter().map(|aj| 2 * dot(ai, aj) / dot(ai, ai)).collect())
            .collect();
        let marks = null_vector(&cartan);
        let transposed: Vec<Vec<i32>> =
            (0..=k).map(|i| (0..=k).map(|j| cartan[j][i]).collect()).collect();
        let comarks = null_vector(&transposed);
        AffineType { family, classical, cartan, marks, comarks }
    }

    /// Largest color; colors are `0..=rank()`.
    pub fn rank(&self) -> usize {
        self.classical.num_colors()
    }

    pub fn n(&self) -> usize {
        self.classical.n
    }

    pub fn kind(&self) -> Kind {
        match self.family {
            AffineFamily::A1 => Kind::Empty,
            AffineFamily::C1 => Kind::Row,
            AffineFamily::D1 | AffineFamily::A2Odd => Kind::Column,
            AffineFamily::D2 => Kind::Box,
        }
    }

    /// `c_r = max(1, a_r / a_r^∨)`.
    pub fn c_r(&self, r: usize) -> usize {
        let (a, c) = (self.marks[r], self.comarks[r]);
        if a > c {
            (a / c) as usize
        } else {
            1
        }
    }

    /// Level `⌈s / c_r⌉` of `B^{r,s}`.
    pub fn level(&self, r: usize, s: usize) -> usize {
        s.div_ceil(self.c_r(r))
    }

    /// `θ / a_0` as a classical weight, `θ = Σ_{i∈I_0} a_i α_i`.
    pub fn theta_over_a0(&self) -> Vec<i32> {
        let mut t = vec![0i64; self.n()];
        for i in 1..=self.rank() {
            for (x, y) in t.iter_mut().zip(self.classical.simple_root(i)) {
                *x += self.marks[i] * y as i64;
            }
        }
        t.iter().map(|x| (x / self.marks[0]) as i32).collect()
    }

    /// Classical projection of `α_i` for every `i ∈ I`.
    pub fn root(&self, i: usize) -> Vec<i32> {
        if i == 0 {
            alpha0(self.family, self.n())
        } else {
            self.classical.simple_root(i)
        }
    }

    /// Image of a color under the reversing automorphism `i ↦ rank − i`.
    pub fn sigma_color(&self, i: usize) -> usize {
        self.rank() - i
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        match self.family {
            AffineFamily::A1 => write!(f, "A{}^(1)", n - 1),
            AffineFamily::C1 => write!(f, "C{}^(1)", n),
            AffineFamily::D1 => write!(f, "D{}^(1)", n),
            AffineFamily::D2 => write!(f, "D{}^(2)", n + 1),
            AffineFamily::A2Odd => write!(f, "A{}^(2)", 2 * n - 1),
        }
    }
}

impl AffineType {
    /// Parses a family name and the rank subscript of its Dynkin label:
    /// `A` is `A_rank^{(1)}`, `C` and `D` are `C_rank^{(1)}` and
    /// `D_rank^{(1)}`, and `D2` is `D_rank^{(2)}`.
    pub fn parse(name: &str, rank: usize) -> Result<AffineType, String> {
        let key: String = name.chars().filter(|c| !"_^() ".contains(*c)).collect::<String>().to_ascii_uppercase();
        let (family, n, min) = match key.as_str() {
            "A" | "A1" => (AffineFamily::A1, rank + 1, 1),
            "C" | "C1" => (AffineFamily::C1, rank, 2),
            "D" | "D1" => (AffineFamily::D1, rank, 4),
            "D2" => (AffineFamily::D2, rank.saturating_sub(1), 3),
            _ => return Err(format!("unknown affine type {:?}; expected A, C, D or D2", name)),
        };
        if rank < min {
            return Err(format!("{} needs rank at least {}", name, min));
        }
        Ok(AffineType::new(family, n))
    }
}

impl ClassicalType {
    /// Parses `A`, `B`, `C` or `D` with the Dynkin rank.
    pub fn parse(name: &str, rank: usize) -> Result<ClassicalType, String> {
        let (family, min) = match name.trim().to_ascii_uppercase().as_str() {
            "A" => (Family::A, 1),
            "B" => (Family::B, 2),
            "C" => (Family::C, 2),
            "D" => (Family::D, 4),
            _ => return Err(format!("unknown classical type {:?}; expected A, B, C or D", name)),
        };
        if rank < min {
            return Err(format!("{} needs rank at least {}", name, min));
        }
        Ok(ClassicalType::new(family, if family == Family::A { rank + 1 } else { rank }))
    }
}

fn alpha0(family: AffineFamily, n: usize) -> Vec<i32> {
    let mut v = vec![0; n];
    match family {
        AffineFamily::A1 => {
            v[0] = -1;
            v[n - 1] = 1;
        }
        AffineFamily::C1 => v[0] = -2,
        AffineFamily::D1 | AffineFamily::A2Odd => {
            v[0] = -1;
            v[1] = -1;
        }
        AffineFamily::D2 => v[0] = -1,
    }
    v
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive positive integer vector spanning the kernel of a corank-one
/// matrix, computed by exact fraction-free elimination.
fn null_vector(m: &[Vec<i32>]) -> Vec<i64> {
    let k = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..k).find(|&i| a[i][col] != 0) else { continue };
        a.swap(row, p);
        for i in 0..k {
            if i != row && a[i][col] != 0 {
                let (x, y) = (a[row][col], a[i][col]);
                for j in 0..k {
                    a[i][j] = a[i][j] * x - a[row][j] * y;
                }
                let g = a[i].iter().fold(0, |g, &v| gcd(g, v));
                if g > 1 {
                    a[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    assert_eq!(pivots.len() + 1, k, "matrix is not of corank one");
    let free = (0..k).find(|c| !pivots.contains(c)).unwrap();
    let l = pivots.iter().enumerate().fold(1i128, |l, (r, &c)| {
        let d = a[r][c].abs();
        l / gcd(l, d) * d
    });
    let mut v = vec![0i128; k];
    v[free] = l;
    for (r, &c) in pivots.iter().enumerate() {
        v[c] = -a[r][free] * l / a[r][c];
    }
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    let sign = if v.iter().any(|&x| x < 0) { -1 } else { 1 };
    v.iter().map(|&x| (sign * x / g) as i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_and_comarks() {
        let c = AffineType::new(AffineFamily::C1, 4);
        assert_eq!(c.marks, vec![1, 2, 2, 2, 1]);
        assert_eq!(c.comarks, vec![1, 1, 1, 1, 1]);
        assert_eq!(c.level(1, 3), 2);
        assert_eq!(c.theta_over_a0(), vec![2, 0, 0, 0]);
        let d = AffineType::new(AffineFamily::D1, 5);
        assert_eq!(d.marks, vec![1, 1, 2, 2, 1, 1]);
        assert_eq!(d.theta_over_a0(), vec![1, 1, 0, 0, 0]);
        let t = AffineType::new(AffineFamily::D2, 4);
        assert_eq!(t.marks, vec![1, 1, 1, 1, 1]);
        assert_eq!(t.comarks, vec![1, 2, 2, 2, 1]);
        assert_eq!(t.theta_over_a0(), vec![1, 0, 0, 0]);
        let a = AffineType::new(AffineFamily::A1, 4);
        assert_eq!(a.marks, vec![1, 1, 1, 1]);
        let o = AffineType::new(AffineFamily::A2Odd, 4);
        assert_eq!(o.marks, vec![1, 1, 2, 2, 1]);
    }

    #[test]
    fn null_vectors_annihilate() {
        for (fam, n) in [(AffineFamily::C1, 3), (AffineFamily::D1, 6), (AffineFamily::D2, 5), (AffineFamily::A1, 5)] {
            let t = AffineType::new(fam, n);
            let k = t.rank() + 1;
            for i in 0..k {
                assert_eq!((0..k).map(|j| t.cartan[i][j] as i64 * t.marks[j]).sum::<i64>(), 0);
                assert_eq!((0..k).map(|j| t.comarks[j] * t.cartan[j][i] as i64).sum::<i64>(), 0);
            }
        }
    }
}
