//! `A_{n-1}^{(1)}` KR crystals: rectangle tableaux with `e_0 = pr^{-1} e_1 pr`.

use crate::classical::{Letter, Tableau};

/// Promotion on a rectangular tableau over `{1, …, n}`: delete the `n`s,
/// slide the rest outward by reverse jeu de taquin, add one to every entry
/// and fill the vacated cells with `1`.
pub fn promotion(t: &Tableau, n: usize) -> Tableau {
    let rows = t.rows();
    let r = rows.len();
    let s = rows.first().map_or(0, |x| x.len());
    let mut g: Vec<Vec<Letter>> = rows;
    let n = n as Letter;
    let holes: Vec<usize> = (0..s).filter(|&j| g[r - 1][j] == n).collect();
    for &j0 in &holes {
        g[r - 1][j0] = 0;
        let (mut i, mut j) = (r - 1, j0);
        loop {
            let up = (i > 0).then(|| g[i - 1][j]);
            let left = (j > 0).then(|| g[i][j - 1]);
            match (up, left) {
                (None, None) => break,
                (Some(u), Some(l)) if l > u => {
                    g[i][j] = l;
                    j -= 1;
                }
                (Some(u), _) => {
                    g[i][j] = u;
                    i -= 1;
                }
                (None, Some(l)) => {
                    g[i][j] = l;
                    j -= 1;
                }
            }
            g[i][j] = 0;
        }
    }
    for row in g.iter_mut() {
        for x in row.iter_mut() {
            *x += 1;
        }
    }
    Tableau::from_rows(&g)
}
