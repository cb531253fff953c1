//! Dense Gaussian elimination over ℚ, enough for weight systems.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Solution set `{particular + Σ t_k null_k}` of a consistent linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// The minimum-norm solution, i.e. the unique one orthogonal to the null space.
    pub particular: Vec<Rational>,
    pub null_space: Vec<Vec<Rational>>,
}

/// Reduced row echelon form of `[a | b]`. Returns the nonzero rows and their pivot columns,
/// or `None` if the system is inconsistent.
fn rref(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<(Vec<Vec<Rational>>, Vec<usize>)> {
    let mut rows: Vec<Vec<Rational>> =
        a.iter().zip(b).map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    rows.truncate(r);
    Some((rows, pivots))
}

/// Solves `a · x = b` exactly. `None` when inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<AffineSolution> {
    let (rows, pivots) = rref(a, b, ncols)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();

    let null_space: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();

    // Minimum-norm solution: x = Rᵀ y with (R Rᵀ) y = b', where R are the rref rows.
    let particular = if rows.is_empty() {
        vec![Rational::zero(); ncols]
    } else {
        let coeffs: Vec<Vec<Rational>> = rows.iter().map(|row| row[..ncols].to_vec()).collect();
        let rhs: Vec<Rational> = rows.iter().map(|row| row[ncols].clone()).collect();
        let gram: Vec<Vec<Rational>> = coeffs
            .iter()
            .map(|ri| coeffs.iter().map(|rj| ri.iter().zip(rj).map(|(a, b)| a * b).sum()).collect())
            .collect();
        let (gram_rows, _) = rref(&gram, &rhs, coeffs.len()).expect("Gram matrix of independent rows is invertible");
        let y: Vec<Rational> = gram_rows.iter().map(|row| row[coeffs.len()].clone()).collect();
        (0..ncols).map(|c| coeffs.iter().zip(&y).map(|(row, yi)| &row[c] * yi).sum()).collect()
    };
    Some(AffineSolution { particular, null_space })
}
