//! Smith normal form over the integers, tracking the left transform.
//!
//! For a relation matrix `A` (columns generate a sublattice of Z^k) we compute
//! unimodular `U` with `U A V = D` diagonal and `d_1 | d_2 | ...`. Only `U`
//! and `U^{-1}` are kept: they are what is needed to put a finite abelian
//! group presentation into cyclic canonical form and to lift generators back.

/// Result of a Smith reduction: `diag` holds the diagonal of `D` (length =
/// number of rows), `u * a * v = d` for some untracked unimodular `v`, and
/// `u_inv` is the exact integer inverse of `u`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub diag: Vec<i64>,
    pub u: Vec<Vec<i64>>,
    pub u_inv: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Smith normal form of `a` (consumed). Rows may exceed the rank; trailing
/// diagonal entries are then zero.
pub fn smith(mut a: Vec<Vec<i64>>) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut u = identity(rows);
    let mut u_inv = identity(rows);

    // Row operations mirror into u; the inverse operation mirrors into the
    // columns of u_inv so that u * u_inv = I at every step.
    let swap_rows = |a: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, u_inv: &mut Vec<Vec<i64>>, p: usize, r: usize| {
        a.swap(p, r);
        u.swap(p, r);
        for row in u_inv.iter_mut() {
            row.swap(p, r);
        }
    };
    let add_row = |a: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, u_inv: &mut Vec<Vec<i64>>, dst: usize, src: usize, q: i64| {
        // R_dst += q * R_src
        for j in 0..cols {
            a[dst][j] += q * a[src][j];
        }
        for j in 0..rows {
            u[dst][j] += q * u[src][j];
        }
        for row in u_inv.iter_mut() {
            let v = row[dst];
            row[src] -= q * v;
        }
    };

    let mut p = 0;
    while p < rows.min(cols) {
        // Pick the nonzero entry of smallest magnitude in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in p..rows {
            for j in p..cols {
                if a[i][j] != 0
                    && pivot.map_or(true, |(r, c)| a[i][j].abs() < a[r][c].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((r, c)) = pivot else { break };
        if r != p {
            swap_rows(&mut a, &mut u, &mut u_inv, p, r);
        }
        if c != p {
            for row in a.iter_mut() {
                row.swap(p, c);
            }
        }

        let mut dirty = false;
        for i in p + 1..rows {
            if a[i][p] != 0 {
                let q = a[i][p].div_euclid(a[p][p]);
                add_row(&mut a, &mut u, &mut u_inv, i, p, -q);
                if a[i][p] != 0 {
                    dirty = true;
                }
            }
        }
        for j in p + 1..cols {
            if a[p][j] != 0 {
                let q = a[p][j].div_euclid(a[p][p]);
                for row in a.iter_mut() {
                    let v = row[p];
                    row[j] -= q * v;
                }
                if a[p][j] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue; // smaller remainders appeared, re-pivot this block
        }
        // Enforce the divisibility chain before moving on.
        let d = a[p][p];
        let bad = (p + 1..rows)
            .flat_map(|i| (p + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] % d != 0);
        if let Some((i, _)) = bad {
            add_row(&mut a, &mut u, &mut u_inv, p, i, 1);
            continue;
        }
        p += 1;
    }

    let mut diag = vec![0i64; rows];
    for i in 0..rows.min(cols) {
        diag[i] = a[i][i];
    }
    for i in 0..rows {
        if diag[i] < 0 {
            diag[i] = -diag[i];
            for j in 0..rows {
                u[i][j] = -u[i][j];
            }
            for row in u_inv.iter_mut() {
                row[i] = -row[i];
            }
        }
    }
    Snf { diag, u, u_inv }
}
