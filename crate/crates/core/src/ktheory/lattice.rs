//! Integer lattices in row Hermite normal form.

/// Row-style HNF of the lattice spanned by `gens`: echelon form, positive
/// pivots, entries above each pivot reduced into `[0, pivot)`. Zero rows are
/// dropped, so the row count is the rank.
pub fn hermite_normal_form(gens: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| {
            assert_eq!(g.len(), dim, "generator dimension");
            g.iter().map(|&x| x as i128).collect()
        })
        .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..dim {
        loop {
            let nonzero: Vec<usize> = (pivot_row..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
            for &r in &nonzero {
                if r == best {
                    continue;
                }
                let q = rows[r][col] / rows[best][col];
                for c in 0..dim {
                    rows[r][c] -= q * rows[best][c];
                }
            }
        }
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        if rows[pivot_row][col] < 0 {
            for x in rows[pivot_row].iter_mut() {
                *x = -*x;
            }
        }
        let p = rows[pivot_row][col];
        for above in 0..pivot_row {
            let q = rows[above][col].div_euclid(p);
            if q != 0 {
                for c in 0..dim {
                    rows[above][c] -= q * rows[pivot_row][c];
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("entries stay small")).collect())
        .collect()
}

/// Whether `v` lies in the lattice with HNF basis `basis`.
pub fn contains(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in basis {
        let col = row.iter().position(|&x| x != 0).expect("nonzero basis row");
        let p = row[col] as i128;
        if rest[col] % p != 0 {
            return false;
        }
        let q = rest[col] / p;
        for (r, &b) in rest.iter_mut().zip(row) {
            *r -= q * b as i128;
        }
    }
    rest.iter().all(|&x| x == 0)
}
