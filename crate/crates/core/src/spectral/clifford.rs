//! Exact gamma matrices with `γ^l γ^j + γ^j γ^l = -2δ^{lj}`.

use num_complex::Complex;

pub type GaussInt = Complex<i64>;

/// Square matrix over the Gaussian integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<GaussInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![GaussInt::new(0, 0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = GaussInt::new(1, 0);
        }
        m
    }

    fn from_rows(rows: &[&[GaussInt]]) -> Self {
        let dim = rows.len();
        IntMatrix {
            dim,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> GaussInt {
        self.data[i * self.dim + j]
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == GaussInt::new(0, 0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * o.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &IntMatrix) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: GaussInt) -> IntMatrix {
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn adjoint(&self) -> IntMatrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn kron(&self, o: &IntMatrix) -> IntMatrix {
        let (n, m) = (self.dim, o.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                for p in 0..m {
                    for q in 0..m {
                        out.data[(i * m + p) * (n * m) + j * m + q] = self.get(i, j) * o.get(p, q);
                    }
                }
            }
        }
        out
    }

    /// Largest entry modulus, as `f64`.
    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .map(|z| ((z.re * z.re + z.im * z.im) as f64).sqrt())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone)]
pub struct CliffordRep {
    pub k: usize,
    pub gammas: Vec<IntMatrix>,
    /// `ω_C = i^{[(k+1)/2]} γ¹⋯γ^k`.
    pub omega: IntMatrix,
}

impl CliffordRep {
    pub fn dim(&self) -> usize {
        1 << (self.k / 2)
    }

    pub fn is_even(&self) -> bool {
        self.k % 2 == 0
    }
}

fn i_pow(n: usize) -> GaussInt {
    [
        GaussInt::new(1, 0),
        GaussInt::new(0, 1),
        GaussInt::new(-1, 0),
        GaussInt::new(0, -1),
    ][n % 4]
}

fn pauli() -> [IntMatrix; 4] {
    let (z, o, i) = (GaussInt::new(0, 0), GaussInt::new(1, 0), GaussInt::new(0, 1));
    [
        IntMatrix::identity(2),
        IntMatrix::from_rows(&[&[z, o], &[o, z]]),
        IntMatrix::from_rows(&[&[z, -i], &[i, z]]),
        IntMatrix::from_rows(&[&[o, z], &[z, -o]]),
    ]
}

fn omega_of(k: usize, gammas: &[IntMatrix]) -> IntMatrix {
    let dim = gammas[0].dim();
    let prod = gammas
        .iter()
        .fold(IntMatrix::identity(dim), |acc, g| acc.mul(g));
    prod.scale(i_pow(k.div_ceil(2)))
}

/// Irreducible representation of dimension `2^{[k/2]}` built from Pauli
/// tensor products, `γ = iΓ` with `Γ` hermitian. For odd `k` the sign of the
/// last generator is chosen so that `ω_C = 1`.
pub fn gamma_matrices(k: usize) -> CliffordRep {
    assert!(k >= 1, "rank must be positive");
    let m = k / 2;
    let [id, x, y, z] = pauli();
    let tensor = |factors: Vec<&IntMatrix>| {
        factors
            .into_iter()
            .fold(IntMatrix::identity(1), |acc, f| acc.kron(f))
    };
    let mut hermitian = Vec::with_capacity(k);
    for j in 0..m {
        for mid in [&x, &y] {
            let mut f: Vec<&IntMatrix> = Vec::with_capacity(m);
            f.extend(std::iter::repeat_n(&z, j));
            f.push(mid);
            f.extend(std::iter::repeat_n(&id, m - j - 1));
            hermitian.push(tensor(f));
        }
    }
    if k % 2 == 1 {
        hermitian.push(tensor(std::iter::repeat_n(&z, m).collect()));
    }
    let i = GaussInt::new(0, 1);
    let mut gammas: Vec<IntMatrix> = hermitian.iter().map(|h| h.scale(i)).collect();
    let mut omega = omega_of(k, &gammas);
    if k % 2 == 1 && omega != IntMatrix::identity(omega.dim()) {
        let last = gammas.last_mut().unwrap();
        *last = last.scale(GaussInt::new(-1, 0));
        omega = omega_of(k, &gammas);
    }
    CliffordRep { k, gammas, omega }
}

/// Largest deviation from the Clifford identities, `ω_C` properties included.
pub fn clifford_defect(rep: &CliffordRep) -> f64 {
    let dim = rep.dim();
    let id = IntMatrix::identity(dim);
    let mut worst: f64 = 0.0;
    let minus_two = GaussInt::new(-2, 0);
    for (l, gl) in rep.gammas.iter().enumerate() {
        worst = worst.max(gl.adjoint().add(gl).max_abs());
        for (j, gj) in rep.gammas.iter().enumerate() {
            let anti = gl.mul(gj).add(&gj.mul(gl));
            let want = if l == j { id.scale(minus_two) } else { IntMatrix::zeros(dim) };
            worst = worst.max(anti.add(&want.scale(GaussInt::new(-1, 0))).max_abs());
        }
    }
    let w = &rep.omega;
    let neg = GaussInt::new(-1, 0);
    worst = worst.max(w.adjoint().add(&w.scale(neg)).max_abs());
    worst = worst.max(w.mul(w).add(&id.scale(neg)).max_abs());
    for g in &rep.gammas {
        let sign = if rep.is_even() { GaussInt::new(1, 0) } else { neg };
        worst = worst.max(w.mul(g).add(&g.mul(w).scale(sign)).max_abs());
    }
    if !rep.is_even() {
        worst = worst.max(w.add(&id.scale(neg)).max_abs());
    }
    worst
}

/// The graded symbol `γ(in) = i Σ_l n_l γ^l` of the Dirac operator on the
/// component of degree `n`.
pub fn dirac_symbol(rep: &CliffordRep, n: &[i64]) -> IntMatrix {
    assert_eq!(n.len(), rep.k, "degree rank");
    let i = GaussInt::new(0, 1);
    rep.gammas
        .iter()
        .zip(n)
        .fold(IntMatrix::zeros(rep.dim()), |acc, (g, &c)| acc.add(&g.scale(i * c)))
}
