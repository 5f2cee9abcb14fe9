//! Jacobson radical in characteristic p by iterated trace conditions on
//! integer lifts of a faithful representation.

use crate::field::{FMatrix, Span};

use super::GradedAlgebra;

/// Square integer matrix with entries reduced modulo `q`.
struct ModMatrix {
    n: usize,
    q: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    fn lift(m: &FMatrix, q: u64) -> Self {
        ModMatrix { n: m.rows(), q, data: m.data().iter().map(|&x| x as u64).collect() }
    }

    fn mul(&self, other: &ModMatrix) -> ModMatrix {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                let b = &other.data[k * n..(k + 1) * n];
                for (o, &y) in row.iter_mut().zip(b) {
                    *o = (*o + a * y) % self.q;
                }
            }
        }
        ModMatrix { n, q: self.q, data: out }
    }

    fn pow(&self, mut e: u64) -> ModMatrix {
        let mut base = ModMatrix { n: self.n, q: self.q, data: self.data.clone() };
        let mut acc = ModMatrix { n: self.n, q: self.q, data: vec![0; self.n * self.n] };
        for i in 0..self.n {
            acc.data[i * self.n + i] = 1 % self.q;
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn trace(&self) -> u64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum::<u64>() % self.q
    }
}

impl GradedAlgebra {
    /// Basis of the Jacobson radical.
    pub fn radical(&self) -> Vec<Vec<u32>> {
        let p = self.p as u64;
        let n = self.rep_size();
        let dim = self.dim;
        let basis_mats: Vec<FMatrix> = (0..dim).map(|k| self.rep_matrix(&self.basis_vector(k))).collect();
        // I_0: kernel of the trace form
        let traces: Vec<u32> = basis_mats.iter().map(|m| m.trace()).collect();
        let mut gram = FMatrix::zeros(self.p, dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut t = 0u64;
                for &(k, c) in &self.table[i * dim + j] {
                    t += c as u64 * traces[k as usize] as u64;
                }
                gram.set(i, j, (t % p) as u32);
            }
        }
        let mut ideal: Vec<Vec<u32>> = gram.left_kernel_basis();
        let mut pi = p;
        while pi <= n as u64 && !ideal.is_empty() {
            // g(x) = Tr(x̂^{p^i}) / p^i mod p is linear on the previous ideal,
            // so it is evaluated on a basis and extended through coordinates
            let q = pi * p;
            let mut span = Span::new(self.p, dim);
            for x in &ideal {
                span.insert(x.clone());
            }
            let ideal_basis = span.basis().to_vec();
            let g: Vec<u64> = ideal_basis
                .iter()
                .map(|x| {
                    let t = ModMatrix::lift(&self.rep_matrix(x), q).pow(pi).trace();
                    debug_assert_eq!(t % pi, 0);
                    (t / pi) % p
                })
                .collect();
            let mut conditions = FMatrix::zeros(self.p, ideal_basis.len(), dim);
            for (s, x) in ideal_basis.iter().enumerate() {
                for j in 0..dim {
                    let prod = self.mul(x, &self.basis_vector(j));
                    let coords = span.coordinates(&prod).expect("ideal is closed under multiplication");
                    let v = coords.iter().zip(&g).fold(0u64, |acc, (&c, &gv)| (acc + c as u64 * gv) % p);
                    conditions.set(s, j, v as u32);
                }
            }
            let keep = conditions.left_kernel_basis();
            let mut next = Span::new(self.p, dim);
            for c in keep {
                let mut v = vec![0u32; dim];
                for (x, &a) in ideal_basis.iter().zip(&c) {
                    crate::field::vec_ops::add_scaled(&mut v, x, a, self.p);
                }
                next.insert(v);
            }
            ideal = next.into_basis();
            pi *= p;
        }
        ideal
    }

    /// Direct evaluation of every trace condition, used to cross-check.
    #[cfg(test)]
    pub(crate) fn radical_unreduced(&self) -> Vec<Vec<u32>> {
        let p = self.p as u64;
        let n = self.rep_size();
        let dim = self.dim;
        let basis_mats: Vec<FMatrix> = (0..dim).map(|k| self.rep_matrix(&self.basis_vector(k))).collect();
        let traces: Vec<u32> = basis_mats.iter().map(|m| m.trace()).collect();
        let mut gram = FMatrix::zeros(self.p, dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut t = 0u64;
                for &(k, c) in &self.table[i * dim + j] {
                    t += c as u64 * traces[k as usize] as u64;
                }
                gram.set(i, j, (t % p) as u32);
            }
        }
        let mut ideal: Vec<Vec<u32>> = gram.left_kernel_basis();
        let mut pi = p;
        while pi <= n as u64 && !ideal.is_empty() {
            let q = pi * p;
            let mut conditions = FMatrix::zeros(self.p, ideal.len(), dim);
            for (s, x) in ideal.iter().enumerate() {
                for j in 0..dim {
                    let m = self.rep_matrix(&self.mul(x, &self.basis_vector(j)));
                    conditions.set(s, j, ((ModMatrix::lift(&m, q).pow(pi).trace() / pi) % p) as u32);
                }
            }
            let mut span = Span::new(self.p, dim);
            for c in conditions.left_kernel_basis() {
                let mut v = vec![0u32; dim];
                for (x, &a) in ideal.iter().zip(&c) {
                    crate::field::vec_ops::add_scaled(&mut v, x, a, self.p);
                }
                span.insert(v);
            }
            ideal = span.into_basis();
            pi *= p;
        }
        ideal
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_empty()
    }
}
