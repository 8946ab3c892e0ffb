use super::LeibnizAlgebra;
use crate::error::Result;
use crate::exactlin::{add_vectors, unit, Field, Subspace};

impl<F: Field> LeibnizAlgebra<F> {
    /// `[A, B] = span{[a, b] : a ∈ basis(A), b ∈ basis(B)}`.
    pub fn bracket_span(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vectors.push(self.bracket(&x, &y)?);
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    /// `[A, B] + [B, A]`.
    pub fn two_sided_span(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
        self.bracket_span(a, b)?.sum(&self.bracket_span(b, a)?)
    }

    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    pub fn zero_space(&self) -> Subspace<F> {
        Subspace::zero(self.dim())
    }

    pub fn is_subalgebra(&self, a: &Subspace<F>) -> Result<bool> {
        self.bracket_span(a, a)?.leq(a)
    }

    /// Both `[A, L] ⊆ A` and `[L, A] ⊆ A`.
    pub fn is_ideal(&self, a: &Subspace<F>) -> Result<bool> {
        self.two_sided_span(a, &self.full_space())?.leq(a)
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        let full = self.full_space();
        let mut v = s.clone();
        loop {
            let next = v.sum(&self.two_sided_span(&v, &full)?)?;
            if next.dim() == v.dim() {
                return Ok(v);
            }
            v = next;
        }
    }

    /// Smallest subalgebra containing `s`.
    pub fn generated_subalgebra(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        let mut v = s.clone();
        loop {
            let next = v.sum(&self.bracket_span(&v, &v)?)?;
            if next.dim() == v.dim() {
                return Ok(v);
            }
            v = next;
        }
    }

    /// The Leibniz kernel `span{[x, x]}`, computed from the squares of
    /// `e_i` and `e_i + e_j`. Since
    /// `[x+y, x+y] = [x,x] + [y,y] + [x,y] + [y,x]`, these squares span all
    /// squares in every characteristic.
    pub fn leibniz_kernel(&self) -> Subspace<F> {
        let n = self.dim();
        let mut squares = Vec::new();
        for i in 0..n {
            squares.push(self.basis_bracket(i, i).to_vec());
            for j in i + 1..n {
                let v = add_vectors(&unit(n, i), &unit(n, j));
                squares.push(self.bracket(&v, &v).expect("ambient vector"));
            }
        }
        Subspace::span(n, squares).expect("ambient vectors")
    }

    /// Largest ideal of `L` contained in `k`: iterate
    /// `K ↦ {x ∈ K : [x, L] + [L, x] ⊆ K}` to a fixed point.
    pub fn largest_ideal_in(&self, k: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_subspace(k)?;
        let ops: Vec<_> = self
            .right_mult_basis()
            .into_iter()
            .chain((0..self.dim()).map(|i| self.left_mult(&unit(self.dim(), i)).expect("basis")))
            .collect();
        let mut cur = k.clone();
        loop {
            // x·M ∈ K  ⇔  (x·M)·w = x·(M w) = 0 for every w ⟂ K
            let ann = cur.annihilator().basis_vectors();
            let mut functionals = Vec::with_capacity(ops.len() * ann.len());
            for m in &ops {
                for w in &ann {
                    functionals.push(m.transpose().apply(w)?);
                }
            }
            let next = cur.cut_by_functionals(&functionals)?;
            if next.dim() == cur.dim() {
                return Ok(cur);
            }
            cur = next;
        }
    }
}
