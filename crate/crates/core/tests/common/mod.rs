#![allow(dead_code)]

use std::collections::HashSet;

use leibniz::exactlin::unit;
use leibniz::{Field, LeibnizAlgebra, Matrix, Subspace, Q};
use proptest::prelude::*;

/// Unimodular integer matrix `L·U` with unit lower `L` and unit upper `U`,
/// invertible over every field.
pub fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let m = n * (n - 1) / 2;
    (
        proptest::collection::vec(-2i64..=2, m),
        proptest::collection::vec(-2i64..=2, m),
    )
        .prop_map(move |(lo, up)| {
            let mut l = vec![vec![0i64; n]; n];
            let mut u = vec![vec![0i64; n]; n];
            let (mut lo, mut up) = (lo.into_iter(), up.into_iter());
            for i in 0..n {
                l[i][i] = 1;
                u[i][i] = 1;
                for x in &mut l[i][..i] {
                    *x = lo.next().unwrap();
                }
                for x in &mut u[i][i + 1..] {
                    *x = up.next().unwrap();
                }
            }
            (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| l[i][k] * u[k][j]).sum()).collect())
                .collect()
        })
}

pub fn int_matrix<F: Field>(rows: &[Vec<i64>]) -> Matrix<F> {
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect()).unwrap()
}

/// Inverse by row reduction of `[M | I]`.
pub fn inverse<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let n = m.rows();
    let rows = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend(unit::<F>(n, i));
            r
        })
        .collect();
    let r = Matrix::from_rows(2 * n, rows).unwrap().rref();
    assert_eq!(r.rows(), n, "matrix is singular");
    Matrix::from_rows(n, (0..n).map(|i| r.row(i)[n..].to_vec()).collect()).unwrap()
}

/// The algebra in the basis `f_i = Σ_a g[i][a] e_a`, together with `g⁻¹`.
pub fn change_basis<F: Field>(l: &LeibnizAlgebra<F>, g: &Matrix<F>) -> (LeibnizAlgebra<F>, Matrix<F>) {
    let n = l.dim();
    let ginv = inverse(g);
    let mut table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let v = l.bracket(g.row(i), g.row(j)).unwrap();
            table.extend(ginv.apply(&v).unwrap());
        }
    }
    let labels = (1..=n).map(|i| format!("f{i}")).collect();
    (LeibnizAlgebra::new(labels, table).unwrap(), ginv)
}

/// A subspace given in `e` coordinates, rewritten in `f` coordinates.
pub fn to_new_basis<F: Field>(s: &Subspace<F>, ginv: &Matrix<F>) -> Subspace<F> {
    let vectors = s.basis_vectors().iter().map(|v| ginv.apply(v).unwrap()).collect();
    Subspace::span(s.ambient_dim(), vectors).unwrap()
}

/// Reduction of a rational subspace mod `p`, if every basis entry is
/// `p`-integral.
pub fn reduce_subspace<F: Field>(s: &Subspace<Q>) -> Option<Subspace<F>> {
    let mut vectors = Vec::new();
    for v in s.basis_vectors() {
        let w: Option<Vec<F>> = v.iter().map(|x| F::from_ratio(x.numer(), x.denom())).collect();
        vectors.push(w?);
    }
    Some(Subspace::span(s.ambient_dim(), vectors).unwrap())
}

/// Every subspace of `F^n`, grown one vector at a time from zero.
pub fn all_subspaces<F: Field>(n: usize) -> Vec<Subspace<F>> {
    let elements = F::elements().expect("finite field");
    let mut vectors: Vec<Vec<F>> = vec![Vec::new()];
    for _ in 0..n {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                elements.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(x.clone());
                    w
                })
            })
            .collect();
    }
    let mut seen: HashSet<Subspace<F>> = HashSet::new();
    let mut frontier = vec![Subspace::zero(n)];
    seen.insert(Subspace::zero(n));
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if !s.contains(v).unwrap() {
                let t = s.sum(&Subspace::span(n, vec![v.clone()]).unwrap()).unwrap();
                if seen.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// `[A, B]` computed product by product.
pub fn products<F: Field>(l: &LeibnizAlgebra<F>, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
    let mut out = Vec::new();
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            out.push(l.bracket(&x, &y).unwrap());
        }
    }
    Subspace::span(l.dim(), out).unwrap()
}

pub fn ideal<F: Field>(l: &LeibnizAlgebra<F>, j: &Subspace<F>) -> bool {
    let full = Subspace::full(l.dim());
    products(l, j, &full).leq(j).unwrap() && products(l, &full, j).leq(j).unwrap()
}

/// `J¹ = J, J^{k+1} = [J^k, J]` reaches zero.
pub fn nilpotent<F: Field>(l: &LeibnizAlgebra<F>, j: &Subspace<F>) -> bool {
    let mut t = j.clone();
    loop {
        if t.is_zero() {
            return true;
        }
        let next = products(l, &t, j);
        if next.dim() == t.dim() {
            return false;
        }
        t = next;
    }
}

/// `J⁽¹⁾ = J, J^{(k+1)} = [J^(k), J^(k)]` reaches zero.
pub fn solvable<F: Field>(l: &LeibnizAlgebra<F>, j: &Subspace<F>) -> bool {
    let mut t = j.clone();
    loop {
        if t.is_zero() {
            return true;
        }
        let next = products(l, &t, &t);
        if next.dim() == t.dim() {
            return false;
        }
        t = next;
    }
}

/// Sum of all nilpotent ideals by brute force, independent of the
/// library's oracle and radical code.
pub fn brute_nilradical<F: Field>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let n = l.dim();
    all_subspaces::<F>(n)
        .into_iter()
        .filter(|s| ideal(l, s) && nilpotent(l, s))
        .fold(Subspace::zero(n), |acc, s| acc.sum(&s).unwrap())
}

pub fn brute_radical<F: Field>(l: &LeibnizAlgebra<F>) -> Subspace<F> {
    let n = l.dim();
    all_subspaces::<F>(n)
        .into_iter()
        .filter(|s| ideal(l, s) && solvable(l, s))
        .fold(Subspace::zero(n), |acc, s| acc.sum(&s).unwrap())
}
