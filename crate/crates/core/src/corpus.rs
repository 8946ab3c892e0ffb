//! Deterministic builders for the reference algebras, each carrying the
//! invariants known for it and where that knowledge comes from.

use serde::Serialize;

use crate::algebra::{LeibnizAlgebra, Product};
use crate::error::{Error, Result};
use crate::exactlin::Subspace;
use crate::{RationalAlgebra, Q};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Stated for this algebra in the published counterexamples.
    Literature,
    /// Worked out by hand from the table.
    HandDerived,
    /// Immediate from the definitions.
    Definitional,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation<T> {
    pub value: T,
    pub source: Source,
}

fn expect<T>(value: T, source: Source) -> Option<Expectation<T>> {
    Some(Expectation { value, source })
}

/// Known invariants of a corpus algebra. Subspaces are in the algebra's
/// coordinates, except `liesation_nilradical` which is in the coordinates
/// of the liesation presentation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub kernel: Option<Expectation<Subspace<Q>>>,
    pub nilradical: Option<Expectation<Subspace<Q>>>,
    pub radical: Option<Expectation<Subspace<Q>>>,
    pub liesation_nilradical: Option<Expectation<Subspace<Q>>>,
    pub solvable: Option<Expectation<bool>>,
    pub nilpotent: Option<Expectation<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    /// Builder parameters, e.g. `[("n", 2), ("r", 1)]`.
    pub params: Vec<(&'static str, usize)>,
    pub algebra: RationalAlgebra,
    pub expected: Expected,
}

use Source::*;

fn build(labels: &[&str], products: &[Product<'_>]) -> RationalAlgebra {
    LeibnizAlgebra::from_products(labels, products).expect("corpus tables satisfy the Leibniz identity")
}

/// Two-dimensional solvable cyclic Leibniz algebra: basis `x, x²` with
/// `[x, x] = x²` and `[x², x] = x²`.
pub fn example1() -> CorpusEntry {
    let algebra = build(&["x", "x2"], &[(0, 0, &[(1, 1)]), (1, 0, &[(1, 1)])]);
    CorpusEntry {
        name: "example1".into(),
        params: Vec::new(),
        algebra,
        expected: Expected {
            kernel: expect(Subspace::coordinate(2, &[1]), Literature),
            nilradical: expect(Subspace::coordinate(2, &[1]), Literature),
            radical: expect(Subspace::full(2), HandDerived),
            liesation_nilradical: expect(Subspace::full(1), Literature),
            solvable: expect(true, HandDerived),
            nilpotent: expect(false, HandDerived),
        },
    }
}

/// Basis `x_1..x_n, y` with `[x_i, y] = x_i` for `r < i ≤ n`, all other
/// products zero. Requires `r < n`.
pub fn example2(n: usize, r: usize) -> Result<CorpusEntry> {
    if r >= n {
        return Err(Error::InvalidParameter(format!(
            "example2 needs r < n, got n = {n}, r = {r}"
        )));
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    labels.push("y".into());
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let terms: Vec<[(usize, i64); 1]> = (r..n).map(|i| [(i, 1)]).collect();
    let products: Vec<Product<'_>> =
        (r..n).zip(&terms).map(|(i, t)| (i, n, t.as_slice())).collect();
    let algebra = build(&label_refs, &products);
    let dim = n + 1;
    Ok(CorpusEntry {
        name: format!("example2({n},{r})"),
        params: vec![("n", n), ("r", r)],
        algebra,
        expected: Expected {
            kernel: expect(Subspace::coordinate(dim, &(r..n).collect::<Vec<_>>()), Literature),
            nilradical: expect(Subspace::coordinate(dim, &(0..n).collect::<Vec<_>>()), Literature),
            radical: expect(Subspace::full(dim), HandDerived),
            liesation_nilradical: expect(Subspace::full(r + 1), Literature),
            solvable: expect(true, HandDerived),
            nilpotent: expect(false, HandDerived),
        },
    })
}

/// `sl2` on `e, f, h`: `[e, f] = h`, `[h, e] = 2e`, `[h, f] = -2f`.
pub fn sl2() -> CorpusEntry {
    let algebra = build(
        &["e", "f", "h"],
        &[
            (0, 1, &[(2, 1)]),
            (1, 0, &[(2, -1)]),
            (2, 0, &[(0, 2)]),
            (0, 2, &[(0, -2)]),
            (2, 1, &[(1, -2)]),
            (1, 2, &[(1, 2)]),
        ],
    );
    CorpusEntry {
        name: "sl2".into(),
        params: Vec::new(),
        algebra,
        expected: Expected {
            kernel: expect(Subspace::zero(3), Definitional),
            nilradical: expect(Subspace::zero(3), HandDerived),
            radical: expect(Subspace::zero(3), HandDerived),
            liesation_nilradical: expect(Subspace::zero(3), HandDerived),
            solvable: expect(false, HandDerived),
            nilpotent: expect(false, HandDerived),
        },
    }
}

/// Three-dimensional Heisenberg algebra `[e1, e2] = e3 = -[e2, e1]`.
pub fn heisenberg() -> CorpusEntry {
    let algebra = build(&["e1", "e2", "e3"], &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])]);
    CorpusEntry {
        name: "heisenberg".into(),
        params: Vec::new(),
        algebra,
        expected: Expected {
            kernel: expect(Subspace::zero(3), Definitional),
            nilradical: expect(Subspace::full(3), Definitional),
            radical: expect(Subspace::full(3), Definitional),
            liesation_nilradical: expect(Subspace::full(3), Definitional),
            solvable: expect(true, Definitional),
            nilpotent: expect(true, Definitional),
        },
    }
}

pub fn abelian(n: usize) -> CorpusEntry {
    let labels = (1..=n).map(|i| format!("a{i}")).collect();
    CorpusEntry {
        name: format!("abelian({n})"),
        params: vec![("n", n)],
        algebra: LeibnizAlgebra::abelian(labels),
        expected: Expected {
            kernel: expect(Subspace::zero(n), Definitional),
            nilradical: expect(Subspace::full(n), Definitional),
            radical: expect(Subspace::full(n), Definitional),
            liesation_nilradical: expect(Subspace::full(n), Definitional),
            solvable: expect(true, Definitional),
            nilpotent: expect(true, Definitional),
        },
    }
}

/// Two-dimensional non-abelian Lie algebra `[x, y] = x = -[y, x]`.
pub fn affine2() -> CorpusEntry {
    let algebra = build(&["x", "y"], &[(0, 1, &[(0, 1)]), (1, 0, &[(0, -1)])]);
    CorpusEntry {
        name: "affine2".into(),
        params: Vec::new(),
        algebra,
        expected: Expected {
            kernel: expect(Subspace::zero(2), Definitional),
            nilradical: expect(Subspace::coordinate(2, &[0]), HandDerived),
            radical: expect(Subspace::full(2), HandDerived),
            liesation_nilradical: expect(Subspace::coordinate(2, &[0]), HandDerived),
            solvable: expect(true, HandDerived),
            nilpotent: expect(false, HandDerived),
        },
    }
}

/// Nilpotent cyclic Leibniz algebra `[x, x] = x²`, `[x², x] = 0`.
pub fn nilcyclic2() -> CorpusEntry {
    let algebra = build(&["x", "x2"], &[(0, 0, &[(1, 1)])]);
    CorpusEntry {
        name: "nilcyclic2".into(),
        params: Vec::new(),
        algebra,
        expected: Expected {
            kernel: expect(Subspace::coordinate(2, &[1]), HandDerived),
            nilradical: expect(Subspace::full(2), HandDerived),
            radical: expect(Subspace::full(2), HandDerived),
            liesation_nilradical: expect(Subspace::full(1), HandDerived),
            solvable: expect(true, HandDerived),
            nilpotent: expect(true, HandDerived),
        },
    }
}

/// Abelian ideal `a1, a2, a3` with `y` acting by the cyclic permutation
/// `a1 → a2 → a3 → a1`. The right multiplication by `y` has eigenvalues
/// `0, 1, ω, ω²`, so `tr R_y = tr R_y² = 0` although `R_y` is not nilpotent.
pub fn cyclic3() -> CorpusEntry {
    let algebra = build(
        &["a1", "a2", "a3", "y"],
        &[
            (0, 3, &[(1, 1)]),
            (1, 3, &[(2, 1)]),
            (2, 3, &[(0, 1)]),
            (3, 0, &[(1, -1)]),
            (3, 1, &[(2, -1)]),
            (3, 2, &[(0, -1)]),
        ],
    );
    CorpusEntry {
        name: "cyclic3".into(),
        params: Vec::new(),
        algebra,
        expected: Expected {
            kernel: expect(Subspace::zero(4), Definitional),
            nilradical: expect(Subspace::coordinate(4, &[0, 1, 2]), HandDerived),
            radical: expect(Subspace::full(4), HandDerived),
            liesation_nilradical: expect(Subspace::coordinate(4, &[0, 1, 2]), HandDerived),
            solvable: expect(true, HandDerived),
            nilpotent: expect(false, HandDerived),
        },
    }
}

/// `entry ⊕ sl2`, with the expectations carried over: kernel, nilradical
/// and radical of `sl2` vanish, so they are the old ones padded with zeros.
pub fn with_simple_summand(entry: &CorpusEntry) -> CorpusEntry {
    let s = sl2();
    let algebra = entry.algebra.direct_sum(&s.algebra);
    let pad = |e: &Option<Expectation<Subspace<Q>>>| {
        e.as_ref().map(|e| Expectation {
            value: LeibnizAlgebra::embed_block(&e.value, 0, 3),
            source: HandDerived,
        })
    };
    CorpusEntry {
        name: format!("{}+sl2", entry.name),
        params: entry.params.clone(),
        algebra,
        expected: Expected {
            kernel: pad(&entry.expected.kernel),
            nilradical: pad(&entry.expected.nilradical),
            radical: pad(&entry.expected.radical),
            liesation_nilradical: pad(&entry.expected.liesation_nilradical),
            solvable: expect(false, HandDerived),
            nilpotent: expect(false, HandDerived),
        },
    }
}

/// The curated zoo, in a fixed order.
pub fn all() -> Vec<CorpusEntry> {
    let ex2 = |n, r| example2(n, r).expect("valid parameters");
    vec![
        example1(),
        ex2(1, 0),
        ex2(2, 0),
        ex2(2, 1),
        ex2(3, 1),
        ex2(3, 2),
        sl2(),
        heisenberg(),
        abelian(1),
        abelian(3),
        affine2(),
        nilcyclic2(),
        cyclic3(),
        with_simple_summand(&example1()),
        with_simple_summand(&ex2(2, 1)),
    ]
}

/// Looks up a builder by entry name: `example1`, `example2(n,r)`, `sl2`,
/// `heisenberg`, `abelian(n)`, `affine2`, `nilcyclic2`, `cyclic3`, and any
/// of these followed by `+sl2`.
pub fn by_name(name: &str) -> Result<CorpusEntry> {
    let name = name.trim();
    if let Some(base) = name.strip_suffix("+sl2") {
        return Ok(with_simple_summand(&by_name(base)?));
    }
    let args = |prefix: &str| -> Option<Vec<usize>> {
        let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        inner.split(',').map(|a| a.trim().parse().ok()).collect()
    };
    match name {
        "example1" => return Ok(example1()),
        "sl2" => return Ok(sl2()),
        "heisenberg" => return Ok(heisenberg()),
        "affine2" => return Ok(affine2()),
        "nilcyclic2" => return Ok(nilcyclic2()),
        "cyclic3" => return Ok(cyclic3()),
        _ => {}
    }
    if let Some(a) = args("example2") {
        if let [n, r] = a[..] {
            return example2(n, r);
        }
    }
    if let Some(a) = args("abelian") {
        if let [n] = a[..] {
            return Ok(abelian(n));
        }
    }
    Err(Error::InvalidParameter(format!("unknown corpus entry `{name}`")))
}
