use leibniz::exactlin::parse_scalar;
use leibniz::format::{print_algebra, AlgebraFile};
use leibniz::oracle::{self, Budget};
use leibniz::radicals;
use leibniz::report::VerificationReport;
use leibniz::{Error, Field, LeibnizAlgebra, Result, Status, Subspace};

use crate::output::Output;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum IdealKind {
    Kernel,
    Nilradical,
    Radical,
    Frattini,
}

/// A verb that operates on one algebra.
#[derive(Debug, Clone)]
pub enum Verb {
    Validate,
    Info,
    Kernel,
    Liesation,
    Series,
    Nilradical,
    Radical,
    Frattini,
    Quotient { ideal: IdealKind, rows: Option<String> },
    FindB,
    Verify { b: Option<String> },
    OracleScan,
}

pub struct Options {
    pub budget: Budget,
    pub verbose: bool,
}

/// Parses `"1,-1;0,1/2"` into the span of the listed rows.
pub fn parse_rows<F: Field>(n: usize, text: &str) -> Result<Subspace<F>> {
    let mut vectors = Vec::new();
    for row in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        let v = row.split(',').map(parse_scalar::<F>).collect::<Result<Vec<F>>>()?;
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        vectors.push(v);
    }
    Subspace::span(n, vectors)
}

pub fn run<F: Field>(file: &AlgebraFile, verb: &Verb, opts: &Options) -> Result<Output> {
    if let Verb::Validate = verb {
        let l = file.to_algebra_unchecked::<F>()?;
        let mut r = l.check_leibniz().to_report(l.labels());
        r.value("dim", l.dim());
        return Ok(Output::new(r));
    }
    let l = file.to_algebra::<F>()?;
    let budget = &opts.budget;
    match verb {
        Verb::Validate => unreachable!(),
        Verb::Info => info(&l),
        Verb::Kernel => {
            let k = l.leibniz_kernel();
            let mut r = VerificationReport::new::<F>("kernel");
            r.fact("is_ideal", l.is_ideal(&k)?)
                .value("dim", k.dim())
                .subspace("kernel", &k);
            Ok(Output::new(r.finish()))
        }
        Verb::Liesation => {
            let q = l.try_liesation()?;
            let mut r = VerificationReport::new::<F>("liesation");
            r.fact("is_lie", q.quotient.is_lie())
                .value("dim", q.quotient.dim())
                .subspace("kernel", &q.ideal);
            Ok(Output::new(r.finish()).with_algebra("liesation", print_algebra(&q.quotient)))
        }
        Verb::Series => {
            let mut r = VerificationReport::new::<F>("series");
            r.fact("nilpotent", l.is_nilpotent()).fact("solvable", l.is_solvable());
            for (i, s) in l.lower_central_series().iter().enumerate() {
                r.subspace(format!("lower_central_{}", i + 1), s);
            }
            for (i, s) in l.derived_series().iter().enumerate() {
                r.subspace(format!("derived_{}", i + 1), s);
            }
            Ok(Output::new(r.finish()))
        }
        Verb::Nilradical => {
            let res = radicals::nilradical_with(&l, budget)?;
            let mut r = VerificationReport::new::<F>("nilradical");
            r.value("method", kebab(&res.method))
                .value("dim", res.subspace.dim())
                .subspace("nilradical", &res.subspace);
            certificates(&mut r, &res.certificates, opts.verbose);
            Ok(Output::new(r.finish()))
        }
        Verb::Radical => {
            let res = radicals::radical_with(&l, budget)?;
            let mut r = VerificationReport::new::<F>("radical");
            r.value("method", kebab(&res.method))
                .value("dim", res.subspace.dim())
                .subspace("radical", &res.subspace);
            certificates(&mut r, &res.certificates, opts.verbose);
            Ok(Output::new(r.finish()))
        }
        Verb::Frattini => {
            let (phi, method) = radicals::frattini_ideal_with(&l, None, budget)?;
            let mut r = VerificationReport::new::<F>("frattini");
            r.value("method", kebab(&method))
                .value("dim", phi.dim())
                .subspace("frattini", &phi);
            Ok(Output::new(r.finish()))
        }
        Verb::Quotient { ideal, rows } => {
            let j = match rows {
                Some(text) => parse_rows::<F>(l.dim(), text)?,
                None => match ideal {
                    IdealKind::Kernel => l.leibniz_kernel(),
                    IdealKind::Nilradical => radicals::nilradical_with(&l, budget)?.subspace,
                    IdealKind::Radical => radicals::radical_with(&l, budget)?.subspace,
                    IdealKind::Frattini => radicals::frattini_ideal_with(&l, None, budget)?.0,
                },
            };
            let q = l.quotient(&j)?;
            let mut r = VerificationReport::new::<F>("quotient");
            r.fact("is_lie", q.quotient.is_lie())
                .value("dim", q.quotient.dim())
                .subspace("ideal", &q.ideal);
            Ok(Output::new(r.finish()).with_algebra("quotient", print_algebra(&q.quotient)))
        }
        Verb::FindB => {
            let search = radicals::find_complement_b_with(&l, budget)?;
            let mut r = VerificationReport::new::<F>("find-b");
            r.fact("found", search.found.is_some())
                .fact("exhaustive", search.exhaustive)
                .value("candidates_tried", search.candidates_tried)
                .subspace("kernel", &l.leibniz_kernel());
            if let Some(b) = &search.found {
                r.subspace("b", b);
            } else if !search.exhaustive {
                r.notice("no complement found among the heuristic candidates; one exists, but this search did not reach it");
            }
            for n in &search.notices {
                r.notice(n.clone());
            }
            Ok(Output::new(r.finish()))
        }
        Verb::Verify { b } => verify(&l, b.as_deref(), opts),
        Verb::OracleScan => oracle_scan(&l, opts),
    }
}

fn kebab<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn certificates(r: &mut VerificationReport, certs: &[radicals::Certificate], verbose: bool) {
    for c in certs {
        r.verdict(format!("certificate_{}", c.name.replace('-', "_")), c.holds);
        if verbose {
            r.witness(format!("{}: {}", c.name, c.detail));
        }
    }
}

fn info<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Output> {
    let kernel = l.leibniz_kernel();
    let center = l.center();
    let mut r = VerificationReport::new::<F>("info");
    r.fact("is_lie", l.is_lie())
        .fact("solvable", l.is_solvable())
        .fact("nilpotent", l.is_nilpotent())
        .value("dim", l.dim())
        .value("basis", l.labels().join(", "))
        .value("kernel_dim", kernel.dim())
        .value("center_dim", center.dim())
        .subspace("kernel", &kernel)
        .subspace("center", &center);
    Ok(Output::new(r.finish()))
}

fn is_unsupported(e: &Error) -> bool {
    matches!(
        e,
        Error::Unsupported(_) | Error::UnsupportedField { .. } | Error::BudgetExceeded { .. }
    )
}

fn verify<F: Field>(l: &LeibnizAlgebra<F>, b: Option<&str>, opts: &Options) -> Result<Output> {
    let budget = &opts.budget;
    let mut top = VerificationReport::new::<F>("verify");
    let mut sections = Vec::new();

    match radicals::verify_lemma1_with(l, budget) {
        Ok(r) => sections.push(r),
        Err(e) if is_unsupported(&e) => {
            top.notice(format!("lemma1 skipped: {e}"));
        }
        Err(e) => return Err(e),
    }

    let b = match b {
        Some(text) => Some(parse_rows::<F>(l.dim(), text)?),
        None => {
            let search = radicals::find_complement_b_with(l, budget)?;
            if search.found.is_none() {
                top.notice("theorem2 skipped: no subalgebra B with L = I + B and I ∩ B ⊆ φ(B) was found");
            }
            search.found
        }
    };
    if let Some(b) = b {
        match radicals::verify_theorem2_with(l, &b, budget) {
            Ok(t) => sections.push(t.to_report()),
            Err(Error::PremiseViolation { premise }) => {
                let check = radicals::check_complement(l, &l.leibniz_kernel(), &b, budget)?;
                let mut r = VerificationReport::new::<F>("theorem2");
                r.premise("b_is_subalgebra", check.is_subalgebra)
                    .premise("l_equals_i_plus_b", check.spans);
                if let Some(inside) = check.in_frattini {
                    r.premise("i_cap_b_in_frattini_of_b", inside);
                }
                r.subspace("b", &b).witness(format!("premise fails: {premise}"));
                sections.push(r.finish());
            }
            Err(e) if is_unsupported(&e) => {
                top.notice(format!("theorem2 skipped: {e}"));
            }
            Err(e) => return Err(e),
        }
    }

    for (name, res) in [
        ("prop3", radicals::verify_prop3(l)),
        ("corollary", radicals::verify_corollary(l)),
    ] {
        match res {
            Ok(r) => sections.push(r),
            Err(e) if is_unsupported(&e) => {
                top.notice(format!("{name} skipped: {e}"));
            }
            Err(e) => return Err(e),
        }
    }

    for s in &sections {
        top.verdict(format!("{}_not_failed", s.check), s.status != Status::Fail)
            .value(format!("{}_status", s.check), s.status.as_str());
        if s.status == Status::NotApplicable {
            top.notice(format!("{}: premise not applicable to this algebra", s.check));
        }
    }
    let mut out = Output::new(top.finish());
    out.sections = sections;
    Ok(out)
}

fn oracle_scan<F: Field>(l: &LeibnizAlgebra<F>, opts: &Options) -> Result<Output> {
    let scan = oracle::scan(l, &opts.budget)?;
    let mut r = VerificationReport::new::<F>("oracle-scan");
    let pairs = scan.check_pairwise_nilpotent_sums();
    r.verdict("pairwise_nilpotent_sums_nilpotent", pairs.is_ok())
        .verdict("unique_maximal_nilpotent_ideal", scan.nilpotent_maximum_is_unique())
        .value("subspaces", scan.subspaces)
        .value("subalgebras", scan.subalgebras.len())
        .value("ideals", scan.ideals.len())
        .value("nilpotent_ideals", scan.nilpotent_ideals.len())
        .value("solvable_ideals", scan.solvable_ideals.len())
        .value("maximal_subalgebras", scan.maximal_subalgebras.len());
    match pairs {
        Ok(n) => {
            r.value("nilpotent_pairs_checked", n);
        }
        Err(e) => {
            r.witness(e.to_string());
        }
    }
    r.subspace("nilradical", &scan.nilradical()?)
        .subspace("radical", &scan.radical()?)
        .subspace("frattini", &scan.frattini()?);
    if opts.verbose {
        for (i, s) in scan.ideals.iter().enumerate() {
            r.subspace(format!("ideal_{i}"), s);
        }
    }
    Ok(Output::new(r.finish()))
}
