//! Acceptance battery: one test per acceptance criterion, each printing a
//! single `ACCEPTANCE n [PASS]`/`[FAIL]` line (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Criteria 1–7 and 9 replay the library's verification suites — closed
//! forms checked against the independent matrix oracle — and assert that
//! every case in the relevant category passed.  Criterion 8 recomputes the
//! finitistic-dimension formulas from scratch (run-length arithmetic on
//! generator sets and integrality classes, a code path disjoint from the
//! library's root counting) and exercises the duality transport.
//!
//! The rank-4 leg of criterion 4 is expensive and runs behind `--ignored`,
//! mirroring how the corresponding sweep is gated in the library suites.

use std::collections::BTreeSet;

use super_o::algebra::{build_algebra, build_algebra_with, AlgebraDescriptor, AlgebraKind};
use super_o::error::Error;
use super_o::homdim::{
    dimension_status, duality_label, findim_block_pe, findim_parabolic, DimStatus, Levi, Measure,
    StructuralKind, StructuralLabel,
};
use super_o::oracle::suites::{run_suite, SuiteReport};

// ---------------------------------------------------------------------
// Reporting helpers
// ---------------------------------------------------------------------

/// Assert that every suite case whose name starts with one of `prefixes`
/// passed, and print the per-criterion verdict line.
fn check_suite(criterion: usize, what: &str, suite: &str, long: bool, prefixes: &[&str]) {
    let report = match run_suite(suite, long) {
        Ok(r) => r,
        Err(e) => {
            println!("ACCEPTANCE {criterion} [FAIL] {what}: suite {suite} refused: {e}");
            panic!("criterion {criterion}: suite {suite} refused: {e}");
        }
    };
    pass_or_fail(criterion, what, &report, prefixes);
}

fn pass_or_fail(criterion: usize, what: &str, report: &SuiteReport, prefixes: &[&str]) {
    let selected: Vec<_> = report
        .cases
        .iter()
        .filter(|c| prefixes.is_empty() || prefixes.iter().any(|p| c.name.starts_with(p)))
        .collect();
    let failures: Vec<String> = selected
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.details))
        .collect();
    if selected.is_empty() {
        println!("ACCEPTANCE {criterion} [FAIL] {what}: no cases selected");
        panic!("criterion {criterion}: no cases selected from suite {}", report.suite);
    }
    if failures.is_empty() {
        println!(
            "ACCEPTANCE {criterion} [PASS] {what} ({} cases)",
            selected.len()
        );
    } else {
        println!(
            "ACCEPTANCE {criterion} [FAIL] {what} ({} of {} cases failed)",
            failures.len(),
            selected.len()
        );
        panic!("criterion {criterion} failures: {failures:#?}");
    }
}

// ---------------------------------------------------------------------
// Criteria 1–7, 9: suite-backed
// ---------------------------------------------------------------------

#[test]
fn criterion_1_pe2_socle_table() {
    check_suite(
        1,
        "pe(2) socle-of-cokernel three-case table (closed form, case split, direct oracle)",
        "pe2-example",
        false,
        &["socle:"],
    );
}

#[test]
fn criterion_2_pe2_ext1_table() {
    check_suite(
        2,
        "pe(2) Ext¹ table over the dominant grid with control weights",
        "pe2-example",
        false,
        &["ext1:"],
    );
}

#[test]
fn criterion_3_hom_dimensions() {
    check_suite(
        3,
        "Verma hom dimensions: formula vs oracle singular-vector counts, both raising orders",
        "homdims",
        false,
        &["hom:"],
    );
}

#[test]
fn criterion_4_bigrassmannian_socle_criterion() {
    check_suite(
        4,
        "simple socle of Δ(0)/Δ(y·0) iff y is bigrassmannian (rank 3)",
        "socles",
        false,
        &["bigrassmannian:"],
    );
}

#[test]
#[ignore = "rank-4 sweep of the bigrassmannian criterion; run with --ignored"]
fn criterion_4_bigrassmannian_socle_criterion_rank4() {
    check_suite(
        4,
        "simple socle of Δ(0)/Δ(y·0) iff y is bigrassmannian (ranks 3 and 4)",
        "socles",
        true,
        &["bigrassmannian:"],
    );
}

#[test]
fn criterion_5_embedding_theorem() {
    check_suite(
        5,
        "Verma maps injective on certified weight spaces; singular vectors in the even layer",
        "homdims",
        false,
        &["embedding:", "layer:"],
    );
}

#[test]
fn criterion_6_kac_simplicity_iff_typicality() {
    check_suite(
        6,
        "induced-module simplicity ⇔ typicality, plus the multiplicity property",
        "kac",
        false,
        &[],
    );
}

#[test]
fn criterion_7_associated_variety_witnesses() {
    check_suite(
        7,
        "homology probes positive exactly at atypical weights, matching the finite/infinite split",
        "witnesses",
        false,
        &[],
    );
}

#[test]
fn criterion_9_oracle_integrity_gates() {
    check_suite(
        9,
        "bracket relations, Kostant multiplicities, block-equivalence fast path vs closure",
        "relations",
        false,
        &[],
    );
}

// ---------------------------------------------------------------------
// Criterion 8: dimension formulas and the duality transport, recomputed
// from scratch.
// ---------------------------------------------------------------------

/// Independent ℓ(w₀) of the symmetric group on `n` letters.
fn s_n_longest(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// Independent ℓ(w₀^p) for a generator subset of {1,…,n−1}: decompose into
/// maximal runs of consecutive generators; a run of k generators spans a
/// symmetric group on k+1 letters.
fn parabolic_longest(generators: &BTreeSet<usize>) -> usize {
    let mut total = 0usize;
    let mut run = 0usize;
    let mut prev: Option<usize> = None;
    for &g in generators {
        match prev {
            Some(p) if g == p + 1 => run += 1,
            _ => {
                total += s_n_longest(run + 1);
                run = 1;
            }
        }
        prev = Some(g);
    }
    if run > 0 {
        total += s_n_longest(run + 1);
    }
    total
}

fn subsets(of: &[usize]) -> Vec<BTreeSet<usize>> {
    let mut out = vec![BTreeSet::new()];
    for &x in of {
        let mut grown: Vec<BTreeSet<usize>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.insert(x);
                t
            })
            .collect();
        out.append(&mut grown);
    }
    out
}

/// λ patterns per rank: coordinate strings plus the expected integrality
/// classes (as index intervals), or None when the classes are not
/// contiguous and the block formula must refuse.
fn block_patterns(n: usize) -> Vec<(String, Option<Vec<usize>>)> {
    let mut out = Vec::new();
    // All-integer weight: one class of size n.
    out.push(( vec!["0"; n].join(","), Some(vec![n]) ));
    // Contiguous half-integer prefix of every length k < n: classes {k, n−k}.
    for k in 1..n {
        let mut coords = vec!["1/2"; k];
        coords.extend(vec!["0"; n - k]);
        out.push((coords.join(","), Some(vec![k, n - k])));
    }
    // Interleaved pattern: classes not contiguous for n ≥ 3.
    if n >= 3 {
        let coords: Vec<&str> = (0..n).map(|i| if i % 2 == 0 { "1/2" } else { "0" }).collect();
        out.push((coords.join(","), None));
    }
    out
}

/// Simple generators joining indices within the given class intervals.
fn class_generators(class_sizes: &[usize]) -> BTreeSet<usize> {
    let mut gens = BTreeSet::new();
    let mut start = 1usize;
    for &len in class_sizes {
        for g in start..start + len - 1 {
            gens.insert(g);
        }
        start += len;
    }
    gens
}

#[test]
fn criterion_8_dimension_formulas_and_duality() {
    let mut parabolic_checked = 0usize;
    let mut block_checked = 0usize;

    for n in 1..=5usize {
        let a = build_algebra(AlgebraKind::PE(n)).unwrap();
        let all_gens: Vec<usize> = (1..n).collect();
        let levis = subsets(&all_gens);

        // findim_parabolic == 2ℓ(w₀) − 2ℓ(w₀^p) on every Levi subset,
        // with both lengths recomputed by run-length arithmetic.
        for gens in &levis {
            let expected = 2 * (s_n_longest(n) - parabolic_longest(gens));
            let got = findim_parabolic(&a, &Levi::new(gens.iter().copied())).unwrap();
            assert_eq!(
                got, expected,
                "findim of the parabolic category of pe({n}) with Levi {gens:?}"
            );
            parabolic_checked += 1;
        }
        // Boundaries: the Borel gives 2ℓ(w₀); the full Levi gives 0.
        assert_eq!(findim_parabolic(&a, &Levi::empty()).unwrap(), n * (n - 1));
        assert_eq!(
            findim_parabolic(&a, &Levi::new(all_gens.iter().copied())).unwrap(),
            0
        );

        // findim_block_pe == 2ℓ(w₀^λ) − 2ℓ(w₀^p) whenever the integrality
        // classes are contiguous and the Levi sits inside them; refusal
        // (not a guess) otherwise.
        for (coords, classes) in block_patterns(n) {
            let lam = a.parse_weight(&coords).unwrap();
            match classes {
                Some(sizes) => {
                    let inside = class_generators(&sizes);
                    let block_longest: usize = sizes.iter().map(|&k| s_n_longest(k)).sum();
                    for gens in &levis {
                        let levi = Levi::new(gens.iter().copied());
                        let got = findim_block_pe(&a, &lam, &levi);
                        if gens.is_subset(&inside) {
                            let expected = 2 * (block_longest - parabolic_longest(gens));
                            assert_eq!(
                                got.unwrap(),
                                DimStatus::Finite(expected),
                                "block findim at λ=({coords}) in pe({n}), Levi {gens:?}"
                            );
                        } else {
                            assert!(
                                matches!(got, Err(Error::Precondition(_))),
                                "Levi {gens:?} outside the integral Weyl group of ({coords}) \
                                 must be refused, got {got:?}"
                            );
                        }
                        block_checked += 1;
                    }
                }
                None => {
                    let got = findim_block_pe(&a, &lam, &Levi::empty()).unwrap();
                    assert!(
                        matches!(got, DimStatus::OutOfScope(_)),
                        "non-contiguous classes at ({coords}) must be out of scope, got {got:?}"
                    );
                    block_checked += 1;
                }
            }
        }
    }

    // Duality: an involution on labels, transporting the projective
    // dimension table to the injective one (statuses compared by class;
    // the even-part payloads name dual even modules).
    let class = |status: &DimStatus| match status {
        DimStatus::Finite(v) => format!("finite {v}"),
        DimStatus::Infinite => "infinite".to_string(),
        DimStatus::EqualsEvenPart(_) => "even-part".to_string(),
        DimStatus::OutOfScope(_) => "out-of-scope".to_string(),
    };
    let kinds = [
        StructuralKind::Simple,
        StructuralKind::Verma,
        StructuralKind::Costandard,
        StructuralKind::ProjectiveCover,
        StructuralKind::InjectiveEnvelope,
        StructuralKind::Tilting,
    ];
    let mut transported = 0usize;
    let mut decided = 0usize;
    let mut duality_case = |a: &AlgebraDescriptor, label: &StructuralLabel| {
        let dual = duality_label(a, label).unwrap();
        assert_eq!(
            &duality_label(a, &dual).unwrap(),
            label,
            "duality must be an involution on {}",
            label.render()
        );
        for (m_here, m_there) in [
            (Measure::ProjectiveDimension, Measure::InjectiveDimension),
            (Measure::InjectiveDimension, Measure::ProjectiveDimension),
        ] {
            let here = dimension_status(a, label, m_here).unwrap();
            let there = dimension_status(a, &dual, m_there).unwrap();
            assert_eq!(
                class(&here.status),
                class(&there.status),
                "{m_here} of {} vs {m_there} of its dual {}",
                label.render(),
                dual.render()
            );
            if !matches!(here.status, DimStatus::OutOfScope(_)) {
                decided += 1;
            }
            transported += 1;
        }
    };

    let osp = build_algebra(AlgebraKind::OSP2(1)).unwrap();
    for e in -2..=2i64 {
        for d in -2..=2i64 {
            let w = osp.parse_weight(&format!("{e}|{d}")).unwrap();
            for kind in kinds {
                duality_case(&osp, &StructuralLabel::new(kind, w.clone(), Levi::empty()));
            }
        }
    }
    let gl21 = build_algebra(AlgebraKind::GLmn(2, 1)).unwrap();
    for a1 in -1..=1i64 {
        for a2 in -1..=1i64 {
            for b in -1..=1i64 {
                let w = gl21.parse_weight(&format!("{a1},{a2}|{b}")).unwrap();
                for kind in kinds {
                    duality_case(&gl21, &StructuralLabel::new(kind, w.clone(), Levi::empty()));
                }
            }
        }
    }
    // Proper parabolic labels (the Levi {1} of gl(2|1) is −w₀-stable).
    let parabolic_kinds = [
        StructuralKind::Simple,
        StructuralKind::ParabolicVerma,
        StructuralKind::Costandard,
        StructuralKind::ProjectiveCover,
        StructuralKind::InjectiveEnvelope,
        StructuralKind::Tilting,
    ];
    for coords in ["1,0|0", "0,0|1", "2,-1|3"] {
        let w = gl21.parse_weight(coords).unwrap();
        for kind in parabolic_kinds {
            duality_case(&gl21, &StructuralLabel::new(kind, w.clone(), Levi::new([1])));
        }
    }
    let gl11 = build_algebra_with(AlgebraKind::GLmn(1, 1), true).unwrap();
    for a1 in -1..=1i64 {
        for b in -1..=1i64 {
            let w = gl11.parse_weight(&format!("{a1}|{b}")).unwrap();
            for kind in kinds {
                duality_case(&gl11, &StructuralLabel::new(kind, w.clone(), Levi::empty()));
            }
        }
    }

    assert!(decided > 0, "the duality transport must hit decided rows");
    println!(
        "ACCEPTANCE 8 [PASS] dimension formulas and duality transport \
         ({parabolic_checked} parabolic cases, {block_checked} block cases, \
         {transported} transport cases, {decided} decided)"
    );
}
