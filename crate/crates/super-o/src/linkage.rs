//! The strong-linkage order μ↑λ on dot orbits, Verma-module Hom dimensions,
//! and the embedding criterion for super Verma maps.
//!
//! The relation is computed two independent ways:
//!
//! * `up_arrow`: breadth-first search over the dot orbit along raising
//!   reflections — an edge ν → s_α·ν for a positive even root α whenever
//!   ⟨ν+ρ₀, α∨⟩ < 0 (so the reflection moves the weight strictly up);
//! * `up_arrow_bruhat`: compare the minimal-length witnesses of the two
//!   weights over their common dominant orbit representative in the Bruhat
//!   order.
//!
//! Both are certified against each other and against singular-vector counts
//! in truncated Verma modules (the oracle suites).

use crate::algebra::{
    coroot_pairing, is_integral, is_typical, orbit_extreme_weight, AlgebraDescriptor,
    AlgebraKind, OrbitExtreme, Weight,
};
use crate::error::{Error, Result};
use crate::weyl::{bruhat_leq, orbit_extreme, reflect_dot};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

fn require_integral(a: &AlgebraDescriptor, w: &Weight, what: &str) -> Result<()> {
    a.check_basis(w)?;
    if !is_integral(a, w)? {
        return Err(Error::NotIntegral(format!(
            "{what} requires even-integral weights; {w} is not"
        )));
    }
    Ok(())
}

/// Raising neighbors of ν: the reflections s_α·ν that move ν strictly up.
fn raising_steps(a: &AlgebraDescriptor, nu: &Weight) -> Result<Vec<(Weight, Weight)>> {
    let shifted = nu.add(&a.rho0);
    let mut out = Vec::new();
    for alpha in &a.even_positive_roots {
        if coroot_pairing(a, &shifted, alpha)?.is_negative() {
            out.push((alpha.clone(), reflect_dot(a, alpha, nu)?));
        }
    }
    Ok(out)
}

/// Strong linkage μ↑λ: a chain of positive even-root reflections raising μ
/// to λ exists (the empty chain is allowed, so the relation is reflexive).
pub fn up_arrow(a: &AlgebraDescriptor, mu: &Weight, lam: &Weight) -> Result<bool> {
    require_integral(a, mu, "strong linkage")?;
    require_integral(a, lam, "strong linkage")?;
    if mu == lam {
        return Ok(true);
    }
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(mu.clone());
    queue.push_back(mu.clone());
    while let Some(nu) = queue.pop_front() {
        for (_, next) in raising_steps(a, &nu)? {
            if next == *lam {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// Strong linkage via Bruhat order: both weights are written over their
/// common dominant orbit representative μ* as λ = x·μ*, μ = y·μ* with
/// minimal-length witnesses; then μ↑λ ⟺ x ≤ y.
pub fn up_arrow_bruhat(a: &AlgebraDescriptor, mu: &Weight, lam: &Weight) -> Result<bool> {
    require_integral(a, mu, "strong linkage")?;
    require_integral(a, lam, "strong linkage")?;
    let dom_mu = orbit_extreme_weight(a, mu, OrbitExtreme::Dominant)?;
    let dom_lam = orbit_extreme_weight(a, lam, OrbitExtreme::Dominant)?;
    if dom_mu != dom_lam {
        return Ok(false);
    }
    let (_, x) = orbit_extreme(a, lam, OrbitExtreme::Dominant)?;
    let (_, y) = orbit_extreme(a, mu, OrbitExtreme::Dominant)?;
    Ok(bruhat_leq(&x, &y))
}

/// Hom dimension between even Verma modules of gl(n): 1 iff μ↑λ.
pub fn hom_dim_verma_even(a: &AlgebraDescriptor, mu: &Weight, lam: &Weight) -> Result<usize> {
    if !matches!(a.kind, AlgebraKind::GL(_)) {
        return Err(Error::InvalidParameter(format!(
            "even Verma hom dimensions are stated for gl(n); got {}",
            a.kind
        )));
    }
    Ok(usize::from(up_arrow(a, mu, lam)?))
}

/// Hom dimension between pe(n) super Verma modules: the super hom space has
/// the same dimension as the even one, so the answer is 1 iff μ↑λ in the
/// gl(n) sense.
pub fn hom_dim_verma_pe(n: usize, mu: &Weight, lam: &Weight) -> Result<usize> {
    let pe = crate::algebra::build_algebra(AlgebraKind::PE(n))?;
    require_integral(&pe, mu, "super Verma hom dimensions")?;
    require_integral(&pe, lam, "super Verma hom dimensions")?;
    Ok(usize::from(up_arrow(&pe, mu, lam)?))
}

/// Whether every nonzero map between super Verma modules over this algebra
/// with antidominant source datum λ̌ is injective: always true for pe(n);
/// for osp(2|2n) and gl(m|n) true exactly when λ̌ is typical; undefined for
/// the purely even gl(n).
pub fn verma_homs_all_injective(a: &AlgebraDescriptor, lam: &Weight) -> Result<bool> {
    require_integral(a, lam, "the embedding criterion")?;
    match a.kind {
        AlgebraKind::PE(_) => Ok(true),
        AlgebraKind::OSP2(_) | AlgebraKind::GLmn(..) => {
            let anti = orbit_extreme_weight(a, lam, OrbitExtreme::Antidominant)?;
            is_typical(a, &anti)
        }
        AlgebraKind::GL(_) => Err(Error::TypicalityUndefined(format!(
            "the embedding criterion concerns super Verma modules; {} is purely even",
            a.kind
        ))),
    }
}

/// Full dot orbit of λ (finite for integral weights), sorted.
pub fn dot_orbit(a: &AlgebraDescriptor, lam: &Weight) -> Result<Vec<Weight>> {
    require_integral(a, lam, "orbit enumeration")?;
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(nu) = queue.pop_front() {
        let shifted = nu.add(&a.rho0);
        for alpha in &a.even_positive_roots {
            if !coroot_pairing(a, &shifted, alpha)?.is_zero() {
                let next = reflect_dot(a, alpha, &nu)?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// DOT rendering of the ↑-order on the dot orbit of λ: nodes are weight
/// renderings, edges the transitive reduction of the raising steps (the
/// Hasse diagram of the order restricted to the orbit).
pub fn up_arrow_orbit_dot(a: &AlgebraDescriptor, lam: &Weight) -> Result<String> {
    let orbit = dot_orbit(a, lam)?;
    let index: BTreeMap<&Weight, usize> =
        orbit.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let m = orbit.len();
    let mut edge = vec![vec![false; m]; m];
    for (i, nu) in orbit.iter().enumerate() {
        for (_, next) in raising_steps(a, nu)? {
            if let Some(&j) = index.get(&next) {
                edge[i][j] = true;
            }
        }
    }
    // Transitive closure, then reduction: drop i→j when a longer path exists.
    let mut reach = edge.clone();
    for k in 0..m {
        for i in 0..m {
            if reach[i][k] {
                for j in 0..m {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out = String::from("digraph linkage {\n  rankdir=BT;\n  node [shape=box];\n");
    for w in &orbit {
        out.push_str(&format!("  \"{}\";\n", w.render()));
    }
    for i in 0..m {
        for j in 0..m {
            if !edge[i][j] {
                continue;
            }
            let redundant = (0..m).any(|k| k != i && k != j && reach[i][k] && reach[k][j]);
            if !redundant {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\";\n",
                    orbit[i].render(),
                    orbit[j].render()
                ));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
