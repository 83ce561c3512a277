//! Certified linear-algebra queries over truncated modules.
//!
//! Everything here is an *independent oracle*: answers are produced by exact
//! rational linear algebra on explicit weight spaces, never by the
//! combinatorial closed forms they are used to verify.  Each query states
//! what it certifies and refuses (with [`Error::Band`]) when the requested
//! answer would depend on weight spaces outside the materialised band.
//!
//! Queries provided:
//! * [`singular_vectors`] — exact basis of the joint kernel of all raising
//!   operators at a weight;
//! * [`hom_dim_oracle`] — morphism-space dimensions between (super) Verma
//!   modules, computed as singular-vector counts;
//! * [`kostant_count`] — partition counts for the even positive root system,
//!   cross-checked against Verma weight-space dimensions;
//! * [`x_homology_probe`] — dimension of the homology of a square-zero odd
//!   operator at a weight; a positive value certifies that the module is not
//!   free over the exterior algebra on that operator;
//! * [`osp22_designated_witnesses`] / [`pe2_costandard_witnesses`] — the
//!   probe data whose positivity certifies infinite projective dimension;
//! * [`kac_is_simple`] — simplicity of finite-dimensional induced modules by
//!   exhaustive singular-vector scan;
//! * [`composition_factors_finite`] — exact composition multiplicities of a
//!   fully materialised module by top-down character peeling;
//! * [`br_highest_weight_of_simple_pe`] / [`lambda_plus_pe`] — the change of
//!   highest weight between the two odd Borel choices for pe(n);
//! * [`socle_constituents`] — banded socle computation for quotients of
//!   highest-weight modules.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{build_algebra, is_typical, AlgebraDescriptor, AlgebraKind, Weight};
use crate::error::{Error, Result};
use crate::Q;
use crate::linalg::{kernel_of_stack, Matrix, SparseOp};
use crate::oracle::module::{
    build_kac, build_verma_even, build_verma_pe, build_verma_super, quotient, radical,
    submodule_generated, TruncatedModule,
};

/// Basis of the joint kernel of the listed generator actions on the weight
/// space at `nu`.
///
/// Vectors are dense coordinates in the module's basis at `nu`.  Generators
/// whose action maps `nu` into a certified-zero space impose no condition; a
/// generator whose target lies below the certified band makes the query
/// refuse with [`Error::Band`].
pub fn joint_kernel_at(
    m: &TruncatedModule,
    ops: &[usize],
    nu: &Weight,
) -> Result<Vec<Vec<Q>>> {
    let d = m.dim_of(nu)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    let wi = m.weight_index(nu).expect("nonzero weight space is indexed");
    let mut stacked: Vec<&SparseOp> = Vec::new();
    for &g in ops {
        if let Some(op) = m.action(g, wi)? {
            stacked.push(op);
        }
    }
    if stacked.is_empty() {
        // Every operator lands in a certified-zero space: the whole weight
        // space satisfies the kernel conditions.
        return Ok((0..d).map(|j| unit_vector(d, j)).collect());
    }
    Ok(kernel_of_stack(&stacked))
}

fn unit_vector(dim: usize, j: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[j] = Q::one();
    v
}

/// Exact basis of the space of singular vectors at `nu`: the joint kernel of
/// the simple even raising operators, together with the whole positive odd
/// half when the module carries odd actions.
///
/// All raising targets are shallower than `nu`, so the only refusal is `nu`
/// itself lying below the certified band.
pub fn singular_vectors(m: &TruncatedModule, nu: &Weight) -> Result<Vec<Vec<Q>>> {
    joint_kernel_at(m, &m.raisers(), nu)
}

/// All weights within `band` carrying singular vectors, with the dimension
/// of the singular space at each.  The top weight is included.
pub fn singular_weights(
    m: &TruncatedModule,
    band: i64,
) -> Result<Vec<(Weight, usize)>> {
    let mut out = Vec::new();
    for wi in 0..m.weights.len() {
        let w = &m.weights[wi];
        let h = m
            .band_height(w)
            .expect("module weights lie on the band lattice");
        if h > band {
            continue;
        }
        let s = singular_vectors(m, w)?;
        if !s.is_empty() {
            out.push((w.clone(), s.len()));
        }
    }
    Ok(out)
}

/// Independent oracle for the dimension of the space of module maps from the
/// (super) Verma module with highest weight `mu` into the one with highest
/// weight `lam`.
///
/// For the purely even family this is the even Verma module; for the super
/// families it is the full super Verma module.  The answer is the dimension
/// of the singular-vector space at `mu` inside the target module,
/// materialised to `depth`.  Refuses when `mu` lies below the band.
pub fn hom_dim_oracle(
    a: &AlgebraDescriptor,
    mu: &Weight,
    lam: &Weight,
    depth: i64,
) -> Result<usize> {
    a.check_basis(mu)?;
    a.check_basis(lam)?;
    let m = match a.kind {
        AlgebraKind::GL(n) => build_verma_even(n, lam, depth)?,
        kind => build_verma_super(kind, lam, depth)?,
    };
    Ok(singular_vectors(&m, mu)?.len())
}

/// Number of ways to write `beta` as a sum of even positive roots (with
/// repetition, unordered).  Returns 0 when `beta` is not a nonnegative
/// integral combination.
pub fn kostant_count(a: &AlgebraDescriptor, beta: &Weight) -> Result<usize> {
    a.check_basis(beta)?;
    if !beta.all_integer() {
        return Ok(0);
    }
    let roots = &a.even_positive_roots;
    let mut memo: HashMap<(usize, Weight), usize> = HashMap::new();
    fn count(
        a: &AlgebraDescriptor,
        roots: &[Weight],
        i: usize,
        beta: &Weight,
        memo: &mut HashMap<(usize, Weight), usize>,
    ) -> usize {
        if beta.is_zero() {
            return 1;
        }
        // Positive roots have positive height, so anything expressible has
        // positive height; height strictly decreases on every subtraction,
        // which also bounds the recursion.
        if a.height(beta) <= Q::zero() {
            return 0;
        }
        if i == roots.len() {
            return 0;
        }
        let key = (i, beta.clone());
        if let Some(&c) = memo.get(&key) {
            return c;
        }
        let skip = count(a, roots, i + 1, beta, memo);
        let take = count(a, roots, i, &beta.sub(&roots[i]), memo);
        let c = skip + take;
        memo.insert(key, c);
        c
    }
    Ok(count(a, roots, 0, beta, &mut memo))
}

/// One designated homology probe: apply [`x_homology_probe`] with the odd
/// operator of weight `x_weight` at module weight `nu`.  `active` records
/// whether the atypicality equation attached to this probe holds, i.e.
/// whether the probe is predicted to be positive.
#[derive(Debug, Clone)]
pub struct WitnessProbe {
    pub x_weight: Weight,
    pub nu: Weight,
    pub active: bool,
}

/// The two designated witness probes on the osp(2|2) super Verma module with
/// highest weight `lam`.
///
/// Writing `lam = λ_ε ε + λ_δ δ`:
/// * probe 1 uses the positive odd operator of weight `ε+δ` at `λ − ε + δ`
///   and is active exactly when `λ_ε − λ_δ − 2 = 0`;
/// * probe 2 uses the positive odd operator of weight `ε−δ` at `λ` itself
///   and is active exactly when `λ_ε + λ_δ = 0`.
///
/// When the equation of a probe holds the probe value is 1, otherwise 0; a
/// positive value certifies that the module has infinite projective
/// dimension.  `lam` is atypical exactly when one of the two equations
/// holds.
pub fn osp22_designated_witnesses(
    a: &AlgebraDescriptor,
    lam: &Weight,
) -> Result<Vec<WitnessProbe>> {
    if a.kind != AlgebraKind::OSP2(1) {
        return Err(Error::Unsupported(
            "designated Verma witness probes are materialised for osp(2|2) only".into(),
        ));
    }
    a.check_basis(lam)?;
    let b = lam.basis();
    let le = lam.coeff(0).clone();
    let ld = lam.coeff(1).clone();
    let two = Q::from_integer(2.into());
    let probe1 = WitnessProbe {
        x_weight: Weight::from_i64(b, &[1, 1]),
        nu: lam.add(&Weight::from_i64(b, &[-1, 1])),
        active: (le.clone() - ld.clone() - two).is_zero(),
    };
    let probe2 = WitnessProbe {
        x_weight: Weight::from_i64(b, &[1, -1]),
        nu: lam.clone(),
        active: (le + ld).is_zero(),
    };
    Ok(vec![probe1, probe2])
}

/// The two designated witness probes on the pe(2) costandard module with
/// highest weight `lam = (λ₁, λ₂)`.
///
/// Both probes use the negative odd operator of weight `−ε₁−ε₂`:
/// * probe 1 measures at `λ` itself and is active exactly when `λ₁ = λ₂`;
/// * probe 2 measures at `λ + (−1,−3)` and is active exactly when
///   `λ₁ − λ₂ = −2`.
///
/// `lam` is atypical exactly when one of the two equations holds; an active
/// probe has value 1 and certifies infinite projective dimension, an
/// inactive probe vanishes.  (The homology also appears at the translate
/// `ν − (1,1)` of each active weight; one representative per case is
/// designated.)
pub fn pe2_costandard_witnesses(
    a: &AlgebraDescriptor,
    lam: &Weight,
) -> Result<Vec<WitnessProbe>> {
    if a.kind != AlgebraKind::PE(2) {
        return Err(Error::Unsupported(
            "designated costandard witness probes are materialised for pe(2) only".into(),
        ));
    }
    a.check_basis(lam)?;
    let b = lam.basis();
    let diff = lam.coeff(0) - lam.coeff(1);
    let probe1 = WitnessProbe {
        x_weight: Weight::from_i64(b, &[-1, -1]),
        nu: lam.clone(),
        active: diff.is_zero(),
    };
    let probe2 = WitnessProbe {
        x_weight: Weight::from_i64(b, &[-1, -1]),
        nu: lam.add(&Weight::from_i64(b, &[-1, -3])),
        active: diff == Q::from_integer((-2).into()),
    };
    Ok(vec![probe1, probe2])
}

/// Dimension of the homology of a square-zero odd operator at weight `nu`:
/// `dim ker(x: M_ν → M_{ν+wt x}) − rank(x: M_{ν−wt x} → M_ν)`.
///
/// `x_weight` must select a unique odd root vector `x` with `[x,x] = 0`
/// (refused with [`Error::InvalidWitness`] otherwise); `nu` and both
/// neighbours `ν ± wt x` must be certified by the band.  The result is
/// nonnegative because `x² = 0` forces the image into the kernel; a positive
/// value proves `M` is not free as a module over the exterior algebra on
/// `x`, which certifies infinite projective dimension for the module
/// families that designate these probes.
pub fn x_homology_probe(
    m: &TruncatedModule,
    x_weight: &Weight,
    nu: &Weight,
) -> Result<usize> {
    let x = m.real.elem_by_weight(x_weight, true).ok_or_else(|| {
        Error::InvalidWitness(format!(
            "no odd root vector of weight {}",
            x_weight.render()
        ))
    })?;
    if !m.real.bracket(x, x).is_empty() {
        return Err(Error::InvalidWitness(format!(
            "the odd operator of weight {} does not square to zero",
            x_weight.render()
        )));
    }
    if !m.gens.contains(&x) {
        return Err(Error::InvalidParameter(
            "the module does not materialise the action of the probe operator".into(),
        ));
    }
    let d = m.dim_of(nu)?;
    let below = nu.sub(x_weight);
    // Certify both neighbours up front so the two ranks below are exact.
    m.dim_of(&nu.add(x_weight))?;
    m.dim_of(&below)?;
    let rank_out = match m.weight_index(nu) {
        None => 0,
        Some(wi) => match m.action(x, wi)? {
            None => 0,
            Some(op) => op.rank(),
        },
    };
    let rank_in = match m.weight_index(&below) {
        None => 0,
        Some(wi) => match m.action(x, wi)? {
            None => 0,
            Some(op) => op.rank(),
        },
    };
    let ker = d - rank_out;
    assert!(
        ker >= rank_in,
        "a square-zero operator must map into its own kernel; the relation gate should prevent this"
    );
    Ok(ker - rank_in)
}

/// Band used for the singular-vector scan when the induced module with a
/// simple infinite-dimensional even socle equals the full super Verma
/// module.
pub const KAC_SCAN_DEPTH: i64 = 12;

/// Whether the induced (Kac) module with highest weight `lam` is simple.
///
/// * gl(1|1): the module is finite dimensional for every weight; the scan is
///   exhaustive and the answer exact.
/// * osp(2|2) with `λ_δ` a nonnegative integer: finite dimensional,
///   exhaustive scan, exact answer.
/// * osp(2|2) otherwise: the even Verma module is already simple and the
///   induced module is the full super Verma module; the scan covers the band
///   of depth [`KAC_SCAN_DEPTH`].  A singular vector found there proves
///   non-simplicity exactly; absence certifies simplicity within the band,
///   and the routine hard-fails with [`Error::Contradiction`] if absence
///   coincides with an atypical weight (which would mean the band is too
///   shallow, not that the module is simple).
pub fn kac_is_simple(a: &AlgebraDescriptor, lam: &Weight) -> Result<bool> {
    a.check_basis(lam)?;
    match a.kind {
        AlgebraKind::GLmn(1, 1) => {
            let k = build_kac(a.kind, lam)?;
            has_no_proper_singular(&k)
        }
        AlgebraKind::OSP2(1) => {
            let ld = lam.coeff(1);
            if ld.is_integer() && *ld >= Q::zero() {
                let k = build_kac(a.kind, lam)?;
                has_no_proper_singular(&k)
            } else {
                let k = build_verma_super(a.kind, lam, KAC_SCAN_DEPTH)?;
                let simple_in_band = has_no_proper_singular(&k)?;
                if simple_in_band && !is_typical(a, lam)? {
                    return Err(Error::Contradiction(
                        "atypical induced module shows no singular vector within \
                         the scan band; the band is too shallow"
                            .into(),
                    ));
                }
                Ok(simple_in_band)
            }
        }
        _ => Err(Error::Unsupported(
            "induced-module simplicity is materialised for gl(1|1) and osp(2|2) only".into(),
        )),
    }
}

fn has_no_proper_singular(m: &TruncatedModule) -> Result<bool> {
    for wi in 1..m.weights.len() {
        if !singular_vectors(m, &m.weights[wi])?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact composition multiplicities `[M : L(ν)]` of a fully materialised
/// finite-dimensional module, by top-down character peeling: repeatedly take
/// the shallowest weight with a nonzero remaining coefficient, peel that
/// many copies of the simple with that highest weight (computed as the
/// radical quotient of a banded super Verma module), and subtract its
/// character.  Any negative coefficient or character sticking out of the
/// module is a hard [`Error::Contradiction`].
pub fn composition_factors_finite(
    m: &TruncatedModule,
) -> Result<Vec<(Weight, usize)>> {
    if !m.complete {
        return Err(Error::Precondition(
            "composition factors require a fully materialised finite-dimensional module".into(),
        ));
    }
    let a = &m.real.algebra;
    let mut remaining: Vec<i64> = m.dims.iter().map(|&d| d as i64).collect();
    let mut out = Vec::new();
    loop {
        // Weights are sorted shallow → deep, so the first nonzero remaining
        // coefficient is at a maximal weight of the remaining character.
        let Some(pos) = remaining.iter().position(|&c| c != 0) else {
            break;
        };
        let mult = remaining[pos];
        if mult < 0 {
            return Err(Error::Contradiction(
                "character peeling drove a coefficient negative".into(),
            ));
        }
        let w = m.weights[pos].clone();
        // Band depth needed: reach every remaining weight from w.
        let mut depth: i64 = 0;
        for (i, &c) in remaining.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let h = a.height(&w.sub(&m.weights[i]));
            if h.is_integer() {
                if let Some(hh) = h.to_integer().to_i64() {
                    depth = depth.max(hh);
                }
            }
        }
        let delta = build_verma_super(a.kind, &w, depth)?;
        let rad = radical(&delta)?;
        let simple = quotient(&delta, &rad)?;
        for swi in 0..simple.weights.len() {
            let sw = &simple.weights[swi];
            let sd = simple.dims[swi] as i64;
            if sd == 0 {
                continue;
            }
            let Some(mi) = m.weight_index(sw) else {
                return Err(Error::Contradiction(format!(
                    "peeled simple constituent has weight {} outside the module character",
                    sw.render()
                )));
            };
            remaining[mi] -= mult * sd;
            if remaining[mi] < 0 {
                return Err(Error::Contradiction(
                    "character peeling drove a coefficient negative".into(),
                ));
            }
        }
        out.push((w, mult as usize));
    }
    Ok(out)
}

fn pe_algebra(n: usize) -> Result<AlgebraDescriptor> {
    if !(1..=3).contains(&n) {
        return Err(Error::Unsupported(
            "odd-Borel highest-weight translation is materialised for pe(n) with n ≤ 3".into(),
        ));
    }
    build_algebra(AlgebraKind::PE(n))
}

/// Highest weight of the simple pe(n)-module `L(mu)` with respect to the
/// Borel subalgebra whose odd part is the *negative* odd half: the weight of
/// the unique (up to scalar) vector of `L(mu)` annihilated by all even
/// raising operators and the whole negative odd half.
///
/// The vector lies within height `ht(Σ Φ₁⁺)` of the top; the simple module
/// is materialised on a band wide enough to certify the joint-kernel scan,
/// and uniqueness of the resulting line is asserted.
pub fn br_highest_weight_of_simple_pe(n: usize, mu: &Weight) -> Result<Weight> {
    let a = pe_algebra(n)?;
    a.check_basis(mu)?;
    let mut scan: i64 = 0;
    let mut sum = Weight::zero(mu.basis());
    for r in &a.odd_positive_roots {
        sum = sum.add(r);
    }
    if sum
        .coeffs()
        .iter()
        .any(|c| !c.is_integer())
    {
        return Err(Error::Contradiction("odd root sum must be integral".into()));
    }
    let h = a.height(&sum);
    if h.is_integer() {
        scan = h.to_integer().to_i64().unwrap_or(0);
    }
    let delta = build_verma_pe(n, mu, scan)?; // depth fixed below
    let margin = delta.real.max_gen_height;
    let delta = build_verma_pe(n, mu, scan + margin)?;
    let rad = radical(&delta)?;
    let l = quotient(&delta, &rad)?;
    let mut ops: Vec<usize> = l.real.simple_raisers.clone();
    ops.extend(l.real.odd_lower.iter().copied());
    let mut hits: Vec<(Weight, usize)> = Vec::new();
    for wi in 0..l.weights.len() {
        let w = l.weights[wi].clone();
        let h = l
            .band_height(&w)
            .expect("module weights lie on the band lattice");
        if h > scan {
            continue;
        }
        let k = joint_kernel_at(&l, &ops, &w)?;
        if !k.is_empty() {
            hits.push((w, k.len()));
        }
    }
    let total: usize = hits.iter().map(|(_, d)| d).sum();
    if total != 1 {
        return Err(Error::Contradiction(format!(
            "expected a unique lowest-odd-Borel highest-weight line in L({}), found {total}",
            mu.render()
        )));
    }
    Ok(hits.pop().expect("nonempty").0)
}

/// All distinct sums of subsets of `roots` (including the empty sum).
pub fn distinct_subset_sums(roots: &[Weight], zero: Weight) -> Vec<Weight> {
    let mut set: BTreeSet<Weight> = BTreeSet::new();
    set.insert(zero);
    for r in roots {
        let cur: Vec<Weight> = set.iter().cloned().collect();
        for s in cur {
            set.insert(s.add(r));
        }
    }
    set.into_iter().collect()
}

/// Inverse of [`br_highest_weight_of_simple_pe`]: the highest weight `λ⁺`
/// (with respect to the standard Borel) of the simple pe(n)-module whose
/// lowest-odd-Borel highest weight is `lam`.
///
/// Candidates are `lam` plus distinct subset sums of the positive odd roots;
/// exactly one candidate must translate back to `lam`, and that uniqueness
/// is asserted.
pub fn lambda_plus_pe(n: usize, lam: &Weight) -> Result<Weight> {
    let a = pe_algebra(n)?;
    a.check_basis(lam)?;
    let mut hits: Vec<Weight> = Vec::new();
    for s in distinct_subset_sums(&a.odd_positive_roots, Weight::zero(lam.basis())) {
        let mu = lam.add(&s);
        if br_highest_weight_of_simple_pe(n, &mu)? == *lam {
            hits.push(mu);
        }
    }
    if hits.len() != 1 {
        return Err(Error::Contradiction(format!(
            "expected exactly one standard-Borel label over {}, found {}",
            lam.render(),
            hits.len()
        )));
    }
    Ok(hits.pop().expect("nonempty"))
}

/// Socle constituents of a quotient of a (super) Verma module, certified
/// within `certify_band`.
///
/// For each weight `ν` within the band carrying singular vectors, the
/// multiplicity of `L(ν)` in the socle is the dimension of the space of
/// singular vectors `u` whose generated submodule contains no singular
/// vector outside the line of `u` within the band.  That space is computed
/// as the annihilator of the radical of the comparison Verma module `Δ(ν)`
/// (a linear condition), and every reported basis vector is additionally
/// re-certified by the direct closure test.
///
/// Caller obligations: `M` must be a quotient of a highest-weight module
/// with a one-dimensional top, and every highest weight of a composition
/// factor of `M` must lie within `certify_band` (for the standard block
/// decompositions this is the dot orbit of the top, shifted by distinct
/// subset sums of odd roots in the super case).  The band itself must not
/// exceed the materialised depth.
pub fn socle_constituents(
    m: &TruncatedModule,
    certify_band: i64,
) -> Result<BTreeMap<Weight, usize>> {
    if m.dims.first() != Some(&1) {
        return Err(Error::Precondition(
            "socle computation expects a highest-weight module with a one-dimensional top".into(),
        ));
    }
    if certify_band < 0 || certify_band > m.depth {
        return Err(Error::Precondition(
            "certify band exceeds the materialised depth".into(),
        ));
    }
    let mut out = BTreeMap::new();
    for wi in 0..m.weights.len() {
        let nu = m.weights[wi].clone();
        let h = m
            .band_height(&nu)
            .expect("module weights lie on the band lattice");
        if h > certify_band {
            continue;
        }
        let sing = singular_vectors(m, &nu)?;
        if sing.is_empty() {
            continue;
        }
        let good = simple_generating_subspace(m, &nu, &sing)?;
        for u in &good {
            if !closure_is_clean(m, wi, u, certify_band)? {
                return Err(Error::Contradiction(format!(
                    "radical-annihilated singular vector at {} fails the direct closure test; \
                     the certification band is too shallow",
                    nu.render()
                )));
            }
        }
        if !good.is_empty() {
            out.insert(nu, good.len());
        }
    }
    Ok(out)
}

/// The subspace of singular vectors at `nu` that generate a simple
/// submodule: a singular vector `u` induces a module map from `Δ(ν)`
/// sending the top to `u`, and the submodule it generates is simple exactly
/// when the map kills the radical of `Δ(ν)`.  Killing each radical basis
/// vector is a linear condition on `u`, evaluated with the stored monomial
/// forms of the `Δ(ν)` basis.
fn simple_generating_subspace(
    m: &TruncatedModule,
    nu: &Weight,
    sing: &[Vec<Q>],
) -> Result<Vec<Vec<Q>>> {
    let a = &m.real.algebra;
    let h = m
        .band_height(nu)
        .expect("singular weight lies on the band lattice");
    let depth = m.depth - h;
    let delta = match a.kind {
        AlgebraKind::GL(n) => build_verma_even(n, nu, depth)?,
        kind => build_verma_super(kind, nu, depth)?,
    };
    let rad = radical(&delta)?;
    let mons = delta
        .monomials
        .as_ref()
        .expect("Verma builds carry monomial bases");
    let wi_nu = m
        .weight_index(nu)
        .expect("singular weight has nonzero dimension");
    let mut cond_rows: Vec<Vec<Q>> = Vec::new();
    for (&dwi, rvecs) in &rad.by_weight {
        let target_w = delta.weights[dwi].clone();
        let tdim = m.dim_of(&target_w)?;
        for r in rvecs {
            // φ_u(r): image of the radical vector under the map sending the
            // Δ(ν) top to u, one column per singular basis vector.
            let mut images: Vec<Vec<Q>> = Vec::with_capacity(sing.len());
            for u in sing {
                let mut acc = vec![Q::zero(); tdim];
                for (b, rb) in r.iter().enumerate() {
                    if rb.is_zero() {
                        continue;
                    }
                    if let Some((twi, vec)) = m.apply_monomial(&mons[dwi][b], wi_nu, u)? {
                        debug_assert_eq!(m.weights[twi], target_w);
                        for (i, c) in vec.iter().enumerate() {
                            acc[i] = &acc[i] + &(rb * c);
                        }
                    }
                }
                images.push(acc);
            }
            if tdim == 0 {
                continue;
            }
            for i in 0..tdim {
                cond_rows.push((0..sing.len()).map(|k| images[k][i].clone()).collect());
            }
        }
    }
    if cond_rows.is_empty() {
        return Ok(sing.to_vec());
    }
    let coeff_kernel = Matrix::from_rows(cond_rows).kernel_basis();
    let dim_nu = sing
        .first()
        .map(|v| v.len())
        .expect("nonempty singular basis");
    Ok(coeff_kernel
        .into_iter()
        .map(|cs| {
            let mut v = vec![Q::zero(); dim_nu];
            for (k, c) in cs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, s) in sing[k].iter().enumerate() {
                    v[i] = &v[i] + &(c * s);
                }
            }
            v
        })
        .collect())
}

/// Direct closure test: the submodule generated by `u` (a singular vector at
/// `m.weights[wi]`) contains no singular vector outside the line of `u`
/// within `certify_band`.
fn closure_is_clean(
    m: &TruncatedModule,
    wi: usize,
    u: &[Q],
    certify_band: i64,
) -> Result<bool> {
    let closure = submodule_generated(m, &[(wi, u.to_vec())])?;
    for (&cw, vecs) in &closure.by_weight {
        let w = &m.weights[cw];
        let h = m
            .band_height(w)
            .expect("module weights lie on the band lattice");
        if h > certify_band {
            continue;
        }
        let sing = singular_vectors(m, w)?;
        if sing.is_empty() {
            continue;
        }
        let inter = intersection_dim(vecs, &sing);
        if cw == wi {
            if inter != 1 {
                return Ok(false);
            }
        } else if inter != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the intersection of the spans of two nonempty row families:
/// `dim A + dim B − dim(A ∪ B)`.
fn intersection_dim(a: &[Vec<Q>], b: &[Vec<Q>]) -> usize {
    let ra = Matrix::from_rows(a.to_vec()).rank();
    let rb = Matrix::from_rows(b.to_vec()).rank();
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    let rall = Matrix::from_rows(all).rank();
    ra + rb - rall
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisTag;
    use crate::linkage::{hom_dim_verma_even, hom_dim_verma_pe};
    use crate::oracle::module::build_costandard_pe;

    fn w(basis: BasisTag, coords: &[i64]) -> Weight {
        Weight::from_i64(basis, coords)
    }

    #[test]
    fn gl2_singular_vectors_on_orbit() {
        let b = BasisTag::EpsilonN(2);
        let lam = w(b, &[0, 0]);
        let m = build_verma_even(2, &lam, 6).unwrap();
        assert_eq!(singular_vectors(&m, &lam).unwrap().len(), 1);
        assert_eq!(singular_vectors(&m, &w(b, &[-1, 1])).unwrap().len(), 1);
        assert_eq!(singular_vectors(&m, &w(b, &[-2, 2])).unwrap().len(), 0);
        assert_eq!(singular_vectors(&m, &w(b, &[-3, 3])).unwrap().len(), 0);
        let found = singular_weights(&m, 6).unwrap();
        assert_eq!(
            found,
            vec![(lam.clone(), 1), (w(b, &[-1, 1]), 1)],
            "exactly the dot orbit carries singular vectors"
        );
    }

    #[test]
    fn hom_dim_oracle_matches_formula_gl3() {
        let a = build_algebra(AlgebraKind::GL(3)).unwrap();
        let b = BasisTag::EpsilonN(3);
        let lam = w(b, &[0, 0, 0]);
        for (mu, expect) in [
            (w(b, &[0, 0, 0]), 1usize),
            (w(b, &[-1, 1, 0]), 1),
            (w(b, &[0, -1, 1]), 1),
            (w(b, &[-2, 0, 2]), 1),
            (w(b, &[-1, 0, 1]), 0),
            (w(b, &[-1, -1, 2]), 1),
        ] {
            let formula = hom_dim_verma_even(&a, &mu, &lam).unwrap();
            let oracle = hom_dim_oracle(&a, &mu, &lam, 8).unwrap();
            assert_eq!(oracle, formula, "mu = {}", mu.render());
            assert_eq!(oracle, expect, "mu = {}", mu.render());
        }
    }

    #[test]
    fn hom_dim_oracle_matches_formula_pe2() {
        let a = build_algebra(AlgebraKind::PE(2)).unwrap();
        let b = BasisTag::EpsilonN(2);
        for (lam, mu) in [
            (w(b, &[0, 0]), w(b, &[-1, 1])),
            (w(b, &[1, 0]), w(b, &[-1, 2])),
            (w(b, &[2, 1]), w(b, &[0, 3])),
        ] {
            let formula = hom_dim_verma_pe(2, &mu, &lam).unwrap();
            let oracle = hom_dim_oracle(&a, &mu, &lam, 10).unwrap();
            assert_eq!(
                oracle,
                formula,
                "lam = {}, mu = {}",
                lam.render(),
                mu.render()
            );
            assert_eq!(oracle, 1);
        }
        // Off-orbit weight: zero both ways.
        let lam = w(b, &[1, 0]);
        let mu = w(b, &[0, 0]);
        assert_eq!(hom_dim_verma_pe(2, &mu, &lam).unwrap(), 0);
        assert_eq!(hom_dim_oracle(&a, &mu, &lam, 10).unwrap(), 0);
    }

    #[test]
    fn hom_dim_oracle_refuses_below_band() {
        let a = build_algebra(AlgebraKind::GL(2)).unwrap();
        let b = BasisTag::EpsilonN(2);
        let err = hom_dim_oracle(&a, &w(b, &[-9, 9]), &w(b, &[0, 0]), 6).unwrap_err();
        assert!(matches!(err, Error::Band(_)));
    }

    #[test]
    fn kostant_partition_counts_gl3() {
        let a = build_algebra(AlgebraKind::GL(3)).unwrap();
        let b = BasisTag::EpsilonN(3);
        assert_eq!(kostant_count(&a, &w(b, &[0, 0, 0])).unwrap(), 1);
        assert_eq!(kostant_count(&a, &w(b, &[1, -1, 0])).unwrap(), 1);
        assert_eq!(kostant_count(&a, &w(b, &[1, 0, -1])).unwrap(), 2);
        assert_eq!(kostant_count(&a, &w(b, &[2, 0, -2])).unwrap(), 3);
        assert_eq!(kostant_count(&a, &w(b, &[-1, 1, 0])).unwrap(), 0);
    }

    #[test]
    fn kostant_matches_verma_dimensions() {
        for n in [2usize, 3] {
            let a = build_algebra(AlgebraKind::GL(n)).unwrap();
            let b = BasisTag::EpsilonN(n);
            let lam = w(b, &vec![0i64; n]);
            let m = build_verma_even(n, &lam, 6).unwrap();
            for wi in 0..m.weights.len() {
                let beta = lam.sub(&m.weights[wi]);
                assert_eq!(
                    kostant_count(&a, &beta).unwrap(),
                    m.dims[wi],
                    "beta = {}",
                    beta.render()
                );
            }
        }
    }

    #[test]
    fn osp_witness_probes_certify_atypicality() {
        let a = build_algebra(AlgebraKind::OSP2(1)).unwrap();
        let b = BasisTag::EpsilonDelta(1, 1);
        for (lam, expect_active) in [
            (w(b, &[0, 0]), [false, true]),
            (w(b, &[3, 1]), [true, false]),
            (w(b, &[1, 3]), [false, false]),
        ] {
            let m = build_verma_super(AlgebraKind::OSP2(1), &lam, 8).unwrap();
            let probes = osp22_designated_witnesses(&a, &lam).unwrap();
            assert_eq!(probes.len(), 2);
            for (p, expect) in probes.iter().zip(expect_active) {
                assert_eq!(p.active, expect, "lam = {}", lam.render());
                let value = x_homology_probe(&m, &p.x_weight, &p.nu).unwrap();
                assert_eq!(
                    value,
                    usize::from(expect),
                    "lam = {}, probe at {}",
                    lam.render(),
                    p.nu.render()
                );
            }
        }
        // A weight that selects no odd root vector is an invalid witness.
        let m = build_verma_super(AlgebraKind::OSP2(1), &w(b, &[0, 0]), 4).unwrap();
        let err = x_homology_probe(&m, &w(b, &[0, 2]), &w(b, &[0, 0])).unwrap_err();
        assert!(matches!(err, Error::InvalidWitness(_)));
    }

    #[test]
    fn pe2_costandard_witness_probes() {
        let a = build_algebra(AlgebraKind::PE(2)).unwrap();
        let b = BasisTag::EpsilonN(2);
        for (lam, expect_active) in [
            (w(b, &[1, 1]), [true, false]),
            (w(b, &[0, 0]), [true, false]),
            (w(b, &[0, 2]), [false, true]),
            (w(b, &[-1, 1]), [false, true]),
            (w(b, &[1, -1]), [false, false]),
            (w(b, &[3, 0]), [false, false]),
        ] {
            let nabla = build_costandard_pe(2, &lam, 12).unwrap();
            let probes = pe2_costandard_witnesses(&a, &lam).unwrap();
            assert_eq!(probes.len(), 2);
            for (p, expect) in probes.iter().zip(expect_active) {
                assert_eq!(p.active, expect, "lam = {}", lam.render());
                let value = x_homology_probe(&nabla, &p.x_weight, &p.nu).unwrap();
                assert_eq!(
                    value,
                    usize::from(expect),
                    "lam = {}, probe at {}",
                    lam.render(),
                    p.nu.render()
                );
            }
        }
    }

    #[test]
    fn kac_simplicity_gl11() {
        let a = crate::algebra::build_algebra_with(AlgebraKind::GLmn(1, 1), true).unwrap();
        let b = BasisTag::EpsilonDelta(1, 1);
        assert!(kac_is_simple(&a, &w(b, &[1, 0])).unwrap());
        assert!(kac_is_simple(&a, &w(b, &[2, 1])).unwrap());
        assert!(!kac_is_simple(&a, &w(b, &[1, -1])).unwrap());
        assert!(!kac_is_simple(&a, &w(b, &[0, 0])).unwrap());
    }

    #[test]
    fn kac_simplicity_osp22() {
        let a = build_algebra(AlgebraKind::OSP2(1)).unwrap();
        let b = BasisTag::EpsilonDelta(1, 1);
        // Finite-dimensional evendominant cases.
        assert!(kac_is_simple(&a, &w(b, &[5, 1])).unwrap());
        assert!(!kac_is_simple(&a, &w(b, &[3, 1])).unwrap());
        assert!(!kac_is_simple(&a, &w(b, &[-1, 1])).unwrap());
        // Full super Verma cases (λ_δ not a nonnegative integer).
        assert!(kac_is_simple(&a, &w(b, &[2, -3])).unwrap());
        assert!(!kac_is_simple(&a, &w(b, &[1, -1])).unwrap());
    }

    #[test]
    fn kac_composition_factors_gl11() {
        let b = BasisTag::EpsilonDelta(1, 1);
        let typical = build_kac(AlgebraKind::GLmn(1, 1), &w(b, &[1, 0])).unwrap();
        assert_eq!(
            composition_factors_finite(&typical).unwrap(),
            vec![(w(b, &[1, 0]), 1)]
        );
        let atypical = build_kac(AlgebraKind::GLmn(1, 1), &w(b, &[1, -1])).unwrap();
        assert_eq!(
            composition_factors_finite(&atypical).unwrap(),
            vec![(w(b, &[1, -1]), 1), (w(b, &[0, 0]), 1)]
        );
    }

    #[test]
    fn br_highest_pe2_frozen() {
        let b = BasisTag::EpsilonN(2);
        assert_eq!(
            br_highest_weight_of_simple_pe(2, &w(b, &[0, 0])).unwrap(),
            w(b, &[0, 0])
        );
        assert_eq!(
            br_highest_weight_of_simple_pe(2, &w(b, &[2, 1])).unwrap(),
            w(b, &[1, 0])
        );
    }

    #[test]
    fn lambda_plus_pe2_frozen() {
        let b = BasisTag::EpsilonN(2);
        assert_eq!(lambda_plus_pe(2, &w(b, &[0, 0])).unwrap(), w(b, &[0, 0]));
        assert_eq!(lambda_plus_pe(2, &w(b, &[1, 0])).unwrap(), w(b, &[2, 1]));
    }

    #[test]
    fn socle_gl2_quotient_is_simple_top() {
        let b = BasisTag::EpsilonN(2);
        let lam = w(b, &[0, 0]);
        let m = build_verma_even(2, &lam, 8).unwrap();
        let gamma = w(b, &[-1, 1]);
        let sing = singular_vectors(&m, &gamma).unwrap();
        assert_eq!(sing.len(), 1);
        let wi = m.weight_index(&gamma).unwrap();
        let sub = submodule_generated(&m, &[(wi, sing[0].clone())]).unwrap();
        let q = quotient(&m, &sub).unwrap();
        let soc = socle_constituents(&q, 6).unwrap();
        assert_eq!(soc, BTreeMap::from([(lam, 1)]));
    }

    #[test]
    fn socle_gl3_simple_reflection_quotient() {
        let b = BasisTag::EpsilonN(3);
        let lam = w(b, &[0, 0, 0]);
        let m = build_verma_even(3, &lam, 8).unwrap();
        let gamma = w(b, &[-1, 1, 0]);
        let sing = singular_vectors(&m, &gamma).unwrap();
        assert_eq!(sing.len(), 1);
        let wi = m.weight_index(&gamma).unwrap();
        let sub = submodule_generated(&m, &[(wi, sing[0].clone())]).unwrap();
        let q = quotient(&m, &sub).unwrap();
        let soc = socle_constituents(&q, 6).unwrap();
        assert_eq!(soc, BTreeMap::from([(w(b, &[0, -1, 1]), 1)]));
    }

    #[test]
    fn socle_pe2_verma_quotient_example() {
        let b = BasisTag::EpsilonN(2);
        let lam = w(b, &[0, 0]);
        let m = build_verma_pe(2, &lam, 12).unwrap();
        let gamma = w(b, &[-1, 1]);
        let sing = singular_vectors(&m, &gamma).unwrap();
        assert_eq!(sing.len(), 1);
        let wi = m.weight_index(&gamma).unwrap();
        let sub = submodule_generated(&m, &[(wi, sing[0].clone())]).unwrap();
        let q = quotient(&m, &sub).unwrap();
        let soc = socle_constituents(&q, 8).unwrap();
        assert_eq!(soc, BTreeMap::from([(w(b, &[-1, -1]), 1)]));
    }
}
