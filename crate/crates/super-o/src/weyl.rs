//! Weyl groups of the even parts: symmetric groups (family A) and signed
//! permutation groups (family C), with the dot action, lengths, Bruhat
//! order, parabolic cosets, orbit extremes with minimal witnesses, integral
//! Weyl groups, and the block-equivalence relation for the periplectic
//! family.
//!
//! Elements are stored in one-line window notation: `window[i-1] = w(i)`,
//! signed for family C (`w(-i) = -w(i)`). Composition is function
//! composition, `(u ∘ v)(i) = u(v(i))`. The plain action on coordinate
//! vectors sends the value at position `i` to position `|w(i)|` with the
//! sign of `w(i)`; the dot action is `w·λ = w(λ+ρ₀) − ρ₀`.
//!
//! Lengths are computed as inversion counts on the family's positive-root
//! list (the number of positive roots sent to negative roots), which keeps
//! every convention downstream of the action itself.

use crate::algebra::{
    coroot_pairing, is_integral, orbit_extreme_weight, AlgebraDescriptor, AlgebraKind,
    OrbitExtreme, Weight,
};
use crate::error::{Error, Result};
use crate::Q;
use itertools::Itertools;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

/// Weyl group family: A(n) acts by permutations of n coordinates, C(n) by
/// signed permutations of n coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    A(usize),
    C(usize),
}

impl Family {
    pub fn rank(self) -> usize {
        match self {
            Family::A(n) | Family::C(n) => n,
        }
    }

    /// Number of simple reflections: n−1 for A(n), n for C(n).
    pub fn generator_count(self) -> usize {
        match self {
            Family::A(n) => n.saturating_sub(1),
            Family::C(n) => n,
        }
    }

    pub fn order(self) -> usize {
        let fact = |n: usize| (1..=n).product::<usize>();
        match self {
            Family::A(n) => fact(n),
            Family::C(n) => fact(n) << n,
        }
    }

    /// Positive roots of the family as integer coordinate vectors.
    pub fn positive_roots(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut roots = Vec::new();
        let mut root = |entries: &[(usize, i64)]| {
            let mut v = vec![0i64; n];
            for &(i, c) in entries {
                v[i] = c;
            }
            roots.push(v);
        };
        for i in 0..n {
            for j in (i + 1)..n {
                root(&[(i, 1), (j, -1)]);
                if let Family::C(_) = self {
                    root(&[(i, 1), (j, 1)]);
                }
            }
        }
        if let Family::C(_) = self {
            for p in 0..n {
                root(&[(p, 2)]);
            }
        }
        roots
    }

    /// The even Weyl-group family attached to an algebra: A(n) for gl(n)
    /// and pe(n), C(n) for osp(2|2n). gl(m|n) has a product group and is
    /// refused here.
    pub fn of_algebra(a: &AlgebraDescriptor) -> Result<Family> {
        match a.kind {
            AlgebraKind::GL(n) | AlgebraKind::PE(n) => Ok(Family::A(n)),
            AlgebraKind::OSP2(n) => Ok(Family::C(n)),
            AlgebraKind::GLmn(..) => Err(Error::FamilyMismatch(format!(
                "{} has a product even Weyl group; single-family element operations do not apply",
                a.kind
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A({n})"),
            Family::C(n) => write!(f, "C({n})"),
        }
    }
}

/// A (signed) permutation in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    family: Family,
    window: Vec<i32>,
}

impl WeylElement {
    pub fn identity(family: Family) -> WeylElement {
        WeylElement {
            family,
            window: (1..=family.rank() as i32).collect(),
        }
    }

    pub fn from_window(family: Family, window: Vec<i32>) -> Result<WeylElement> {
        let n = family.rank();
        if window.len() != n {
            return Err(Error::InvalidParameter(format!(
                "window length {} does not match rank {n}",
                window.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidParameter(format!(
                    "window {window:?} is not a (signed) permutation of 1..={n}"
                )));
            }
            if v < 0 && matches!(family, Family::A(_)) {
                return Err(Error::InvalidParameter(
                    "family A windows must be unsigned".into(),
                ));
            }
            seen[a - 1] = true;
        }
        Ok(WeylElement { family, window })
    }

    /// The i-th simple reflection (1-based). For A(n): the transposition
    /// (i, i+1), i < n. For C(n): transpositions for i < n and the sign
    /// flip of the last coordinate for i = n.
    pub fn simple(family: Family, i: usize) -> Result<WeylElement> {
        let n = family.rank();
        let valid = match family {
            Family::A(_) => i >= 1 && i < n,
            Family::C(_) => i >= 1 && i <= n,
        };
        if !valid {
            return Err(Error::OutOfRange(format!(
                "no simple reflection s_{i} in {family}"
            )));
        }
        let mut w = WeylElement::identity(family);
        if i < n {
            w.window.swap(i - 1, i);
        } else {
            w.window[n - 1] = -(n as i32);
        }
        Ok(w)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Signed image of a signed index: w(−i) = −w(i).
    fn map(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }

    /// Function composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.family, other.family, "composing across families");
        WeylElement {
            family: self.family,
            window: other.window.iter().map(|&v| self.map(v)).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.family.rank();
        let mut window = vec![0i32; n];
        for (i, &v) in self.window.iter().enumerate() {
            let target = v.unsigned_abs() as usize - 1;
            window[target] = if v > 0 {
                i as i32 + 1
            } else {
                -(i as i32 + 1)
            };
        }
        WeylElement {
            family: self.family,
            window,
        }
    }

    /// Plain action on a coordinate vector of the family's rank: the value
    /// at position i moves to position |w(i)| with the sign of w(i).
    pub fn act_coords(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.family.rank(), "coordinate arity mismatch");
        let mut out = vec![Q::zero(); v.len()];
        for (i, &t) in self.window.iter().enumerate() {
            let j = t.unsigned_abs() as usize - 1;
            out[j] = if t > 0 { v[i].clone() } else { -&v[i] };
        }
        out
    }

    fn act_root(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; v.len()];
        for (i, &t) in self.window.iter().enumerate() {
            let j = t.unsigned_abs() as usize - 1;
            out[j] = if t > 0 { v[i] } else { -v[i] };
        }
        out
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.family
            .positive_roots()
            .iter()
            .filter(|r| root_is_negative(&self.act_root(r)))
            .count()
    }

    /// Right multiplication by a simple reflection.
    pub fn times_simple(&self, i: usize) -> Result<WeylElement> {
        Ok(self.compose(&WeylElement::simple(self.family, i)?))
    }

    /// Left multiplication by a simple reflection.
    pub fn simple_times(&self, i: usize) -> Result<WeylElement> {
        Ok(WeylElement::simple(self.family, i)?.compose(self))
    }

    /// One-line rendering: `231` for family A (comma-separated above rank 9),
    /// signed comma-separated `2,-1` for family C.
    pub fn render(&self) -> String {
        match self.family {
            Family::A(n) if n <= 9 => self.window.iter().map(|v| v.to_string()).collect(),
            _ => self.window.iter().map(|v| v.to_string()).join(","),
        }
    }

    /// Parse one-line notation for a given family (both the compact digit
    /// form and the comma-separated form are accepted for family A).
    pub fn parse(s: &str, family: Family) -> Result<WeylElement> {
        let s = s.trim();
        let window: Vec<i32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i32>()
                        .map_err(|e| Error::Parse(format!("bad window entry {t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as i32)
                        .ok_or_else(|| Error::Parse(format!("bad window digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        WeylElement::from_window(family, window)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{}]", self.render())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn root_is_negative(v: &[i64]) -> bool {
    for &c in v {
        if c != 0 {
            return c < 0;
        }
    }
    false
}

/// A standard parabolic subgroup, given by its simple-reflection indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicSubgroup {
    pub family: Family,
    pub generators: BTreeSet<usize>,
}

impl ParabolicSubgroup {
    pub fn new(family: Family, generators: impl IntoIterator<Item = usize>) -> Result<Self> {
        let generators: BTreeSet<usize> = generators.into_iter().collect();
        for &i in &generators {
            WeylElement::simple(family, i)?;
        }
        Ok(ParabolicSubgroup { family, generators })
    }

    pub fn full(family: Family) -> Self {
        ParabolicSubgroup {
            family,
            generators: (1..=family.generator_count()).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Longest element of the full group: the reversal for A(n), the global
/// sign flip for C(n). Cross-checked against the greedy ascent construction
/// in tests.
pub fn longest_element(family: Family) -> WeylElement {
    let n = family.rank();
    let window = match family {
        Family::A(_) => (1..=n as i32).rev().collect(),
        Family::C(_) => (1..=n as i32).map(|i| -i).collect(),
    };
    WeylElement { family, window }
}

/// Longest element of a standard parabolic subgroup, built by greedy ascent:
/// repeatedly multiply by a generator that increases length. The unique
/// element of W_P without ascents in P is its longest element.
pub fn longest_in(p: &ParabolicSubgroup) -> WeylElement {
    let mut w = WeylElement::identity(p.family);
    let mut len = 0usize;
    loop {
        let mut advanced = false;
        for &i in &p.generators {
            let cand = w.times_simple(i).expect("validated generator");
            let cand_len = cand.length();
            if cand_len > len {
                w = cand;
                len = cand_len;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return w;
        }
    }
}

/// A reduced word for w (generator indices, leftmost factor first), built by
/// stripping the smallest right descent at each step.
pub fn reduced_word(w: &WeylElement) -> Vec<usize> {
    let mut w = w.clone();
    let mut len = w.length();
    let mut rev = Vec::with_capacity(len);
    while len > 0 {
        let mut stripped = false;
        for i in 1..=w.family.generator_count() {
            let cand = w.times_simple(i).expect("valid generator");
            let cand_len = cand.length();
            if cand_len < len {
                rev.push(i);
                w = cand;
                len = cand_len;
                stripped = true;
                break;
            }
        }
        assert!(stripped, "non-identity element with no right descent");
    }
    rev.reverse();
    rev
}

/// Multiply out a generator word (leftmost factor first).
pub fn from_word(family: Family, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(family);
    for &i in word {
        w = w.times_simple(i)?;
    }
    Ok(w)
}

/// Which side of a descent or coset.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Descent set of w on the requested side (right: ℓ(ws_i) < ℓ(w)).
pub fn descents(w: &WeylElement, side: Side) -> BTreeSet<usize> {
    let len = w.length();
    (1..=w.family.generator_count())
        .filter(|&i| {
            let cand = match side {
                Side::Right => w.times_simple(i),
                Side::Left => w.simple_times(i),
            };
            cand.expect("valid generator").length() < len
        })
        .collect()
}

/// Bigrassmannian test (family A only): exactly one left and one right
/// descent.
pub fn is_bigrassmannian(w: &WeylElement) -> Result<bool> {
    match w.family {
        Family::A(_) => Ok(descents(w, Side::Left).len() == 1
            && descents(w, Side::Right).len() == 1),
        Family::C(_) => Err(Error::Unsupported(
            "bigrassmannian classification is only available for family A".into(),
        )),
    }
}

/// Bruhat order. Family A uses the dominance-matrix criterion
/// (x ≤ y iff #{k ≤ i : x(k) ≥ j} ≤ #{k ≤ i : y(k) ≥ j} for all i, j);
/// family C uses the descent-lifting recursion. The two are cross-checked
/// against the subword test and cover-relation closure in tests.
pub fn bruhat_leq(x: &WeylElement, y: &WeylElement) -> bool {
    assert_eq!(x.family, y.family, "Bruhat comparison across groups");
    match x.family {
        Family::A(n) => {
            for i in 1..=n {
                for j in 1..=n {
                    let count = |w: &WeylElement| {
                        w.window[..i].iter().filter(|&&v| v as usize >= j).count()
                    };
                    if count(x) > count(y) {
                        return false;
                    }
                }
            }
            true
        }
        Family::C(_) => bruhat_leq_lifting(x, y),
    }
}

fn bruhat_leq_lifting(x: &WeylElement, y: &WeylElement) -> bool {
    if y.is_identity() {
        return x.is_identity();
    }
    let i = *descents(y, Side::Left)
        .iter()
        .next()
        .expect("non-identity element has a left descent");
    let sy = y.simple_times(i).expect("valid generator");
    let sx = x.simple_times(i).expect("valid generator");
    if sx.length() < x.length() {
        bruhat_leq_lifting(&sx, &sy)
    } else {
        bruhat_leq_lifting(x, &sy)
    }
}

/// Subword Bruhat test: x ≤ y iff x is a product of some subsequence of a
/// reduced word of y. Exponential in ℓ(y); used as an independent
/// cross-check at desk scale.
pub fn bruhat_leq_subword(x: &WeylElement, y: &WeylElement) -> bool {
    assert_eq!(x.family, y.family);
    let word = reduced_word(y);
    let mut products: HashSet<WeylElement> = HashSet::new();
    products.insert(WeylElement::identity(y.family));
    for &i in &word {
        let with_letter: Vec<WeylElement> = products
            .iter()
            .map(|w| w.times_simple(i).expect("valid generator"))
            .collect();
        products.extend(with_letter);
    }
    products.contains(x)
}

/// All elements of the group, sorted by (length, window) for determinism.
pub fn enumerate_group(family: Family) -> Vec<WeylElement> {
    let n = family.rank();
    let mut out = Vec::with_capacity(family.order());
    for perm in (1..=n as i32).permutations(n) {
        match family {
            Family::A(_) => out.push(WeylElement {
                family,
                window: perm,
            }),
            Family::C(_) => {
                for mask in 0..(1usize << n) {
                    let window: Vec<i32> = perm
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect();
                    out.push(WeylElement { family, window });
                }
            }
        }
    }
    out.sort_by_cached_key(|w| (w.length(), w.window.clone()));
    out
}

/// Normalize w to the minimal-length representative of its coset:
/// side Right normalizes within Pw (removing left descents in P), side Left
/// within wP (removing right descents in P).
pub fn min_coset_rep(w: &WeylElement, p: &ParabolicSubgroup, side: Side) -> WeylElement {
    let mut w = w.clone();
    let mut len = w.length();
    loop {
        let mut advanced = false;
        for &i in &p.generators {
            let cand = match side {
                Side::Right => w.simple_times(i),
                Side::Left => w.times_simple(i),
            }
            .expect("valid generator");
            let cand_len = cand.length();
            if cand_len < len {
                w = cand;
                len = cand_len;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return w;
        }
    }
}

/// Which representative to take in each coset.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepLength {
    Shortest,
    Longest,
}

/// Complete, duplicate-free list of coset representatives: side Right lists
/// one element per coset Pw, side Left one per wP. Longest representatives
/// are the shortest ones multiplied by the longest element of W_P on the
/// appropriate side. Output is sorted by (length, window).
pub fn coset_reps(
    p: &ParabolicSubgroup,
    which: RepLength,
    side: Side,
) -> Vec<WeylElement> {
    let mut minimal: BTreeSet<WeylElement> = BTreeSet::new();
    for w in enumerate_group(p.family) {
        minimal.insert(min_coset_rep(&w, p, side));
    }
    let w0p = longest_in(p);
    let mut reps: Vec<WeylElement> = minimal
        .into_iter()
        .map(|w| match which {
            RepLength::Shortest => w,
            RepLength::Longest => match side {
                Side::Right => w0p.compose(&w),
                Side::Left => w.compose(&w0p),
            },
        })
        .collect();
    reps.sort_by_cached_key(|w| (w.length(), w.window().to_vec()));
    reps
}

/// Extract the coordinate block a family element moves: everything for the
/// type-A algebras, the δ-block for osp(2|2n).
fn movable_block(a: &AlgebraDescriptor) -> Result<std::ops::Range<usize>> {
    match a.kind {
        AlgebraKind::GL(n) | AlgebraKind::PE(n) => Ok(0..n),
        AlgebraKind::OSP2(n) => Ok(1..n + 1),
        AlgebraKind::GLmn(..) => Err(Error::FamilyMismatch(format!(
            "{} weights are not acted on by a single-family element",
            a.kind
        ))),
    }
}

fn check_family(a: &AlgebraDescriptor, w: &WeylElement) -> Result<()> {
    let expected = Family::of_algebra(a)?;
    if w.family() != expected {
        return Err(Error::FamilyMismatch(format!(
            "element of {} applied to a {} weight (expected {expected})",
            w.family(),
            a.kind
        )));
    }
    Ok(())
}

/// Plain (undotted) action of w on a weight of the algebra.
pub fn act(a: &AlgebraDescriptor, w: &WeylElement, lam: &Weight) -> Result<Weight> {
    a.check_basis(lam)?;
    check_family(a, w)?;
    let range = movable_block(a)?;
    let mut coeffs = lam.coeffs().to_vec();
    let moved = w.act_coords(&coeffs[range.clone()]);
    coeffs.splice(range, moved);
    Weight::new(a.basis, coeffs)
}

/// Dot action: w·λ = w(λ+ρ₀) − ρ₀.
pub fn dot(a: &AlgebraDescriptor, w: &WeylElement, lam: &Weight) -> Result<Weight> {
    Ok(act(a, w, &lam.add(&a.rho0))?.sub(&a.rho0))
}

/// Dot reflection in one even root: s_α·λ = λ − ⟨λ+ρ₀, α∨⟩ α.
pub fn reflect_dot(a: &AlgebraDescriptor, alpha: &Weight, lam: &Weight) -> Result<Weight> {
    let pairing = coroot_pairing(a, &lam.add(&a.rho0), alpha)?;
    Ok(lam.sub(&alpha.scaled(&pairing)))
}

/// Stabilizer of μ under the dot action, computed on the dominant orbit
/// representative and returned as a standard parabolic subgroup.
pub fn stabilizer(a: &AlgebraDescriptor, mu: &Weight) -> Result<ParabolicSubgroup> {
    let family = Family::of_algebra(a)?;
    let dominant = orbit_extreme_weight(a, mu, OrbitExtreme::Dominant)?;
    let mut generators = BTreeSet::new();
    for i in 1..=family.generator_count() {
        let s = WeylElement::simple(family, i)?;
        if dot(a, &s, &dominant)? == dominant {
            generators.insert(i);
        }
    }
    Ok(ParabolicSubgroup { family, generators })
}

/// Dominant or antidominant representative of the dot orbit, together with
/// the unique minimal-length witness w satisfying w·(extreme) = λ.
pub fn orbit_extreme(
    a: &AlgebraDescriptor,
    lam: &Weight,
    which: OrbitExtreme,
) -> Result<(Weight, WeylElement)> {
    let family = Family::of_algebra(a)?;
    let extreme = orbit_extreme_weight(a, lam, which)?;
    let range = movable_block(a)?;
    let shifted_target = lam.add(&a.rho0);
    let shifted_source = extreme.add(&a.rho0);
    let target = &shifted_target.coeffs()[range.clone()];
    let source = &shifted_source.coeffs()[range];
    let n = target.len();

    // Stable assignment: scan target positions in order; each takes the
    // earliest unused source position with the matching absolute value.
    // Order-preservation within equal-value classes (and positive signs on
    // zeros, for family C) makes the result the minimal-length witness.
    let mut used = vec![false; n];
    let mut window = vec![0i32; n];
    for (jpos, t) in target.iter().enumerate() {
        let want = t.abs();
        let mut found = false;
        for (ipos, s) in source.iter().enumerate() {
            if used[ipos] {
                continue;
            }
            let matches = match family {
                Family::A(_) => s == t,
                Family::C(_) => s.abs() == want,
            };
            if matches {
                used[ipos] = true;
                let negative = matches!(family, Family::C(_))
                    && (t.is_negative() != s.is_negative())
                    && !t.is_zero()
                    && !s.is_zero();
                window[ipos] = if negative {
                    -(jpos as i32 + 1)
                } else {
                    jpos as i32 + 1
                };
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::InvalidParameter(format!(
                "orbit mismatch assembling a witness for {lam}"
            )));
        }
    }
    let witness = WeylElement::from_window(family, window)?;
    debug_assert_eq!(dot(a, &witness, &extreme)?, *lam);
    Ok((extreme, witness))
}

/// The integral Weyl group of a type-A family algebra (gl(n) or pe(n)),
/// encoded by the partition of coordinate indices into integrality classes
/// (i ~ j iff λ_i − λ_j ∈ Z). The group is the product of the symmetric
/// groups on the classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegralWeylGroup {
    pub rank: usize,
    /// 1-based coordinate indices; each class sorted, classes ordered by
    /// smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl IntegralWeylGroup {
    /// The simple reflections s_i contained in the group: those with i and
    /// i+1 in the same class.
    pub fn simple_generators(&self) -> BTreeSet<usize> {
        let class_of = self.class_index_map();
        (1..self.rank)
            .filter(|&i| class_of[i - 1] == class_of[i])
            .collect()
    }

    fn class_index_map(&self) -> Vec<usize> {
        let mut class_of = vec![0usize; self.rank];
        for (c, class) in self.classes.iter().enumerate() {
            for &i in class {
                class_of[i - 1] = c;
            }
        }
        class_of
    }

    /// As a standard parabolic subgroup of A(rank), when every class is a
    /// contiguous index interval; None otherwise.
    pub fn as_standard_parabolic(&self) -> Option<ParabolicSubgroup> {
        for class in &self.classes {
            let lo = class[0];
            let hi = *class.last().expect("classes are non-empty");
            if class.len() != hi - lo + 1 {
                return None;
            }
        }
        Some(
            ParabolicSubgroup::new(Family::A(self.rank), self.simple_generators())
                .expect("generators are in range"),
        )
    }

    /// Length of the longest element: the product of symmetric groups on
    /// the classes has longest length Σ k(k−1)/2.
    pub fn length_of_longest(&self) -> usize {
        self.classes.iter().map(|c| c.len() * (c.len() - 1) / 2).sum()
    }

    /// True when the standard parabolic generated by `p` sits inside this
    /// group, i.e. every generator joins indices of one class.
    pub fn contains_parabolic(&self, p: &BTreeSet<usize>) -> bool {
        let gens = self.simple_generators();
        p.iter().all(|i| gens.contains(i))
    }
}

/// Integral Weyl group of λ for gl(n) or pe(n).
pub fn integral_weyl_group(a: &AlgebraDescriptor, lam: &Weight) -> Result<IntegralWeylGroup> {
    match a.kind {
        AlgebraKind::GL(_) | AlgebraKind::PE(_) => {}
        _ => {
            return Err(Error::Unsupported(format!(
                "integral Weyl groups are provided for gl(n) and pe(n) only, not {}",
                a.kind
            )))
        }
    }
    a.check_basis(lam)?;
    let n = a.basis.rank();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i].is_some() {
            continue;
        }
        let c = classes.len();
        classes.push(vec![i + 1]);
        class_of[i] = Some(c);
        for j in (i + 1)..n {
            if class_of[j].is_none() && (lam.coeff(i) - lam.coeff(j)).is_integer() {
                class_of[j] = Some(c);
                classes[c].push(j + 1);
            }
        }
    }
    Ok(IntegralWeylGroup { rank: n, classes })
}

/// Fast block-equivalence test for integral pe(n) weights: the moves
/// λ ↦ λ ± 2ε_k and λ ↦ w·λ (w in the integral Weyl group, here all of W)
/// permute the entries of λ+ρ₀ and shift single entries by 2, so the
/// number of odd entries of λ+ρ₀ is a complete invariant. Certified against
/// the breadth-first closure (`pe_block_equivalent_bfs`) in tests.
pub fn pe_block_equivalent(a: &AlgebraDescriptor, lam: &Weight, nu: &Weight) -> Result<bool> {
    if !matches!(a.kind, AlgebraKind::PE(_)) {
        return Err(Error::Unsupported(format!(
            "block equivalence is defined for pe(n), not {}",
            a.kind
        )));
    }
    for w in [lam, nu] {
        a.check_basis(w)?;
        if !is_integral(a, w)? || !w.all_integer() {
            return Err(Error::NotIntegral(format!(
                "block equivalence expects integer pe weights; got {w}"
            )));
        }
    }
    let odd_count = |w: &Weight| {
        w.add(&a.rho0)
            .coeffs()
            .iter()
            .filter(|c| {
                let num = c.numer();
                (num % num_bigint::BigInt::from(2)) != num_bigint::BigInt::from(0)
            })
            .count()
    };
    Ok(odd_count(lam) == odd_count(nu))
}

/// Breadth-first closure of the two generating moves inside the box
/// |coordinate| ≤ `box_bound`: the certification oracle for
/// `pe_block_equivalent`.
pub fn pe_block_equivalent_bfs(
    a: &AlgebraDescriptor,
    lam: &Weight,
    nu: &Weight,
    box_bound: i64,
) -> Result<bool> {
    if !matches!(a.kind, AlgebraKind::PE(_)) {
        return Err(Error::Unsupported(format!(
            "block equivalence is defined for pe(n), not {}",
            a.kind
        )));
    }
    for w in [lam, nu] {
        a.check_basis(w)?;
        if !is_integral(a, w)? || !w.all_integer() {
            return Err(Error::NotIntegral(format!(
                "block equivalence expects integer pe weights; got {w}"
            )));
        }
    }
    let n = a.basis.rank();
    let to_key = |w: &Weight| -> Vec<i64> {
        w.coeffs()
            .iter()
            .map(|c| {
                use num_traits::ToPrimitive;
                c.numer().to_i64().expect("box-bounded coordinate")
            })
            .collect()
    };
    let in_box = |v: &[i64]| v.iter().all(|c| c.unsigned_abs() as i64 <= box_bound);
    let start = to_key(lam);
    let goal = to_key(nu);
    if !in_box(&start) || !in_box(&goal) {
        return Err(Error::OutOfRange(format!(
            "inputs must lie inside the search box |coord| <= {box_bound}"
        )));
    }
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            return Ok(true);
        }
        let push = |next: Vec<i64>, seen: &mut HashSet<Vec<i64>>, queue: &mut VecDeque<Vec<i64>>| {
            if in_box(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        };
        for k in 0..n {
            for delta in [2i64, -2] {
                let mut next = cur.clone();
                next[k] += delta;
                push(next, &mut seen, &mut queue);
            }
        }
        // Integral weights: the integral Weyl group is all of S_n, generated
        // by the adjacent dot transpositions.
        for i in 0..n.saturating_sub(1) {
            let mut shifted: Vec<i64> = cur.iter().zip(&rho).map(|(c, r)| c + r).collect();
            shifted.swap(i, i + 1);
            let next: Vec<i64> = shifted.iter().zip(&rho).map(|(c, r)| c - r).collect();
            push(next, &mut seen, &mut queue);
        }
    }
    Ok(false)
}

/// DOT rendering of the Bruhat order's Hasse diagram: nodes are one-line
/// windows, edges the covering relations (x < y with ℓ(y) = ℓ(x) + 1).
pub fn bruhat_hasse_dot(family: Family) -> String {
    let elements = enumerate_group(family);
    let mut by_length: BTreeMap<usize, Vec<&WeylElement>> = BTreeMap::new();
    for w in &elements {
        by_length.entry(w.length()).or_default().push(w);
    }
    let mut out = String::from("digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n");
    for w in &elements {
        out.push_str(&format!("  \"{}\";\n", w.render()));
    }
    for (len, xs) in &by_length {
        if let Some(ys) = by_length.get(&(len + 1)) {
            for x in xs {
                for y in ys {
                    if bruhat_leq(x, y) {
                        out.push_str(&format!(
                            "  \"{}\" -> \"{}\";\n",
                            x.render(),
                            y.render()
                        ));
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Transitive closure of the covering relation, used in tests to certify
/// `bruhat_leq` independently.
pub fn bruhat_order_by_covers(family: Family) -> HashMap<(WeylElement, WeylElement), bool> {
    let elements = enumerate_group(family);
    let index: HashMap<&WeylElement, usize> =
        elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let m = elements.len();
    let mut leq = vec![vec![false; m]; m];
    for (i, _) in elements.iter().enumerate() {
        leq[i][i] = true;
    }
    // Covers: y = x·t for a reflection t with ℓ(y) = ℓ(x)+1. Generate by
    // multiplying by all reflections (conjugates of simple generators).
    let mut reflections: HashSet<WeylElement> = HashSet::new();
    for w in &elements {
        for i in 1..=family.generator_count() {
            let s = WeylElement::simple(family, i).expect("valid generator");
            reflections.insert(w.compose(&s).compose(&w.inverse()));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for t in &reflections {
            let y = x.compose(t);
            if y.length() == x.length() + 1 {
                pairs.push((i, index[&y]));
            }
        }
    }
    // Propagate in length order.
    let mut changed = true;
    while changed {
        changed = false;
        for &(i, j) in &pairs {
            for k in 0..m {
                if leq[k][i] && !leq[k][j] {
                    leq[k][j] = true;
                    changed = true;
                }
            }
        }
    }
    let mut out = HashMap::new();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            out.insert((x.clone(), y.clone()), leq[i][j]);
        }
    }
    out
}
