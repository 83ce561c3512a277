//! Root data, weights, bilinear forms, distinguished vectors and typicality
//! for the four supported families: gl(n), gl(m|n), pe(n), osp(2|2n).
//!
//! Conventions fixed here and used everywhere else:
//!
//! * weights are exact rational coefficient vectors over a declared basis —
//!   ε₁..ε_n for gl(n)/pe(n), an ε-block followed by a δ-block for
//!   gl(m|n)/osp(2|2n);
//! * the stored `rho0` is the *integrally shifted* half-sum of positive even
//!   roots — (n−1, …, 0) for gl(n)/pe(n), blockwise for gl(m|n), and
//!   (0 | n, …, 1) for osp(2|2n). It differs from the true half-sum by a
//!   Weyl-invariant vector, so the dot action and all dominance/linkage
//!   decisions are unchanged, while integral weights stay integral after
//!   shifting;
//! * the bilinear form is ⟨ε_i,ε_j⟩ = δ_ij on ε-coordinates and
//!   (δ_i,δ_j) = −δ_ij on δ-coordinates;
//! * dominance and antidominance are defined for even-integral weights only;
//!   non-integral inputs are refused with an explicit error rather than
//!   answered with a guess.

use crate::error::{Error, Result};
use crate::{qi, Q};
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Render a rational without a denominator when it is an integer.
pub fn render_q(q: &Q) -> String {
    if q.denom() == &num_bigint::BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_q(s: &str) -> Result<Q> {
    Q::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Coordinate basis of a weight space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasisTag {
    /// ε₁,…,ε_n (gl(n) and pe(n)).
    EpsilonN(usize),
    /// m ε-coordinates followed by n δ-coordinates (gl(m|n); osp(2|2n) has
    /// m = 1).
    EpsilonDelta(usize, usize),
}

impl BasisTag {
    pub fn rank(self) -> usize {
        match self {
            BasisTag::EpsilonN(n) => n,
            BasisTag::EpsilonDelta(m, n) => m + n,
        }
    }

    pub fn eps_len(self) -> usize {
        match self {
            BasisTag::EpsilonN(n) => n,
            BasisTag::EpsilonDelta(m, _) => m,
        }
    }

    pub fn delta_len(self) -> usize {
        match self {
            BasisTag::EpsilonN(_) => 0,
            BasisTag::EpsilonDelta(_, n) => n,
        }
    }

    /// Signature of the bilinear form at coordinate `idx`: +1 on ε, −1 on δ.
    pub fn signature(self, idx: usize) -> i64 {
        if idx < self.eps_len() {
            1
        } else {
            -1
        }
    }
}

/// Exact weight: rational coefficients over a declared basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    basis: BasisTag,
    coeffs: Vec<Q>,
}

impl Weight {
    pub fn new(basis: BasisTag, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != basis.rank() {
            return Err(Error::InvalidParameter(format!(
                "weight has {} coefficients but the basis rank is {}",
                coeffs.len(),
                basis.rank()
            )));
        }
        Ok(Weight { basis, coeffs })
    }

    /// Integer-coefficient constructor (used pervasively in tests and root
    /// tables). Panics on a length mismatch: lengths here are static facts
    /// of the call site, not user input.
    pub fn from_i64(basis: BasisTag, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), basis.rank(), "weight length mismatch");
        Weight {
            basis,
            coeffs: coeffs.iter().map(|&c| qi(c)).collect(),
        }
    }

    pub fn zero(basis: BasisTag) -> Self {
        Weight {
            basis,
            coeffs: vec![Q::zero(); basis.rank()],
        }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(&Q, &Q) -> Q) -> Weight {
        assert_eq!(
            self.basis, other.basis,
            "weight arithmetic across bases: {self:?} vs {other:?}"
        );
        Weight {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Weight {
        Weight {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scaled(&self, c: &Q) -> Weight {
        Weight {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn all_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Bare rendering: `2,0,-1` for an ε-basis, `1 | 2,0` for a split basis.
    pub fn render(&self) -> String {
        let part = |cs: &[Q]| {
            cs.iter()
                .map(render_q)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.basis {
            BasisTag::EpsilonN(_) => part(&self.coeffs),
            BasisTag::EpsilonDelta(m, _) => format!(
                "{} | {}",
                part(&self.coeffs[..m]),
                part(&self.coeffs[m..])
            ),
        }
    }

    /// Parse the bare rendering for a known basis. Accepts both the split
    /// `a,b | c,d` form (required when the basis is split) and plain comma
    /// lists for ε-bases.
    pub fn parse(s: &str, basis: BasisTag) -> Result<Weight> {
        let parse_list = |part: &str| -> Result<Vec<Q>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(parse_q).collect()
        };
        let coeffs = match basis {
            BasisTag::EpsilonN(_) => {
                if s.contains('|') {
                    return Err(Error::Parse(format!(
                        "unexpected '|' in weight {s:?} for an ε-basis"
                    )));
                }
                parse_list(s)?
            }
            BasisTag::EpsilonDelta(..) => {
                let mut halves = s.splitn(2, '|');
                let eps = parse_list(halves.next().unwrap_or(""))?;
                let delta = parse_list(halves.next().ok_or_else(|| {
                    Error::Parse(format!(
                        "weight {s:?} needs an 'ε-part | δ-part' split for this algebra"
                    ))
                })?)?;
                let mut coeffs = eps;
                coeffs.extend(delta);
                coeffs
            }
        };
        Weight::new(basis, coeffs)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Supported algebra families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AlgebraKind {
    /// General linear gl(n), purely even.
    GL(usize),
    /// General linear superalgebra gl(m|n).
    GLmn(usize, usize),
    /// Periplectic superalgebra pe(n).
    PE(usize),
    /// Orthosymplectic superalgebra osp(2|2n); the parameter is n.
    OSP2(usize),
}

impl AlgebraKind {
    pub fn render(&self) -> String {
        match self {
            AlgebraKind::GL(n) => format!("gl({n})"),
            AlgebraKind::GLmn(m, n) => format!("gl({m}|{n})"),
            AlgebraKind::PE(n) => format!("pe({n})"),
            AlgebraKind::OSP2(n) => format!("osp(2|{})", 2 * n),
        }
    }

    /// Parse names like `gl(3)`, `gl(1|1)`, `pe(2)`, `osp(2|4)`.
    pub fn parse(s: &str) -> Result<AlgebraKind> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognized algebra {s:?}"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let parse_n = |t: &str| -> Result<usize> {
            t.trim().parse::<usize>().map_err(|_| bad())
        };
        match (name.trim(), args.split_once('|')) {
            ("gl", None) => Ok(AlgebraKind::GL(parse_n(args)?)),
            ("gl", Some((m, n))) => Ok(AlgebraKind::GLmn(parse_n(m)?, parse_n(n)?)),
            ("pe", None) => Ok(AlgebraKind::PE(parse_n(args)?)),
            ("osp", Some((two, even))) => {
                let two = parse_n(two)?;
                let even = parse_n(even)?;
                if two != 2 || even == 0 || even % 2 != 0 {
                    return Err(Error::Parse(format!(
                        "only osp(2|2n) is supported, got {s:?}"
                    )));
                }
                Ok(AlgebraKind::OSP2(even / 2))
            }
            _ => Err(bad()),
        }
    }

    pub fn basis(&self) -> BasisTag {
        match *self {
            AlgebraKind::GL(n) | AlgebraKind::PE(n) => BasisTag::EpsilonN(n),
            AlgebraKind::GLmn(m, n) => BasisTag::EpsilonDelta(m, n),
            AlgebraKind::OSP2(n) => BasisTag::EpsilonDelta(1, n),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An algebra family with all derived root data.
#[derive(Clone, Debug)]
pub struct AlgebraDescriptor {
    pub kind: AlgebraKind,
    pub basis: BasisTag,
    /// Φ⁺₀, in a fixed deterministic order.
    pub even_positive_roots: Vec<Weight>,
    /// Simple even roots, in Dynkin order.
    pub simple_even_roots: Vec<Weight>,
    /// Φ⁺₁ (empty for gl(n)).
    pub odd_positive_roots: Vec<Weight>,
    /// Φ⁻₁ (for pe(n) this is NOT −Φ⁺₁; it has n(n−1)/2 elements).
    pub odd_negative_roots: Vec<Weight>,
    /// Integrally shifted half-sum of even positive roots (see module docs).
    pub rho0: Weight,
    /// Super Weyl vector; only osp(2|2n) and gl(m|n) have one here.
    pub rho_super: Option<Weight>,
    /// η = (1−n)(ε₁+⋯+ε_n); pe(n) only.
    pub eta: Option<Weight>,
    pub dim_g0: usize,
    pub dim_h: usize,
    /// Height functional ξ: every positive root has a positive integer
    /// height (simple even roots have height ≤ 2); used for truncation bands.
    pub xi: Vec<i64>,
}

fn unit(basis: BasisTag, i: usize) -> Weight {
    let mut c = vec![0i64; basis.rank()];
    c[i] = 1;
    Weight::from_i64(basis, &c)
}

/// Build a descriptor; `gl(m|n)` requires m > n unless explicitly allowed.
pub fn build_algebra_with(kind: AlgebraKind, allow_square_glmn: bool) -> Result<AlgebraDescriptor> {
    match kind {
        AlgebraKind::GL(n) | AlgebraKind::PE(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter(format!(
                    "{kind} needs rank at least 1"
                )));
            }
        }
        AlgebraKind::OSP2(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter(
                    "osp(2|2n) needs n at least 1".into(),
                ));
            }
        }
        AlgebraKind::GLmn(m, n) => {
            if n == 0 || m == 0 {
                return Err(Error::InvalidParameter(
                    "gl(m|n) needs m, n at least 1".into(),
                ));
            }
            if m < n || (m == n && !allow_square_glmn) {
                return Err(Error::InvalidParameter(format!(
                    "gl(m|n) requires m > n (m = n only behind the explicit option); got gl({m}|{n})"
                )));
            }
        }
    }

    let basis = kind.basis();
    let eps = |i: usize| unit(basis, i);

    let descriptor = match kind {
        AlgebraKind::GL(n) | AlgebraKind::PE(n) => {
            let mut even = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    even.push(eps(i).sub(&eps(j)));
                }
            }
            let simple: Vec<Weight> = (0..n.saturating_sub(1))
                .map(|i| eps(i).sub(&eps(i + 1)))
                .collect();
            let rho0 = Weight::from_i64(
                basis,
                &(0..n).map(|i| (n - 1 - i) as i64).collect::<Vec<_>>(),
            );
            let xi: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
            let (odd_pos, odd_neg, eta) = if let AlgebraKind::PE(_) = kind {
                let mut pos = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        pos.push(eps(i).add(&eps(j)));
                    }
                }
                let mut neg = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        neg.push(eps(i).add(&eps(j)).neg());
                    }
                }
                let eta = Weight::from_i64(basis, &vec![1 - n as i64; n]);
                (pos, neg, Some(eta))
            } else {
                (Vec::new(), Vec::new(), None)
            };
            AlgebraDescriptor {
                kind,
                basis,
                even_positive_roots: even,
                simple_even_roots: simple,
                odd_positive_roots: odd_pos,
                odd_negative_roots: odd_neg,
                rho0,
                rho_super: None,
                eta,
                dim_g0: n * n,
                dim_h: n,
                xi,
            }
        }
        AlgebraKind::OSP2(n) => {
            // δ-coordinates sit at indices 1..=n; index 0 is ε.
            let delta = |p: usize| unit(basis, 1 + p);
            let mut even = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    even.push(delta(i).sub(&delta(j)));
                    even.push(delta(i).add(&delta(j)));
                }
            }
            for p in 0..n {
                even.push(delta(p).scaled(&qi(2)));
            }
            let mut simple: Vec<Weight> = (0..n.saturating_sub(1))
                .map(|i| delta(i).sub(&delta(i + 1)))
                .collect();
            simple.push(delta(n - 1).scaled(&qi(2)));
            let mut odd_pos = Vec::new();
            for p in 0..n {
                odd_pos.push(eps(0).add(&delta(p)));
                odd_pos.push(eps(0).sub(&delta(p)));
            }
            let odd_neg: Vec<Weight> = odd_pos.iter().map(Weight::neg).collect();
            let mut rho0_c = vec![0i64; n + 1];
            let mut rho_c = vec![-(n as i64)];
            for i in 0..n {
                rho0_c[1 + i] = (n - i) as i64;
                rho_c.push((n - i) as i64);
            }
            let mut xi = vec![n as i64 + 1];
            xi.extend((0..n).map(|i| (n - i) as i64));
            AlgebraDescriptor {
                kind,
                basis,
                even_positive_roots: even,
                simple_even_roots: simple,
                odd_positive_roots: odd_pos,
                odd_negative_roots: odd_neg,
                rho0: Weight::from_i64(basis, &rho0_c),
                rho_super: Some(Weight::from_i64(basis, &rho_c)),
                eta: None,
                dim_g0: 1 + n * (2 * n + 1),
                dim_h: n + 1,
                xi,
            }
        }
        AlgebraKind::GLmn(m, n) => {
            let delta = |j: usize| unit(basis, m + j);
            let mut even = Vec::new();
            for i in 0..m {
                for j in (i + 1)..m {
                    even.push(eps(i).sub(&eps(j)));
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    even.push(delta(i).sub(&delta(j)));
                }
            }
            let mut simple = Vec::new();
            for i in 0..m.saturating_sub(1) {
                simple.push(eps(i).sub(&eps(i + 1)));
            }
            for i in 0..n.saturating_sub(1) {
                simple.push(delta(i).sub(&delta(i + 1)));
            }
            let mut odd_pos = Vec::new();
            for i in 0..m {
                for j in 0..n {
                    odd_pos.push(eps(i).sub(&delta(j)));
                }
            }
            let odd_neg: Vec<Weight> = odd_pos.iter().map(Weight::neg).collect();
            let mut rho0_c: Vec<i64> = (0..m).map(|i| (m - 1 - i) as i64).collect();
            rho0_c.extend((0..n).map(|j| (n - 1 - j) as i64));
            // Super Weyl vector ρ = ρ₀(true) − ρ₁, normalized modulo the
            // supertrace character (which pairs to zero with all odd roots).
            let mut rho_c: Vec<Q> = (0..m)
                .map(|i| Q::new(
                    num_bigint::BigInt::from(m as i64 - n as i64 + 1 - 2 * (i as i64 + 1)),
                    num_bigint::BigInt::from(2),
                ))
                .collect();
            rho_c.extend((0..n).map(|j| {
                Q::new(
                    num_bigint::BigInt::from(m as i64 + n as i64 + 1 - 2 * (j as i64 + 1)),
                    num_bigint::BigInt::from(2),
                )
            }));
            let mut xi: Vec<i64> = (0..m).map(|i| (m + n - i) as i64).collect();
            xi.extend((0..n).map(|j| (n - j) as i64));
            AlgebraDescriptor {
                kind,
                basis,
                even_positive_roots: even,
                simple_even_roots: simple,
                odd_positive_roots: odd_pos,
                odd_negative_roots: odd_neg,
                rho0: Weight::from_i64(basis, &rho0_c),
                rho_super: Some(Weight::new(basis, rho_c)?),
                eta: None,
                dim_g0: m * m + n * n,
                dim_h: m + n,
                xi,
            }
        }
    };
    Ok(descriptor)
}

/// Build a descriptor with the default gl(m|n) restriction m > n.
pub fn build_algebra(kind: AlgebraKind) -> Result<AlgebraDescriptor> {
    build_algebra_with(kind, false)
}

impl AlgebraDescriptor {
    pub fn check_basis(&self, w: &Weight) -> Result<()> {
        if w.basis() != self.basis {
            return Err(Error::BasisMismatch(format!(
                "weight {w} does not live in the {} weight space",
                self.kind
            )));
        }
        Ok(())
    }

    /// Height of a weight under the ξ functional (integer for root-lattice
    /// elements; rational in general).
    pub fn height(&self, w: &Weight) -> Q {
        w.coeffs()
            .iter()
            .zip(&self.xi)
            .map(|(c, &x)| c * qi(x))
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Parse a weight in this algebra's basis, accepting an optional
    /// `kind:` prefix (which must then match).
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let body = match s.split_once(':') {
            Some((prefix, rest)) => {
                let declared = AlgebraKind::parse(prefix)?;
                if declared != self.kind {
                    return Err(Error::BasisMismatch(format!(
                        "weight literal declares {declared} but the context is {}",
                        self.kind
                    )));
                }
                rest
            }
            None => s,
        };
        Weight::parse(body, self.basis)
    }

    /// Full weight literal with the algebra prefix, e.g. `pe(3): 2,0,-1`.
    pub fn render_weight_literal(&self, w: &Weight) -> String {
        format!("{}: {}", self.kind, w.render())
    }
}

/// Symmetric bilinear form: +1 on ε-coordinates, −1 on δ-coordinates.
pub fn bilinear(a: &AlgebraDescriptor, lam: &Weight, mu: &Weight) -> Result<Q> {
    a.check_basis(lam)?;
    a.check_basis(mu)?;
    let mut acc = Q::zero();
    for i in 0..a.basis.rank() {
        let term = lam.coeff(i) * mu.coeff(i);
        if a.basis.signature(i) > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// ω_k = ε₁ + ⋯ + ε_k in the rank-n ε-basis.
pub fn omega(k: usize, n: usize) -> Result<Weight> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("omega index {k} not in 1..={n}")));
    }
    let coeffs: Vec<i64> = (0..n).map(|i| if i < k { 1 } else { 0 }).collect();
    Ok(Weight::from_i64(BasisTag::EpsilonN(n), &coeffs))
}

/// η = (1−n)(ε₁+⋯+ε_n) in the rank-n ε-basis.
pub fn eta(n: usize) -> Result<Weight> {
    if n == 0 {
        return Err(Error::InvalidParameter("eta needs rank at least 1".into()));
    }
    Ok(Weight::from_i64(
        BasisTag::EpsilonN(n),
        &vec![1 - n as i64; n],
    ))
}

/// The stored (integrally shifted) ρ₀.
pub fn rho0(a: &AlgebraDescriptor) -> Weight {
    a.rho0.clone()
}

/// The super Weyl vector; defined only for osp(2|2n) and gl(m|n).
pub fn rho(a: &AlgebraDescriptor) -> Result<Weight> {
    a.rho_super.clone().ok_or_else(|| {
        Error::RhoUndefined(format!(
            "{} has no super Weyl vector in this calculus",
            a.kind
        ))
    })
}

/// Coroot pairing ⟨λ, α∨⟩ for an even root α, read off combinatorially from
/// the coordinate pattern of α (difference, sum, or doubled coordinate).
pub fn coroot_pairing(a: &AlgebraDescriptor, lam: &Weight, alpha: &Weight) -> Result<Q> {
    a.check_basis(lam)?;
    a.check_basis(alpha)?;
    let nz: Vec<(usize, &Q)> = alpha
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let one = qi(1);
    let two = qi(2);
    match nz.as_slice() {
        [(i, ci), (j, cj)] if **ci == one && **cj == -one.clone() => {
            Ok(lam.coeff(*i) - lam.coeff(*j))
        }
        [(i, ci), (j, cj)] if **ci == -one.clone() && **cj == one => {
            Ok(lam.coeff(*j) - lam.coeff(*i))
        }
        [(i, ci), (j, cj)] if **ci == one && **cj == one => Ok(lam.coeff(*i) + lam.coeff(*j)),
        [(p, c)] if **c == two => Ok(lam.coeff(*p).clone()),
        _ => Err(Error::InvalidParameter(format!(
            "{alpha} is not a recognized even root pattern"
        ))),
    }
}

/// Integrality as a weight of the even part: all even coroot pairings lie
/// in Z. For the type-A families this means all coordinate differences are
/// integers (within each block for gl(m|n)); for osp(2|2n) it means all
/// δ-coordinates are integers (the ε-coordinate is unconstrained).
pub fn is_integral(a: &AlgebraDescriptor, lam: &Weight) -> Result<bool> {
    a.check_basis(lam)?;
    let ok = match a.kind {
        AlgebraKind::GL(_) | AlgebraKind::PE(_) => {
            let cs = lam.coeffs();
            cs.windows(2).all(|w| (&w[0] - &w[1]).is_integer())
        }
        AlgebraKind::OSP2(_) => lam.coeffs()[1..].iter().all(|c| c.is_integer()),
        AlgebraKind::GLmn(m, _) => {
            let cs = lam.coeffs();
            cs[..m].windows(2).all(|w| (&w[0] - &w[1]).is_integer())
                && cs[m..].windows(2).all(|w| (&w[0] - &w[1]).is_integer())
        }
    };
    Ok(ok)
}

fn require_integral(a: &AlgebraDescriptor, lam: &Weight, what: &str) -> Result<()> {
    if !is_integral(a, lam)? {
        return Err(Error::NotIntegral(format!(
            "{what} requires an even-integral weight; {lam} is not"
        )));
    }
    Ok(())
}

/// Dominance of λ under the dot action: ⟨λ+ρ₀, α∨⟩ ≥ 0 for all simple even
/// roots α. Defined for even-integral weights only.
pub fn is_dominant(a: &AlgebraDescriptor, lam: &Weight) -> Result<bool> {
    require_integral(a, lam, "dominance")?;
    let shifted = lam.add(&a.rho0);
    for alpha in &a.simple_even_roots {
        if coroot_pairing(a, &shifted, alpha)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Antidominance: ⟨λ+ρ₀, α∨⟩ ≤ 0 for all simple even roots α.
pub fn is_antidominant(a: &AlgebraDescriptor, lam: &Weight) -> Result<bool> {
    require_integral(a, lam, "antidominance")?;
    let shifted = lam.add(&a.rho0);
    for alpha in &a.simple_even_roots {
        if coroot_pairing(a, &shifted, alpha)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Typicality.
///
/// * pe(n): true iff Π_{i≠j} (λ_i − λ_j + j − i − 1) ≠ 0 over ordered pairs
///   (1-based i, j);
/// * osp(2|2n), gl(m|n): true iff (λ+ρ, α) ≠ 0 for every α ∈ Φ⁺₁;
/// * gl(n): undefined (error).
pub fn is_typical(a: &AlgebraDescriptor, lam: &Weight) -> Result<bool> {
    a.check_basis(lam)?;
    match a.kind {
        AlgebraKind::GL(_) => Err(Error::TypicalityUndefined(format!(
            "{} is purely even",
            a.kind
        ))),
        AlgebraKind::PE(n) => {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let factor = lam.coeff(i - 1) - lam.coeff(j - 1)
                        + qi(j as i64 - i as i64 - 1);
                    if factor.is_zero() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        AlgebraKind::OSP2(_) | AlgebraKind::GLmn(..) => {
            let shifted = lam.add(a.rho_super.as_ref().expect("rho present"));
            for alpha in &a.odd_positive_roots {
                if bilinear(a, &shifted, alpha)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Which dot-orbit extreme to produce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitExtreme {
    Dominant,
    Antidominant,
}

/// The unique dominant (λ̄) or antidominant (λ̌) element of the dot-orbit,
/// computed by sorting the ρ₀-shifted coordinates blockwise. Works for every
/// family (for gl(m|n) each block is sorted independently; the even Weyl
/// group is the product of the block groups).
pub fn orbit_extreme_weight(
    a: &AlgebraDescriptor,
    lam: &Weight,
    which: OrbitExtreme,
) -> Result<Weight> {
    require_integral(a, lam, "orbit extremes")?;
    let shifted = lam.add(&a.rho0);
    let mut cs: Vec<Q> = shifted.coeffs().to_vec();
    let sort_block = |block: &mut [Q], decreasing: bool| {
        block.sort();
        if decreasing {
            block.reverse();
        }
    };
    match a.kind {
        AlgebraKind::GL(_) | AlgebraKind::PE(_) => {
            sort_block(&mut cs, which == OrbitExtreme::Dominant);
        }
        AlgebraKind::OSP2(_) => {
            // Type C on the δ-block: orbit representatives have |values|
            // sorted decreasingly, all non-negative (dominant) or all
            // non-positive in increasing order (antidominant).
            let mut abs: Vec<Q> = cs[1..].iter().map(|c| c.abs()).collect();
            abs.sort();
            abs.reverse();
            match which {
                OrbitExtreme::Dominant => {
                    for (i, v) in abs.into_iter().enumerate() {
                        cs[1 + i] = v;
                    }
                }
                OrbitExtreme::Antidominant => {
                    for (i, v) in abs.into_iter().enumerate() {
                        cs[1 + i] = -v;
                    }
                }
            }
        }
        AlgebraKind::GLmn(m, _) => {
            let (eps_block, delta_block) = cs.split_at_mut(m);
            sort_block(eps_block, which == OrbitExtreme::Dominant);
            sort_block(delta_block, which == OrbitExtreme::Dominant);
        }
    }
    Ok(Weight::new(a.basis, cs)?.sub(&a.rho0))
}
