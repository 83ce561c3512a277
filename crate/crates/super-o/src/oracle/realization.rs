//! Concrete matrix realizations of the supported algebras, with structure
//! constants computed from explicit supermatrices.
//!
//! Every algebra is realized inside a space of (Z/2-graded) square matrices:
//!
//! * `gl(n)` — the full matrix algebra, basis `E_ij`.
//! * `gl(m|n)` — the full matrix superalgebra on `m+n` rows, rows `< m` even.
//! * `pe(n)` — inside the `2n×2n` superalgebra: even part spanned by
//!   `A_ij = E_ij − E_{n+j,n+i}`, upper odd part by symmetric blocks
//!   `X_ij = E_{i,n+j} + E_{j,n+i}` (and `X_ii = E_{i,n+i}`), lower odd part
//!   by antisymmetric blocks `Y_ij = E_{n+i,j} − E_{n+j,i}`.
//! * `osp(2|2n)` — computed mechanically as the kernel of
//!   `X ↦ X^{st}Φ + ΦX` inside the `(2+2n)`-row matrix superalgebra, where
//!   `Φ = diag(G, J)` with `G` the symmetric 2×2 swap and `J` the standard
//!   symplectic form. Nothing about this family is transcribed by hand.
//!
//! The super-commutator table over the chosen basis is computed once per
//! realization and every bracket must expand exactly in the basis (closure
//! is a hard gate). The table is the single source of truth for all module
//! construction downstream.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::algebra::{build_algebra_with, AlgebraDescriptor, AlgebraKind, Weight};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseCol};
use crate::{qi, Q};

/// Sparse matrix entries `((row, col), value)`, sorted by position, nonzero.
pub type Entries = Vec<((usize, usize), Q)>;

fn entries_normalize(raw: Vec<((usize, usize), Q)>) -> Entries {
    let mut acc: HashMap<(usize, usize), Q> = HashMap::new();
    for (pos, v) in raw {
        let slot = acc.entry(pos).or_insert_with(Q::zero);
        *slot += v;
    }
    let mut out: Entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn entries_add(a: &Entries, b: &Entries, b_scale: &Q) -> Entries {
    let mut raw: Vec<((usize, usize), Q)> = a.clone();
    for (pos, v) in b {
        raw.push((*pos, v * b_scale));
    }
    entries_normalize(raw)
}

fn entries_mul(a: &Entries, b: &Entries) -> Entries {
    let mut raw = Vec::new();
    for ((r1, c1), v1) in a {
        for ((r2, c2), v2) in b {
            if c1 == r2 {
                raw.push(((*r1, *c2), v1 * v2));
            }
        }
    }
    entries_normalize(raw)
}

fn entries_transpose(a: &Entries) -> Entries {
    entries_normalize(a.iter().map(|((r, c), v)| ((*c, *r), v.clone())).collect())
}

/// Structural role of a basis element with respect to the triangular
/// decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Cartan,
    EvenRaise,
    EvenLower,
    /// Upper odd part (weights with positive height).
    OddUpper,
    /// Lower odd part (weights with negative height).
    OddLower,
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub label: String,
    pub weight: Weight,
    pub odd: bool,
    pub role: Role,
    pub entries: Entries,
}

/// A fully materialized matrix realization with its bracket table.
pub struct Realization {
    pub algebra: AlgebraDescriptor,
    /// Number of rows of the ambient matrix space.
    pub size: usize,
    /// Rows `< parity_split` are even, the rest odd.
    pub parity_split: usize,
    /// The diagonal functional carried by each row.
    pub row_weight: Vec<Weight>,
    /// `weight_rows[k]` is the row whose diagonal entry reads off coordinate
    /// `k` of a weight (used to evaluate weights on diagonal Cartan elements).
    pub weight_rows: Vec<usize>,
    pub basis: Vec<BasisElement>,
    /// `bracket[i][j]` expands `[b_i, b_j]` in the basis.
    pub bracket: Vec<Vec<SparseCol>>,
    pub cartan: Vec<usize>,
    /// Simple even raising elements, in Dynkin order.
    pub simple_raisers: Vec<usize>,
    /// Simple even lowering elements, in Dynkin order.
    pub simple_lowerers: Vec<usize>,
    /// All negative even root vectors in the fixed monomial order
    /// (height ascending, then weight lexicographic).
    pub neg_even: Vec<usize>,
    /// Upper odd basis in the fixed exterior order.
    pub odd_upper: Vec<usize>,
    /// Lower odd basis in the fixed exterior order.
    pub odd_lower: Vec<usize>,
    /// Transpose images expanded in the basis (even elements of gl/pe only).
    pub tau: Vec<Option<SparseCol>>,
    /// Maximum |height| over all basis-element weights; the band margin.
    pub max_gen_height: i64,
    negpos: HashMap<usize, usize>,
}

impl Realization {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, i: usize) -> bool {
        self.basis[i].odd
    }

    pub fn bracket(&self, i: usize, j: usize) -> &SparseCol {
        &self.bracket[i][j]
    }

    /// Integer height of a weight under the algebra's height functional.
    pub fn height_i64(&self, w: &Weight) -> i64 {
        let h = self.algebra.height(w);
        assert!(h.is_integer(), "non-integral height for {}", w.render());
        let v = h.to_integer();
        use num_traits::ToPrimitive;
        v.to_i64().expect("height out of i64 range")
    }

    /// Evaluate a weight on a diagonal Cartan basis element.
    pub fn cartan_eval(&self, h_idx: usize, lam: &Weight) -> Q {
        let entries = &self.basis[h_idx].entries;
        let mut acc = Q::zero();
        for (k, &row) in self.weight_rows.iter().enumerate() {
            for ((r, c), v) in entries {
                if *r == row && *c == row {
                    acc += lam.coeff(k) * v;
                }
            }
        }
        acc
    }

    /// The unique basis element of the given weight and parity, if any.
    pub fn elem_by_weight(&self, w: &Weight, odd: bool) -> Option<usize> {
        let mut found = None;
        for (i, b) in self.basis.iter().enumerate() {
            if b.odd == odd && &b.weight == w {
                if found.is_some() {
                    return None; // not unique (weight-0 Cartan space)
                }
                found = Some(i);
            }
        }
        found
    }

    /// Position of a basis index inside the `neg_even` monomial order.
    pub fn neg_position(&self, basis_idx: usize) -> Option<usize> {
        self.negpos.get(&basis_idx).copied()
    }

    /// Expand a matrix in the basis; `None` if it is not in the span.
    pub fn expand(&self, entries: &Entries, odd: bool) -> Option<SparseCol> {
        if entries.is_empty() {
            return Some(Vec::new());
        }
        // Determine the weight of the target from its first entry and check
        // homogeneity; inhomogeneous matrices are expanded component-wise.
        let mut by_weight: HashMap<Weight, Entries> = HashMap::new();
        for (pos, v) in entries {
            let w = self.row_weight[pos.0].sub(&self.row_weight[pos.1]);
            by_weight
                .entry(w)
                .or_default()
                .push((*pos, v.clone()));
        }
        let mut out: Vec<(usize, Q)> = Vec::new();
        for (w, part) in by_weight {
            let part = entries_normalize(part);
            if part.is_empty() {
                continue;
            }
            let cands: Vec<usize> = (0..self.basis.len())
                .filter(|&i| self.basis[i].odd == odd && self.basis[i].weight == w)
                .collect();
            if cands.is_empty() {
                return None;
            }
            // Solve the small linear system on the union of entry supports.
            let mut rows: Vec<(usize, usize)> = part.iter().map(|(p, _)| *p).collect();
            for &ci in &cands {
                rows.extend(self.basis[ci].entries.iter().map(|(p, _)| *p));
            }
            rows.sort_unstable();
            rows.dedup();
            let rindex: HashMap<(usize, usize), usize> =
                rows.iter().enumerate().map(|(k, p)| (*p, k)).collect();
            let mut a = Matrix::<Q>::zeros(rows.len(), cands.len());
            for (col, &ci) in cands.iter().enumerate() {
                for (p, v) in &self.basis[ci].entries {
                    a.set(rindex[p], col, v.clone());
                }
            }
            let mut b = vec![Q::zero(); rows.len()];
            for (p, v) in &part {
                b[rindex[p]] = v.clone();
            }
            let sol = a.solve(&b)?;
            for (k, c) in sol.into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((cands[k], c));
                }
            }
        }
        out.sort_by_key(|(i, _)| *i);
        Some(out)
    }

    /// Super-commutator of two basis elements as raw matrix entries.
    pub fn supercommutator_entries(&self, i: usize, j: usize) -> Entries {
        let a = &self.basis[i];
        let b = &self.basis[j];
        let ab = entries_mul(&a.entries, &b.entries);
        let ba = entries_mul(&b.entries, &a.entries);
        let sign = if a.odd && b.odd { Q::one() } else { -Q::one() };
        entries_add(&ab, &ba, &sign)
    }
}

fn fmt_coeff_root(w: &Weight) -> String {
    // Compact root label like "d1-d2", "2d1", "e+d1", "-e-d1".
    let eps_len = w.basis().eps_len();
    let mut s = String::new();
    for (k, c) in w.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = if k < eps_len {
            if eps_len == 1 {
                "e".to_string()
            } else {
                format!("e{}", k + 1)
            }
        } else {
            format!("d{}", k + 1 - eps_len)
        };
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else if s.is_empty() { "" } else { "+" };
        if mag == Q::one() {
            let _ = write!(s, "{sign}{name}");
        } else {
            let _ = write!(s, "{sign}{}{name}", crate::algebra::render_q(&mag));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

struct Builder {
    algebra: AlgebraDescriptor,
    size: usize,
    parity_split: usize,
    row_weight: Vec<Weight>,
    weight_rows: Vec<usize>,
    basis: Vec<BasisElement>,
}

impl Builder {
    fn push(&mut self, label: String, role: Role, raw: Vec<((usize, usize), Q)>) {
        let entries = entries_normalize(raw);
        assert!(!entries.is_empty(), "zero basis element {label}");
        let (r0, c0) = entries[0].0;
        let weight = self.row_weight[r0].sub(&self.row_weight[c0]);
        let odd = (r0 >= self.parity_split) != (c0 >= self.parity_split);
        for ((r, c), _) in &entries {
            let w = self.row_weight[*r].sub(&self.row_weight[*c]);
            assert!(w == weight, "inhomogeneous weight in {label}");
            let o = (*r >= self.parity_split) != (*c >= self.parity_split);
            assert!(o == odd, "inhomogeneous parity in {label}");
        }
        self.basis.push(BasisElement {
            label,
            weight,
            odd,
            role,
            entries,
        });
    }
}

fn e(r: usize, c: usize) -> Vec<((usize, usize), Q)> {
    vec![((r, c), Q::one())]
}

fn e2(r1: usize, c1: usize, s1: i64, r2: usize, c2: usize, s2: i64) -> Vec<((usize, usize), Q)> {
    vec![((r1, c1), qi(s1)), ((r2, c2), qi(s2))]
}

/// Sort helper: order root-vector descriptors by (height, weight) of the
/// positive counterpart of their weight.
fn root_order_key(a: &AlgebraDescriptor, w: &Weight) -> (i64, Vec<Q>) {
    use num_traits::ToPrimitive;
    let h = a.height(w);
    let pos = if h.is_negative() { w.neg() } else { w.clone() };
    let hp = a.height(&pos);
    assert!(hp.is_integer() && hp.is_positive());
    (hp.to_integer().to_i64().unwrap(), pos.coeffs().to_vec())
}

/// Build the matrix realization for a supported algebra kind.
///
/// `gl(m|n)` is realized for any m, n ≥ 1 including m = n (the square case
/// is needed internally for rank-one Kac modules); `osp(2|2n)` is limited to
/// n ≤ 2.
pub fn realize(kind: AlgebraKind) -> Result<Realization> {
    let algebra = build_algebra_with(kind, true)?;
    let mut b = match kind {
        AlgebraKind::GL(n) => build_gl(&algebra, n),
        AlgebraKind::PE(n) => build_pe(&algebra, n),
        AlgebraKind::GLmn(m, n) => build_glmn(&algebra, m, n),
        AlgebraKind::OSP2(n) => {
            if n > 2 {
                return Err(Error::Unsupported(format!(
                    "osp(2|{}) realization: only n ≤ 2 is in scope",
                    2 * n
                )));
            }
            build_osp(&algebra, n)
        }
    };
    // Sanity: the realization dimension matches the root/Cartan count.
    let n_roots_even = 2 * b.algebra.even_positive_roots.len();
    let expected_even = n_roots_even + b.algebra.dim_h;
    let got_even = b.basis.iter().filter(|x| !x.odd).count();
    assert_eq!(got_even, expected_even, "even dimension mismatch");
    assert_eq!(got_even, b.algebra.dim_g0, "dim g₀ mismatch");

    // Index sets.
    let mut cartan = Vec::new();
    let mut neg_even = Vec::new();
    for (i, x) in b.basis.iter().enumerate() {
        match x.role {
            Role::Cartan => cartan.push(i),
            Role::EvenLower => neg_even.push(i),
            _ => {}
        }
    }
    neg_even.sort_by_key(|&i| root_order_key(&b.algebra, &b.basis[i].weight));
    let find = |b: &Builder, w: &Weight, odd: bool| -> usize {
        b.basis
            .iter()
            .position(|x| x.odd == odd && &x.weight == w)
            .unwrap_or_else(|| panic!("missing root vector for {}", w.render()))
    };
    let simple_raisers: Vec<usize> = b
        .algebra
        .simple_even_roots
        .clone()
        .iter()
        .map(|w| find(&b, w, false))
        .collect();
    let simple_lowerers: Vec<usize> = b
        .algebra
        .simple_even_roots
        .clone()
        .iter()
        .map(|w| find(&b, &w.neg(), false))
        .collect();
    let (odd_upper, odd_lower) = fixed_odd_orders(&b, kind);

    // Bracket table with the closure gate.
    let dim = b.basis.len();
    let mut real = Realization {
        algebra: b.algebra.clone(),
        size: b.size,
        parity_split: b.parity_split,
        row_weight: std::mem::take(&mut b.row_weight),
        weight_rows: std::mem::take(&mut b.weight_rows),
        basis: std::mem::take(&mut b.basis),
        bracket: Vec::new(),
        cartan,
        simple_raisers,
        simple_lowerers,
        neg_even: neg_even.clone(),
        odd_upper,
        odd_lower,
        tau: Vec::new(),
        max_gen_height: 0,
        negpos: neg_even.iter().enumerate().map(|(p, &i)| (i, p)).collect(),
    };
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let ent = real.supercommutator_entries(i, j);
            let odd = real.basis[i].odd != real.basis[j].odd;
            let col = real.expand(&ent, odd).unwrap_or_else(|| {
                panic!(
                    "bracket closure failure: [{}, {}] is not in the span",
                    real.basis[i].label, real.basis[j].label
                )
            });
            table[i][j] = col;
        }
    }
    real.bracket = table;

    // Structural facts the module layer relies on (hard assertions).
    assert_odd_structure(&real);

    // Transpose images for even elements (costandard duality; gl/pe only).
    let mut tau = Vec::with_capacity(dim);
    for i in 0..dim {
        if real.basis[i].odd {
            tau.push(None);
        } else {
            let t = entries_transpose(&real.basis[i].entries);
            tau.push(real.expand(&t, false));
        }
    }
    real.tau = tau;

    real.max_gen_height = real
        .basis
        .iter()
        .map(|x| real.height_i64(&x.weight).abs())
        .max()
        .unwrap_or(0);
    Ok(real)
}

fn assert_odd_structure(real: &Realization) {
    // Both odd halves must be abelian (the exterior-algebra factorization of
    // induced modules depends on it), ad-stable under the even part, and
    // bracket into the even part across sides.
    for (side, other) in [
        (&real.odd_upper, &real.odd_lower),
        (&real.odd_lower, &real.odd_upper),
    ] {
        for &x in side.iter() {
            for &y in side.iter() {
                assert!(
                    real.bracket[x][y].is_empty(),
                    "odd half is not abelian: [{}, {}] ≠ 0",
                    real.basis[x].label,
                    real.basis[y].label
                );
            }
            for &y in other.iter() {
                for (k, _) in &real.bracket[x][y] {
                    assert!(
                        !real.basis[*k].odd,
                        "cross-side odd bracket left the even part"
                    );
                }
            }
        }
        for (u, bu) in real.basis.iter().enumerate() {
            if bu.odd {
                continue;
            }
            for &y in side.iter() {
                for (k, _) in &real.bracket[u][y] {
                    assert!(
                        side.contains(k),
                        "[{}, {}] leaves the odd side",
                        bu.label,
                        real.basis[y].label
                    );
                }
            }
        }
    }
}

fn fixed_odd_orders(b: &Builder, kind: AlgebraKind) -> (Vec<usize>, Vec<usize>) {
    let find = |w: &Weight| -> usize {
        b.basis
            .iter()
            .position(|x| x.odd && &x.weight == w)
            .unwrap_or_else(|| panic!("missing odd root vector for {}", w.render()))
    };
    let tag = b.algebra.basis;
    match kind {
        AlgebraKind::GL(_) => (Vec::new(), Vec::new()),
        AlgebraKind::PE(n) => {
            // The upper order is the fixed total order on upper odd roots:
            // rows i = n..1; within row i the pair roots ε_i+ε_j with j
            // descending from n to i+1, then the doubled root 2ε_i.
            let mut upper = Vec::new();
            let mut lower = Vec::new();
            for i in (0..n).rev() {
                for j in ((i + 1)..n).rev() {
                    let mut c = vec![0i64; n];
                    c[i] += 1;
                    c[j] += 1;
                    upper.push(find(&Weight::from_i64(tag, &c)));
                    c[i] = -1;
                    c[j] = -1;
                    lower.push(find(&Weight::from_i64(tag, &c)));
                }
                let mut c = vec![0i64; n];
                c[i] = 2;
                upper.push(find(&Weight::from_i64(tag, &c)));
            }
            (upper, lower)
        }
        AlgebraKind::GLmn(m, n) => {
            let mut upper: Vec<usize> = b
                .basis
                .iter()
                .enumerate()
                .filter(|(_, x)| x.odd && b.algebra.height(&x.weight).is_positive())
                .map(|(i, _)| i)
                .collect();
            upper.sort_by_key(|&i| root_order_key(&b.algebra, &b.basis[i].weight));
            let lower: Vec<usize> = upper
                .iter()
                .map(|&i| find(&b.basis[i].weight.neg()))
                .collect();
            let _ = (m, n);
            (upper, lower)
        }
        AlgebraKind::OSP2(n) => {
            // Fixed order: −ε−δ_1, …, −ε−δ_n, −ε+δ_n, …, −ε+δ_1 on the lower
            // side; the upper side mirrors it with ε instead of −ε.
            let mut upper = Vec::new();
            let mut lower = Vec::new();
            let make = |eps: i64, k: usize, s: i64| -> Weight {
                let mut c = vec![0i64; n + 1];
                c[0] = eps;
                c[1 + k] = s;
                Weight::from_i64(tag, &c)
            };
            for k in 0..n {
                upper.push(find(&make(1, k, 1)));
                lower.push(find(&make(-1, k, -1)));
            }
            for k in (0..n).rev() {
                upper.push(find(&make(1, k, -1)));
                lower.push(find(&make(-1, k, 1)));
            }
            (upper, lower)
        }
    }
}

fn unit_eps(tag: crate::algebra::BasisTag, i: usize) -> Weight {
    let mut c = vec![0i64; tag.rank()];
    c[i] = 1;
    Weight::from_i64(tag, &c)
}

fn build_gl(a: &AlgebraDescriptor, n: usize) -> Builder {
    let tag = a.basis;
    let mut b = Builder {
        algebra: a.clone(),
        size: n,
        parity_split: n,
        row_weight: (0..n).map(|i| unit_eps(tag, i)).collect(),
        weight_rows: (0..n).collect(),
        basis: Vec::new(),
    };
    for i in 0..n {
        b.push(format!("H[{}]", i + 1), Role::Cartan, e(i, i));
    }
    let mut offdiag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    offdiag.sort_by_key(|&(i, j)| {
        let w = b.row_weight[i].sub(&b.row_weight[j]);
        (a.height(&w).is_negative(), root_order_key(a, &w))
    });
    for (i, j) in offdiag {
        let role = if i < j { Role::EvenRaise } else { Role::EvenLower };
        b.push(format!("E[{},{}]", i + 1, j + 1), role, e(i, j));
    }
    b
}

fn build_pe(a: &AlgebraDescriptor, n: usize) -> Builder {
    let tag = a.basis;
    let mut rw: Vec<Weight> = (0..n).map(|i| unit_eps(tag, i)).collect();
    rw.extend((0..n).map(|i| unit_eps(tag, i).neg()));
    let mut b = Builder {
        algebra: a.clone(),
        size: 2 * n,
        parity_split: n,
        row_weight: rw,
        weight_rows: (0..n).collect(),
        basis: Vec::new(),
    };
    for i in 0..n {
        b.push(
            format!("A[{},{}]", i + 1, i + 1),
            Role::Cartan,
            e2(i, i, 1, n + i, n + i, -1),
        );
    }
    let mut offdiag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    offdiag.sort_by_key(|&(i, j)| {
        let w = b.row_weight[i].sub(&b.row_weight[j]);
        (a.height(&w).is_negative(), root_order_key(a, &w))
    });
    for (i, j) in offdiag {
        let role = if i < j { Role::EvenRaise } else { Role::EvenLower };
        b.push(
            format!("A[{},{}]", i + 1, j + 1),
            role,
            e2(i, j, 1, n + j, n + i, -1),
        );
    }
    for i in 0..n {
        for j in i..n {
            if i == j {
                b.push(format!("X[{},{}]", i + 1, i + 1), Role::OddUpper, e(i, n + i));
            } else {
                b.push(
                    format!("X[{},{}]", i + 1, j + 1),
                    Role::OddUpper,
                    e2(i, n + j, 1, j, n + i, 1),
                );
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            b.push(
                format!("Y[{},{}]", i + 1, j + 1),
                Role::OddLower,
                e2(n + i, j, 1, n + j, i, -1),
            );
        }
    }
    b
}

fn build_glmn(a: &AlgebraDescriptor, m: usize, n: usize) -> Builder {
    let tag = a.basis;
    let sz = m + n;
    let mut b = Builder {
        algebra: a.clone(),
        size: sz,
        parity_split: m,
        row_weight: (0..sz).map(|i| unit_eps(tag, i)).collect(),
        weight_rows: (0..sz).collect(),
        basis: Vec::new(),
    };
    for i in 0..sz {
        b.push(format!("H[{}]", i + 1), Role::Cartan, e(i, i));
    }
    let block = |i: usize| usize::from(i >= m);
    let mut off: Vec<(usize, usize)> = (0..sz)
        .flat_map(|i| (0..sz).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    off.sort_by_key(|&(i, j)| {
        let w = b.row_weight[i].sub(&b.row_weight[j]);
        (a.height(&w).is_negative(), root_order_key(a, &w))
    });
    for (i, j) in off {
        let role = if block(i) == block(j) {
            if i < j {
                Role::EvenRaise
            } else {
                Role::EvenLower
            }
        } else if block(i) == 0 {
            Role::OddUpper
        } else {
            Role::OddLower
        };
        b.push(format!("E[{},{}]", i + 1, j + 1), role, e(i, j));
    }
    b
}

fn build_osp(a: &AlgebraDescriptor, n: usize) -> Builder {
    let tag = a.basis;
    let sz = 2 + 2 * n;
    let mut rw = vec![unit_eps(tag, 0), unit_eps(tag, 0).neg()];
    for i in 0..n {
        rw.push(unit_eps(tag, 1 + i));
    }
    for i in 0..n {
        rw.push(unit_eps(tag, 1 + i).neg());
    }
    let mut weight_rows = vec![0usize];
    weight_rows.extend((0..n).map(|i| 2 + i));
    let mut b = Builder {
        algebra: a.clone(),
        size: sz,
        parity_split: 2,
        row_weight: rw,
        weight_rows,
        basis: Vec::new(),
    };

    // Φ = diag(G, J): symmetric swap on the even rows, symplectic on the odd.
    let mut phi: Entries = vec![((0, 1), Q::one()), ((1, 0), Q::one())];
    for i in 0..n {
        phi.push(((2 + i, 2 + n + i), Q::one()));
        phi.push(((2 + n + i, 2 + i), -Q::one()));
    }
    let phi = entries_normalize(phi);
    // T(E_rc) = (E_rc)^{st} Φ + Φ E_rc with (E_rc)^{st} = ±E_cr; the sign is
    // −1 exactly on the upper-right odd block.
    let t_of = |r: usize, c: usize| -> Entries {
        let s = if r < 2 && c >= 2 { -Q::one() } else { Q::one() };
        let est: Entries = vec![((c, r), s)];
        entries_add(&entries_mul(&est, &phi), &entries_mul(&phi, &e(r, c)), &Q::one())
    };
    let idx = |r: usize, c: usize| r * sz + c;
    let mut m = Matrix::<Q>::zeros(sz * sz, sz * sz);
    for r in 0..sz {
        for c in 0..sz {
            for ((rr, cc), v) in t_of(r, c) {
                let cur = m.at(idx(rr, cc), idx(r, c)).clone();
                m.set(idx(rr, cc), idx(r, c), cur + v);
            }
        }
    }
    let kernel = m.kernel_basis();
    // Split each kernel vector into (weight, parity)-homogeneous components;
    // each component must itself satisfy the defining equation.
    let mut groups: HashMap<(Weight, bool), Vec<Entries>> = HashMap::new();
    for v in &kernel {
        let mut comps: HashMap<(Weight, bool), Entries> = HashMap::new();
        for r in 0..sz {
            for c in 0..sz {
                let val = &v[idx(r, c)];
                if val.is_zero() {
                    continue;
                }
                let w = b.row_weight[r].sub(&b.row_weight[c]);
                let odd = (r >= 2) != (c >= 2);
                comps.entry((w, odd)).or_default().push(((r, c), val.clone()));
            }
        }
        for (key, ent) in comps {
            let ent = entries_normalize(ent);
            // Machine-check that the graded component is again in the kernel.
            let mut img: Vec<((usize, usize), Q)> = Vec::new();
            for ((r, c), v) in &ent {
                for (pos, tv) in t_of(*r, *c) {
                    img.push((pos, tv * v));
                }
            }
            assert!(
                entries_normalize(img).is_empty(),
                "graded component escaped the kernel"
            );
            groups.entry(key).or_default().push(ent);
        }
    }
    // Reduce each group to a canonical basis.
    let mut keys: Vec<(Weight, bool)> = groups.keys().cloned().collect();
    keys.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut root_elems: Vec<(Weight, bool, Entries)> = Vec::new();
    let mut zero_dim = 0usize;
    for key in keys {
        let vecs = &groups[&key];
        let mut support: Vec<(usize, usize)> = vecs
            .iter()
            .flat_map(|e| e.iter().map(|(p, _)| *p))
            .collect();
        support.sort_unstable();
        support.dedup();
        let sindex: HashMap<(usize, usize), usize> =
            support.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let mut mat = Matrix::<Q>::zeros(vecs.len(), support.len());
        for (row, ent) in vecs.iter().enumerate() {
            for (p, v) in ent {
                mat.set(row, sindex[p], v.clone());
            }
        }
        let pivots = mat.rref_in_place();
        for (row, _) in pivots.iter().enumerate() {
            let ent: Entries = entries_normalize(
                support
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (*p, mat.at(row, k).clone()))
                    .collect(),
            );
            if ent.is_empty() {
                continue;
            }
            if key.0.is_zero() {
                zero_dim += 1;
            } else {
                root_elems.push((key.0.clone(), key.1, ent));
            }
        }
    }
    assert_eq!(zero_dim, n + 1, "Cartan dimension mismatch in osp kernel");

    // Cartan basis: explicit diagonal elements, each verified to satisfy the
    // defining equation.
    let mut cartans: Vec<(String, Entries)> = Vec::new();
    cartans.push(("H[e]".to_string(), entries_normalize(e2(0, 0, 1, 1, 1, -1))));
    for i in 0..n {
        cartans.push((
            format!("H[d{}]", i + 1),
            entries_normalize(e2(2 + i, 2 + i, 1, 2 + n + i, 2 + n + i, -1)),
        ));
    }
    for (label, ent) in &cartans {
        let mut img: Vec<((usize, usize), Q)> = Vec::new();
        for ((r, c), v) in ent {
            for (pos, tv) in t_of(*r, *c) {
                img.push((pos, tv * v));
            }
        }
        assert!(
            entries_normalize(img).is_empty(),
            "{label} is not in the algebra"
        );
    }
    for (label, ent) in cartans {
        b.push(label, Role::Cartan, ent);
    }

    // Root vectors with deterministic normalization and roles.
    let mut ordered: Vec<(Weight, bool, Entries)> = root_elems;
    ordered.sort_by_key(|(w, odd, _)| {
        (
            *odd,
            a.height(w).is_negative(),
            root_order_key(a, w),
        )
    });
    for (w, odd, ent) in ordered {
        let lead = ent[0].1.clone();
        let ent: Entries = ent.into_iter().map(|(p, v)| (p, v / &lead)).collect();
        let role = if odd {
            if a.height(&w).is_positive() {
                Role::OddUpper
            } else {
                Role::OddLower
            }
        } else if a.height(&w).is_positive() {
            Role::EvenRaise
        } else {
            Role::EvenLower
        };
        let prefix = if odd { "B" } else { "G" };
        b.push(format!("{prefix}[{}]", fmt_coeff_root(&w)), role, ent);
    }
    assert_eq!(
        b.basis.iter().filter(|x| x.odd).count(),
        4 * n,
        "odd dimension mismatch in osp kernel"
    );
    b
}
