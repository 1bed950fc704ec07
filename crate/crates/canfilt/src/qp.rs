//! Exact rational convex quadratic programming over the weight-inequality
//! cone.
//!
//! For an adapted basis with grouped variables, every nonzero structure
//! constant `c_ij^m` contributes a row `e_i + e_j - e_m` of the constraint
//! matrix `C`, and the optimal weights are the unique minimizer of
//!
//! ```text
//! g_d(w) = ½ ‖w - 1‖²_d = ½ Σ_g d_g (w_g - 1)²    s.t.  C w ≤ 0
//! ```
//!
//! with `d_g` the multiplicity of group `g`. Variables pinned to weight 0
//! (units, diagonal blocks) are eliminated before solving rather than
//! encoded as equality rows.
//!
//! The solver is a primal active-set method run entirely over exact
//! rationals: start at the feasible point `w = 0` where every row is tight,
//! repeatedly solve the equality-constrained subproblem on the working set
//! by exact elimination, drop a most-negative-multiplier row (lowest index
//! on ties), and add the first blocking row along the descent segment.
//! Every certificate is re-checked by [`verify_kkt`], which is independent
//! of the solver path, and at desk scale by [`enumerate_active_sets_oracle`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Algebra;
use crate::linalg::{dot, Matrix};
use crate::rational::Rat;
use crate::{Error, Result};

/// Assignment of basis vectors to weight variables.
///
/// A grouping with `symmetry: None` is only trusted by the canonical-
/// filtration layer when classes are singletons and the diagonal grading
/// lattice of the table separates all basis vectors; a declared symmetry
/// (block permutations, Vergne-basis automorphisms, total-degree
/// derivations) waives that gate. Pins assert that the named groups carry
/// weight 0 in the canonical filtration; builders pin only units and
/// diagonal blocks, where that holds.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Grouping {
    /// Group id per basis index; ids must be contiguous from 0.
    pub classes: Vec<usize>,
    /// Groups pinned to weight 0.
    #[serde(default)]
    pub pinned: BTreeSet<usize>,
    /// Human-readable justification for classes that merge basis vectors
    /// or for pins, e.g. `"block permutations"`.
    #[serde(default)]
    pub symmetry: Option<String>,
}

impl Grouping {
    pub fn identity(dim: usize) -> Grouping {
        Grouping { classes: (0..dim).collect(), pinned: BTreeSet::new(), symmetry: None }
    }

    pub fn n_groups(&self) -> usize {
        self.classes.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.n_groups()];
        for &g in &self.classes {
            sizes[g] += 1;
        }
        sizes
    }

    pub fn check(&self, dim: usize) -> Result<()> {
        if self.classes.len() != dim {
            return Err(Error::InvalidGrouping(format!(
                "{} classes for dimension {dim}",
                self.classes.len()
            )));
        }
        let sizes = self.group_sizes();
        if sizes.contains(&0) {
            return Err(Error::InvalidGrouping("empty variable group".into()));
        }
        if let Some(&g) = self.pinned.iter().next_back() {
            if g >= sizes.len() {
                return Err(Error::InvalidGrouping(format!("pinned group {g} out of range")));
            }
        }
        Ok(())
    }

    /// One group per total degree of the grading vector, with the
    /// degree-zero group pinned. This is the grouping for truncated
    /// polynomial rings, justified by their degree-preserving derivations.
    pub fn by_total_degree(a: &Algebra) -> Result<Grouping> {
        let g = a.grading().ok_or(Error::MissingGrading)?;
        let degrees: Vec<i64> = g.iter().map(|v| v.iter().sum()).collect();
        let mut distinct: Vec<i64> = degrees.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let classes = degrees
            .iter()
            .map(|d| distinct.binary_search(d).unwrap())
            .collect();
        let pinned = distinct
            .iter()
            .position(|&d| d == 0)
            .into_iter()
            .collect();
        Ok(Grouping {
            classes,
            pinned,
            symmetry: Some("total-degree derivations".to_string()),
        })
    }

    /// One group per distinct grading vector, with the zero-degree group
    /// pinned. This is the block grouping of block upper triangular
    /// algebras, justified by intra-block permutation automorphisms.
    pub fn by_degree_vector(a: &Algebra) -> Result<Grouping> {
        let g = a.grading().ok_or(Error::MissingGrading)?;
        let mut distinct: Vec<Vec<i64>> = g.clone();
        distinct.sort();
        distinct.dedup();
        let classes = g
            .iter()
            .map(|d| distinct.binary_search(d).unwrap())
            .collect();
        let zero = vec![0i64; g.first().map_or(0, Vec::len)];
        let pinned = distinct.iter().position(|d| *d == zero).into_iter().collect();
        Ok(Grouping {
            classes,
            pinned,
            symmetry: Some("block permutations".to_string()),
        })
    }

    /// Concatenation for direct sums: classes shifted, pins shifted. The
    /// result always declares a symmetry: the block decomposition itself
    /// justifies solving on the concatenated basis (the joint problem
    /// separates into the blocks), even where no single diagonal torus
    /// distinguishes the blocks' idempotents.
    pub fn direct_sum(&self, other: &Grouping) -> Grouping {
        let shift = self.n_groups();
        let mut classes = self.classes.clone();
        classes.extend(other.classes.iter().map(|&g| g + shift));
        let mut pinned = self.pinned.clone();
        pinned.extend(other.pinned.iter().map(|&g| g + shift));
        let name = |s: &Option<String>| s.clone().unwrap_or_else(|| "separated".to_string());
        let symmetry = Some(format!(
            "direct sum blocks ({}; {})",
            name(&self.symmetry),
            name(&other.symmetry)
        ));
        Grouping { classes, pinned, symmetry }
    }
}

/// The weight-inequality cone of an algebra relative to a grouping:
/// deduplicated rows `C` over the variable groups, the set of pinned
/// variables, and the group multiplicities `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub n_vars: usize,
    /// Dense integer rows over all groups, sorted and deduplicated.
    pub rows: Vec<Vec<i64>>,
    /// Variable groups pinned to weight 0, eliminated before solving.
    pub fixed_zero: BTreeSet<usize>,
    /// Multiplicity of each variable group.
    pub dims: Vec<u64>,
}

impl ConstraintSystem {
    /// A raw system for tests and random cross-checks.
    pub fn raw(n_vars: usize, rows: Vec<Vec<i64>>, dims: Vec<u64>) -> ConstraintSystem {
        let mut rows: Vec<Vec<i64>> = rows
            .into_iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect();
        rows.sort();
        rows.dedup();
        ConstraintSystem { n_vars, rows, fixed_zero: BTreeSet::new(), dims }
    }

    fn dim_rat(&self, g: usize) -> Rat {
        Rat::from_integer(BigInt::from(self.dims[g]))
    }

    /// `⟨u, v⟩_d = Σ_g u_g v_g d_g` over all groups.
    pub fn inner_d(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let mut total = Rat::zero();
        for g in 0..self.n_vars {
            total += &u[g] * &v[g] * self.dim_rat(g);
        }
        total
    }

    /// `g_d(w) = ½ ‖w - 1‖²_d`.
    pub fn objective(&self, w: &[Rat]) -> Rat {
        let diff: Vec<Rat> = w.iter().map(|x| x - Rat::one()).collect();
        self.inner_d(&diff, &diff) / crate::rational::rat_int(2)
    }

    /// Row `r` evaluated at `w`.
    pub fn row_value(&self, r: usize, w: &[Rat]) -> Rat {
        self.rows[r]
            .iter()
            .zip(w)
            .map(|(&c, x)| Rat::from_integer(BigInt::from(c)) * x)
            .sum()
    }

    pub fn is_feasible(&self, w: &[Rat]) -> bool {
        self.fixed_zero.iter().all(|&g| w[g].is_zero())
            && (0..self.rows.len()).all(|r| !self.row_value(r, w).is_positive())
    }

    pub fn tight_rows(&self, w: &[Rat]) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| self.row_value(r, w).is_zero())
            .collect()
    }
}

/// Machine-checkable proof of optimality: the optimal weights, one
/// multiplier per constraint row, the tight rows, and the exact objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QpCertificate {
    pub w_star: Vec<Rat>,
    pub lambda: Vec<Rat>,
    pub active_set: Vec<usize>,
    pub objective: Rat,
    pub kkt_ok: bool,
}

/// One row `e_i + e_j - e_m` per nonzero structure constant, collapsed
/// over the grouping and deduplicated. Rows that vanish after collapsing
/// and pin-elimination are dropped; degenerate patterns such as the
/// idempotent self-row `e_m ≤ 0` are kept.
pub fn build_constraints(a: &Algebra, grouping: &Grouping) -> Result<ConstraintSystem> {
    grouping.check(a.dim())?;
    let n = grouping.n_groups();
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for ((i, j), entries) in a.table() {
        for (m, _) in entries {
            let mut row = vec![0i64; n];
            row[grouping.classes[*i]] += 1;
            row[grouping.classes[*j]] += 1;
            row[grouping.classes[*m]] -= 1;
            for &g in &grouping.pinned {
                row[g] = 0;
            }
            if row.iter().any(|&x| x != 0) {
                rows.insert(row);
            }
        }
    }
    let dims = grouping.group_sizes().iter().map(|&s| s as u64).collect();
    Ok(ConstraintSystem {
        n_vars: n,
        rows: rows.into_iter().collect(),
        fixed_zero: grouping.pinned.clone(),
        dims,
    })
}

// ---------------------------------------------------------------------------
// Reduced problem (pinned variables eliminated)
// ---------------------------------------------------------------------------

struct Reduced {
    /// Free group ids in ascending order.
    free: Vec<usize>,
    /// d_g for each free variable.
    dims: Vec<Rat>,
    /// Nonzero reduced rows and the cs row they came from.
    rows: Vec<Vec<Rat>>,
    row_origin: Vec<usize>,
}

impl Reduced {
    fn of(cs: &ConstraintSystem) -> Reduced {
        let free: Vec<usize> = (0..cs.n_vars).filter(|g| !cs.fixed_zero.contains(g)).collect();
        let dims = free.iter().map(|&g| cs.dim_rat(g)).collect();
        let mut rows = Vec::new();
        let mut row_origin = Vec::new();
        for (ri, row) in cs.rows.iter().enumerate() {
            let reduced: Vec<Rat> = free
                .iter()
                .map(|&g| Rat::from_integer(BigInt::from(row[g])))
                .collect();
            if reduced.iter().any(|x| !x.is_zero()) {
                rows.push(reduced);
                row_origin.push(ri);
            }
        }
        Reduced { free, dims, rows, row_origin }
    }

    fn n(&self) -> usize {
        self.free.len()
    }

    /// Unique minimizer of `g_d` subject to the rows of `subset` held at
    /// equality, together with one multiplier vector: solve
    /// `(C_S D⁻¹ C_Sᵀ) μ = C_S 1`, then `y = 1 - D⁻¹ C_Sᵀ μ`.
    fn eqp(&self, subset: &[usize]) -> (Vec<Rat>, Vec<Rat>) {
        let n = self.n();
        let k = subset.len();
        if k == 0 {
            return (vec![Rat::one(); n], Vec::new());
        }
        let mut schur = Matrix::zero(k, k);
        for (a, &ra) in subset.iter().enumerate() {
            for (b, &rb) in subset.iter().enumerate().skip(a) {
                let mut s = Rat::zero();
                for i in 0..n {
                    if self.rows[ra][i].is_zero() || self.rows[rb][i].is_zero() {
                        continue;
                    }
                    s += &self.rows[ra][i] * &self.rows[rb][i] / &self.dims[i];
                }
                schur.rows[a][b] = s.clone();
                schur.rows[b][a] = s;
            }
        }
        let rhs: Vec<Rat> = subset.iter().map(|&r| self.rows[r].iter().sum()).collect();
        let mu = schur
            .solve(&rhs)
            .expect("equality-constrained subproblem is always consistent");
        let mut y = vec![Rat::one(); n];
        for (a, &ra) in subset.iter().enumerate() {
            if mu[a].is_zero() {
                continue;
            }
            for (i, yi) in y.iter_mut().enumerate() {
                if !self.rows[ra][i].is_zero() {
                    let t = &mu[a] * &self.rows[ra][i] / &self.dims[i];
                    *yi -= t;
                }
            }
        }
        (y, mu)
    }

    fn expand(&self, cs: &ConstraintSystem, x: &[Rat]) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); cs.n_vars];
        for (i, &g) in self.free.iter().enumerate() {
            w[g] = x[i].clone();
        }
        w
    }
}

/// Incremental echelon form for independence checks.
struct Echelon {
    rows: Vec<Vec<Rat>>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    /// Reduce `v` by the stored rows; if a nonzero residual remains, store
    /// it and report independence.
    fn try_add(&mut self, v: &[Rat]) -> bool {
        let mut r = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            if !r[p].is_zero() {
                let f = &r[p] / &row[p];
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        if r.iter().all(Rat::is_zero) {
            return false;
        }
        self.rows.push(r);
        true
    }
}

/// Primal active-set minimization of `g_d` over `{Cw ≤ 0}` with pinned
/// variables eliminated. Always succeeds: `w = 0` is feasible and the
/// objective is strictly convex. The returned certificate has been passed
/// through [`verify_kkt`].
pub fn solve(cs: &ConstraintSystem) -> QpCertificate {
    let red = Reduced::of(cs);
    let n = red.n();
    let m = red.rows.len();

    let mut x = vec![Rat::zero(); n];
    // All rows are tight at 0; seed the working set with a lowest-index
    // maximal independent subset.
    let mut working: Vec<usize> = Vec::new();
    let mut ech = Echelon::new();
    for r in 0..m {
        if ech.try_add(&red.rows[r]) {
            working.push(r);
        }
    }

    let mut lambda_red = vec![Rat::zero(); m];
    let cap = 1000 + 32 * (n + m + 1);
    let mut iterations = 0;
    loop {
        iterations += 1;
        assert!(iterations < cap, "active-set method failed to terminate");
        let (y, mu) = red.eqp(&working);
        if y == x {
            // Optimal on the working set: inspect multipliers.
            let mut drop: Option<(usize, Rat)> = None;
            for (pos, m_val) in mu.iter().enumerate() {
                if m_val.is_negative()
                    && drop.as_ref().is_none_or(|(_, best)| m_val < best)
                {
                    drop = Some((pos, m_val.clone()));
                }
            }
            match drop {
                None => {
                    for l in &mut lambda_red {
                        *l = Rat::zero();
                    }
                    for (pos, &r) in working.iter().enumerate() {
                        lambda_red[r] = mu[pos].clone();
                    }
                    break;
                }
                Some((pos, _)) => {
                    working.remove(pos);
                }
            }
        } else {
            let p: Vec<Rat> = y.iter().zip(&x).map(|(a, b)| a - b).collect();
            let mut alpha = Rat::one();
            let mut blocker = None;
            for r in 0..m {
                if working.contains(&r) {
                    continue;
                }
                let slope = dot(&red.rows[r], &p);
                if slope.is_positive() {
                    let room = -dot(&red.rows[r], &x);
                    // bound = room / slope; strict improvement keeps Bland order.
                    if room < (&alpha * &slope) {
                        alpha = room / &slope;
                        blocker = Some(r);
                    }
                }
            }
            for (xi, pi) in x.iter_mut().zip(&p) {
                *xi += &alpha * pi;
            }
            if let Some(r) = blocker {
                working.push(r);
                working.sort_unstable();
            }
        }
    }

    let w_star = red.expand(cs, &x);
    let mut lambda = vec![Rat::zero(); cs.rows.len()];
    for (pos, &orig) in red.row_origin.iter().enumerate() {
        lambda[orig] = lambda_red[pos].clone();
    }
    finish_certificate(cs, w_star, lambda)
}

fn finish_certificate(cs: &ConstraintSystem, w_star: Vec<Rat>, lambda: Vec<Rat>) -> QpCertificate {
    let active_set = cs.tight_rows(&w_star);
    let objective = cs.objective(&w_star);
    let mut cert = QpCertificate { w_star, lambda, active_set, objective, kkt_ok: false };
    cert.kkt_ok = verify_kkt(cs, &cert);
    assert!(cert.kkt_ok, "solver produced a certificate that fails the KKT re-check");
    cert
}

/// Re-evaluate the KKT conditions of a certificate by exact arithmetic,
/// independently of how it was produced: feasibility `Cw ≤ 0` and pinned
/// weights zero, multipliers `λ ≥ 0`, complementary slackness
/// `λᵀ(Cw) = 0`, and stationarity `d_g(w_g - 1) + Σ_r λ_r C[r][g] = 0` on
/// every free variable.
pub fn verify_kkt(cs: &ConstraintSystem, cert: &QpCertificate) -> bool {
    let w = &cert.w_star;
    if w.len() != cs.n_vars || cert.lambda.len() != cs.rows.len() {
        return false;
    }
    if !cs.is_feasible(w) {
        return false;
    }
    if cert.lambda.iter().any(Rat::is_negative) {
        return false;
    }
    let slack: Rat = (0..cs.rows.len())
        .map(|r| &cert.lambda[r] * cs.row_value(r, w))
        .sum();
    if !slack.is_zero() {
        return false;
    }
    for g in 0..cs.n_vars {
        if cs.fixed_zero.contains(&g) {
            continue;
        }
        let mut grad = cs.dim_rat(g) * (&w[g] - Rat::one());
        for (r, row) in cs.rows.iter().enumerate() {
            if row[g] != 0 {
                grad += &cert.lambda[r] * Rat::from_integer(BigInt::from(row[g]));
            }
        }
        if !grad.is_zero() {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Phase-1 simplex: nonnegative solutions of linear systems, with Farkas
// witnesses on infeasibility
// ---------------------------------------------------------------------------

/// Outcome of searching for `λ ≥ 0` with `Σ λ_r a_r = b`.
enum Nonneg {
    Solution(Vec<Rat>),
    /// `y` with `⟨a_r, y⟩ ≤ 0` for all `r` and `⟨b, y⟩ > 0`.
    Witness(Vec<Rat>),
}

/// Phase-1 simplex with Bland's rule, fully rational. `columns[r]` is the
/// vector `a_r`.
fn nonneg_combination(columns: &[Vec<Rat>], b: &[Rat]) -> Nonneg {
    let n = b.len();
    let m = columns.len();
    // Flip row signs so the right-hand side is nonnegative.
    let sigma: Vec<Rat> = b
        .iter()
        .map(|x| if x.is_negative() { -Rat::one() } else { Rat::one() })
        .collect();
    // Tableau rows: [A' | I | b'] with A'[i][r] = σ_i a_r[i].
    let width = m + n + 1;
    let mut t: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            for col in columns {
                row.push(&sigma[i] * &col[i]);
            }
            for j in 0..n {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row.push(&sigma[i] * &b[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + n).collect();
    // Reduced-cost row for the phase-1 objective Σ artificials: start from
    // c - Σ (rows with basic cost 1).
    let mut cost = vec![Rat::zero(); width];
    for c in cost.iter_mut().skip(m).take(n) {
        *c = Rat::one();
    }
    for row in &t {
        for (c, x) in cost.iter_mut().zip(row) {
            *c -= x;
        }
    }
    // Bland: entering column = lowest index with negative reduced cost.
    while let Some(enter) = (0..m + n).find(|&j| cost[j].is_negative()) {
        // Ratio test; ties by lowest basis variable index.
        let mut pivot: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &pivot {
                None => true,
                Some((pi, pr)) => {
                    ratio < *pr || (ratio == *pr && basis[i] < basis[*pi])
                }
            };
            if better {
                pivot = Some((i, ratio));
            }
        }
        let (pi, _) = pivot.expect("phase-1 objective is bounded below");
        let scale = t[pi][enter].clone();
        for x in &mut t[pi] {
            *x /= &scale;
        }
        let pivot_row = t[pi].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pi && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (c, p) in cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *c -= &f * p;
                }
            }
        }
        basis[pi] = enter;
    }
    let objective: Rat = t
        .iter()
        .enumerate()
        .filter(|(i, _)| basis[*i] >= m)
        .map(|(_, row)| row[width - 1].clone())
        .sum();
    if objective.is_zero() {
        let mut lambda = vec![Rat::zero(); m];
        for (i, row) in t.iter().enumerate() {
            if basis[i] < m {
                lambda[basis[i]] = row[width - 1].clone();
            }
        }
        assert!(lambda.iter().all(|l| !l.is_negative()));
        let residual: Vec<Rat> = (0..n)
            .map(|i| {
                let combo: Rat = columns.iter().zip(&lambda).map(|(c, l)| &c[i] * l).sum();
                combo - &b[i]
            })
            .collect();
        assert!(residual.iter().all(Rat::is_zero), "multiplier branch must solve exactly");
        Nonneg::Solution(lambda)
    } else {
        // Simplex multipliers: π_j = 1 - (reduced cost of artificial j).
        let y: Vec<Rat> = (0..n)
            .map(|j| &sigma[j] * (Rat::one() - &cost[m + j]))
            .collect();
        assert!(columns.iter().all(|c| !dot(c, &y).is_positive()));
        assert!(dot(b, &y).is_positive());
        Nonneg::Witness(y)
    }
}

/// The two exclusive branches of Farkas' lemma for the system
/// `Cᵀλ = D(1 - w), λ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FarkasCertificate {
    /// Multipliers proving optimality, one per constraint row.
    Multipliers(Vec<Rat>),
    /// A vector `y` with `Cy ≤ 0` and `⟨y, D(1-w)⟩ > 0` proving that `w`
    /// is not the optimum (zeros at pinned variables).
    Witness(Vec<Rat>),
}

/// Decide the Farkas alternative at a feasible point where *all* rows are
/// tight (`Cw = 0`), the all-tight grading case where complementary
/// slackness is automatic. Exactly one branch is returned.
pub fn farkas_certificate(cs: &ConstraintSystem, w: &[Rat]) -> Result<FarkasCertificate> {
    if w.len() != cs.n_vars {
        return Err(Error::DimensionMismatch { expected: cs.n_vars, got: w.len() });
    }
    if cs.fixed_zero.iter().any(|&g| !w[g].is_zero()) {
        return Err(Error::NotAllTight);
    }
    if (0..cs.rows.len()).any(|r| !cs.row_value(r, w).is_zero()) {
        return Err(Error::NotAllTight);
    }
    let red = Reduced::of(cs);
    let b: Vec<Rat> = red
        .free
        .iter()
        .enumerate()
        .map(|(i, &g)| &red.dims[i] * (Rat::one() - &w[g]))
        .collect();
    // All cs rows participate as columns; rows that vanished on the free
    // variables contribute zero columns and keep multiplier zero.
    let columns: Vec<Vec<Rat>> = cs
        .rows
        .iter()
        .map(|row| {
            red.free
                .iter()
                .map(|&g| Rat::from_integer(BigInt::from(row[g])))
                .collect()
        })
        .collect();
    match nonneg_combination(&columns, &b) {
        Nonneg::Solution(lambda) => Ok(FarkasCertificate::Multipliers(lambda)),
        Nonneg::Witness(y) => Ok(FarkasCertificate::Witness(red.expand(cs, &y))),
    }
}

/// Projection scaling onto the `g_d`-optimal point of the ray through `y`:
/// `w = (⟨1, y⟩_d / ‖y‖²_d) · y`.
pub fn normalize_to_cone(cs: &ConstraintSystem, y: &[Rat]) -> Result<Vec<Rat>> {
    if y.len() != cs.n_vars {
        return Err(Error::DimensionMismatch { expected: cs.n_vars, got: y.len() });
    }
    if y.iter().all(Rat::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ones = vec![Rat::one(); cs.n_vars];
    let num = cs.inner_d(&ones, y);
    if num.is_negative() {
        return Err(Error::NegativeWeightSum);
    }
    let den = cs.inner_d(y, y);
    let s = num / den;
    Ok(y.iter().map(|x| x * &s).collect())
}

/// Certify an externally proposed weight vector: normalize it along its
/// ray, then search for nonnegative multipliers on its tight rows. Returns
/// the certificate when `w` spans the cone optimum, `None` otherwise.
pub fn certify_weights(cs: &ConstraintSystem, w: &[Rat]) -> Result<Option<QpCertificate>> {
    let scaled = normalize_to_cone(cs, w)?;
    if !cs.is_feasible(&scaled) {
        return Ok(None);
    }
    let red = Reduced::of(cs);
    let b: Vec<Rat> = red
        .free
        .iter()
        .enumerate()
        .map(|(i, &g)| &red.dims[i] * (Rat::one() - &scaled[g]))
        .collect();
    let tight = cs.tight_rows(&scaled);
    let columns: Vec<Vec<Rat>> = tight
        .iter()
        .map(|&r| {
            red.free
                .iter()
                .map(|&g| Rat::from_integer(BigInt::from(cs.rows[r][g])))
                .collect()
        })
        .collect();
    match nonneg_combination(&columns, &b) {
        Nonneg::Solution(lam) => {
            let mut lambda = vec![Rat::zero(); cs.rows.len()];
            for (pos, &r) in tight.iter().enumerate() {
                lambda[r] = lam[pos].clone();
            }
            let mut cert = QpCertificate {
                active_set: tight,
                objective: cs.objective(&scaled),
                w_star: scaled,
                lambda,
                kkt_ok: false,
            };
            cert.kkt_ok = verify_kkt(cs, &cert);
            assert!(cert.kkt_ok, "multiplier existence implies a full KKT certificate");
            Ok(Some(cert))
        }
        Nonneg::Witness(_) => Ok(None),
    }
}

/// Brute-force oracle: try subsets of rows as equality active sets, solve
/// each equality-constrained problem exactly, filter by primal feasibility
/// and existence of nonnegative multipliers, and return the surviving
/// optimum. All survivors agree (any survivor is a KKT point of a strictly
/// convex program), which is asserted whenever the system is small enough
/// to enumerate fully.
pub fn enumerate_active_sets_oracle(
    cs: &ConstraintSystem,
    max_rows: usize,
) -> Result<QpCertificate> {
    let red = Reduced::of(cs);
    let m = red.rows.len();
    if m > max_rows {
        return Err(Error::OracleTooLarge { rows: m, max: max_rows });
    }

    let survivor = |subset: &[usize]| -> Option<(Vec<Rat>, Vec<Rat>)> {
        let (y, _) = red.eqp(subset);
        let feasible = red
            .rows
            .iter()
            .all(|row| !dot(row, &y).is_positive());
        if !feasible {
            return None;
        }
        let b: Vec<Rat> = (0..red.n())
            .map(|i| &red.dims[i] * (Rat::one() - &y[i]))
            .collect();
        let columns: Vec<Vec<Rat>> = subset.iter().map(|&r| red.rows[r].clone()).collect();
        match nonneg_combination(&columns, &b) {
            Nonneg::Solution(lam) => Some((y, lam)),
            Nonneg::Witness(_) => None,
        }
    };

    let build = |x: Vec<Rat>, subset: &[usize], lam: Vec<Rat>| -> QpCertificate {
        let w_star = red.expand(cs, &x);
        let mut lambda = vec![Rat::zero(); cs.rows.len()];
        for (pos, &r) in subset.iter().enumerate() {
            lambda[red.row_origin[r]] = lam[pos].clone();
        }
        finish_certificate(cs, w_star, lambda)
    };

    // Full enumeration with cross-agreement at desk scale; above that,
    // first the all-rows set (graded families are all-tight at the
    // optimum), then subsets by increasing size with early exit.
    if m <= 12 {
        let mut found: Option<(Vec<Rat>, Vec<usize>, Vec<Rat>)> = None;
        for mask in 0u32..(1u32 << m) {
            let subset: Vec<usize> = (0..m).filter(|r| mask & (1 << r) != 0).collect();
            if let Some((y, lam)) = survivor(&subset) {
                match &found {
                    None => found = Some((y, subset, lam)),
                    Some((prev, _, _)) => {
                        assert_eq!(prev, &y, "active-set oracle found two distinct optima");
                    }
                }
            }
        }
        let (y, subset, lam) = found.expect("some active set always certifies the optimum");
        Ok(build(y, &subset, lam))
    } else {
        let all: Vec<usize> = (0..m).collect();
        if let Some((y, lam)) = survivor(&all) {
            return Ok(build(y, &all, lam));
        }
        for size in 0..=m {
            let mut c = Combinations::new(m, size);
            while let Some(subset) = c.next() {
                if let Some((y, lam)) = survivor(subset) {
                    return Ok(build(y, subset, lam));
                }
            }
        }
        unreachable!("some active set always certifies the optimum")
    }
}

/// Lexicographic k-subsets of 0..n.
struct Combinations {
    n: usize,
    indices: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations { n, indices: (0..k).collect(), started: false, done: k > n }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        let k = self.indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.indices[i] < self.n - k + i {
                self.indices[i] += 1;
                for j in (i + 1)..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return Some(&self.indices);
            }
        }
    }
}
