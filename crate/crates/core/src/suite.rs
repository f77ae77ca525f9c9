//! Instance generators and identity checkers with exact verdicts.
//!
//! Generators build matrices with a prescribed Drazin index (similarity
//! transform of an invertible-plus-shift block form) and hypothesis-satisfying
//! pairs for the additive and product laws. Checkers verify each algebraic
//! law by exact equality and report pass/fail with a witness locating the
//! first violated equation. A failed hypothesis is a third verdict, distinct
//! from a law failure, so a generator bug can never masquerade as a
//! counterexample.
//!
//! Everything is deterministic: generation depends only on the spec seed,
//! and suite runs with identical parameters produce identical reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::{
    self, drazin_data, DrazinData, EngineError, MwgDecomposition, Path, PierceBlocks,
};
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Deterministic generation parameters: everything is a pure function of
/// `(dim, index, entry_bound, seed)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub dim: usize,
    pub index: usize,
    pub entry_bound: u32,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.dim == 0 || self.dim > 8 {
            return Err(SuiteError::InvalidSpec(format!(
                "dim must be in 1..=8, got {}",
                self.dim
            )));
        }
        if self.index > self.dim {
            return Err(SuiteError::InvalidSpec(format!(
                "index {} exceeds dim {}",
                self.index, self.dim
            )));
        }
        if self.entry_bound == 0 {
            return Err(SuiteError::InvalidSpec("entry bound must be positive".into()));
        }
        Ok(())
    }
}

/// Which construction produced a product-law pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductFamily {
    /// Simultaneously diagonalizable: a = U·D₁·U*, b = U·D₂·U* with a
    /// signed-permutation unitary U.
    Diagonal,
    /// b is a real rational multiple of the identity.
    ScalarIdentity,
}

/// Kind of law hypothesis a pair is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Additive,
    Product,
}

/// Structured failure data: the first violated equation with both sides and
/// the matrices that were fed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub equation: String,
    pub lhs: Option<Matrix>,
    pub rhs: Option<Matrix>,
    pub inputs: Vec<(String, Matrix)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    HypothesisViolated(Witness),
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check_name: String,
    pub paper_ref: String,
    pub verdict: Verdict,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail(_))
    }

    pub fn hypothesis_violated(&self) -> bool {
        matches!(self.verdict, Verdict::HypothesisViolated(_))
    }

    fn tagged(mut self, tag: &str) -> Self {
        self.check_name.push_str(tag);
        self
    }
}

/// Accumulates equation checks; records the first violation only.
struct Check<'a> {
    name: &'static str,
    paper_ref: &'static str,
    inputs: Vec<(&'static str, &'a Matrix)>,
    failure: Option<(bool, Witness)>, // (is_hypothesis, witness)
}

impl<'a> Check<'a> {
    fn new(name: &'static str, paper_ref: &'static str) -> Self {
        Self { name, paper_ref, inputs: Vec::new(), failure: None }
    }

    fn input(mut self, label: &'static str, m: &'a Matrix) -> Self {
        self.inputs.push((label, m));
        self
    }

    fn ok(&self) -> bool {
        self.failure.is_none()
    }

    fn record(&mut self, hyp: bool, equation: String, lhs: Option<Matrix>, rhs: Option<Matrix>) {
        if self.failure.is_none() {
            self.failure = Some((hyp, Witness { equation, lhs, rhs, inputs: Vec::new() }));
        }
    }

    fn eq(&mut self, equation: &str, lhs: &Matrix, rhs: &Matrix) {
        if self.ok() && lhs != rhs {
            self.record(false, equation.to_string(), Some(lhs.clone()), Some(rhs.clone()));
        }
    }

    fn require(&mut self, condition: &str, holds: bool) {
        if self.ok() && !holds {
            self.record(false, condition.to_string(), None, None);
        }
    }

    fn hyp_eq(&mut self, equation: &str, lhs: &Matrix, rhs: &Matrix) {
        if self.ok() && lhs != rhs {
            self.record(true, equation.to_string(), Some(lhs.clone()), Some(rhs.clone()));
        }
    }

    fn fail_engine(&mut self, context: &str, e: &EngineError) {
        if self.ok() {
            self.record(false, format!("{context}: {e}"), None, None);
        }
    }

    fn finish(self) -> CheckResult {
        let verdict = match self.failure {
            None => Verdict::Pass,
            Some((hyp, mut w)) => {
                w.inputs = self
                    .inputs
                    .iter()
                    .map(|(label, m)| (label.to_string(), (*m).clone()))
                    .collect();
                if hyp {
                    Verdict::HypothesisViolated(w)
                } else {
                    Verdict::Fail(w)
                }
            }
        };
        CheckResult {
            check_name: self.name.to_string(),
            paper_ref: self.paper_ref.to_string(),
            verdict,
        }
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

fn rand_int(rng: &mut ChaCha8Rng, bound: u32) -> BigInt {
    BigInt::from(rng.gen_range(-(bound as i64)..=bound as i64))
}

fn rand_rational(rng: &mut ChaCha8Rng, bound: u32) -> BigRational {
    let numer = rand_int(rng, bound);
    // Mostly integers; occasional denominators keep the rational paths hot
    // without blowing up entry growth through the similarity transform.
    let denom = if rng.gen_ratio(1, 4) {
        BigInt::from(rng.gen_range(1..=bound.max(2) as i64))
    } else {
        BigInt::from(1)
    };
    BigRational::new(numer, denom)
}

fn rand_gaussian(rng: &mut ChaCha8Rng, bound: u32) -> GaussianRational {
    let re = rand_rational(rng, bound);
    let im = if rng.gen_bool(0.5) {
        rand_rational(rng, bound)
    } else {
        BigRational::new(BigInt::from(0), BigInt::from(1))
    };
    GaussianRational::new(re, im)
}

fn rand_gaussian_nonzero(rng: &mut ChaCha8Rng, bound: u32) -> GaussianRational {
    loop {
        let v = rand_gaussian(rng, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

fn rand_gaussian_int(rng: &mut ChaCha8Rng, bound: u32) -> GaussianRational {
    let re = BigRational::from_integer(rand_int(rng, bound));
    let im = if rng.gen_bool(0.5) {
        BigRational::from_integer(rand_int(rng, bound))
    } else {
        BigRational::from_integer(BigInt::from(0))
    };
    GaussianRational::new(re, im)
}

/// Random invertible matrix with Gaussian-integer entries; integer entries
/// keep the inverse's denominators bounded by one determinant.
fn rand_invertible_int(rng: &mut ChaCha8Rng, n: usize, bound: u32) -> Matrix {
    for _ in 0..10_000 {
        let m = Matrix::from_fn(n, n, |_, _| rand_gaussian_int(rng, bound));
        if m.rank() == n {
            return m;
        }
    }
    unreachable!("random matrices are invertible with overwhelming probability")
}

fn rand_invertible(rng: &mut ChaCha8Rng, n: usize, bound: u32) -> Matrix {
    for _ in 0..10_000 {
        let m = Matrix::from_fn(n, n, |_, _| rand_gaussian(rng, bound));
        if m.rank() == n {
            return m;
        }
    }
    unreachable!("random matrices are invertible with overwhelming probability")
}

/// Generalized signed-permutation unitary: one entry from {±1, ±i} per row
/// and column, so U* = U⁻¹ exactly.
fn rand_signed_permutation(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let units: Vec<GaussianRational> = (0..n)
        .map(|_| match rng.gen_range(0..4) {
            0 => GaussianRational::one(),
            1 => -GaussianRational::one(),
            2 => GaussianRational::i(),
            _ => -GaussianRational::i(),
        })
        .collect();
    Matrix::from_fn(n, n, |r, c| {
        if c == perm[r] {
            units[r].clone()
        } else {
            GaussianRational::zero()
        }
    })
}

/// Core construction: S·(C ⊕ N)·S⁻¹ with C random invertible and N a
/// strictly upper-triangular block whose full superdiagonal forces
/// nilpotency index exactly `index`.
fn random_with_index(rng: &mut ChaCha8Rng, dim: usize, index: usize, bound: u32) -> Matrix {
    let inv_size = dim - index;
    let c_block = if inv_size > 0 {
        Some(rand_invertible(rng, inv_size, bound))
    } else {
        None
    };
    let n_block = if index > 0 {
        let mut cells = vec![GaussianRational::zero(); index * index];
        for r in 0..index {
            for c in (r + 1)..index {
                cells[r * index + c] = if c == r + 1 {
                    rand_gaussian_nonzero(rng, bound)
                } else if rng.gen_bool(0.5) {
                    rand_gaussian(rng, bound)
                } else {
                    GaussianRational::zero()
                };
            }
        }
        Some(Matrix::new(index, index, cells))
    } else {
        None
    };
    let d = Matrix::from_fn(dim, dim, |r, c| {
        if r < inv_size && c < inv_size {
            c_block.as_ref().expect("present").at(r, c).clone()
        } else if r >= inv_size && c >= inv_size {
            n_block.as_ref().expect("present").at(r - inv_size, c - inv_size).clone()
        } else {
            GaussianRational::zero()
        }
    });
    let s = rand_invertible_int(rng, dim, bound);
    let s_inv = s.inverse().expect("invertible by construction");
    &(&s * &d) * &s_inv
}

/// Matrix with Drazin index exactly `spec.index`, deterministic in the seed.
pub fn gen_with_index(spec: &GenSpec) -> Result<Matrix, SuiteError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(random_with_index(&mut rng, spec.dim, spec.index, spec.entry_bound))
}

/// Pair on complementary coordinate blocks conjugated by a common
/// signed-permutation unitary, so ab = ba = 0 and a*b = 0 exactly.
pub fn gen_additive_pair(spec: &GenSpec) -> Result<(Matrix, Matrix), SuiteError> {
    spec.validate()?;
    if spec.dim < 2 {
        return Err(SuiteError::InvalidSpec("additive pairs need dim >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let d1 = rng.gen_range(1..spec.dim);
    let d2 = spec.dim - d1;
    let i1 = rng.gen_range(0..=d1.min(spec.index));
    let i2 = rng.gen_range(0..=d2.min(spec.index));
    let a_block = random_with_index(&mut rng, d1, i1, spec.entry_bound);
    let b_block = random_with_index(&mut rng, d2, i2, spec.entry_bound);
    let a0 = Matrix::from_fn(spec.dim, spec.dim, |r, c| {
        if r < d1 && c < d1 {
            a_block.at(r, c).clone()
        } else {
            GaussianRational::zero()
        }
    });
    let b0 = Matrix::from_fn(spec.dim, spec.dim, |r, c| {
        if r >= d1 && c >= d1 {
            b_block.at(r - d1, c - d1).clone()
        } else {
            GaussianRational::zero()
        }
    });
    let u = rand_signed_permutation(&mut rng, spec.dim);
    let u_star = u.conjugate_transpose();
    Ok((&(&u * &a0) * &u_star, &(&u * &b0) * &u_star))
}

/// Pair satisfying ab = ba and a*b = ba*, labeled with the family that
/// produced it.
pub fn gen_product_pair(spec: &GenSpec) -> Result<(Matrix, Matrix, ProductFamily), SuiteError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    if rng.gen_bool(0.5) {
        let diag = |rng: &mut ChaCha8Rng| {
            let cells: Vec<GaussianRational> = (0..spec.dim)
                .map(|_| {
                    if rng.gen_ratio(1, 4) {
                        GaussianRational::zero()
                    } else {
                        rand_gaussian_nonzero(rng, spec.entry_bound)
                    }
                })
                .collect();
            Matrix::from_fn(spec.dim, spec.dim, |r, c| {
                if r == c {
                    cells[r].clone()
                } else {
                    GaussianRational::zero()
                }
            })
        };
        let d1 = diag(&mut rng);
        let d2 = diag(&mut rng);
        let u = rand_signed_permutation(&mut rng, spec.dim);
        let u_star = u.conjugate_transpose();
        Ok((
            &(&u * &d1) * &u_star,
            &(&u * &d2) * &u_star,
            ProductFamily::Diagonal,
        ))
    } else {
        let index = rng.gen_range(0..=spec.index.min(spec.dim));
        let a = random_with_index(&mut rng, spec.dim, index, spec.entry_bound);
        let r: GaussianRational = rand_rational(&mut rng, spec.entry_bound).into();
        let b = Matrix::identity(spec.dim).scale(&r);
        Ok((a, b, ProductFamily::ScalarIdentity))
    }
}

// ---------------------------------------------------------------------------
// Definitional gates
// ---------------------------------------------------------------------------

/// The four Penrose equations for a candidate pseudoinverse.
pub fn check_penrose(a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("penrose-gate", "§1 (Moore–Penrose)").input("a", a).input("x", x);
    if a.rows() != x.cols() || a.cols() != x.rows() {
        c.require("x has the transposed shape of a", false);
        return c.finish();
    }
    let ax = a * x;
    let xa = x * a;
    c.eq("a·x·a = a", &(&ax * a), a);
    c.eq("x·a·x = x", &(&xa * x), x);
    c.eq("(a·x)* = a·x", &ax.conjugate_transpose(), &ax);
    c.eq("(x·a)* = x·a", &xa.conjugate_transpose(), &xa);
    c.finish()
}

fn square_pair_guard(c: &mut Check, a: &Matrix, x: &Matrix) -> bool {
    if !a.is_square() || a.shape() != x.shape() {
        c.require("a and x are square with equal shape", false);
        return false;
    }
    true
}

/// The three Drazin equations at k = mat_index(a).
pub fn check_drazin_gate(a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("drazin-gate", "§1 (Drazin)").input("a", a).input("x", x);
    if !square_pair_guard(&mut c, a, x) {
        return c.finish();
    }
    let k = engine::mat_index(a).expect("square") as u32;
    c.eq("a·x² = x", &(a * &x.pow(2).expect("square")), x);
    c.eq("a·x = x·a", &(a * x), &(x * a));
    c.eq("x·a^{k+1} = a^k", &(x * &a.pow(k + 1).expect("square")), &a.pow(k).expect("square"));
    c.finish()
}

/// The three group-inverse equations, including a = a²x.
pub fn check_group_gate(a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("group-gate", "§1 (group inverse)").input("a", a).input("x", x);
    if !square_pair_guard(&mut c, a, x) {
        return c.finish();
    }
    c.eq("a·x² = x", &(a * &x.pow(2).expect("square")), x);
    c.eq("a·x = x·a", &(a * x), &(x * a));
    c.eq("a = a²·x", &(&a.pow(2).expect("square") * x), a);
    c.finish()
}

/// The three core-EP equations plus the Hermitian-idempotent projector.
pub fn check_core_ep_gate(a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("coreep-gate", "§1 (core-EP)").input("a", a).input("x", x);
    if !square_pair_guard(&mut c, a, x) {
        return c.finish();
    }
    let k = engine::mat_index(a).expect("square") as u32;
    let ax = a * x;
    c.eq("a·x² = x", &(a * &x.pow(2).expect("square")), x);
    c.eq("(a·x)* = a·x", &ax.conjugate_transpose(), &ax);
    c.eq("x·a^{k+1} = a^k", &(x * &a.pow(k + 1).expect("square")), &a.pow(k).expect("square"));
    c.eq("(a·x)² = a·x", &(&ax * &ax), &ax);
    c.finish()
}

/// The weak-group system: ax² = x, (a*·a²·x)* = a*·a²·x, x·a^{k+1} = a^k.
pub fn check_weak_group_gate(a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("weak-group-gate", "§1 (weak group)").input("a", a).input("x", x);
    if !square_pair_guard(&mut c, a, x) {
        return c.finish();
    }
    let k = engine::mat_index(a).expect("square") as u32;
    let sym = &(&a.conjugate_transpose() * &a.pow(2).expect("square")) * x;
    c.eq("a·x² = x", &(a * &x.pow(2).expect("square")), x);
    c.eq("(a*·a²·x)* = a*·a²·x", &sym.conjugate_transpose(), &sym);
    c.eq("x·a^{k+1} = a^k", &(x * &a.pow(k + 1).expect("square")), &a.pow(k).expect("square"));
    c.finish()
}

/// The GG defining system: A·X = A^⊕·A² and range(X) ⊆ range(A^k).
pub fn check_gg_gate(a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("gg-gate", "§4 (GG inverse)").input("a", a).input("x", x);
    if !square_pair_guard(&mut c, a, x) {
        return c.finish();
    }
    match drazin_data(a) {
        Ok(dd) => {
            c.eq(
                "a·x = (a^⊕)²·a²",
                &(a * x),
                &(&dd.core_ep.pow(2).expect("square") * &a.pow(2).expect("square")),
            );
            let a_k = a.pow(dd.index as u32).expect("square");
            c.require(
                "range(x) ⊆ range(a^k)",
                x.range_contained(&a_k).expect("same row count"),
            );
        }
        Err(e) => c.fail_engine("drazin data", &e),
    }
    c.finish()
}

// ---------------------------------------------------------------------------
// Theorem checkers
// ---------------------------------------------------------------------------

/// The defining system of the m-weak group inverse at k = mat_index(a).
pub fn check_def11(a: &Matrix, x: &Matrix, m: u32) -> CheckResult {
    let mut c = Check::new("def11", "Def 1.1").input("a", a).input("x", x);
    if !square_pair_guard(&mut c, a, x) {
        return c.finish();
    }
    let k = engine::mat_index(a).expect("square") as u32;
    def11_equations(&mut c, a, x, m, k);
    c.finish()
}

fn def11_equations(c: &mut Check, a: &Matrix, x: &Matrix, m: u32, k: u32) {
    let a_k_star = a.pow(k).expect("square").conjugate_transpose();
    c.eq("a·x² = x", &(a * &x.pow(2).expect("square")), x);
    c.eq(
        "x·a^{k+1} = a^k",
        &(x * &a.pow(k + 1).expect("square")),
        &a.pow(k).expect("square"),
    );
    c.eq(
        "(a^k)*·a^{m+1}·x = (a^k)*·a^m",
        &(&(&a_k_star * &a.pow(m + 1).expect("square")) * x),
        &(&a_k_star * &a.pow(m).expect("square")),
    );
}

/// All conditions of the m-weak group decomposition.
pub fn check_decomposition(a: &Matrix, d: &MwgDecomposition) -> CheckResult {
    let mut c = Check::new("decomposition", "Thm 2.1(2)")
        .input("a", a)
        .input("x", &d.x)
        .input("y", &d.y);
    if !a.is_square() || a.shape() != d.x.shape() || a.shape() != d.y.shape() {
        c.require("a, x, y are square with equal shape", false);
        return c.finish();
    }
    let zero = Matrix::zeros(a.rows(), a.cols());
    c.eq("a = x + y", &(&d.x + &d.y), a);
    c.eq("y·x = 0", &(&d.y * &d.x), &zero);
    c.eq(
        "x*·a^{m-1}·y = 0",
        &(&(&d.x.conjugate_transpose() * &a.pow(d.m - 1).expect("square")) * &d.y),
        &zero,
    );
    if c.ok() {
        match engine::mat_index(&d.x) {
            Ok(ix) => c.require("x is group invertible (index <= 1)", ix <= 1),
            Err(e) => c.fail_engine("index of x", &e),
        }
    }
    c.require("y is nilpotent", d.y.is_nilpotent().expect("square"));
    c.finish()
}

/// Relaxed system, recovery, and range characterizations for the engine's
/// m-weak group inverse.
pub fn check_relaxed_systems(a: &Matrix, m: u32) -> CheckResult {
    match drazin_data(a) {
        Ok(dd) => {
            let x = engine::m_weak_group_with(&dd, a, m);
            check_relaxed_with(&dd, a, m, &x)
        }
        Err(e) => {
            let mut c = Check::new("relaxed", RELAXED_REF).input("a", a);
            c.fail_engine("drazin data", &e);
            c.finish()
        }
    }
}

const RELAXED_REF: &str = "Thm 3.1 / Cor 3.2 / Thm 3.3 / Cor 3.4 / Cor 4.2 / Cor 4.3";

fn check_relaxed_with(dd: &DrazinData, a: &Matrix, m: u32, x: &Matrix) -> CheckResult {
    let mut c = Check::new("relaxed", RELAXED_REF).input("a", a).input("x", x);
    let k = dd.index as u32;
    let a_k = a.pow(k).expect("square");
    let a_k1 = a.pow(k + 1).expect("square");

    // Thm 3.1 relaxed system satisfied by x itself, then recovery a·a^D·x = x.
    c.eq("a·x² = x", &(a * &x.pow(2).expect("square")), x);
    let sym = &(&a.pow(m).expect("square").conjugate_transpose() * &a.pow(m + 1).expect("square")) * x;
    c.eq("[(a^m)*·a^{m+1}·x]* = (a^m)*·a^{m+1}·x", &sym.conjugate_transpose(), &sym);
    c.eq("a^n = a·x·a^n", &(&(a * x) * &a_k1), &a_k1);
    c.eq("a·a^D·x = x (recovery)", &(&(a * &dd.drazin) * x), x);

    // Range characterizations.
    c.require("range(x) = range(a^D)", x.range_equal(&dd.drazin).expect("same rows"));
    c.require("range(x) = range(a^k)", x.range_equal(&a_k).expect("same rows"));

    // Core-EP projector forms.
    c.eq(
        "a·x = (a^⊕)^m·a^m",
        &(a * x),
        &(&dd.core_ep.pow(m).expect("square") * &a.pow(m).expect("square")),
    );
    c.eq("x·a·x = x", &(&(x * a) * x), x);
    let a_k_star = a_k.conjugate_transpose();
    c.eq(
        "(a^k)*·a^{m+1}·x = (a^k)*·a^m",
        &(&(&a_k_star * &a.pow(m + 1).expect("square")) * x),
        &(&a_k_star * &a.pow(m).expect("square")),
    );
    let ad_star = dd.drazin.conjugate_transpose();
    c.eq(
        "(a^D)*·a^{m+1}·x = (a^D)*·a^m",
        &(&(&ad_star * &a.pow(m + 1).expect("square")) * x),
        &(&ad_star * &a.pow(m).expect("square")),
    );
    c.finish()
}

/// Polar-like idempotent conditions and the recovery a^D·(1−p) = x.
pub fn check_polar(a: &Matrix, m: u32) -> CheckResult {
    match drazin_data(a) {
        Ok(dd) => {
            let x = engine::m_weak_group_with(&dd, a, m);
            check_polar_with(&dd, a, m, &x)
        }
        Err(e) => {
            let mut c = Check::new("polar", POLAR_REF).input("a", a);
            c.fail_engine("drazin data", &e);
            c.finish()
        }
    }
}

const POLAR_REF: &str = "Thm 3.5 / Cor 3.6 / Cor 3.7";

fn check_polar_with(dd: &DrazinData, a: &Matrix, m: u32, x: &Matrix) -> CheckResult {
    let mut c = Check::new("polar", POLAR_REF).input("a", a).input("x", x);
    let identity = Matrix::identity(a.rows());
    let q = a * x;
    let p = &identity - &q;
    let zero = Matrix::zeros(a.rows(), a.cols());
    c.require("p² = p", p.is_idempotent().expect("square"));
    c.require("a + p is invertible", (a + &p).is_invertible().expect("square"));
    c.eq(
        "(a^D)*·a^m·p = 0",
        &(&(&dd.drazin.conjugate_transpose() * &a.pow(m).expect("square")) * &p),
        &zero,
    );
    c.require("range(a^D) = range(1 - p)", dd.drazin.range_equal(&q).expect("same rows"));
    c.eq("a^D·(1 - p) = x", &(&dd.drazin * &q), x);
    c.finish()
}

/// Additive or product law under re-verified hypotheses; violated hypotheses
/// yield the third verdict rather than a failure.
pub fn check_laws(kind: PairKind, a: &Matrix, b: &Matrix, m: u32) -> CheckResult {
    let combined = match kind {
        PairKind::Additive => a.checked_add(b),
        PairKind::Product => a.checked_mul(b),
    };
    let combined = match combined {
        Ok(c) => c,
        Err(e) => {
            let mut c = Check::new(law_name(kind), law_ref(kind)).input("a", a).input("b", b);
            c.fail_engine("combining pair", &e.into());
            return c.finish();
        }
    };
    check_laws_with(kind, a, b, &combined, None, None, None, m)
}

fn law_name(kind: PairKind) -> &'static str {
    match kind {
        PairKind::Additive => "additive-law",
        PairKind::Product => "product-law",
    }
}

fn law_ref(kind: PairKind) -> &'static str {
    match kind {
        PairKind::Additive => "Thm 2.9",
        PairKind::Product => "Thm 2.11",
    }
}

#[allow(clippy::too_many_arguments)]
fn check_laws_with(
    kind: PairKind,
    a: &Matrix,
    b: &Matrix,
    combined: &Matrix,
    dd_a: Option<&DrazinData>,
    dd_b: Option<&DrazinData>,
    dd_combined: Option<&DrazinData>,
    m: u32,
) -> CheckResult {
    let mut c = Check::new(law_name(kind), law_ref(kind)).input("a", a).input("b", b);
    let zero = Matrix::zeros(a.rows(), b.cols());
    match kind {
        PairKind::Additive => {
            c.hyp_eq("a·b = 0", &(a * b), &zero);
            c.hyp_eq("b·a = 0", &(b * a), &zero);
            c.hyp_eq("a*·b = 0", &(&a.conjugate_transpose() * b), &zero);
        }
        PairKind::Product => {
            c.hyp_eq("a·b = b·a", &(a * b), &(b * a));
            c.hyp_eq(
                "a*·b = b·a*",
                &(&a.conjugate_transpose() * b),
                &(b * &a.conjugate_transpose()),
            );
        }
    }
    if !c.ok() {
        return c.finish();
    }
    let mwg = |precomputed: Option<&DrazinData>, mat: &Matrix| -> Result<Matrix, EngineError> {
        match precomputed {
            Some(dd) => Ok(engine::m_weak_group_with(dd, mat, m)),
            None => engine::m_weak_group(mat, m),
        }
    };
    let (xa, xb, xc) = match (mwg(dd_a, a), mwg(dd_b, b), mwg(dd_combined, combined)) {
        (Ok(xa), Ok(xb), Ok(xc)) => (xa, xb, xc),
        (ra, rb, rc) => {
            for r in [ra, rb, rc] {
                if let Err(e) = r {
                    c.fail_engine("m-weak group inverse", &e);
                    break;
                }
            }
            return c.finish();
        }
    };
    match kind {
        PairKind::Additive => {
            c.eq("(a+b)^{Wm} = a^{Wm} + b^{Wm}", &xc, &(&xa + &xb));
        }
        PairKind::Product => {
            c.eq("(a·b)^{Wm} = a^{Wm}·b^{Wm}", &xc, &(&xa * &xb));
            c.eq("(a·b)^{Wm} = b^{Wm}·a^{Wm}", &xc, &(&xb * &xa));
        }
    }
    c.finish()
}

/// Block form, recursion oracle, core-EP coincidence, and the commutation
/// criterion; when the element commutes with its inverse the n-th power law
/// is exercised as well.
pub fn check_blocks_and_commutation(a: &Matrix, m: u32, n: u32) -> CheckResult {
    assert!(n > m, "the power law requires n > m");
    match drazin_data(a) {
        Ok(dd) => {
            let x = engine::m_weak_group_with(&dd, a, m);
            let blocks = engine::pierce_blocks_with(&dd, a, m);
            let t_sharp = engine::corner_inverse(&blocks);
            check_blocks_with(&dd, a, m, n, &x, &blocks, &t_sharp)
        }
        Err(e) => {
            let mut c = Check::new("blocks", BLOCKS_REF).input("a", a);
            c.fail_engine("drazin data", &e);
            c.finish()
        }
    }
}

const BLOCKS_REF: &str = "Thm 4.6 / Cor 4.7 / Cor 4.8";

fn check_blocks_with(
    dd: &DrazinData,
    a: &Matrix,
    m: u32,
    n: u32,
    x: &Matrix,
    blocks: &PierceBlocks,
    t_sharp: &Result<Matrix, EngineError>,
) -> CheckResult {
    let mut c = Check::new("blocks", BLOCKS_REF).input("a", a).input("x", x);
    let identity = Matrix::identity(a.rows());
    let q = &identity - &blocks.p;
    let zero = Matrix::zeros(a.rows(), a.cols());

    c.require("p² = p", blocks.p.is_idempotent().expect("square"));
    c.require("p* = p", blocks.p.is_hermitian().expect("square"));
    c.eq("(1-p)·a·p = 0", &(&(&q * a) * &blocks.p), &zero);
    c.eq("a = t + s + n", &(&(&blocks.t + &blocks.s) + &blocks.block_n), a);
    // Independent oracle for the recursion: c_m is the off-corner of a^m.
    c.eq(
        "p·a^m·(1-p) = c_m",
        &(&(&blocks.p * &a.pow(m).expect("square")) * &q),
        &blocks.c_seq[m as usize - 1],
    );

    let t_sharp = match t_sharp {
        Ok(t) => t,
        Err(e) => {
            c.fail_engine("corner inverse", e);
            return c.finish();
        }
    };
    c.eq(
        "t# + (t#)^{m+1}·c_m = x",
        &engine::mwg_from_corner(blocks, m, t_sharp),
        x,
    );

    // Core-EP coincidence exactly when c_m vanishes.
    let c_m = &blocks.c_seq[m as usize - 1];
    c.require(
        "x = a^⊕ ⇔ c_m = 0",
        (*x == dd.core_ep) == c_m.is_zero(),
    );

    // Commutation criterion in corner-inverse form.
    let commutes = (a * x) == (x * a);
    let lhs = &t_sharp.pow(m).expect("square") * c_m;
    let rhs = &(t_sharp * &blocks.s) + &(&t_sharp.pow(m + 1).expect("square") * &(c_m * &blocks.block_n));
    c.require(
        "a·x = x·a ⇔ (t#)^m·c_m = t#·s + (t#)^{m+1}·c_m·n",
        commutes == (lhs == rhs),
    );

    if commutes && c.ok() {
        match engine::weak_group(&a.pow(n).expect("square")) {
            Ok(wg_n) => c.eq("x^n = (a^n)^W", &x.pow(n).expect("square"), &wg_n),
            Err(e) => c.fail_engine("weak group of a^n", &e),
        }
    }
    c.finish()
}

// ---------------------------------------------------------------------------
// Engine-invariant checks used by the suite runner
// ---------------------------------------------------------------------------

fn check_path_agreement(a: &Matrix, m: u32, x_core: &Matrix, via_blocks: &Result<Matrix, EngineError>, wg: &Matrix) -> CheckResult {
    let mut c = Check::new("path-agreement", "Thm 4.1 / Lem 2.7 / Cor 2.3(3) / Thm 4.6")
        .input("a", a)
        .input("x", x_core);
    // At m = 1 the power-reduce route is a⁰·(a¹)^W, i.e. the weak group
    // inverse already at hand.
    if m == 1 {
        c.eq("power-reduce route = core-ep route", wg, x_core);
    } else {
        match engine::m_weak_group_via(a, m, Path::PowerReduce) {
            Ok(pr) => c.eq("power-reduce route = core-ep route", &pr, x_core),
            Err(e) => c.fail_engine("power-reduce route", &e),
        }
    }
    if c.ok() {
        let wp = &wg.pow(m).expect("square") * &a.pow(m - 1).expect("square");
        c.eq("weak-power route = core-ep route", &wp, x_core);
    }
    if c.ok() {
        match via_blocks {
            Ok(blk) => c.eq("blocks route = core-ep route", blk, x_core),
            Err(e) => c.fail_engine("blocks route", e),
        }
    }
    c.finish()
}

fn check_mwg_identities(dd: &DrazinData, a: &Matrix, m: u32, x: &Matrix) -> Vec<CheckResult> {
    let ax = a * x;
    let mut out = Vec::new();

    let mut c = Check::new("mwg-outer", "Cor 2.2(1)").input("a", a).input("x", x);
    c.eq("x·a·x = x", &(&(x * a) * x), x);
    out.push(c.finish());

    let mut c = Check::new("mwg-sandwich", "Cor 2.2(2)").input("a", a).input("x", x);
    c.eq("a·x = x·a²·x", &ax, &(&(x * &a.pow(2).expect("square")) * x));
    out.push(c.finish());

    let mut c = Check::new("mwg-power-projection", "Cor 2.2(3)").input("a", a).input("x", x);
    c.eq(
        "a·x = a^m·x^m",
        &ax,
        &(&a.pow(m).expect("square") * &x.pow(m).expect("square")),
    );
    out.push(c.finish());

    let mut c = Check::new("coreep-criterion", "Cor 4.4").input("a", a).input("x", x);
    let b1 = *x == dd.core_ep;
    let b2 = (a * &dd.core_ep)
        == (&dd.core_ep.pow(m).expect("square") * &a.pow(m).expect("square"));
    let b3 = ax == (a * &dd.core_ep);
    c.require(
        "x = a^⊕ ⇔ a·a^⊕ = (a^⊕)^m·a^m ⇔ a·x = a·a^⊕",
        b1 == b2 && b2 == b3,
    );
    out.push(c.finish());

    out
}

fn check_double_triple(a: &Matrix, m: u32, x: &Matrix) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let a2x = &a.pow(2).expect("square") * x;

    // One Drazin pass over x serves the double inverse and the weak group
    // of x; the triple inverse needs its own pass over x^{Wm}.
    let dd_x = drazin_data(x);

    let mut c = Check::new("double-inverse", "Thm 2.3").input("a", a).input("x", x);
    let x2 = match &dd_x {
        Ok(dd_x) => {
            let x2 = engine::m_weak_group_with(dd_x, x, m);
            c.eq("x^{Wm} = a²·x", &x2, &a2x);
            Some(x2)
        }
        Err(e) => {
            c.fail_engine("m-weak group of x", e);
            None
        }
    };
    out.push(c.finish());

    let mut c = Check::new("triple-inverse", "Cor 2.4").input("a", a).input("x", x);
    match &x2 {
        Some(x2) => match engine::m_weak_group(x2, m) {
            Ok(x3) => c.eq("(x^{Wm})^{Wm} = x", &x3, x),
            Err(e) => c.fail_engine("m-weak group of x^{Wm}", &e),
        },
        None => c.require("double inverse available", false),
    }
    out.push(c.finish());

    let mut c = Check::new("weak-group-of-mwg", "Cor 2.5").input("a", a).input("x", x);
    match &dd_x {
        Ok(dd_x) => c.eq("x^W = a²·x", &engine::weak_group_with(dd_x, x), &a2x),
        Err(e) => c.fail_engine("weak group of x", e),
    }
    out.push(c.finish());

    out
}

fn check_gg_identities(dd: &DrazinData, a: &Matrix, wg: &Matrix) -> CheckResult {
    let mut c = Check::new("gg-identities", "Cor 4.5").input("a", a);
    let gg = &dd.core_ep.pow(3).expect("square") * &a.pow(2).expect("square");
    c.eq("(a^⊕)³·a² = (a^W)²·a", &gg, &(&wg.pow(2).expect("square") * a));
    c.eq("(a^⊕)³·a² = a^{W2}", &gg, &engine::m_weak_group_with(dd, a, 2));
    c.eq(
        "a·gg = (a^⊕)²·a²",
        &(a * &gg),
        &(&dd.core_ep.pow(2).expect("square") * &a.pow(2).expect("square")),
    );
    c.require(
        "range(gg) ⊆ range(a^k)",
        gg.range_contained(&a.pow(dd.index as u32).expect("square")).expect("same rows"),
    );
    c.finish()
}

fn check_m1_reduction(dd: &DrazinData, a: &Matrix, wg: &Matrix) -> CheckResult {
    let mut c = Check::new("m1-reduction", "Lem 2.7 (m = 1)").input("a", a);
    c.eq("a^{W1} = a^W", &engine::m_weak_group_with(dd, a, 1), wg);
    c.finish()
}

fn check_reduction_coherence(dd: &DrazinData, a: &Matrix, x: &Matrix) -> CheckResult {
    let mut c = Check::new("reduction-coherence", "§1 degenerate cases").input("a", a).input("x", x);
    c.eq("x = a^D (= a^# at index ≤ 1)", x, &dd.drazin);
    c.eq("x = a^⊕·a^⊕·a (weak group)", x, &engine::weak_group_with(dd, a));
    if dd.index == 0 {
        match a.inverse() {
            Ok(inv) => c.eq("x = a⁻¹", x, &inv),
            Err(e) => c.fail_engine("inverse", &e.into()),
        }
    }
    c.finish()
}

fn check_normal_core_ep(dd: &DrazinData, a: &Matrix, x: &Matrix, c_m: &Matrix) -> CheckResult {
    let mut c = Check::new("normal-coreep", "Cor 4.7 (normal case)").input("a", a).input("x", x);
    c.eq("x = a^⊕", x, &dd.core_ep);
    c.require("c_m = 0", c_m.is_zero());
    c.finish()
}

fn check_decomposition_roundtrip(
    dd: &DrazinData,
    a: &Matrix,
    m: u32,
    x: &Matrix,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let x_part = &a.pow(2).expect("square") * x;
    let y_part = a - &x_part;
    let d = MwgDecomposition { m, x: x_part.clone(), y: y_part.clone() };
    out.push(check_decomposition(a, &d));

    let mut c = Check::new("drazin-from-parts", "Thm 2.1 (a^D sum formula)")
        .input("a", a)
        .input("x", &x_part)
        .input("y", &y_part);
    match nilpotency_index(&y_part) {
        Some(k) => match engine::drazin_from_parts(&x_part, &y_part, k) {
            Ok(dfp) => c.eq("a1# + Σ (a1#)^{j+1}·a2^j = a^D", &dfp, &dd.drazin),
            Err(e) => c.fail_engine("sum formula", &e),
        },
        None => c.require("y is nilpotent", false),
    }
    out.push(c.finish());
    out
}

fn nilpotency_index(y: &Matrix) -> Option<u32> {
    let n = y.rows() as u32;
    let mut power = Matrix::identity(y.rows());
    for j in 1..=n {
        power = &power * y;
        if power.is_zero() {
            return Some(j);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

/// Generation plan for one trial, derived deterministically from the base
/// spec and the trial number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialPlan {
    pub matrix: GenSpec,
    /// Absent when the dimension cap does not admit a 2-block split.
    pub additive: Option<GenSpec>,
    pub product: GenSpec,
}

/// Derives the per-trial generation specs used by [`run_suite`]: dimension
/// and index are drawn below the caps in `spec`, and each generator gets its
/// own sub-seed, all from `spec.seed + trial`.
pub fn trial_plan(spec: &GenSpec, trial: u32) -> TrialPlan {
    let trial_seed = spec.seed.wrapping_add(trial as u64);
    let mut seeder = ChaCha8Rng::seed_from_u64(trial_seed);
    let dim = seeder.gen_range(1..=spec.dim);
    let index = seeder.gen_range(0..=dim.min(spec.index));
    let mat_seed: u64 = seeder.gen();
    let pair_dim = if spec.dim >= 2 { seeder.gen_range(2..=spec.dim) } else { 0 };
    let add_seed: u64 = seeder.gen();
    let prod_dim = seeder.gen_range(1..=spec.dim);
    let prod_seed: u64 = seeder.gen();
    TrialPlan {
        matrix: GenSpec { dim, index, entry_bound: spec.entry_bound, seed: mat_seed },
        additive: (pair_dim >= 2).then(|| GenSpec {
            dim: pair_dim,
            index: spec.index.min(pair_dim),
            entry_bound: spec.entry_bound,
            seed: add_seed,
        }),
        product: GenSpec {
            dim: prod_dim,
            index: spec.index.min(prod_dim),
            entry_bound: spec.entry_bound,
            seed: prod_seed,
        },
    }
}

/// Runs the full battery over `trials` generated instances.
///
/// `spec.dim` and `spec.index` act as per-trial caps: each trial draws its
/// own dimension and index below them, a fresh matrix, an additive pair and
/// a product pair, all seeded from `spec.seed + trial`. Identical inputs
/// produce an identical result list.
pub fn run_suite(spec: &GenSpec, trials: u32, m_list: &[u32]) -> Result<Vec<CheckResult>, SuiteError> {
    spec.validate()?;
    if m_list.is_empty() || m_list.iter().any(|&m| m == 0) {
        return Err(SuiteError::InvalidSpec("m list must be nonempty positive integers".into()));
    }
    let mut results = Vec::new();
    for trial in 0..trials {
        let plan = trial_plan(spec, trial);
        let tag_t = format!("[t{trial:03}]");

        let a = gen_with_index(&plan.matrix)?;
        let dd = drazin_data(&a)?;
        {
            let mut c = Check::new("gen-index", "generator contract").input("a", &a);
            c.require("mat_index(a) equals the requested index", dd.index == plan.matrix.index);
            results.push(c.finish().tagged(&tag_t));
        }
        matrix_battery(&a, &dd, m_list, &tag_t, &mut results);

        if let Some(add_spec) = &plan.additive {
            let (pa, pb) = gen_additive_pair(add_spec)?;
            let _ = pair_battery(PairKind::Additive, &pa, &pb, m_list, &tag_t, &mut results)?;
        }

        let (qa, qb, family) = gen_product_pair(&plan.product)?;
        let trial_tag = |m: u32, label: &str| format!("[t{trial:03},m={m},{label}]");
        let (dd_qa, dd_qb) = pair_battery(PairKind::Product, &qa, &qb, m_list, &tag_t, &mut results)?;
        if family == ProductFamily::Diagonal {
            let m_max = *m_list.iter().max().expect("nonempty");
            for (label, mat, dd) in [("a", &qa, &dd_qa), ("b", &qb, &dd_qb)] {
                let blocks = engine::pierce_blocks_with(dd, mat, m_max);
                for &m in m_list {
                    let x = engine::m_weak_group_with(dd, mat, m);
                    let c_m = &blocks.c_seq[m as usize - 1];
                    results.push(check_normal_core_ep(dd, mat, &x, c_m).tagged(&trial_tag(m, label)));
                }
            }
        }
    }
    Ok(results)
}

fn matrix_battery(
    a: &Matrix,
    dd: &DrazinData,
    m_list: &[u32],
    tag_t: &str,
    results: &mut Vec<CheckResult>,
) {
    let mp = engine::moore_penrose(a);
    let wg = engine::weak_group_with(dd, a);
    let m_max = *m_list.iter().max().expect("nonempty");
    // The Pierce corners and the corner inverse do not depend on m; only the
    // c-sequence does, so one pass at the largest m serves every check.
    let blocks = engine::pierce_blocks_with(dd, a, m_max);
    let t_sharp = engine::corner_inverse(&blocks);

    results.push(check_penrose(a, &mp).tagged(tag_t));
    results.push(check_drazin_gate(a, &dd.drazin).tagged(tag_t));
    results.push(check_core_ep_gate(a, &dd.core_ep).tagged(tag_t));
    results.push(check_weak_group_gate(a, &wg).tagged(tag_t));
    results.push(check_gg_identities(dd, a, &wg).tagged(tag_t));
    results.push(check_m1_reduction(dd, a, &wg).tagged(tag_t));

    for &m in m_list {
        let tag = format!("{},m={m}]", &tag_t[..tag_t.len() - 1]);
        let x = engine::m_weak_group_with(dd, a, m);
        let via_blocks = t_sharp
            .as_ref()
            .map(|ts| engine::mwg_from_corner(&blocks, m, ts))
            .map_err(Clone::clone);

        results.push(check_path_agreement(a, m, &x, &via_blocks, &wg).tagged(&tag));
        {
            let mut c = Check::new("def11", "Def 1.1").input("a", a).input("x", &x);
            def11_equations(&mut c, a, &x, m, dd.index as u32);
            results.push(c.finish().tagged(&tag));
        }
        for r in check_decomposition_roundtrip(dd, a, m, &x) {
            results.push(r.tagged(&tag));
        }
        for r in check_mwg_identities(dd, a, m, &x) {
            results.push(r.tagged(&tag));
        }
        for r in check_double_triple(a, m, &x) {
            results.push(r.tagged(&tag));
        }
        results.push(check_relaxed_with(dd, a, m, &x).tagged(&tag));
        results.push(check_polar_with(dd, a, m, &x).tagged(&tag));
        results.push(check_blocks_with(dd, a, m, m + 1, &x, &blocks, &t_sharp).tagged(&tag));
        if dd.index <= 1 {
            results.push(check_reduction_coherence(dd, a, &x).tagged(&tag));
        }
    }
}

fn pair_battery(
    kind: PairKind,
    a: &Matrix,
    b: &Matrix,
    m_list: &[u32],
    tag_t: &str,
    results: &mut Vec<CheckResult>,
) -> Result<(DrazinData, DrazinData), SuiteError> {
    let combined = match kind {
        PairKind::Additive => a + b,
        PairKind::Product => a * b,
    };
    let dd_a = drazin_data(a)?;
    let dd_b = drazin_data(b)?;
    let dd_c = drazin_data(&combined)?;
    for &m in m_list {
        let tag = format!("{},m={m}]", &tag_t[..tag_t.len() - 1]);
        results.push(
            check_laws_with(kind, a, b, &combined, Some(&dd_a), Some(&dd_b), Some(&dd_c), m)
                .tagged(&tag),
        );
    }
    Ok((dd_a, dd_b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine;
    use crate::matrix::Matrix;
    use crate::scalar::GaussianRational as G;

    fn spec(dim: usize, index: usize, seed: u64) -> GenSpec {
        GenSpec { dim, index, entry_bound: 3, seed }
    }

    #[test]
    fn gen_with_index_hits_requested_index() {
        let a = gen_with_index(&spec(3, 0, 7)).unwrap();
        assert_eq!(engine::mat_index(&a).unwrap(), 0);
        assert!(a.is_invertible().unwrap());

        let b = gen_with_index(&spec(3, 3, 7)).unwrap();
        assert_eq!(engine::mat_index(&b).unwrap(), 3);
        assert!(b.is_nilpotent().unwrap());

        for index in 0..=4 {
            let m = gen_with_index(&spec(4, index, 100 + index as u64)).unwrap();
            assert_eq!(engine::mat_index(&m).unwrap(), index);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let s = spec(4, 2, 42);
        assert_eq!(gen_with_index(&s).unwrap(), gen_with_index(&s).unwrap());
        assert_eq!(gen_additive_pair(&s).unwrap(), gen_additive_pair(&s).unwrap());
        assert_eq!(gen_product_pair(&s).unwrap(), gen_product_pair(&s).unwrap());
        // Different seeds give different matrices.
        assert_ne!(
            gen_with_index(&spec(4, 2, 1)).unwrap(),
            gen_with_index(&spec(4, 2, 2)).unwrap()
        );
    }

    #[test]
    fn additive_pair_satisfies_hypotheses() {
        for seed in 0..8 {
            let (a, b) = gen_additive_pair(&spec(4, 2, seed)).unwrap();
            let zero = Matrix::zeros(4, 4);
            assert_eq!(&a * &b, zero);
            assert_eq!(&b * &a, zero);
            assert_eq!(&a.conjugate_transpose() * &b, zero);
        }
    }

    #[test]
    fn product_pair_satisfies_hypotheses() {
        let mut seen = (false, false);
        for seed in 0..12 {
            let (a, b, family) = gen_product_pair(&spec(4, 2, seed)).unwrap();
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(
                &a.conjugate_transpose() * &b,
                &b * &a.conjugate_transpose()
            );
            match family {
                ProductFamily::Diagonal => seen.0 = true,
                ProductFamily::ScalarIdentity => seen.1 = true,
            }
        }
        assert!(seen.0 && seen.1, "both generator families should appear");
    }

    #[test]
    fn def11_passes_on_engine_output_and_catches_zero() {
        let a = gen_with_index(&spec(3, 2, 11)).unwrap();
        let x = engine::m_weak_group(&a, 2).unwrap();
        assert!(check_def11(&a, &x, 2).passed());

        let inv = gen_with_index(&spec(3, 0, 11)).unwrap();
        let zero = Matrix::zeros(3, 3);
        let r = check_def11(&inv, &zero, 1);
        match &r.verdict {
            Verdict::Fail(w) => assert!(w.equation.contains("x·a^{k+1} = a^k")),
            other => panic!("expected failure, got {other:?}"),
        }

        let n = gen_with_index(&spec(3, 3, 11)).unwrap();
        assert!(check_def11(&n, &zero, 2).passed());
    }

    #[test]
    fn decomposition_checker_verdicts() {
        let a = gen_with_index(&spec(4, 2, 5)).unwrap();
        let d = engine::mwg_decompose(&a, 1).unwrap();
        assert!(check_decomposition(&a, &d).passed());

        // x = a of index 2 is not group invertible.
        let bad = MwgDecomposition { m: 1, x: a.clone(), y: Matrix::zeros(4, 4) };
        let r = check_decomposition(&a, &bad);
        match &r.verdict {
            Verdict::Fail(w) => assert!(w.equation.contains("group invertible")),
            other => panic!("expected failure, got {other:?}"),
        }

        // y = a invertible is not nilpotent.
        let inv = gen_with_index(&spec(3, 0, 5)).unwrap();
        let bad = MwgDecomposition { m: 1, x: Matrix::zeros(3, 3), y: inv.clone() };
        let r = check_decomposition(&inv, &bad);
        match &r.verdict {
            Verdict::Fail(w) => assert!(w.equation.contains("nilpotent")),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn relaxed_and_polar_pass_on_samples() {
        for (dim, index, seed) in [(1, 0, 3), (3, 1, 4), (4, 2, 5), (3, 3, 6)] {
            let a = gen_with_index(&spec(dim, index, seed)).unwrap();
            for m in 1..=2 {
                assert!(check_relaxed_systems(&a, m).passed(), "relaxed dim={dim} index={index} m={m}");
                assert!(check_polar(&a, m).passed(), "polar dim={dim} index={index} m={m}");
            }
        }
    }

    #[test]
    fn polar_worked_instance() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 0]]);
        let p = engine::polar_idempotent(&a, 1).unwrap();
        assert_eq!(p, Matrix::from_i64(&[&[0, -1], &[0, 1]]));
        assert!(check_polar(&a, 1).passed());
    }

    #[test]
    fn law_checkers_pass_on_generated_pairs() {
        for seed in 0..6 {
            let (a, b) = gen_additive_pair(&spec(4, 2, 50 + seed)).unwrap();
            assert!(check_laws(PairKind::Additive, &a, &b, 2).passed());

            let (a, b, _) = gen_product_pair(&spec(3, 2, 70 + seed)).unwrap();
            assert!(check_laws(PairKind::Product, &a, &b, 2).passed());
        }
    }

    #[test]
    fn additive_law_on_spec_example() {
        // e11 ⊕ 0 against 0 ⊕ J2 in 3x3: both sides equal e11.
        let a = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        for m in 1..=3 {
            assert!(check_laws(PairKind::Additive, &a, &b, m).passed());
            let x = engine::m_weak_group(&(&a + &b), m).unwrap();
            assert_eq!(x, a);
        }
    }

    #[test]
    fn product_law_on_diagonal_example() {
        let a = Matrix::from_rows(vec![
            vec![G::from_int(2), G::zero()],
            vec![G::zero(), G::zero()],
        ]);
        let b = Matrix::from_rows(vec![
            vec![G::from_int(3), G::zero()],
            vec![G::zero(), G::from_int(5)],
        ]);
        assert!(check_laws(PairKind::Product, &a, &b, 1).passed());
        let x = engine::m_weak_group(&(&a * &b), 1).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![G::from_ratio(1, 6), G::zero()],
            vec![G::zero(), G::zero()],
        ]);
        assert_eq!(x, expected);
    }

    #[test]
    fn product_law_rejects_noncommuting_pair() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let r = check_laws(PairKind::Product, &a, &b, 1);
        assert!(r.hypothesis_violated());
    }

    #[test]
    fn blocks_checker_passes_and_separates_core_ep() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 0]]);
        assert!(check_blocks_and_commutation(&a, 1, 2).passed());
        // c_1 = s ≠ 0, so the m-weak group inverse differs from core-EP.
        assert_ne!(engine::m_weak_group(&a, 1).unwrap(), engine::core_ep(&a).unwrap());

        for (dim, index, seed) in [(3, 1, 21), (4, 2, 22), (4, 3, 23)] {
            let g = gen_with_index(&spec(dim, index, seed)).unwrap();
            for m in 1..=2 {
                assert!(check_blocks_and_commutation(&g, m, m + 1).passed());
            }
        }
    }

    #[test]
    fn gates_pass_on_generated_instances() {
        for (dim, index, seed) in [(1, 1, 31), (3, 2, 32), (5, 3, 33)] {
            let a = gen_with_index(&spec(dim, index, seed)).unwrap();
            let dd = drazin_data(&a).unwrap();
            assert!(check_penrose(&a, &engine::moore_penrose(&a)).passed());
            assert!(check_drazin_gate(&a, &dd.drazin).passed());
            assert!(check_core_ep_gate(&a, &dd.core_ep).passed());
            assert!(check_weak_group_gate(&a, &engine::weak_group(&a).unwrap()).passed());
            assert!(check_gg_gate(&a, &engine::gg_inverse(&a).unwrap()).passed());
        }
    }

    #[test]
    fn suite_on_scalars_passes() {
        let results = run_suite(&spec(1, 1, 9), 1, &[1, 2]).unwrap();
        assert!(!results.is_empty());
        for r in &results {
            assert!(r.passed(), "{} failed: {:?}", r.check_name, r.verdict);
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let s = spec(3, 2, 77);
        let first = run_suite(&s, 2, &[1, 2]).unwrap();
        let second = run_suite(&s, 2, &[1, 2]).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn suite_smoke_run_passes() {
        let results = run_suite(&spec(4, 3, 123), 3, &[1, 2, 3]).unwrap();
        let failures: Vec<_> = results.iter().filter(|r| !r.passed()).collect();
        assert!(failures.is_empty(), "failures: {failures:#?}");
    }
}
