//! The three Hilbert functions of a pair `(K, Q)` and their coefficients.
//!
//! * `H(Q, n, M) = ℓ(M/QⁿM)` with polynomial `Σ (-1)^i e_i C(n+r-i-1, r-i)`,
//! * `H_K(Q, n) = ℓ(R/KQⁿ)` with polynomial `Σ (-1)^i g_i C(n+d-i-1, d-i)`,
//! * `ℓ(Qⁿ/KQⁿ)` with polynomial `Σ (-1)^i f_i C(n+d-i-1, d-1-i)`.
//!
//! At `n = 0` the conventions are `H = 0` and `H_K = ℓ(Qⁿ/KQⁿ) = ℓ(R/K)`;
//! fits only ever look at `n ≥ 1`.

mod extract;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{IdealHandle, RingPresentation};

pub use extract::{binomial, extract_coeffs, CoefficientKind, CoefficientVector, DEFAULT_N_MAX};

/// The modules `M` the engine can measure; all reduce to ideal lengths.
#[derive(Clone, Debug)]
pub enum ModuleSpec {
    /// `M = R`.
    Ring,
    /// `M = R/A`.
    Quotient(IdealHandle),
    /// `M = K` for an `m`-primary ideal `K`.
    Ideal(IdealHandle),
}

impl ModuleSpec {
    /// Krull dimension of the module.
    pub fn dim(&self, ring: &RingPresentation) -> Result<usize> {
        match self {
            ModuleSpec::Ring => ring.krull_dim(),
            ModuleSpec::Quotient(a) => a
                .krull_dim()?
                .ok_or_else(|| Error::precondition("R/A is the zero module")),
            ModuleSpec::Ideal(k) => {
                require_m_primary(k, "K")?;
                ring.krull_dim()
            }
        }
    }
}

fn require_m_primary(i: &IdealHandle, what: &str) -> Result<()> {
    if i.is_m_primary()? {
        Ok(())
    } else {
        Err(Error::precondition(format!("{what} is not m-primary")))
    }
}

/// `ℓ(M/QⁿM)`.
pub fn hs_value(q: &IdealHandle, m: &ModuleSpec, n: u32) -> Result<u64> {
    require_m_primary(q, "Q")?;
    if n == 0 {
        return Ok(0);
    }
    let qn = q.power(n)?;
    match m {
        ModuleSpec::Ring => qn.finite_length("Q^n"),
        ModuleSpec::Quotient(a) => qn.sum(a)?.finite_length("Q^n + A"),
        ModuleSpec::Ideal(k) => {
            require_m_primary(k, "K")?;
            let kqn = qn.product(k)?.finite_length("KQ^n")?;
            Ok(kqn - k.finite_length("K")?)
        }
    }
}

/// `ℓ(R/KQⁿ)`.
pub fn hk_value(k: &IdealHandle, q: &IdealHandle, n: u32) -> Result<u64> {
    require_m_primary(k, "K")?;
    require_m_primary(q, "Q")?;
    q.power(n)?.product(k)?.finite_length("KQ^n")
}

/// `ℓ(Qⁿ/KQⁿ)`, counted directly as the difference of the two staircases.
pub fn fiber_value(k: &IdealHandle, q: &IdealHandle, n: u32) -> Result<u64> {
    require_m_primary(k, "K")?;
    require_m_primary(q, "Q")?;
    let qn = q.power(n)?;
    let kqn = qn.product(k)?;
    qn.length_over(&kqn)
}

/// Value oracles for a pair `(K, Q)` of `m`-primary ideals, whatever the
/// backend.
pub trait HilbertOracle: Sync {
    /// `d = dim R`.
    fn dim(&self) -> Result<usize>;
    /// `ℓ(R/K)`.
    fn colength_k(&self) -> Result<u64>;
    /// `ℓ(R/Qⁿ)`.
    fn samuel(&self, n: u32) -> Result<u64>;
    /// `ℓ(R/KQⁿ)`.
    fn relative(&self, n: u32) -> Result<u64>;
    /// `ℓ(Qⁿ/KQⁿ)`, ideally computed independently of the other two.
    fn fiber(&self, n: u32) -> Result<u64>;

    /// `ℓ(K/QⁿK)`.
    fn samuel_k(&self, n: u32) -> Result<u64> {
        if n == 0 {
            return Ok(0);
        }
        Ok(self.relative(n)? - self.colength_k()?)
    }
}

/// A pair of ideals in a presented ring, memoizing `KQⁿ` lengths.
pub struct IdealPair {
    k: IdealHandle,
    q: IdealHandle,
    relative: Mutex<HashMap<u32, u64>>,
}

impl IdealPair {
    pub fn new(k: IdealHandle, q: IdealHandle) -> Result<Self> {
        require_m_primary(&k, "K")?;
        require_m_primary(&q, "Q")?;
        if !Arc::ptr_eq(k.ring(), q.ring()) && k.ring().relations() != q.ring().relations() {
            return Err(Error::RingMismatch);
        }
        Ok(IdealPair {
            k,
            q,
            relative: Mutex::new(HashMap::new()),
        })
    }

    pub fn k(&self) -> &IdealHandle {
        &self.k
    }

    pub fn q(&self) -> &IdealHandle {
        &self.q
    }
}

impl HilbertOracle for IdealPair {
    fn dim(&self) -> Result<usize> {
        self.q.ring().krull_dim()
    }

    fn colength_k(&self) -> Result<u64> {
        self.k.finite_length("K")
    }

    fn samuel(&self, n: u32) -> Result<u64> {
        hs_value(&self.q, &ModuleSpec::Ring, n)
    }

    fn relative(&self, n: u32) -> Result<u64> {
        if let Some(&v) = self.relative.lock().expect("memo poisoned").get(&n) {
            return Ok(v);
        }
        let v = hk_value(&self.k, &self.q, n)?;
        self.relative.lock().expect("memo poisoned").insert(n, v);
        Ok(v)
    }

    fn fiber(&self, n: u32) -> Result<u64> {
        fiber_value(&self.k, &self.q, n)
    }
}

/// `e_0..e_r` of `n ↦ ℓ(M/QⁿM)`, `r = dim M`.
pub fn e_coeffs(q: &IdealHandle, m: &ModuleSpec, n_max: u32) -> Result<CoefficientVector> {
    let r = m.dim(q.ring())?;
    extract_coeffs(|n| hs_value(q, m, n), r, CoefficientKind::Samuel, n_max)
}

/// `g_0..g_d` of `n ↦ ℓ(R/KQⁿ)`.
pub fn g_coeffs(oracle: &dyn HilbertOracle, n_max: u32) -> Result<CoefficientVector> {
    let d = oracle.dim()?;
    extract_coeffs(|n| oracle.relative(n), d, CoefficientKind::Relative, n_max)
}

/// `f_0..f_{d-1}` of `n ↦ ℓ(Qⁿ/KQⁿ)`.
pub fn f_coeffs(oracle: &dyn HilbertOracle, n_max: u32) -> Result<CoefficientVector> {
    let d = oracle.dim()?;
    if d == 0 {
        return Err(Error::precondition(
            "the fiber polynomial of a zero-dimensional ring is zero",
        ));
    }
    extract_coeffs(|n| oracle.fiber(n), d - 1, CoefficientKind::Fiber, n_max)
}

/// `e_i(Q, R)` through an oracle.
pub fn e_coeffs_ring(oracle: &dyn HilbertOracle, n_max: u32) -> Result<CoefficientVector> {
    let d = oracle.dim()?;
    extract_coeffs(|n| oracle.samuel(n), d, CoefficientKind::Samuel, n_max)
}

/// `e_i(Q, K)` with `K` viewed as a module, through an oracle.
pub fn e_coeffs_k(oracle: &dyn HilbertOracle, n_max: u32) -> Result<CoefficientVector> {
    let d = oracle.dim()?;
    extract_coeffs(|n| oracle.samuel_k(n), d, CoefficientKind::Samuel, n_max)
}

/// One checked equation with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: String, lhs: i64, rhs: i64) -> Self {
        IdentityCheck {
            name,
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

/// All coefficient vectors of a pair and the relations between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub dim: usize,
    pub colength_k: u64,
    pub e_ring: CoefficientVector,
    pub e_k: CoefficientVector,
    pub g: CoefficientVector,
    pub f: CoefficientVector,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Computes `e(Q,R)`, `e(Q,K)`, `g^K(Q)`, `f^K(Q)` and checks
///
/// * `g_0 = e_0(Q,R) = e_0(Q,K)`,
/// * `g_i = e_i(Q,K)` for `0 < i < d`,
/// * `g_d = e_d(Q,K) + (-1)^d ℓ(R/K)`,
/// * `f_i = e_{i+1}(Q,R) - g_{i+1} + e_i(Q,R) - g_i` for `i < d`,
/// * `ℓ(R/KQⁿ) = ℓ(R/Qⁿ) + ℓ(Qⁿ/KQⁿ)` at every `n` up to the end of the
///   verified window.
pub fn check_identities(oracle: &dyn HilbertOracle, n_max: u32) -> Result<IdentityReport> {
    let d = oracle.dim()?;
    if d == 0 {
        return Err(Error::precondition("identities need dim R ≥ 1"));
    }
    let colength_k = oracle.colength_k()?;
    if colength_k == 0 {
        return Err(Error::precondition("K must be a proper ideal"));
    }
    let e_ring = e_coeffs_ring(oracle, n_max)?;
    let e_k = e_coeffs_k(oracle, n_max)?;
    let g = g_coeffs(oracle, n_max)?;
    let f = f_coeffs(oracle, n_max)?;

    let mut checks = vec![
        IdentityCheck::new("g_0 = e_0(Q,R)".into(), g.get(0), e_ring.get(0)),
        IdentityCheck::new("g_0 = e_0(Q,K)".into(), g.get(0), e_k.get(0)),
    ];
    for i in 1..d {
        checks.push(IdentityCheck::new(format!("g_{i} = e_{i}(Q,K)"), g.get(i), e_k.get(i)));
    }
    let sign = if d % 2 == 0 { 1 } else { -1 };
    checks.push(IdentityCheck::new(
        format!("g_{d} = e_{d}(Q,K) + (-1)^{d} l(R/K)"),
        g.get(d),
        e_k.get(d) + sign * colength_k as i64,
    ));
    for i in 0..d {
        checks.push(IdentityCheck::new(
            format!("f_{i} = e_{}(Q,R) - g_{} + e_{i}(Q,R) - g_{i}", i + 1, i + 1),
            f.get(i),
            e_ring.get(i + 1) - g.get(i + 1) + e_ring.get(i) - g.get(i),
        ));
    }
    let end = [&e_ring, &e_k, &g, &f].iter().map(|v| v.window.1).max().unwrap_or(0);
    for n in 0..=end {
        let hk = oracle.relative(n)? as i64;
        let hs = oracle.samuel(n)? as i64;
        let fib = oracle.fiber(n)? as i64;
        checks.push(IdentityCheck::new(
            format!("l(R/KQ^{n}) = l(R/Q^{n}) + l(Q^{n}/KQ^{n})"),
            hk,
            hs + fib,
        ));
    }
    Ok(IdentityReport {
        dim: d,
        colength_k,
        e_ring,
        e_k,
        g,
        f,
        checks,
    })
}

/// `I(Q;M) = ℓ(M/QM) - e_0(Q,M)` with its two ingredients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IInvariant {
    pub length: u64,
    pub e0: i64,
    pub value: i64,
}

/// `I(Q;M)` for a parameter ideal `Q` of `M`.
pub fn i_invariant(q: &IdealHandle, m: &ModuleSpec, n_max: u32) -> Result<IInvariant> {
    let r = m.dim(q.ring())?;
    if q.generators().len() != r {
        return Err(Error::precondition(format!(
            "Q has {} generators but dim M = {r}",
            q.generators().len()
        )));
    }
    let length = hs_value(q, m, 1)?;
    let e0 = e_coeffs(q, m, n_max)?.get(0);
    Ok(IInvariant {
        length,
        e0,
        value: length as i64 - e0,
    })
}

/// Observed values of `I(Q;M)` over several `Q`; the maximum estimates
/// `I(M)` from below.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IInvariantRecord {
    pub samples: Vec<(String, i64)>,
    pub estimate: Option<i64>,
}

impl IInvariantRecord {
    pub fn push(&mut self, q: impl Into<String>, value: i64) {
        self.samples.push((q.into(), value));
        self.estimate = Some(self.estimate.map_or(value, |e| e.max(value)));
    }
}

/// Which coefficient the closed formula for standard parameter ideals should
/// predict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictionTarget {
    /// `e_i(Q, M)`, given `ℓ(H^j_m(M))` for `j < r`.
    E(usize),
    /// `g_i^K(Q)`, given `ℓ(H^j_m(K))` for `j < d` and `ℓ(R/K)`.
    G { index: usize, colength_k: u64 },
}

/// Closed formula for a standard parameter ideal:
/// `e_i = (-1)^i Σ_{j=1}^{r-i} C(r-i-1, j-1) ℓ(H^j)` for `0 < i < r`,
/// `e_r = (-1)^r ℓ(H^0)`, and `g_d = (-1)^d (ℓ(H^0(K)) + ℓ(R/K))`.
///
/// `lh[j]` is `ℓ(H^j_m)` for `j = 0..r-1`, so `r = lh.len()`.
pub fn standard_coeff_prediction(lh: &[i64], target: PredictionTarget) -> Result<i64> {
    if let Some(v) = lh.iter().find(|&&v| v < 0) {
        return Err(Error::precondition(format!("negative cohomology length {v}")));
    }
    let r = lh.len();
    let i = match target {
        PredictionTarget::E(i) | PredictionTarget::G { index: i, .. } => i,
    };
    if i == 0 || i > r {
        return Err(Error::precondition(format!("coefficient index {i} outside 1..={r}")));
    }
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let base = if i == r {
        lh[0]
    } else {
        (1..=r - i)
            .map(|j| binomial((r - i - 1) as i128, (j - 1) as u32) as i64 * lh[j])
            .sum()
    };
    Ok(match target {
        PredictionTarget::G { index, colength_k } if index == r => sign * (base + colength_k as i64),
        _ => sign * base,
    })
}
