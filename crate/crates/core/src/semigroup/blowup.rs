use super::SemigroupIdeal;
use crate::error::{Error, Result};
use crate::hilbert::{extract_coeffs, CoefficientKind, CoefficientVector, HilbertOracle};

/// Principal reduction `J = (x)` of an ideal, `x` of minimal value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reduction: SemigroupIdeal,
    /// Least `s` with `I^{s+1} = J I^s`.
    pub number: u32,
    /// `e_0(I) = v(x)`.
    pub e0: u32,
}

const REDUCTION_CAP: u32 = 10_000;

fn require_proper(i: &SemigroupIdeal, what: &str) -> Result<()> {
    if i.min() == 0 {
        Err(Error::precondition(format!("{what} is not m-primary (it contains 0)")))
    } else {
        Ok(())
    }
}

pub fn minimal_reduction(i: &SemigroupIdeal) -> Result<Reduction> {
    let x = i.min();
    let mut power = i.owner().as_ideal();
    for s in 0..REDUCTION_CAP {
        let next = power.sumset(i)?;
        if next == power.translate(x) {
            return Ok(Reduction {
                reduction: SemigroupIdeal::principal(i.owner(), x),
                number: s,
                e0: x,
            });
        }
        power = next;
    }
    Err(Error::Internal(format!("no reduction number below {REDUCTION_CAP}")))
}

/// `e_1(I, M) = ℓ(N/M)` for the blow-up `N = M[I/x] = (M + nI) - n·v(x)`,
/// `n` the reduction number. `M` is an ideal of `S` (use `S` itself for the
/// ring).
pub fn e1_via_blowup(i: &SemigroupIdeal, m: &SemigroupIdeal) -> Result<u64> {
    require_proper(i, "I")?;
    let red = minimal_reduction(i)?;
    let x = red.e0;
    let n = red.number;
    let blow = |k: u32| -> Result<SemigroupIdeal> { m.sumset(&i.k_fold(k))?.scale_shift(k * x) };
    let big = blow(n)?;
    if blow(n + 1)? != big {
        return Err(Error::Internal(
            "blow-up did not stabilize at the reduction number".into(),
        ));
    }
    big.length_over(m)
}

/// `e_0, e_1` of `n ↦ ℓ(M/IⁿM)` by interpolation.
pub fn e1_interpolated(i: &SemigroupIdeal, m: &SemigroupIdeal, n_max: u32) -> Result<CoefficientVector> {
    require_proper(i, "I")?;
    extract_coeffs(
        |n| {
            if n == 0 {
                return Ok(0);
            }
            m.length_over(&m.sumset(&i.k_fold(n))?)
        },
        1,
        CoefficientKind::Samuel,
        n_max,
    )
}

/// The pair `(K, Q)` in a numerical semigroup ring, `d = 1`.
#[derive(Clone, Debug)]
pub struct SemigroupPair {
    k: SemigroupIdeal,
    q: SemigroupIdeal,
}

impl SemigroupPair {
    pub fn new(k: SemigroupIdeal, q: SemigroupIdeal) -> Result<Self> {
        require_proper(&k, "K")?;
        require_proper(&q, "Q")?;
        if k.owner() != q.owner() {
            return Err(Error::Semigroup("ideals of different semigroups".into()));
        }
        Ok(SemigroupPair { k, q })
    }

    pub fn k(&self) -> &SemigroupIdeal {
        &self.k
    }

    pub fn q(&self) -> &SemigroupIdeal {
        &self.q
    }
}

impl HilbertOracle for SemigroupPair {
    fn dim(&self) -> Result<usize> {
        Ok(1)
    }

    fn colength_k(&self) -> Result<u64> {
        self.k.colength()
    }

    fn samuel(&self, n: u32) -> Result<u64> {
        if n == 0 {
            return Ok(0);
        }
        self.q.k_fold(n).colength()
    }

    fn relative(&self, n: u32) -> Result<u64> {
        self.k.sumset(&self.q.k_fold(n))?.colength()
    }

    fn fiber(&self, n: u32) -> Result<u64> {
        let qn = self.q.k_fold(n);
        qn.length_over(&self.k.sumset(&qn)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{check_identities, g_coeffs, DEFAULT_N_MAX};
    use crate::semigroup::NumericalSemigroup;

    fn setup() -> (NumericalSemigroup, SemigroupIdeal) {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let m = SemigroupIdeal::from_gens(&s, &[3, 4, 5]).unwrap();
        (s, m)
    }

    #[test]
    fn reductions() {
        let (s, m) = setup();
        let r = minimal_reduction(&m).unwrap();
        assert_eq!((r.number, r.e0), (1, 3));
        assert_eq!(r.reduction, SemigroupIdeal::principal(&s, 3));
        assert_eq!(minimal_reduction(&SemigroupIdeal::principal(&s, 4)).unwrap().number, 0);
        let n = NumericalSemigroup::naturals();
        let e = SemigroupIdeal::from_gens(&n, &[2]).unwrap();
        let r = minimal_reduction(&e).unwrap();
        assert_eq!((r.number, r.e0), (0, 2));
    }

    #[test]
    fn blowup_matches_interpolation() {
        let (s, m) = setup();
        let r = s.as_ideal();
        assert_eq!(e1_via_blowup(&m, &r).unwrap(), 2);
        assert_eq!(e1_interpolated(&m, &r, DEFAULT_N_MAX).unwrap().values, vec![3, 2]);
        assert_eq!(e1_via_blowup(&m, &m).unwrap(), 0);
        assert_eq!(e1_interpolated(&m, &m, DEFAULT_N_MAX).unwrap().values, vec![3, 0]);
        let x = SemigroupIdeal::principal(&s, 4);
        assert_eq!(e1_via_blowup(&x, &r).unwrap(), 0);
    }

    #[test]
    fn relative_coefficients() {
        let (_, m) = setup();
        let pair = SemigroupPair::new(m.clone(), m).unwrap();
        assert_eq!(g_coeffs(&pair, DEFAULT_N_MAX).unwrap().values, vec![3, -1]);
        let report = check_identities(&pair, DEFAULT_N_MAX).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.f.values, vec![3]);
    }

    #[test]
    fn ring_is_not_a_valid_k() {
        let (s, m) = setup();
        assert!(SemigroupPair::new(s.as_ideal(), m).is_err());
    }
}
