//! Exact feasibility of systems `a·y ≥ b` by Fourier-Motzkin elimination,
//! with back-substitution to produce a witness point.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::exact::{QVector, Rational};

/// The half-space `coeffs · y ≥ bound`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Inequality {
    pub coeffs: QVector,
    pub bound: Rational,
}

impl Inequality {
    pub fn new(coeffs: QVector, bound: Rational) -> Self {
        Inequality { coeffs, bound }
    }

    pub fn holds_at(&self, y: &[Rational]) -> bool {
        dot(&self.coeffs, y) >= self.bound
    }

    /// Rescales so the first nonzero coefficient has absolute value one, which
    /// makes duplicate half-spaces compare equal.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(Rational::abs) {
            for c in &mut self.coeffs {
                *c = &*c / &lead;
            }
            self.bound = &self.bound / &lead;
        }
        self
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Eliminates variable `v` from `system`. `None` signals an infeasible constant row.
fn eliminate(system: &[Inequality], v: usize) -> Option<Vec<Inequality>> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut kept = BTreeSet::new();
    for ineq in system {
        let c = &ineq.coeffs[v];
        if c.is_positive() {
            lower.push(ineq);
        } else if c.is_negative() {
            upper.push(ineq);
        } else {
            kept.insert(ineq.clone());
        }
    }
    for lo in &lower {
        for up in &upper {
            // lo/|lo_v| + up/|up_v| cancels variable v
            let a = lo.coeffs[v].abs();
            let b = up.coeffs[v].abs();
            let coeffs: QVector = lo.coeffs.iter().zip(&up.coeffs).map(|(x, y)| x / &a + y / &b).collect();
            let bound = &lo.bound / &a + &up.bound / &b;
            kept.insert(Inequality::new(coeffs, bound).normalized());
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for ineq in kept {
        if ineq.coeffs.iter().all(Zero::is_zero) {
            if ineq.bound.is_positive() {
                return None;
            }
        } else {
            out.push(ineq);
        }
    }
    Some(out)
}

/// Finds a point satisfying every inequality over `vars` variables, or `None`
/// if the system is infeasible.
///
/// Free variables are set to `0` when the bounds allow, otherwise to the
/// nearest bound, so witnesses are deterministic.
pub fn find_point(vars: usize, system: &[Inequality]) -> Option<QVector> {
    for ineq in system {
        assert_eq!(ineq.coeffs.len(), vars, "inequality arity mismatch");
    }
    let initial: Vec<Inequality> = {
        let mut set = BTreeSet::new();
        for ineq in system {
            if ineq.coeffs.iter().all(Zero::is_zero) {
                if ineq.bound.is_positive() {
                    return None;
                }
            } else {
                set.insert(ineq.clone().normalized());
            }
        }
        set.into_iter().collect()
    };
    // stages[v] mentions only variables 0..=v
    let mut stages = Vec::with_capacity(vars);
    let mut current = initial;
    for v in (0..vars).rev() {
        let next = eliminate(&current, v)?;
        stages.push(current);
        current = next;
    }
    stages.reverse();

    let mut y = alloc::vec![Rational::zero(); vars];
    for v in 0..vars {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for ineq in &stages[v] {
            let c = &ineq.coeffs[v];
            if c.is_zero() {
                continue;
            }
            let rest = dot(&ineq.coeffs[..v], &y[..v]);
            let limit = (&ineq.bound - rest) / c;
            if c.is_positive() {
                lo = Some(lo.map_or(limit.clone(), |l| l.max(limit)));
            } else {
                hi = Some(hi.map_or(limit.clone(), |h| h.min(limit)));
            }
        }
        let zero = Rational::zero();
        y[v] = match (lo, hi) {
            (Some(l), _) if l > zero => l,
            (_, Some(h)) if h < zero => h,
            _ => zero,
        };
    }
    debug_assert!(system.iter().all(|i| i.holds_at(&y)));
    Some(y)
}
