//! Real intervals with exact, possibly irrational, endpoints.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::rational::Q;
use crate::surd::QuadSurd;

#[derive(Clone, Debug)]
pub(crate) struct Bound {
    pub val: QuadSurd,
    pub closed: bool,
}

/// A real interval with exact, possibly irrational, endpoints.
#[derive(Clone, Debug)]
pub(crate) struct Interval {
    pub lo: Option<Bound>,
    pub hi: Option<Bound>,
}

impl Interval {
    pub fn all() -> Self {
        Interval { lo: None, hi: None }
    }

    pub fn closed(lo: Q, hi: Q) -> Self {
        Interval {
            lo: Some(Bound { val: lo.into(), closed: true }),
            hi: Some(Bound { val: hi.into(), closed: true }),
        }
    }

    pub fn raise(&mut self, b: Bound) {
        self.lo = Some(match self.lo.take() {
            None => b,
            Some(cur) => match cur.val.cmp(&b.val) {
                Ordering::Less => b,
                Ordering::Greater => cur,
                Ordering::Equal => Bound { val: cur.val, closed: cur.closed && b.closed },
            },
        });
    }

    pub fn lower(&mut self, b: Bound) {
        self.hi = Some(match self.hi.take() {
            None => b,
            Some(cur) => match cur.val.cmp(&b.val) {
                Ordering::Greater => b,
                Ordering::Less => cur,
                Ordering::Equal => Bound { val: cur.val, closed: cur.closed && b.closed },
            },
        });
    }

    /// Imposes `c0 + c1 t > 0` (strict) or `>= 0`.
    pub fn linear(&mut self, c0: &Q, c1: &Q, strict: bool) -> bool {
        if c1.is_zero() {
            return if strict { c0.is_positive() } else { !c0.is_negative() };
        }
        let root = Bound { val: QuadSurd::rational(-c0 / c1), closed: !strict };
        if c1.is_positive() {
            self.raise(root);
        } else {
            self.lower(root);
        }
        true
    }

    pub fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) => match l.val.cmp(&h.val) {
                Ordering::Less => false,
                Ordering::Equal => !(l.closed && h.closed),
                Ordering::Greater => true,
            },
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn bookkeeping() {
        let mut iv = Interval::closed(qi(0), qi(1));
        assert!(iv.linear(&qi(-1), &qi(1), true)); // t > 1
        assert!(iv.is_empty());
        let mut iv = Interval::closed(qi(0), qi(1));
        assert!(iv.linear(&qi(-1), &qi(1), false)); // t >= 1
        assert!(!iv.is_empty());
        assert!(!Interval::all().is_empty());
        let mut iv = Interval::all();
        assert!(!iv.linear(&qi(0), &qi(0), true));
        assert!(iv.linear(&qi(0), &qi(0), false));
        assert!(iv.linear(&qi(2), &qi(-1), true)); // t < 2
        assert!(iv.lo.is_none());
    }
}
