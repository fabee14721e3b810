//! Eventually periodic points of Cantor space and the action on them.

use alloc::vec::Vec;
use core::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::words::{Signature, Word};

/// One coordinate of an eventually periodic point: `pre · period^∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicSequence {
    pre: Vec<u8>,
    period: Vec<u8>,
}

impl PeriodicSequence {
    pub fn new(pre: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Precondition("period must be nonempty"));
        }
        let mut s = PeriodicSequence { pre, period };
        s.canonicalize();
        Ok(s)
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.pre
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    /// Minimal period, then minimal preperiod.
    fn canonicalize(&mut self) {
        let n = self.period.len();
        if let Some(p) = (1..=n).find(|&p| n % p == 0 && (p..n).all(|i| self.period[i] == self.period[i - p])) {
            self.period.truncate(p);
        }
        while self.pre.last().is_some() && self.pre.last() == self.period.last() {
            self.pre.pop();
            self.period.rotate_right(1);
        }
    }

    fn digit(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre[i]
        } else {
            self.period[(i - self.pre.len()) % self.period.len()]
        }
    }

    fn starts_with(&self, prefix: &[u8]) -> bool {
        prefix.iter().enumerate().all(|(i, &d)| self.digit(i) == d)
    }

    /// Drops `k` leading digits and prepends `prefix`.
    fn replace_prefix(&self, k: usize, prefix: &[u8]) -> PeriodicSequence {
        let (tail, period) = if k <= self.pre.len() {
            (self.pre[k..].to_vec(), self.period.clone())
        } else {
            let mut period = self.period.clone();
            period.rotate_left((k - self.pre.len()) % self.period.len());
            (Vec::new(), period)
        };
        let mut pre = prefix.to_vec();
        pre.extend(tail);
        let mut s = PeriodicSequence { pre, period };
        s.canonicalize();
        s
    }
}

/// A point with an eventually periodic address in every coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicPoint {
    coords: Vec<PeriodicSequence>,
}

impl PeriodicPoint {
    pub fn new(coords: Vec<PeriodicSequence>) -> Self {
        PeriodicPoint { coords }
    }

    /// A single-coordinate point `pre · period^∞`.
    pub fn higman(pre: &[u8], period: &[u8]) -> Result<Self> {
        Ok(PeriodicPoint {
            coords: alloc::vec![PeriodicSequence::new(pre.to_vec(), period.to_vec())?],
        })
    }

    pub fn coords(&self) -> &[PeriodicSequence] {
        &self.coords
    }

    pub fn dims(&self) -> usize {
        self.coords.len()
    }

    pub fn validate(&self, sig: &Signature) -> Result<()> {
        if self.dims() != sig.dims() {
            return Err(Error::SignatureMismatch);
        }
        let a = sig.alphabet();
        for c in &self.coords {
            if c.pre.iter().chain(&c.period).any(|&d| d as u32 >= a) {
                return Err(Error::InvalidWord {
                    word: alloc::format!("{}", self),
                });
            }
        }
        Ok(())
    }

    /// Whether the point lies in the cylinder `w`.
    pub fn in_cylinder(&self, w: &Word) -> bool {
        self.coords.iter().enumerate().all(|(i, c)| c.starts_with(w.coord(i)))
    }

    /// The image of the point under `g`.
    pub fn apply(&self, g: &Element) -> Result<PeriodicPoint> {
        self.validate(&g.signature())?;
        let (d, r) = g
            .rules()
            .iter()
            .find(|(d, _)| self.in_cylinder(d))
            .expect("domain words cover the space");
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| c.replace_prefix(d.coord(i).len(), r.coord(i)))
            .collect();
        Ok(PeriodicPoint { coords })
    }
}

impl fmt::Display for PeriodicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |f: &mut fmt::Formatter<'_>, c: &PeriodicSequence| -> fmt::Result {
            let wide = c.pre.iter().chain(&c.period).any(|&d| d >= 10);
            let sep = if wide { "," } else { "" };
            let join = |ds: &[u8]| ds.iter().map(|d| alloc::format!("{}", d)).collect::<Vec<_>>().join(sep);
            write!(f, "{}({})", join(&c.pre), join(&c.period))
        };
        if self.coords.len() == 1 {
            return one(f, &self.coords[0]);
        }
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            one(f, c)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_minimizes_period_and_preperiod() {
        let p = PeriodicPoint::higman(&[1, 1, 0], &[1, 0]).unwrap();
        assert_eq!(p, PeriodicPoint::higman(&[1], &[1, 0]).unwrap());
        let q = PeriodicPoint::higman(&[], &[0, 1, 0, 1]).unwrap();
        assert_eq!(q.coords()[0].period(), &[0, 1]);
        let r = PeriodicPoint::higman(&[1, 1], &[0, 1]).unwrap();
        assert_eq!(r.coords()[0].preperiod(), &[1]);
        assert_eq!(r.coords()[0].period(), &[1, 0]);
    }

    #[test]
    fn shifting_past_the_preperiod_rotates() {
        let s = PeriodicSequence::new(alloc::vec![2], alloc::vec![0, 1]).unwrap();
        let t = s.replace_prefix(2, &[]);
        assert_eq!(t, PeriodicSequence::new(Vec::new(), alloc::vec![1, 0]).unwrap());
    }
}
