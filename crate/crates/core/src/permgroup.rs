//! Finite permutation groups: deterministic Schreier–Sims with Schreier
//! vectors, group order and membership by sifting.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::element::{permutation_parity, Parity};
use crate::error::{Error, Result};
use crate::perms::CycleDecomposition;
use crate::words::word_index;

/// Default upper bound on the degree accepted by [`PermGroup`].
pub const DEFAULT_DEGREE_CAP: usize = 512;

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// A permutation of `{0, …, N−1}`, composed left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePerm {
    images: Vec<u32>,
}

impl fmt::Debug for FinitePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for c in self.cycles() {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FinitePerm {
    pub fn identity(degree: usize) -> Self {
        FinitePerm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or(Error::Precondition("image out of range"))?;
            if *slot {
                return Err(Error::Precondition("images repeat"));
            }
            *slot = true;
        }
        Ok(FinitePerm { images })
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for c in cycles {
            for (i, &p) in c.iter().enumerate() {
                let slot = used
                    .get_mut(p as usize)
                    .ok_or(Error::Precondition("point out of range"))?;
                if *slot {
                    return Err(Error::Precondition("cycles are not disjoint"));
                }
                *slot = true;
                images[p as usize] = c[(i + 1) % c.len()];
            }
        }
        Ok(FinitePerm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &FinitePerm) -> FinitePerm {
        FinitePerm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> FinitePerm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        FinitePerm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut c = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                c.push(i as u32);
                i = self.images[i] as usize;
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    pub fn parity(&self) -> Parity {
        permutation_parity(&self.images)
    }

    fn first_moved(&self) -> Option<u32> {
        self.images.iter().enumerate().find(|(i, &j)| *i as u32 != j).map(|(i, _)| i as u32)
    }
}

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    /// Indices into the strong generating set.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// For each point of the orbit, the generator whose application reached
    /// it (`ROOT` for the base point, `NONE` outside the orbit).
    schreier: Vec<u32>,
    /// Schreier generators `(orbit position, generator)` already sifted.
    checked: BTreeSet<(u32, u32)>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        let mut schreier = vec![NONE; degree];
        schreier[point as usize] = ROOT;
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            schreier,
            checked: BTreeSet::new(),
        }
    }
}

/// A finite permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<FinitePerm>,
    strong: Vec<FinitePerm>,
    strong_inv: Vec<FinitePerm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<FinitePerm>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<FinitePerm>, cap: usize) -> Result<Self> {
        if degree > cap {
            return Err(Error::DegreeTooLarge { degree, cap });
        }
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::Precondition("generator degree differs from group degree"));
        }
        let mut group = PermGroup {
            degree,
            generators: generators.clone(),
            strong: Vec::new(),
            strong_inv: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators.into_iter().filter(|g| !g.is_identity()) {
            if !group.levels.iter().any(|l| g.image(l.point) != l.point) {
                let p = g.first_moved().expect("not the identity");
                group.levels.push(Level::new(p, degree));
            }
            group.add_strong(g, 0);
        }
        group.schreier_sims();
        Ok(group)
    }

    /// Adds `g` as a strong generator of levels `from..` it fixes the earlier
    /// base points of, extending orbits incrementally.
    fn add_strong(&mut self, g: FinitePerm, from: usize) {
        let idx = self.strong.len();
        self.strong_inv.push(g.inverse());
        self.strong.push(g);
        let last = self.fixes_prefix_until(idx);
        for l in from..=last.min(self.levels.len().saturating_sub(1)) {
            if l < self.levels.len() {
                self.levels[l].gens.push(idx);
                self.extend_orbit(l);
            }
        }
    }

    /// The deepest level whose previous base points `g` fixes.
    fn fixes_prefix_until(&self, idx: usize) -> usize {
        let g = &self.strong[idx];
        let mut l = 0;
        while l < self.levels.len() && g.image(self.levels[l].point) == self.levels[l].point {
            l += 1;
        }
        l
    }

    fn extend_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut i = 0;
        while i < level.orbit.len() {
            let p = level.orbit[i];
            for &s in &level.gens {
                let q = self.strong[s].image(p);
                if level.schreier[q as usize] == NONE {
                    level.schreier[q as usize] = s as u32;
                    level.orbit.push(q);
                }
            }
            i += 1;
        }
    }

    /// Transversal element mapping the base point of level `l` to `p`.
    fn transversal(&self, l: usize, p: u32) -> FinitePerm {
        let level = &self.levels[l];
        let mut path = Vec::new();
        let mut q = p;
        while level.schreier[q as usize] != ROOT {
            let s = level.schreier[q as usize] as usize;
            path.push(s);
            q = self.strong_inv[s].image(q);
        }
        let mut u = FinitePerm::identity(self.degree);
        for &s in path.iter().rev() {
            u = u.then(&self.strong[s]);
        }
        u
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` when it went all the way).
    fn strip(&self, mut g: FinitePerm, from: usize) -> (FinitePerm, usize) {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let mut b = g.image(level.point);
            if level.schreier[b as usize] == NONE {
                return (g, l);
            }
            while level.schreier[b as usize] != ROOT {
                let s = level.schreier[b as usize] as usize;
                g = g.then(&self.strong_inv[s]);
                b = self.strong_inv[s].image(b);
            }
        }
        (g, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            match self.unchecked_failure(l) {
                None => i -= 1,
                Some((y, j)) => {
                    if j == self.levels.len() {
                        let p = y.first_moved().expect("nontrivial residue");
                        self.levels.push(Level::new(p, self.degree));
                    }
                    self.add_strong(y, l + 1);
                    i = j as isize;
                }
            }
        }
    }

    /// Finds a Schreier generator at level `l` that does not sift through the
    /// deeper levels.
    fn unchecked_failure(&mut self, l: usize) -> Option<(FinitePerm, usize)> {
        let mut pos = 0;
        while pos < self.levels[l].orbit.len() {
            let beta = self.levels[l].orbit[pos];
            let gens = self.levels[l].gens.clone();
            for &s in &gens {
                if !self.levels[l].checked.insert((pos as u32, s as u32)) {
                    continue;
                }
                let u = self.transversal(l, beta);
                let image = self.strong[s].image(beta);
                let h = u.then(&self.strong[s]).then(&self.transversal(l, image).inverse());
                if h.is_identity() {
                    continue;
                }
                let (y, j) = self.strip(h, l + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
            pos += 1;
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[FinitePerm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> &[FinitePerm] {
        &self.strong
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, x: &FinitePerm) -> bool {
        if x.degree() != self.degree {
            return false;
        }
        let (y, j) = self.strip(x.clone(), 0);
        j == self.levels.len() && y.is_identity()
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![point];
        seen[point as usize] = true;
        let mut i = 0;
        while i < out.len() {
            let p = out[i];
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    out.push(q);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Whether every generator sifts to the identity, i.e. the chain is a
    /// valid base and strong generating set for the generated group.
    pub fn verify_chain(&self) -> bool {
        self.generators.iter().all(|g| self.contains(g))
    }

    /// How the group compares with the symmetric group of its degree.
    pub fn classify(&self) -> GroupClass {
        let order = self.order();
        let full = factorial(self.degree);
        if order == full {
            GroupClass::Symmetric
        } else if self.degree >= 2 && order.clone() * 2u32 == full && self.generators.iter().all(|g| g.parity().is_even()) {
            GroupClass::Alternating
        } else {
            GroupClass::Other
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupClass {
    Symmetric,
    Alternating,
    Other,
}

impl GroupClass {
    pub fn name(self) -> &'static str {
        match self {
            GroupClass::Symmetric => "symmetric",
            GroupClass::Alternating => "alternating",
            GroupClass::Other => "other",
        }
    }

    pub fn contains_alternating(self) -> bool {
        self != GroupClass::Other
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Checks that `A_n ≤ ⟨(1 2 … b), (a a+1 … n)⟩` for `n ≥ 7`, `1 < a ≤ b < n`
/// (points numbered from 1, shifted to 0 internally): the group has index at
/// most 2 in `S_n` and contains the 3-cycle `(1 2 3)`.
pub fn verify_lemma_2_8(n: usize, a: usize, b: usize) -> Result<bool> {
    if n < 7 || !(1 < a && a <= b && b < n) {
        return Err(Error::Precondition("need n ≥ 7 and 1 < a ≤ b < n"));
    }
    let x = FinitePerm::from_cycles(n, &[(0..b as u32).collect()])?;
    let y = FinitePerm::from_cycles(n, &[(a as u32 - 1..n as u32).collect()])?;
    let g = PermGroup::new(n, vec![x, y])?;
    let three = FinitePerm::from_cycles(n, &[vec![0, 1, 2]])?;
    Ok(g.order() * 2u32 >= factorial(n) && g.contains(&three))
}

/// The permutation induced on the words of uniform depth `k` (indexed by
/// their expansions) by a decomposition supported at depth `k`.
pub fn project_level(c: &CycleDecomposition, k: u32) -> Result<FinitePerm> {
    let sig = c.signature();
    let degree = sig
        .level_size(k)
        .filter(|&d| d <= DEFAULT_DEGREE_CAP as u64)
        .ok_or(Error::DegreeTooLarge {
            degree: usize::MAX,
            cap: DEFAULT_DEGREE_CAP,
        })? as usize;
    let mut cycles = Vec::with_capacity(c.cycles().len());
    for cycle in c.cycles() {
        let idx: Option<Vec<u32>> = cycle.iter().map(|w| word_index(&sig, w, k).map(|i| i as u32)).collect();
        cycles.push(idx.ok_or(Error::Precondition("support word is not of uniform depth k"))?);
    }
    FinitePerm::from_cycles(degree, &cycles)
}
