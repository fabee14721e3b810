//! Certificates that a pair generates the whole group, and their checker.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::element::Element;
use crate::error::Result;
use crate::perms::{self, CycleDecomposition};
use crate::words::{self, Family, Signature, Word};

/// Facts about generation that certificates cite rather than re-prove.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Citation {
    /// `V_n = ⟨α, β⟩`.
    AlphaBetaGenerate,
    /// `V_n' = ⟨α', β⟩` for odd `n`.
    AlphaPrimeBetaGenerate,
    /// `mV = ⟨α, β⟩`.
    BrinAlphaBetaGenerate,
    /// For a basis `x_1, …, x_k`, `V_[x_1]` together with the transpositions
    /// `(x_1 0  x_i)` generates `V_n`.
    LocalTranspositionsGenerate,
    /// For a basis `x_1, …, x_k`, `V'_[x_1]` together with the 3-cycles
    /// `(x_1 0  x_1 1  x_i)` generates `V_n'`.
    LocalThreeCyclesGenerate,
    /// The `mV` analogue of [`Citation::LocalTranspositionsGenerate`], with
    /// `x_1.0` the all-zeros child.
    BrinLocalTranspositionsGenerate,
}

impl Citation {
    pub const ALL: [Citation; 6] = [
        Citation::AlphaBetaGenerate,
        Citation::AlphaPrimeBetaGenerate,
        Citation::BrinAlphaBetaGenerate,
        Citation::LocalTranspositionsGenerate,
        Citation::LocalThreeCyclesGenerate,
        Citation::BrinLocalTranspositionsGenerate,
    ];

    /// Wire tag used in certificate files.
    pub fn tag(self) -> &'static str {
        match self {
            Citation::AlphaBetaGenerate => "Prop3.9i",
            Citation::AlphaPrimeBetaGenerate => "Prop3.9ii",
            Citation::BrinAlphaBetaGenerate => "Prop3.17",
            Citation::LocalTranspositionsGenerate => "Prop3.6i",
            Citation::LocalThreeCyclesGenerate => "Prop3.6ii",
            Citation::BrinLocalTranspositionsGenerate => "Prop3.13",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Citation> {
        Citation::ALL.into_iter().find(|c| c.tag() == tag)
    }

    /// The generation fact used for the seed membership in this family.
    pub fn generation(family: Family) -> Citation {
        match family {
            Family::Higman => Citation::AlphaBetaGenerate,
            Family::HigmanDerived => Citation::AlphaPrimeBetaGenerate,
            Family::Brin => Citation::BrinAlphaBetaGenerate,
        }
    }

    /// The closure fact used for the conclusion in this family.
    pub fn closure(family: Family) -> Citation {
        match family {
            Family::Higman => Citation::LocalTranspositionsGenerate,
            Family::HigmanDerived => Citation::LocalThreeCyclesGenerate,
            Family::Brin => Citation::BrinLocalTranspositionsGenerate,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    G,
    H,
    /// The element established by an earlier step.
    Step(usize),
}

/// A reference to `g`, `h` or an earlier step, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub source: Source,
    pub inverse: bool,
}

impl Term {
    pub fn g() -> Self {
        Term { source: Source::G, inverse: false }
    }

    pub fn h() -> Self {
        Term { source: Source::H, inverse: false }
    }

    pub fn step(i: usize) -> Self {
        Term { source: Source::Step(i), inverse: false }
    }

    pub fn inv(self) -> Self {
        Term { inverse: !self.inverse, ..self }
    }
}

/// Why an element supported in a cylinder lies in `⟨g, h⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// The whole local group `G_[u]` is generated by two established
    /// elements equal to the localized standard generators.
    Seed { citation: Citation, alpha: Term, beta: Term },
    /// The cylinder lies inside the cylinder of a step granting a whole
    /// local group.
    Within { seed: usize },
    /// `G_[t] = (G_[s])^c` where `c` maps the granted cylinder `s` onto `t`.
    Conjugate { seed: usize, by: Term },
}

#[derive(Clone, Debug)]
pub enum Step {
    /// `claim = h^exponent`.
    PowerExtract { exponent: BigUint, claim: Element },
    /// `claim = base^{by_1 by_2 …}`.
    ConjugateBy { base: Term, by: Vec<Term>, claim: Element },
    /// `claim = f_1 f_2 …`.
    ProductOf { factors: Vec<Term>, claim: Element },
    LocalizedMember { element: Element, cylinder: Word, justification: Membership },
    /// `⟨G_[x_1], links⟩ = G` for the basis `x_1, …, x_k`. The first link is
    /// for `x_2`, and so on.
    CitedClosure { citation: Citation, basis: Vec<Word>, seed: usize, links: Vec<Term> },
}

impl Step {
    pub fn kind(&self) -> &'static str {
        match self {
            Step::PowerExtract { .. } => "PowerExtract",
            Step::ConjugateBy { .. } => "ConjugateBy",
            Step::ProductOf { .. } => "ProductOf",
            Step::LocalizedMember { .. } => "LocalizedMember",
            Step::CitedClosure { .. } => "CitedClosure",
        }
    }

    /// The element a step establishes, if any.
    pub fn value(&self) -> Option<&Element> {
        match self {
            Step::PowerExtract { claim, .. }
            | Step::ConjugateBy { claim, .. }
            | Step::ProductOf { claim, .. } => Some(claim),
            Step::LocalizedMember { element, .. } => Some(element),
            Step::CitedClosure { .. } => None,
        }
    }

    /// The cylinder whose whole local group this step places in `⟨g, h⟩`.
    fn granted_cylinder(&self) -> Option<&Word> {
        match self {
            Step::LocalizedMember {
                cylinder,
                justification: Membership::Seed { .. } | Membership::Conjugate { .. },
                ..
            } => Some(cylinder),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub signature: Signature,
    pub g: Element,
    pub h: Element,
    pub steps: Vec<Step>,
    pub conclusion: Citation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepVerdict {
    pub index: usize,
    pub kind: &'static str,
    pub ok: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub steps: Vec<StepVerdict>,
    /// Problems not tied to one step (signatures, final conclusion).
    pub global: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.global.is_empty() && self.steps.iter().all(|s| s.ok)
    }

    pub fn first_failure(&self) -> Option<&StepVerdict> {
        self.steps.iter().find(|s| !s.ok)
    }
}

type Check = core::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> core::result::Result<T, String> {
    r.map_err(|e| format!("{e}"))
}

struct Checker<'a> {
    cert: &'a Certificate,
    sig: Signature,
}

impl<'a> Checker<'a> {
    fn value(&self, t: &Term, at: usize) -> core::result::Result<Element, String> {
        let e = match t.source {
            Source::G => self.cert.g.clone(),
            Source::H => self.cert.h.clone(),
            Source::Step(i) => {
                ensure(i < at, || format!("reference to step {i} is not earlier"))?;
                self.cert.steps[i]
                    .value()
                    .ok_or_else(|| format!("step {i} has no element"))?
                    .clone()
            }
        };
        Ok(if t.inverse { e.invert() } else { e })
    }

    fn equal(&self, got: &Element, claim: &Element, what: &str) -> Check {
        ensure(lift(got.equals(claim))?, || format!("{what} differs from the claim"))
    }

    fn granted(&self, seed: usize, at: usize) -> core::result::Result<&'a Word, String> {
        ensure(seed < at, || format!("seed step {seed} is not earlier"))?;
        self.cert.steps[seed]
            .granted_cylinder()
            .ok_or_else(|| format!("step {seed} does not grant a local group"))
    }

    fn step(&self, i: usize) -> Check {
        let sig = self.sig;
        match &self.cert.steps[i] {
            Step::PowerExtract { exponent, claim } => {
                self.equal(&self.cert.h.power(exponent), claim, "power of h")
            }
            Step::ConjugateBy { base, by, claim } => {
                let mut acc = self.value(base, i)?;
                for t in by {
                    acc = lift(acc.conjugate(&self.value(t, i)?))?;
                }
                self.equal(&acc, claim, "conjugate")
            }
            Step::ProductOf { factors, claim } => {
                let mut acc = Element::identity(sig);
                for t in factors {
                    acc = lift(acc.compose(&self.value(t, i)?))?;
                }
                self.equal(&acc, claim, "product")
            }
            Step::LocalizedMember { element, cylinder, justification } => {
                lift(sig.validate_word(cylinder))?;
                ensure(element.is_localized_in(cylinder), || {
                    format!("element moves points outside cylinder {cylinder:?}")
                })?;
                if sig.family() == Family::HigmanDerived {
                    ensure(lift(element.in_derived_subgroup())?, || "element is odd".into())?;
                }
                match justification {
                    Membership::Seed { citation, alpha, beta } => {
                        ensure(*citation == Citation::generation(sig.family()), || {
                            format!("{} does not apply to {}", citation.tag(), sig.family().name())
                        })?;
                        let (a, b) = lift(localized_generators(&sig, cylinder))?;
                        let alpha = self.value(alpha, i)?;
                        self.equal(&alpha, &a, "first generator")?;
                        self.equal(&self.value(beta, i)?, &b, "second generator")?;
                        self.equal(element, &alpha, "seed element")
                    }
                    Membership::Within { seed } => {
                        let outer = self.granted(*seed, i)?;
                        ensure(outer.contains(cylinder), || {
                            format!("cylinder {cylinder:?} is not inside {outer:?}")
                        })
                    }
                    Membership::Conjugate { seed, by } => {
                        let outer = self.granted(*seed, i)?;
                        let c = self.value(by, i)?;
                        ensure(c.cylinder_image(outer).as_ref() == Some(cylinder), || {
                            format!("conjugator does not map {outer:?} onto {cylinder:?}")
                        })
                    }
                }
            }
            Step::CitedClosure { citation, basis, seed, links } => {
                ensure(*citation == Citation::closure(sig.family()), || {
                    format!("{} does not apply to {}", citation.tag(), sig.family().name())
                })?;
                ensure(lift(words::is_basis(&sig, basis))?, || "hypothesis words are not a basis".into())?;
                ensure(basis.len() >= 2, || "basis needs at least two words".into())?;
                let u = self.granted(*seed, i)?;
                ensure(*u == basis[0], || "seed cylinder is not the first basis word".into())?;
                ensure(links.len() + 1 == basis.len(), || {
                    format!("expected {} link elements, found {}", basis.len() - 1, links.len())
                })?;
                for (j, (t, w)) in links.iter().zip(&basis[1..]).enumerate() {
                    let want = lift(expected_link(&sig, u, w))?;
                    self.equal(&self.value(t, i)?, &want, &format!("link {}", j + 1))?;
                }
                Ok(())
            }
        }
    }
}

/// `α_[u]` (or `α'_[u]`) and `β_[u]` for the family of `sig`.
pub fn localized_generators(sig: &Signature, u: &Word) -> Result<(Element, Element)> {
    let alpha = match sig.family() {
        Family::HigmanDerived => perms::alpha_prime(sig.arity())?.with_signature(*sig)?,
        _ => perms::alpha(sig)?,
    };
    let beta = perms::beta(sig)?;
    Ok((alpha.localize(u).to_element(), beta.localize(u).to_element()))
}

/// The zero child of `u`: `u0`, or `u.0` (all coordinates) for `mV`.
pub fn zero_child(sig: &Signature, u: &Word) -> Word {
    if sig.is_brin() {
        u.child_all(0)
    } else {
        u.child(0, 0)
    }
}

/// The link generator for the basis word `w`: `(u0 w)`, or `(u0 u1 w)` for
/// `V_n'`.
pub fn expected_link(sig: &Signature, u: &Word, w: &Word) -> Result<Element> {
    let mut cycle = alloc::vec![zero_child(sig, u)];
    if sig.family() == Family::HigmanDerived {
        cycle.push(u.child(0, 1));
    }
    cycle.push(w.clone());
    Ok(CycleDecomposition::new(*sig, alloc::vec![cycle])?.to_element())
}

/// Checks every step and the conclusion.
pub fn verify_certificate(cert: &Certificate) -> Report {
    let sig = cert.signature;
    let checker = Checker { cert, sig };
    let mut global = Vec::new();
    if !cert.g.signature().same_space(&sig) || !cert.h.signature().same_space(&sig) {
        global.push("g or h has the wrong signature".into());
    }
    if sig.family() == Family::HigmanDerived {
        for (name, e) in [("g", &cert.g), ("h", &cert.h)] {
            if !e.in_derived_subgroup().unwrap_or(false) {
                global.push(format!("{name} is not in the derived subgroup"));
            }
        }
    }
    match cert.steps.last() {
        Some(Step::CitedClosure { citation, .. }) if *citation == cert.conclusion => {}
        _ => global.push(format!("final step does not conclude {}", cert.conclusion.tag())),
    }
    let steps = cert
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let outcome = checker.step(i);
            StepVerdict {
                index: i,
                kind: s.kind(),
                ok: outcome.is_ok(),
                detail: outcome.err(),
            }
        })
        .collect();
    Report { steps, global }
}
