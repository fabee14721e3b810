//! Finite checks run through the permutation-group oracle.
//!
//! Each check returns a [`OracleReport`] serialized as
//! `{"check", "parameters", "order", "verdict"}`.

use serde::Serialize;
use serde_json::{json, Value};

use thompson_core::permgroup::{factorial, project_level, verify_lemma_2_8, FinitePerm, GroupClass, PermGroup};
use thompson_core::perms::{beta, zeta, CycleDecomposition};
use thompson_core::text::parse_cycles;
use thompson_core::Signature;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OracleReport {
    pub check: String,
    pub parameters: Value,
    /// Exact group order, in decimal.
    pub order: String,
    pub verdict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    /// `A_n ≤ ⟨(1 2 … b), (a a+1 … n)⟩`.
    CyclePair,
    /// `⟨ζ, β⟩` projected to the depth-3 words contains the alternating group.
    LevelThree,
    /// `⟨(000 001), β⟩` projected to depth 3 is the full symmetric group.
    LevelThreeTransposition,
}

impl Check {
    pub fn id(self) -> &'static str {
        match self {
            Check::CyclePair => "cycle-pair",
            Check::LevelThree => "level-three",
            Check::LevelThreeTransposition => "level-three-transposition",
        }
    }
}

fn cycle(n: usize, points: std::ops::Range<u32>) -> thompson_core::Result<FinitePerm> {
    FinitePerm::from_cycles(n, &[points.collect()])
}

/// `A_n ≤ ⟨(1 2 … b), (a a+1 … n)⟩` for `n ≥ 7`, `1 < a ≤ b < n`.
pub fn cycle_pair(n: usize, a: usize, b: usize) -> thompson_core::Result<OracleReport> {
    let verdict = verify_lemma_2_8(n, a, b)?;
    let g = PermGroup::new(n, vec![cycle(n, 0..b as u32)?, cycle(n, a as u32 - 1..n as u32)?])?;
    Ok(OracleReport {
        check: Check::CyclePair.id().into(),
        parameters: json!({ "n": n, "a": a, "b": b }),
        order: g.order().to_string(),
        verdict,
    })
}

fn level_three_group(a: &CycleDecomposition, b: &CycleDecomposition) -> thompson_core::Result<PermGroup> {
    let x = project_level(a, 3)?;
    let y = project_level(b, 3)?;
    PermGroup::new(x.degree(), vec![x, y])
}

/// The class of `⟨ζ, β⟩` on the depth-3 words; the verdict is containment of
/// the alternating group.
pub fn level_three(sig: &Signature) -> thompson_core::Result<(OracleReport, GroupClass)> {
    let g = level_three_group(&zeta(sig)?, &beta(sig)?)?;
    let class = g.classify();
    let report = OracleReport {
        check: Check::LevelThree.id().into(),
        parameters: json!({
            "family": sig.family().name(),
            "arity": sig.arity(),
            "degree": g.degree(),
            "class": class.name(),
        }),
        order: g.order().to_string(),
        verdict: g.verify_chain() && class.contains_alternating(),
    };
    Ok((report, class))
}

/// `⟨(000 001), β⟩ = Sym(X^(3))` for `V_2`.
pub fn level_three_transposition(sig: &Signature) -> thompson_core::Result<OracleReport> {
    if !sig.is_higman() {
        return Err(thompson_core::Error::NotHigman);
    }
    let swap = parse_cycles(sig, "(000 001)")?;
    let g = level_three_group(&swap, &beta(sig)?)?;
    Ok(OracleReport {
        check: Check::LevelThreeTransposition.id().into(),
        parameters: json!({ "family": sig.family().name(), "arity": sig.arity(), "degree": g.degree() }),
        order: g.order().to_string(),
        verdict: g.order() == factorial(g.degree()),
    })
}
