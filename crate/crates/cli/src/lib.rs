//! File formats, rendering and command helpers for the `thompson` tool.

pub mod calc;
pub mod format;
pub mod fuzz;
pub mod oracle;
pub mod render;

use thompson_core::{Family, Signature};

/// The `--family` flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyArg {
    #[value(name = "V")]
    V,
    #[value(name = "Vprime")]
    Vprime,
    #[value(name = "mV")]
    MV,
}

impl FamilyArg {
    pub fn family(self) -> Family {
        match self {
            FamilyArg::V => Family::Higman,
            FamilyArg::Vprime => Family::HigmanDerived,
            FamilyArg::MV => Family::Brin,
        }
    }
}

/// Signature from `--family` with `--n` (Higman) or `--m` (Brin).
pub fn signature(family: FamilyArg, n: u32, m: u32) -> thompson_core::Result<Signature> {
    match family {
        FamilyArg::MV => Signature::brin(m),
        f => Signature::new(f.family(), n),
    }
}
