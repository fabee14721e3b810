//! Generating partners and certificates.
//!
//! Given a nontrivial `g`, [`build_partner`] builds `h` such that `⟨g, h⟩`
//! is the whole group, together with a [`Certificate`] whose element
//! equalities are rechecked by [`verify_certificate`] and whose remaining
//! steps cite generation facts after checking their hypotheses.

pub mod certificate;
pub mod frame;
pub mod partner;
pub mod rewrite;
pub mod transporter;

pub use certificate::{verify_certificate, Certificate, Citation, Membership, Report, Source, Step, Term};
pub use frame::{build_frame, displaced_word, Frame};
pub use partner::{build_partner, crt_exponents, Partner, PartnerParts};
pub use rewrite::{double_transposition_split, express_three_cycle, express_transposition, DoubleTransposition, Expr};
pub use transporter::transporter;
