//! Knot diagram ingestion, Wirtinger presentations, and Fox calculus.

mod fox;
mod pd;
mod presentation;
mod pretzel;
mod table;
pub mod word;

pub use fox::{fox_derivative, FoxMatrix, GroupRingElem};
pub use pd::PdCode;
pub use presentation::Presentation;
pub use pretzel::{pretzel_pd, pretzel_presentation};
pub use table::{
    bundled_knot, bundled_table, load_knot_table, parse_knot_table, KnotRecord,
    PresentationJson, Published,
};
