//! Exact Boij–Söderberg theory for graded Betti tables.
//!
//! * [`table`], [`sequence`]: sparse Betti tables over `Q` and degree
//!   sequences with their partial order.
//! * [`pure`]: pure diagrams `β(d)` and the linear identities among them.
//! * [`decompose`]: the greedy decomposition of a table into a chain of pure
//!   diagrams.
//! * [`cohomology`]: supernatural cohomology tables, the pairing with Betti
//!   tables, truncated pairings and facet functionals.
//! * [`hilbert`]: Hilbert numerator, function and polynomial, codimension,
//!   multiplicity and the multiplicity bounds.
//! * [`koszul`]: Betti tables of monomial quotients from Koszul homology,
//!   used as an independent source of genuine Betti tables.
//! * [`cli`]: the command line front end.
//!
//! ```
//! use boij_soderberg::{decompose, koszul::{betti_table, MonomialIdeal}};
//!
//! let ideal = MonomialIdeal::parse("x^2,x*y,x*z^2", "x,y,z").unwrap();
//! let table = betti_table(&ideal).unwrap();
//! let parts = decompose(&table).unwrap();
//! assert_eq!(parts.summary(false), "1/5·β(0,2,3,5) + 1/10·β(0,2,4,5) + 1/6·β(0,3,4) + 1/3·β(0,3)");
//! ```

pub mod cli;
pub mod cohomology;
pub mod decompose;
pub mod error;
pub mod hilbert;
pub mod koszul;
pub mod linalg;
pub mod pure;
pub mod rational;
pub mod sequence;
pub mod table;

pub use cohomology::{
    facet_functional, normalize_chain, pairing, supernatural_gamma, truncated_pairing,
    CohomologyTable, FacetFunctional, FacetKind, SupernaturalTable, TruncationSpec,
};
pub use decompose::{
    decompose, greedy_step, top_degree_sequence, verify_decomposition, Decomposition, Part,
};
pub use error::{Error, Result};
pub use hilbert::{
    codimension, hilbert_function, hilbert_numerator, multiplicity, multiplicity_bounds_check,
};
pub use pure::{facet_identity_check, herzog_kuhl_residuals, pure_diagram, PureDiagram};
pub use rational::Rational;
pub use sequence::{compare_sequences, ChainTriple, DegreeSequence};
pub use table::BettiTable;

/// Deserializes the first JSON document in `text`, ignoring whatever
/// follows it (the CLI prints a layout after the JSON).
pub(crate) fn first_json_document<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let mut stream = serde_json::Deserializer::from_str(text).into_iter::<T>();
    match stream.next() {
        Some(Ok(v)) => Ok(v),
        Some(Err(e)) => Err(Error::Parse(e.to_string())),
        None => Err(Error::Parse("no JSON document in input".into())),
    }
}
