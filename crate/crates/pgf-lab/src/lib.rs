//! Exact combinatorics of simple closed curves on closed orientable surfaces.
//!
//! The library fixes a one-vertex triangulation of the genus-`g` surface
//! (`g >= 2`) as a global coordinate frame. Multicurves are integer normal
//! coordinate vectors; mapping classes are words in Dehn twists acting
//! exactly on those vectors; subsurface projections, projection distances,
//! and curve-graph distance intervals are computed with exact integer
//! arithmetic throughout. On top of the geometric kernel sit the
//! verification pipelines: admissible-sequence checks, local-to-global
//! projection bounds, coned-off Cayley balls for desk-scale group
//! presentations, conjugator-power searches, and replayable combination
//! certificates.
//!
//! Entry points:
//! - [`surface::TriangulatedSurface`]: the ambient surface.
//! - [`multicurve::Multicurve`]: validated normal-coordinate vectors.
//! - [`mapping::MappingClassWord`]: twist words and their exact action.
//! - [`projection`]: subsurface projections and projection distances.
//! - [`curve_graph`]: distance intervals and geodesic witnesses.
//! - [`admissible`]: sequence validation and lower-bound combiners.
//! - [`combiner`]: coned balls, conjugator searches, certificates.
//!
//! Every runnable capability has a matching example under `examples/`.

pub mod admissible;
pub mod annular;
pub mod chart;
pub mod cli;
pub mod combiner;
pub mod curve_graph;
pub mod error;
pub mod flips;
pub mod intersection;
pub mod library;
pub mod mapping;
pub mod multicurve;
pub mod oracle;
pub mod profile;
pub mod projection;
pub mod report;
pub mod surface;
pub mod trace;
pub mod words;

pub use error::{Error, Result};
pub use multicurve::Multicurve;
pub use surface::TriangulatedSurface;
