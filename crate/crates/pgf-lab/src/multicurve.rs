//! Multicurves in normal coordinates.
//!
//! A multicurve is a vector of nonnegative integers, one per edge of the
//! ambient triangulation, satisfying the per-triangle matching conditions.
//! Coordinates determine the isotopy class rel the triangulation vertex;
//! two multicurves are equal iff their coordinate vectors are equal.
//! Weights grow geometrically under twist powers, so coordinates are
//! arbitrary-precision integers.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::TriangulatedSurface;
use crate::trace;

/// A multicurve on a fixed surface, in normal coordinates.
#[derive(Clone)]
pub struct Multicurve {
    surface: Arc<TriangulatedSurface>,
    coords: Vec<BigUint>,
}

impl PartialEq for Multicurve {
    fn eq(&self, other: &Self) -> bool {
        self.surface.genus() == other.surface.genus() && self.coords == other.coords
    }
}
impl Eq for Multicurve {}

impl std::hash::Hash for Multicurve {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.surface.genus().hash(state);
        self.coords.hash(state);
    }
}

impl fmt::Debug for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multicurve[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// One primitive component with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<(Multicurve, BigUint)>,
}

/// Outcome of validation when it fails, naming the offending structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Parity or triangle-inequality failure at this triangle.
    Matching { triangle: usize, reason: String },
    /// A component equal to the vertex-linking curve.
    InessentialComponent { coords: Vec<String> },
}

/// On-disk format for a curve: `{"surface": g, "coords": ["1","0",...]}`.
/// Coordinates are decimal strings so that arbitrary precision survives JSON.
#[derive(Serialize, Deserialize)]
pub struct CurveFile {
    pub surface: u32,
    pub coords: Vec<String>,
}

impl Multicurve {
    /// Validate and construct. Rejects wrong-length vectors, matching-rule
    /// violations, and vectors with an inessential (vertex-linking)
    /// component.
    pub fn new(surface: Arc<TriangulatedSurface>, coords: Vec<BigUint>) -> Result<Self> {
        let m = Multicurve::new_unchecked(surface, coords);
        m.validate()?;
        Ok(m)
    }

    /// Construct without essentiality tracing, but still enforcing length
    /// and the matching conditions. Used internally where the component
    /// structure is known (e.g. twist images of validated curves).
    pub fn new_normal(surface: Arc<TriangulatedSurface>, coords: Vec<BigUint>) -> Result<Self> {
        let m = Multicurve::new_unchecked(surface, coords);
        m.check_length()?;
        m.check_matching()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(surface: Arc<TriangulatedSurface>, coords: Vec<BigUint>) -> Self {
        Multicurve { surface, coords }
    }

    pub fn from_u64(surface: Arc<TriangulatedSurface>, coords: &[u64]) -> Result<Self> {
        Multicurve::new(surface, coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn empty(surface: Arc<TriangulatedSurface>) -> Self {
        let n = surface.num_edges();
        Multicurve {
            surface,
            coords: vec![BigUint::zero(); n],
        }
    }

    pub fn surface(&self) -> &Arc<TriangulatedSurface> {
        &self.surface
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    pub fn is_empty(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Total weight: sum of all edge coordinates.
    pub fn weight(&self) -> BigUint {
        let mut w = BigUint::zero();
        for c in &self.coords {
            w += c;
        }
        w
    }

    /// Coordinates as u64, if they fit (trace-scale operations need this).
    pub fn coords_u64(&self) -> Option<Vec<u64>> {
        self.coords.iter().map(|c| c.to_u64()).collect()
    }

    fn check_length(&self) -> Result<()> {
        if self.coords.len() != self.surface.num_edges() {
            return Err(Error::CoordLength {
                got: self.coords.len(),
                want: self.surface.num_edges(),
            });
        }
        Ok(())
    }

    fn check_matching(&self) -> Result<()> {
        let tri = self.surface.triangulation();
        for (t, tr) in tri.triangles().iter().enumerate() {
            let s: Vec<&BigUint> = tr.iter().map(|&e| &self.coords[e]).collect();
            let total = s[0] + s[1] + s[2];
            if (&total % 2u8) == BigUint::one() {
                return Err(Error::Matching {
                    triangle: t,
                    reason: format!("odd side-weight sum {total}"),
                });
            }
            for j in 0..3 {
                // Corner j lies between sides j-1 and j; opposite side j+1.
                if s[(j + 2) % 3] + s[j] < *s[(j + 1) % 3] {
                    return Err(Error::Matching {
                        triangle: t,
                        reason: format!(
                            "triangle inequality fails at corner {j}: {} + {} < {}",
                            s[(j + 2) % 3],
                            s[j],
                            s[(j + 1) % 3]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// Full validation: length, matching conditions, essentiality of every
    /// component. Essentiality requires tracing, which is capped; huge
    /// vectors that pass the matching conditions are accepted structurally
    /// when they come from twist images of validated curves.
    pub fn validate(&self) -> Result<()> {
        self.check_length()?;
        self.check_matching()?;
        if self.is_empty() {
            return Ok(());
        }
        if let Some(small) = self.coords_u64() {
            if small.iter().sum::<u64>() <= trace::TRACE_WEIGHT_CAP {
                let comp = trace::decompose(&self.surface, &small)?;
                let link = self.surface.vertex_link_coords();
                for (c, _) in &comp {
                    if c.as_slice() == link {
                        return Err(Error::Inessential(
                            "component is the vertex-linking curve".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Structured violation report for the `validate` CLI surface.
    pub fn violation(&self) -> Option<Violation> {
        match self.validate() {
            Ok(()) => None,
            Err(Error::Matching { triangle, reason }) => {
                Some(Violation::Matching { triangle, reason })
            }
            Err(Error::Inessential(_)) => Some(Violation::InessentialComponent {
                coords: self
                    .surface
                    .vertex_link_coords()
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            }),
            Err(_) => None,
        }
    }

    /// Decompose into primitive components with multiplicities, ordered
    /// lexicographically by coordinate vector.
    pub fn decompose(&self) -> Result<ComponentDecomposition> {
        if self.is_empty() {
            return Ok(ComponentDecomposition {
                components: Vec::new(),
            });
        }
        let small = self
            .coords_u64()
            .ok_or_else(|| Error::Budget("decompose: coordinates exceed u64".into()))?;
        let raw = trace::decompose(&self.surface, &small)?;
        let mut components: Vec<(Multicurve, BigUint)> = raw
            .into_iter()
            .map(|(coords, mult)| {
                (
                    Multicurve::new_unchecked(
                        self.surface.clone(),
                        coords.iter().map(|&c| BigUint::from(c)).collect(),
                    ),
                    BigUint::from(mult),
                )
            })
            .collect();
        components.sort_by(|a, b| a.0.coords.cmp(&b.0.coords));
        Ok(ComponentDecomposition { components })
    }

    /// True if the multicurve is primitive and connected (single component,
    /// multiplicity one).
    pub fn is_primitive(&self) -> Result<bool> {
        let d = self.decompose()?;
        Ok(d.components.len() == 1 && d.components[0].1 == BigUint::one() && {
            d.components[0].0.coords == self.coords
        })
    }

    /// Coordinatewise sum; valid when the two systems are disjoint, which
    /// the caller asserts (used to assemble multicurves from disjoint
    /// components).
    pub fn disjoint_union(&self, other: &Multicurve) -> Result<Multicurve> {
        self.same_surface(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Multicurve::new_normal(self.surface.clone(), coords)
    }

    /// Whether all coordinates are even, i.e. the class is null-homologous
    /// mod 2. For a primitive curve this detects separating curves.
    pub fn all_even(&self) -> bool {
        self.coords.iter().all(|c| (c % 2u8).is_zero())
    }

    pub fn same_surface(&self, other: &Multicurve) -> Result<()> {
        if self.surface.genus() != other.surface.genus() {
            return Err(Error::SurfaceMismatch(
                self.surface.genus(),
                other.surface.genus(),
            ));
        }
        Ok(())
    }

    pub fn to_file(&self) -> CurveFile {
        CurveFile {
            surface: self.surface.genus(),
            coords: self.coords.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_file(surface: Arc<TriangulatedSurface>, file: &CurveFile) -> Result<Self> {
        if file.surface != surface.genus() {
            return Err(Error::SurfaceMismatch(file.surface, surface.genus()));
        }
        let coords = file
            .coords
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|e| Error::Invalid(format!("bad coordinate {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Multicurve::new(surface, coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surface() -> Arc<TriangulatedSurface> {
        Arc::new(TriangulatedSurface::build(2).unwrap())
    }

    #[test]
    fn empty_is_valid() {
        let s = surface();
        let m = Multicurve::from_u64(s.clone(), &[0; 9]).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn vertex_link_rejected() {
        let s = surface();
        let link: Vec<u64> = s.vertex_link_coords().to_vec();
        let err = Multicurve::from_u64(s, &link).unwrap_err();
        assert!(matches!(err, Error::Inessential(_)));
    }

    #[test]
    fn length_mismatch_is_distinct_error() {
        let s = surface();
        let err = Multicurve::from_u64(s, &[0; 4]).unwrap_err();
        assert!(matches!(err, Error::CoordLength { got: 4, want: 9 }));
    }

    #[test]
    fn odd_triangle_sum_names_triangle() {
        let s = surface();
        let mut coords = vec![0u64; 9];
        coords[0] = 1;
        let err = Multicurve::from_u64(s, &coords).unwrap_err();
        match err {
            Error::Matching { reason, .. } => assert!(reason.contains("odd")),
            other => panic!("expected matching violation, got {other:?}"),
        }
    }
}
