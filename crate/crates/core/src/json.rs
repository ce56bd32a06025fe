//! JSON document forms. Rationals are written as bare integers when
//! integral and as `"p/q"` strings otherwise; floats are rejected on input.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::Lattice;
use crate::linalg::{self, parse_rational, Rational, Vector};
use crate::pointset::PointSet;
use crate::polytope::Polytope;
use crate::tiling::Tiling;
use crate::Error;

/// Serde adapter for a single rational, usable with `#[serde(with = ...)]`.
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        if linalg::is_integral(x) {
            if let Some(n) = x.numer().to_i64() {
                return s.serialize_i64(n);
            }
        }
        s.serialize_str(&linalg::rational_to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }
}

struct RationalVisitor;

impl Visitor<'_> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(Rational::from_integer(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        Ok(Rational::from_integer(BigInt::from(v)))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rational, E> {
        Err(E::custom(format!("floating-point value {v} is not allowed; use an integer or a \"p/q\" string")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        parse_rational(v).ok_or_else(|| E::custom(format!("invalid rational {v:?}")))
    }
}

struct RationalRef<'a>(&'a Rational);

impl Serialize for RationalRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serialize(self.0, s)
    }
}

/// An owned rational with the document encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRepr(pub Rational);

impl Serialize for RationalRepr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RationalRepr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        rational::deserialize(d).map(RationalRepr)
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.dim()))?;
        for x in self.iter() {
            seq.serialize_element(&RationalRef(x))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Vector;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of rationals")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vector, A::Error> {
                let mut coords = Vec::new();
                while let Some(RationalRepr(x)) = seq.next_element()? {
                    coords.push(x);
                }
                Ok(Vector::new(coords))
            }
        }
        d.deserialize_seq(V)
    }
}

/// `{"basis": [[col1], [col2], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub basis: Vec<Vector>,
}

impl LatticeDoc {
    pub fn to_lattice(&self) -> Result<Lattice, Error> {
        Lattice::from_columns(&self.basis)
    }
}

impl From<&Lattice> for LatticeDoc {
    fn from(l: &Lattice) -> Self {
        LatticeDoc { basis: l.basis_vectors() }
    }
}

/// `{"points": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetDoc {
    pub points: Vec<Vector>,
}

impl PointSetDoc {
    pub fn to_point_set(&self) -> Result<PointSet, Error> {
        PointSet::new(self.points.clone())
    }
}

impl From<&PointSet> for PointSetDoc {
    fn from(k: &PointSet) -> Self {
        PointSetDoc { points: k.points().to_vec() }
    }
}

/// `{"vertices": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub vertices: Vec<Vector>,
}

impl PolytopeDoc {
    pub fn to_polytope(&self) -> Result<Polytope, Error> {
        Polytope::hull(&self.vertices)
    }
}

impl From<&Polytope> for PolytopeDoc {
    fn from(p: &Polytope) -> Self {
        PolytopeDoc { vertices: p.vertices().to_vec() }
    }
}

/// `{"M": lattice, "L": lattice, "T": pointset}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingDoc {
    #[serde(rename = "M")]
    pub m: LatticeDoc,
    #[serde(rename = "L")]
    pub l: LatticeDoc,
    #[serde(rename = "T")]
    pub t: PointSetDoc,
}

impl TilingDoc {
    /// Parses and verifies.
    pub fn to_tiling(&self) -> Result<Tiling, Error> {
        Tiling::verify(self.m.to_lattice()?, self.l.to_lattice()?, self.t.to_point_set()?)
    }
}

impl From<&Tiling> for TilingDoc {
    fn from(t: &Tiling) -> Self {
        TilingDoc { m: t.m().into(), l: t.l().into(), t: t.t().into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    #[test]
    fn vectors_round_trip() {
        let v = Vector::new(vec![int(3), frac(-1, 2), int(0)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[3,"-1/2",0]"#);
        assert_eq!(serde_json::from_str::<Vector>(&s).unwrap(), v);
        assert!(serde_json::from_str::<Vector>("[1.5]").is_err());
        assert_eq!(serde_json::from_str::<Vector>(r#"["4/6"]"#).unwrap(), Vector::new(vec![frac(2, 3)]));
    }

    #[test]
    fn tiling_document() {
        let text = r#"{"M":{"basis":[[1,0],[0,1]]},"L":{"basis":[[3,-1],[2,1]]},"T":{"points":[[0,0],[1,0],[2,0],[0,1],[1,1]]}}"#;
        let doc: TilingDoc = serde_json::from_str(text).unwrap();
        let t = doc.to_tiling().unwrap();
        assert!(t.is_verified());
        let back = serde_json::to_string(&TilingDoc::from(&t)).unwrap();
        let again: TilingDoc = serde_json::from_str(&back).unwrap();
        assert_eq!(again, TilingDoc::from(&t));
    }
}
