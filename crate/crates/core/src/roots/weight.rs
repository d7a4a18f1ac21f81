use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact rational scalar for weight coordinates.
pub type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightBasis {
    /// Integer tuple `(chi_0, ..., chi_d)` for `GL_{d+1}`.
    GlTuple,
    /// Coordinates with respect to the fundamental weights (Dynkin labels).
    Fundamental,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
    pub basis: WeightBasis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Weight {
    pub fn gl_tuple(coords: Vec<i64>) -> Self {
        Weight {
            coords: coords.into_iter().map(Q::from).collect(),
            basis: WeightBasis::GlTuple,
        }
    }

    pub fn fundamental(coords: Vec<i64>) -> Self {
        Weight {
            coords: coords.into_iter().map(Q::from).collect(),
            basis: WeightBasis::Fundamental,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
            basis: self.basis,
        }
    }

    /// Integer coordinates, when every coordinate is integral.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Parses a comma separated tuple such as `-1,2,0` or `1/2,3`.
    pub fn parse_coords(s: &str) -> Result<Vec<Q>> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|t| {
                let t = t.trim();
                Q::from_str(t).map_err(|_| Error::Parse(format!("bad weight coordinate {t:?}")))
            })
            .collect()
    }
}

fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Integral coordinates serialize as JSON integers, others as `"p/q"` strings.
impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            if c.is_integer() {
                seq.serialize_element(&c.to_integer())?;
            } else {
                seq.serialize_element(&fmt_q(c))?;
            }
        }
        seq.end()
    }
}

/// Serializes a rational as an integer when possible, else as `"p/q"`.
pub(crate) fn q_json(q: &Q) -> serde_json::Value {
    if q.is_integer() {
        serde_json::Value::from(q.to_integer())
    } else {
        serde_json::Value::from(fmt_q(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let c = Weight::parse_coords("-1, 2,1/2").unwrap();
        let w = Weight {
            coords: c,
            basis: WeightBasis::Fundamental,
        };
        assert_eq!(w.to_string(), "(-1,2,1/2)");
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"[-1,2,"1/2"]"#);
        assert!(Weight::parse_coords("1,x").is_err());
        assert!(Weight::parse_coords("").unwrap().is_empty());
    }
}
