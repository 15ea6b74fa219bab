//! Scalar abstraction over the coordinate arithmetic.
//!
//! All geometric predicates and interval boundaries are computed in a
//! scalar type `S`. The default is [`Rat`] (arbitrary-precision rationals),
//! which makes every predicate exact as long as inputs are rational —
//! decimal strings always are. `f64` implements the same trait as a fast
//! path for large benchmarks; results there are only trusted to 1e-9.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Pow, Signed, ToPrimitive};
use std::cmp::Ordering;
use std::fmt::Debug;

/// Exact rational scalar used by default throughout the crate.
pub type Rat = num_rational::BigRational;

pub trait Scalar:
    Num + Signed + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive + 'static
{
    /// Parses a decimal literal (`-12.75`, `3e-2`, `.5`). Exact for rational
    /// scalars; rejects non-finite values.
    fn from_decimal(text: &str) -> Option<Self>;

    /// Total order. Panics on incomparable values (non-finite floats),
    /// which validated inputs never produce.
    fn cmp_total(&self, other: &Self) -> Ordering {
        self.partial_cmp(other)
            .expect("scalar comparison on non-finite value")
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("small integer must be representable")
    }

    /// Nearest f64; used only for serialization and rendering.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn min_of(self, other: Self) -> Self {
        if other.cmp_total(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other.cmp_total(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    fn half(self) -> Self {
        self / Self::from_int(2)
    }
}

impl Scalar for f64 {
    fn from_decimal(text: &str) -> Option<Self> {
        text.parse::<f64>().ok().filter(|v| v.is_finite())
    }
}

impl Scalar for Rat {
    fn from_decimal(text: &str) -> Option<Self> {
        parse_decimal_rational(text)
    }
}

/// `sign? digits? ('.' digits?)? ([eE] sign? digits)?` with at least one
/// digit in the mantissa. `"1.25e-2"` becomes exactly 125/10000.
fn parse_decimal_rational(text: &str) -> Option<Rat> {
    let text = text.trim();
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return None;
    }
    let mut i = 0;
    let negative = match bytes[0] {
        b'-' => {
            i += 1;
            true
        }
        b'+' => {
            i += 1;
            false
        }
        _ => false,
    };

    let mut digits = String::new();
    let mut frac_len: u32 = 0;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        digits.push(bytes[i] as char);
        i += 1;
    }
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            digits.push(bytes[i] as char);
            frac_len += 1;
            i += 1;
        }
    }
    if digits.is_empty() {
        return None;
    }

    let mut exp: i64 = 0;
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        i += 1;
        let exp_start = i;
        if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
            i += 1;
        }
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        exp = text[exp_start..i].parse::<i64>().ok()?;
    }
    if i != bytes.len() {
        return None;
    }

    let mantissa: BigInt = digits.parse().ok()?;
    let ten = BigInt::from(10);
    let scale = exp - frac_len as i64;
    let mut value = if scale >= 0 {
        Rat::from_integer(mantissa * ten.pow(scale as u64))
    } else {
        Rat::new(mantissa, ten.pow((-scale) as u64))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Shortest decimal that round-trips through f64; 1e-9 is far inside the
/// representable precision for desk-scale coordinates.
pub fn format_scalar<S: Scalar>(value: &S) -> String {
    let v = value.to_f64_lossy();
    if v == 0.0 {
        // Avoid the "-0" artifact of negative rationals rounding to zero.
        "0".to_string()
    } else {
        format!("{}", v)
    }
}

/// Ordering wrapper so scalars can live in heaps and sorted containers.
#[derive(Clone, Debug, PartialEq)]
pub struct OrdScalar<S: Scalar>(pub S);

impl<S: Scalar> Eq for OrdScalar<S> {}

impl<S: Scalar> PartialOrd for OrdScalar<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Scalar> Ord for OrdScalar<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_total(&other.0)
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
pub(crate) fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
