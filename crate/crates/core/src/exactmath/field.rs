use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::Matrix;
use super::rational::{display_rational, format_rational, parse_rational, Rational};
use super::ring::{Determinant, ExactDiv, Field, Ring};
use crate::error::{Error, Result};

/// Which field a [`FieldScalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    Q,
    Qi,
    Qw,
}

impl FieldTag {
    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::Qi => "Qi",
            FieldTag::Qw => "Qw",
        }
    }

    /// Smallest field containing both, if any.
    pub fn join(self, other: FieldTag) -> Result<FieldTag> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (FieldTag::Q, b) => Ok(b),
            (a, FieldTag::Q) => Ok(a),
            (a, b) => Err(Error::TagMismatch(a.name(), b.name())),
        }
    }

    pub fn parse(s: &str) -> Result<FieldTag> {
        match s {
            "Q" => Ok(FieldTag::Q),
            "Qi" => Ok(FieldTag::Qi),
            "Qw" => Ok(FieldTag::Qw),
            _ => Err(Error::Parse(format!("unknown field tag {s:?}"))),
        }
    }
}

/// `a + b·τ` with `τ = i` (`τ² = -1`) in `Qi`, `τ = ω` (`ω² = ω - 1`) in
/// `Qw`, and `b = 0` in `Q`.
///
/// Rational values compare equal across tags. The operators panic when
/// a `Qi` value meets a `Qw` value; the `try_*` methods report it instead.
#[derive(Clone, Debug)]
pub struct FieldScalar {
    tag: FieldTag,
    a: Rational,
    b: Rational,
}

impl FieldScalar {
    pub fn new(tag: FieldTag, a: Rational, b: Rational) -> Result<Self> {
        if tag == FieldTag::Q && !b.is_zero() {
            return Err(Error::InvalidArgument(
                "rational scalar with nonzero imaginary part".into(),
            ));
        }
        Ok(FieldScalar { tag, a, b })
    }

    pub fn rational(a: Rational) -> Self {
        FieldScalar {
            tag: FieldTag::Q,
            a,
            b: Rational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(super::rat(n, d))
    }

    pub fn i() -> Self {
        FieldScalar {
            tag: FieldTag::Qi,
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// `ω = e^{iπ/3}`, root of `ω² - ω + 1`.
    pub fn omega() -> Self {
        FieldScalar {
            tag: FieldTag::Qw,
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn re_part(&self) -> &Rational {
        &self.a
    }

    pub fn tau_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Same value viewed in a larger field.
    pub fn embed(&self, tag: FieldTag) -> Result<Self> {
        let t = self.tag.join(tag)?;
        Ok(FieldScalar {
            tag: t,
            a: self.a.clone(),
            b: self.b.clone(),
        })
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let tag = self.tag.join(o.tag)?;
        Ok(FieldScalar {
            tag,
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        let tag = self.tag.join(o.tag)?;
        Ok(FieldScalar {
            tag,
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let tag = self.tag.join(o.tag)?;
        let (a, b, c, d) = (&self.a, &self.b, &o.a, &o.b);
        let (re, tau) = match tag {
            FieldTag::Q => (a * c, Rational::zero()),
            FieldTag::Qi => (a * c - b * d, a * d + b * c),
            FieldTag::Qw => {
                let bd = b * d;
                (a * c - &bd, a * d + b * c + bd)
            }
        };
        Ok(FieldScalar { tag, a: re, b: tau })
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.tag.join(o.tag)?;
        let inv = o.try_inv()?;
        self.try_mul(&inv)
    }

    /// Field norm to `Q`.
    pub fn norm(&self) -> Rational {
        let (a, b) = (&self.a, &self.b);
        match self.tag {
            FieldTag::Q => a * a,
            FieldTag::Qi => a * a + b * b,
            FieldTag::Qw => a * a + a * b + b * b,
        }
    }

    /// Nontrivial Galois conjugate (identity on `Q`).
    pub fn conj(&self) -> Self {
        let (a, b) = (&self.a, &self.b);
        let (re, tau) = match self.tag {
            FieldTag::Q => (a.clone(), Rational::zero()),
            FieldTag::Qi => (a.clone(), -b),
            FieldTag::Qw => (a + b, -b),
        };
        FieldScalar {
            tag: self.tag,
            a: re,
            b: tau,
        }
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero_value() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(FieldScalar {
            tag: self.tag,
            a: c.a / &n,
            b: c.b / &n,
        })
    }

    pub fn is_zero_value(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = FieldScalar {
            tag: self.tag,
            a: Rational::one(),
            b: Rational::zero(),
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            base = base.try_mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Common field of a collection of scalars.
    pub fn common_tag<'a, I: IntoIterator<Item = &'a FieldScalar>>(xs: I) -> Result<FieldTag> {
        xs.into_iter().try_fold(FieldTag::Q, |t, x| t.join(x.tag))
    }
}

impl PartialEq for FieldScalar {
    fn eq(&self, o: &Self) -> bool {
        if self.a != o.a || self.b != o.b {
            return false;
        }
        self.b.is_zero() || self.tag == o.tag
    }
}

impl Eq for FieldScalar {}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.tag {
            FieldTag::Qi => "i",
            _ => "ω",
        };
        if self.b.is_zero() {
            return write!(f, "{}", display_rational(&self.a));
        }
        let tau = if num_traits::One::is_one(&self.b) {
            sym.to_string()
        } else if num_traits::One::is_one(&-&self.b) {
            format!("-{sym}")
        } else {
            format!("{}{sym}", display_rational(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{tau}")
        } else if self.b.is_negative() {
            write!(
                f,
                "{} - {}",
                display_rational(&self.a),
                tau.trim_start_matches('-')
            )
        } else {
            write!(f, "{} + {tau}", display_rational(&self.a))
        }
    }
}

impl FromStr for FieldScalar {
    type Err = Error;

    /// `p/q`, or `a + b·τ` written like `1/2+3i`, `-w`, `2-1/3ω`; `τ` is
    /// `i` for `Qi` and `w` or `ω` for `Qw`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, tag) = if let Some(b) = s.strip_suffix('i') {
            (b, FieldTag::Qi)
        } else if let Some(b) = s.strip_suffix('w').or_else(|| s.strip_suffix('ω')) {
            (b, FieldTag::Qw)
        } else {
            return parse_rational(&s).map(FieldScalar::rational);
        };
        let split = body
            .char_indices()
            .rev()
            .find(|&(k, ch)| k > 0 && (ch == '+' || ch == '-'))
            .map(|(k, _)| k);
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im.trim_start_matches('+') {
            "" => "1",
            "-" => "-1",
            t => t,
        };
        let a = if re.is_empty() {
            Rational::from_integer(0.into())
        } else {
            parse_rational(re)?
        };
        FieldScalar::new(tag, a, parse_rational(im)?)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, o: &FieldScalar) -> FieldScalar {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, o: FieldScalar) -> FieldScalar {
                (&self).$try(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, o: &FieldScalar) -> FieldScalar {
                (&self).$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            tag: self.tag,
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar {
            tag: self.tag,
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl From<Rational> for FieldScalar {
    fn from(r: Rational) -> Self {
        FieldScalar::rational(r)
    }
}

impl Ring for FieldScalar {
    fn zero() -> Self {
        FieldScalar::int(0)
    }
    fn one() -> Self {
        FieldScalar::int(1)
    }
    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for FieldScalar {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

impl ExactDiv for FieldScalar {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.try_div(d).ok()
    }
}

impl Determinant for FieldScalar {
    fn determinant(m: &Matrix<Self>) -> Result<Self> {
        FieldScalar::common_tag(m.entries())?;
        super::ring::gauss_det(m)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    field: String,
    a: String,
    b: String,
}

impl Serialize for FieldScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarJson {
            field: self.tag.name().to_string(),
            a: format_rational(&self.a),
            b: format_rational(&self.b),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ScalarJson::deserialize(d)?;
        let tag = FieldTag::parse(&j.field).map_err(D::Error::custom)?;
        let a = parse_rational(&j.a).map_err(D::Error::custom)?;
        let b = parse_rational(&j.b).map_err(D::Error::custom)?;
        FieldScalar::new(tag, a, b).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn w(a: i64, b: i64) -> FieldScalar {
        FieldScalar::new(FieldTag::Qw, rat(a, 1), rat(b, 1)).unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(
            "3/6".parse::<FieldScalar>().unwrap(),
            FieldScalar::frac(1, 2)
        );
        assert_eq!("i".parse::<FieldScalar>().unwrap(), FieldScalar::i());
        assert_eq!("ω".parse::<FieldScalar>().unwrap(), FieldScalar::omega());
        assert_eq!("-w".parse::<FieldScalar>().unwrap(), w(0, -1));
        assert_eq!("2 - 3w".parse::<FieldScalar>().unwrap(), w(2, -3));
        let z: FieldScalar = "1/2+3i".parse().unwrap();
        assert_eq!(z.tag(), FieldTag::Qi);
        assert_eq!(z.to_string(), "1/2 + 3i");
        assert!("x".parse::<FieldScalar>().is_err());
        assert!("1/0".parse::<FieldScalar>().is_err());
    }

    #[test]
    fn defining_relations() {
        let om = FieldScalar::omega();
        assert_eq!(&om * &om, w(-1, 1));
        assert_eq!(FieldScalar::i() * FieldScalar::i(), FieldScalar::int(-1));
        let d = w(-1, 2);
        assert_eq!(&d * &d, FieldScalar::int(-3));
        let qi = FieldScalar::i() - FieldScalar::i().try_inv().unwrap();
        assert_eq!(&qi * &qi, FieldScalar::int(-4));
        // ω - ω⁻¹ = 2ω - 1
        assert_eq!(&om - &om.try_inv().unwrap(), d);
        // ω⁶ = 1 and ω³ = -1
        assert_eq!(om.powi(3).unwrap(), FieldScalar::int(-1));
        assert_eq!(om.powi(6).unwrap(), FieldScalar::int(1));
    }

    #[test]
    fn mixing_tags() {
        assert_eq!(
            FieldScalar::i().try_add(&FieldScalar::omega()),
            Err(Error::TagMismatch("Qi", "Qw"))
        );
        assert_eq!(
            (FieldScalar::int(2) * FieldScalar::omega()).tag(),
            FieldTag::Qw
        );
        assert_eq!(
            FieldScalar::int(2).embed(FieldTag::Qi).unwrap(),
            FieldScalar::int(2)
        );
        assert_ne!(FieldScalar::i(), FieldScalar::omega());
        assert_eq!(FieldScalar::int(0).try_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_round_trip() {
        let x = FieldScalar::new(FieldTag::Qw, rat(-3, 4), rat(5, 1)).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"field":"Qw","a":"-3/4","b":"5/1"}"#);
        let y: FieldScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert!(
            serde_json::from_str::<FieldScalar>(r#"{"field":"Q","a":"1/2","b":"1/1"}"#).is_err()
        );
    }

    #[test]
    fn display() {
        assert_eq!(w(-1, 2).to_string(), "-1 + 2ω");
        assert_eq!(FieldScalar::i().to_string(), "i");
        let x = FieldScalar::new(FieldTag::Qi, rat(1, 2), rat(-3, 1)).unwrap();
        assert_eq!(x.to_string(), "1/2 - 3i");
    }
}
