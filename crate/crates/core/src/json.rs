//! JSON helpers: big integers as JSON numbers, rationals as {"num","den"}.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Number, Value};

use crate::{Error, Rational, Result};

pub fn bigint(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn parse_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => BigInt::from_str(s).map_err(|_| Error::Parse(format!("not an integer: {s}"))),
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}

pub fn rational(r: &Rational) -> Value {
    serde_json::json!({ "num": r.numer(), "den": r.denom() })
}

pub fn parse_rational(v: &Value) -> Result<Rational> {
    let num = v.get("num").and_then(Value::as_i64);
    let den = v.get("den").and_then(Value::as_i64);
    match (num, den) {
        (Some(n), Some(d)) if d != 0 => Ok(Rational::new(n, d)),
        _ => Err(Error::Parse(format!("expected {{\"num\",\"den\"}}, got {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_survive() {
        let x: BigInt = BigInt::from(3).pow(80u32);
        let v = bigint(&x);
        assert_eq!(v.to_string(), x.to_string());
        assert_eq!(parse_bigint(&v).unwrap(), x);
        let r = Rational::new(-3, 8);
        assert_eq!(rational(&r).to_string(), r#"{"den":8,"num":-3}"#);
        assert_eq!(parse_rational(&rational(&r)).unwrap(), r);
    }
}
