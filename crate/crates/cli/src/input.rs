//! Curves and fields given on the command line, as JSON or as text.

use serde_json::Value;

use cubic_torsion::cubic_field::{CubicField, FieldError};
use cubic_torsion::elliptic::{CurveError, EllipticCurve};
use cubic_torsion::exact::{parse_rational, Poly};
use cubic_torsion::{Rational, RationalCurve, RationalPoly};

use crate::CliError;

/// Reads `@path` from a file, anything else verbatim.
fn contents(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn rational(v: &Value) -> Result<Rational, CliError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        other => return Err(CliError::Usage(format!("expected a rational, got {other}"))),
    };
    parse_rational(&text).map_err(|e| CliError::Usage(e.to_string()))
}

fn rationals(v: &Value) -> Result<Vec<Rational>, CliError> {
    match v {
        Value::Array(xs) => xs.iter().map(rational).collect(),
        other => Err(CliError::Usage(format!("expected an array of rationals, got {other}"))),
    }
}

/// `{"a": [a1, a2, a3, a4, a6]}` as reports print it, `{"a": [A, B]}` or a
/// bare array for `y² = x³ + Ax + B`. Entries are integers or `"p/q"`.
pub fn curve(arg: &str) -> Result<RationalCurve, CliError> {
    let text = contents(arg)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("curve JSON: {e}")))?;
    let coeffs = match &v {
        Value::Object(o) => rationals(o.get("a").ok_or_else(|| CliError::Usage("curve JSON needs \"a\"".into()))?)?,
        other => rationals(other)?,
    };
    let built = match <[Rational; 5]>::try_from(coeffs.clone()) {
        Ok(a) => EllipticCurve::new(a),
        Err(_) => match <[Rational; 2]>::try_from(coeffs) {
            Ok([a, b]) => EllipticCurve::short(a, b),
            Err(_) => return Err(CliError::Usage("a curve needs 5 or 2 coefficients".into())),
        },
    };
    built.map_err(|e| match e {
        CurveError::Singular => CliError::Input("singular curve (discriminant zero)".into()),
        other => CliError::Input(other.to_string()),
    })
}

/// A coefficient array (constant term first, as reports print it), a JSON
/// string, or plain text such as `x^3 + 2x^2 - x - 1`.
pub fn polynomial(arg: &str) -> Result<RationalPoly, CliError> {
    let text = contents(arg)?;
    let parse = |s: &str| s.parse::<Poly<Rational>>().map_err(|e| CliError::Usage(e.to_string()));
    match serde_json::from_str::<Value>(&text) {
        Ok(Value::String(s)) => parse(&s),
        Ok(v @ Value::Array(_)) => Ok(RationalPoly::new(rationals(&v)?)),
        Ok(Value::Object(o)) => match o.get("minpoly").or_else(|| o.get("field")) {
            Some(Value::String(s)) => parse(s),
            Some(v) => Ok(RationalPoly::new(rationals(v)?)),
            None => Err(CliError::Usage("field JSON needs \"minpoly\"".into())),
        },
        _ => parse(&text),
    }
}

pub fn field(arg: &str) -> Result<CubicField, CliError> {
    CubicField::new(polynomial(arg)?).map_err(|e| match e {
        FieldError::Reducible(r) => CliError::Input(format!("reducible cubic (rational root {r})")),
        other => CliError::Input(other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_forms() {
        let long = curve(r#"{"base": "Q", "a": ["1", "-1", "0", "-107", "552"]}"#).unwrap();
        assert_eq!(long.a4(), &Rational::from_integer((-107).into()));
        let short = curve("[0, 1]").unwrap();
        assert!(short.is_short());
        assert!(matches!(curve("[0, 0]"), Err(CliError::Input(_))));
        assert!(matches!(curve("[1, 2, 3]"), Err(CliError::Usage(_))));
    }

    #[test]
    fn field_forms() {
        let text = field("x^3 + 2x^2 - x - 1").unwrap();
        assert_eq!(field(r#"["-1", "-1", "2", "1"]"#).unwrap(), text);
        assert_eq!(field(r#""x^3+2*x^2-x-1""#).unwrap(), text);
        assert!(matches!(field("x^3 - 1"), Err(CliError::Input(_))));
    }
}
