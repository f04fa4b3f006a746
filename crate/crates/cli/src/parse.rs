//! Complex literals on the command line.
//!
//! ```text
//! value   := real | complex
//! complex := [real] sign [real] "i" | [sign] [real] "i"
//! real    := decimal | integer "/" integer
//! ```
//! `i` alone is `0+1i`; a sign directly before `i` means `±1`. No whitespace.

use gelfond::ComplexValue;
use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} at position {position}: {message}")]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

fn err(input: &str, position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        input: input.to_owned(),
        position,
        message: message.into(),
    }
}

/// Parse one real component starting at byte `offset` of `input`.
fn parse_real(input: &str, text: &str, offset: usize) -> Result<f64, ParseError> {
    if text.is_empty() {
        return Err(err(input, offset, "expected a number"));
    }
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num
            .parse()
            .map_err(|_| err(input, offset, format!("bad numerator {num:?}")))?;
        let d: i64 = den
            .parse()
            .map_err(|_| err(input, offset + num.len() + 1, format!("bad denominator {den:?}")))?;
        if d == 0 {
            return Err(err(input, offset + num.len() + 1, "zero denominator"));
        }
        let r = Ratio::new(n, d);
        return Ok(*r.numer() as f64 / *r.denom() as f64);
    }
    if let Some(pos) = text
        .char_indices()
        .find(|&(_, c)| !(c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-')))
        .map(|(p, _)| p)
    {
        return Err(err(input, offset + pos, "unexpected character"));
    }
    text.parse::<f64>()
        .map_err(|_| err(input, offset, format!("bad number {text:?}")))
}

/// Sign-or-empty magnitude of an imaginary part, `text` excluding the `i`.
fn parse_imag(input: &str, text: &str, offset: usize) -> Result<f64, ParseError> {
    match text {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => {
            let (sign, body, skip) = match text.as_bytes()[0] {
                b'-' => (-1.0, &text[1..], 1),
                b'+' => (1.0, &text[1..], 1),
                _ => (1.0, text, 0),
            };
            Ok(sign * parse_real(input, body, offset + skip)?)
        }
    }
}

pub fn parse_complex(input: &str) -> Result<ComplexValue, ParseError> {
    if input.is_empty() {
        return Err(err(input, 0, "empty value"));
    }
    if let Some(pos) = input.find(char::is_whitespace) {
        return Err(err(input, pos, "whitespace is not allowed"));
    }
    let Some(body) = input.strip_suffix('i') else {
        return Ok(ComplexValue::new(parse_real(input, input, 0)?, 0.0));
    };
    // split at the last sign that is not leading and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let re = parse_real(input, &body[..k], 0)?;
            let im = parse_imag(input, &body[k..], k)?;
            Ok(ComplexValue::new(re, im))
        }
        None => Ok(ComplexValue::new(0.0, parse_imag(input, body, 0)?)),
    }
}

/// Comma-separated list; the empty string is the empty list.
pub fn parse_complex_list(input: &str) -> Result<Vec<ComplexValue>, ParseError> {
    if input.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for item in input.split(',') {
        out.push(parse_complex(item).map_err(|mut e| {
            e.position += offset;
            e.input = input.to_owned();
            e
        })?);
        offset += item.len() + 1;
    }
    Ok(out)
}
