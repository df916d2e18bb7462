use std::io::Write;

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::CliError;

/// A float written with 17 significant digits.
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let x = if self.0 == 0.0 { 0.0 } else { self.0 };
        let raw = RawValue::from_string(format!("{x:.16e}")).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn nums<const N: usize>(xs: [f64; N]) -> [Num; N] {
    xs.map(Num)
}

pub fn complex(z: Complex64) -> [Num; 2] {
    [Num(z.re), Num(z.im)]
}

/// Writes one document per line, or indented documents with `pretty`.
pub struct Emitter<W: Write> {
    out: W,
    pretty: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, pretty: bool) -> Emitter<W> {
        Emitter { out, pretty }
    }

    pub fn emit<T: Serialize>(&mut self, doc: &T) -> Result<(), CliError> {
        let text = if self.pretty { serde_json::to_string_pretty(doc) } else { serde_json::to_string(doc) }
            .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), CliError> {
        self.out.flush()?;
        Ok(())
    }
}
