//! Linear combinations of diagrams over `Z[δ]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Deserialize;

use crate::diagram::{Diagram, RawDiagram};
use crate::error::{Error, Result};

/// Integer polynomial in `δ`; `coefficients[i]` multiplies `δ^i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DeltaPoly {
    coefficients: Vec<i64>,
}

impl DeltaPoly {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `δ^power`.
    pub fn delta_pow(power: usize) -> Self {
        let mut c = vec![0; power + 1];
        c[power] = 1;
        Self { coefficients: c }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Multiplies by `δ^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; power];
        c.extend_from_slice(&self.coefficients);
        Self { coefficients: c }
    }
}

impl Add for &DeltaPoly {
    type Output = DeltaPoly;

    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let c = (0..len)
            .map(|i| {
                self.coefficients.get(i).copied().unwrap_or(0)
                    + rhs.coefficients.get(i).copied().unwrap_or(0)
            })
            .collect();
        DeltaPoly::new(c)
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;

    fn neg(self) -> DeltaPoly {
        DeltaPoly {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &DeltaPoly {
    type Output = DeltaPoly;

    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        self + &(-rhs)
    }
}

impl Mul for &DeltaPoly {
    type Output = DeltaPoly;

    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || rhs.is_zero() {
            return DeltaPoly::zero();
        }
        let mut c = vec![0; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        DeltaPoly::new(c)
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (power, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}")?,
            }
            match power {
                0 => {}
                1 => f.write_str("δ")?,
                p => write!(f, "δ^{p}")?,
            }
        }
        Ok(())
    }
}

/// A finite `Z[δ]`-combination of diagrams of one rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    k: usize,
    terms: BTreeMap<Diagram, DeltaPoly>,
}

impl TLElement {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::basis(Diagram::identity(k))
    }

    pub fn basis(d: Diagram) -> Self {
        Self::term(DeltaPoly::one(), d)
    }

    pub fn term(coefficient: DeltaPoly, d: Diagram) -> Self {
        let mut e = Self::zero(d.k());
        e.accumulate(d, coefficient);
        e
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &DeltaPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> DeltaPoly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    fn accumulate(&mut self, d: Diagram, c: DeltaPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&d) {
            Some(prev) => prev + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    fn check_rank(&self, other: &TLElement) -> Result<()> {
        if self.k != other.k {
            return Err(Error::RankMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TLElement) -> Result<TLElement> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.accumulate(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TLElement) -> Result<TLElement> {
        self.add(&other.scale(&DeltaPoly::constant(-1)))
    }

    pub fn scale(&self, p: &DeltaPoly) -> TLElement {
        let mut out = TLElement::zero(self.k);
        for (d, c) in &self.terms {
            out.accumulate(d.clone(), c * p);
        }
        out
    }

    /// Bilinear extension of diagram concatenation, `self` on top.
    pub fn mul(&self, other: &TLElement) -> Result<TLElement> {
        self.check_rank(other)?;
        let mut out = TLElement::zero(self.k);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (loops, d) = d1.multiply(d2)?;
                out.accumulate(d, (c1 * c2).shift(loops));
            }
        }
        Ok(out)
    }

    /// JSON list of `{"diagram": ..., "coefficients": [...]}` sorted by the
    /// serialised diagram.
    pub fn to_json(&self) -> String {
        let mut items: Vec<(String, &DeltaPoly)> =
            self.terms.iter().map(|(d, c)| (d.to_json(), c)).collect();
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let body: Vec<String> = items
            .into_iter()
            .map(|(d, c)| {
                let coeffs: Vec<String> = c.coefficients().iter().map(i64::to_string).collect();
                format!(
                    "{{\"diagram\": {d}, \"coefficients\": [{}]}}",
                    coeffs.join(", ")
                )
            })
            .collect();
        format!("[{}]", body.join(", "))
    }

    /// Parses the format written by [`TLElement::to_json`]. An empty list needs the
    /// rank from the caller.
    pub fn from_json(text: &str, k: usize) -> Result<TLElement> {
        #[derive(Deserialize)]
        struct RawTerm {
            diagram: RawDiagram,
            coefficients: Vec<i64>,
        }
        let raw: Vec<RawTerm> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = TLElement::zero(k);
        for t in raw {
            let d = t.diagram.into_diagram()?;
            if d.k() != k {
                return Err(Error::RankMismatch {
                    left: k,
                    right: d.k(),
                });
            }
            out.accumulate(d, DeltaPoly::new(t.coefficients));
        }
        Ok(out)
    }
}
