//! Part alphabets: the set `A` of allowed part values.
//!
//! A set may be infinite (`N`, `N\{k}`, odd numbers); the rest of the crate
//! only ever sees `materialize(n)`, the sorted members `<= n`. Parts above
//! the truncation order contribute only x-degrees above the order, so this
//! loses nothing.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartSetKind {
    /// Strictly increasing list of parts, all >= 1.
    Explicit(Vec<u32>),
    AllNaturals,
    /// All naturals except `k`.
    NaturalsWithout(u32),
    Odds,
}

/// A part alphabet together with the spec string it was written as.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSet {
    kind: PartSetKind,
    spec: String,
}

impl PartSet {
    pub fn explicit(parts: &[u32]) -> Self {
        let mut sorted: Vec<u32> = parts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert!(
            sorted.first().is_none_or(|&p| p >= 1),
            "parts must be positive"
        );
        let spec = sorted
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        PartSet {
            kind: PartSetKind::Explicit(sorted),
            spec,
        }
    }

    pub fn naturals() -> Self {
        PartSet {
            kind: PartSetKind::AllNaturals,
            spec: "N".to_string(),
        }
    }

    pub fn naturals_without(k: u32) -> Self {
        assert!(k >= 1);
        PartSet {
            kind: PartSetKind::NaturalsWithout(k),
            spec: format!("N\\{{{k}}}"),
        }
    }

    pub fn odds() -> Self {
        PartSet {
            kind: PartSetKind::Odds,
            spec: "odd".to_string(),
        }
    }

    pub fn kind(&self) -> &PartSetKind {
        &self.kind
    }

    /// The spec string this set parses from (or a canonical equivalent).
    pub fn spec(&self) -> &str {
        &self.spec
    }

    /// Exactly the members `<= n`, ascending.
    pub fn materialize(&self, n: usize) -> Vec<u32> {
        let n = u32::try_from(n).expect("truncation order fits in u32");
        match &self.kind {
            PartSetKind::Explicit(parts) => {
                parts.iter().copied().take_while(|&p| p <= n).collect()
            }
            PartSetKind::AllNaturals => (1..=n).collect(),
            PartSetKind::NaturalsWithout(k) => (1..=n).filter(|p| p != k).collect(),
            PartSetKind::Odds => (1..=n).step_by(2).collect(),
        }
    }

    /// Membership test, valid for any part value.
    pub fn contains(&self, p: u32) -> bool {
        if p == 0 {
            return false;
        }
        match &self.kind {
            PartSetKind::Explicit(parts) => parts.binary_search(&p).is_ok(),
            PartSetKind::AllNaturals => true,
            PartSetKind::NaturalsWithout(k) => p != *k,
            PartSetKind::Odds => p % 2 == 1,
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// Parse a part-set spec.
///
/// Grammar: `N` | `odd` | `N\{<int>}` | comma-list of positive integers
/// (`1,2`) | inclusive range `a..b`. Explicit lists are deduplicated and
/// sorted. Whitespace around tokens is ignored.
pub fn parse_set(spec: &str) -> Result<PartSet> {
    Parser {
        input: spec,
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::ParseSet {
            pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn eat(&mut self, expected: char) -> Result<()> {
        if self.peek() == Some(expected) {
            self.pos += expected.len_utf8();
            Ok(())
        } else {
            self.error(self.pos, format!("expected '{expected}'"))
        }
    }

    fn parse(mut self) -> Result<PartSet> {
        self.skip_ws();
        let start = self.pos;
        let result = match self.peek() {
            None => self.error(start, "empty part-set spec"),
            Some('N') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek().is_none() {
                    Ok(PartSet::naturals())
                } else {
                    self.eat('\\')?;
                    self.eat('{')?;
                    self.skip_ws();
                    let k = self.parse_int()?;
                    self.skip_ws();
                    self.eat('}')?;
                    Ok(PartSet::naturals_without(k))
                }
            }
            Some('o') => {
                if self.input[self.pos..].trim_end() == "odd" {
                    self.pos = self.input.len();
                    Ok(PartSet::odds())
                } else {
                    self.error(start, "expected 'odd'")
                }
            }
            Some(c) if c.is_ascii_digit() => self.parse_list_or_range(),
            Some(c) => self.error(start, format!("unexpected character '{c}'")),
        }?;
        self.skip_ws();
        if self.pos != self.input.len() {
            return self.error(self.pos, "trailing input");
        }
        Ok(result)
    }

    fn parse_int(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(start, "expected a positive integer");
        }
        let value: u32 = match self.input[start..self.pos].parse() {
            Ok(v) => v,
            Err(_) => return self.error(start, "integer out of range"),
        };
        if value == 0 {
            return self.error(start, "parts must be positive");
        }
        Ok(value)
    }

    fn parse_list_or_range(&mut self) -> Result<PartSet> {
        let first = self.parse_int()?;
        self.skip_ws();
        if self.input[self.pos..].starts_with("..") {
            let range_pos = self.pos;
            self.pos += 2;
            self.skip_ws();
            let last = self.parse_int()?;
            if last < first {
                return self.error(range_pos, format!("empty range {first}..{last}"));
            }
            return Ok(PartSet::explicit(&(first..=last).collect::<Vec<_>>()));
        }
        let mut parts = vec![first];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    self.skip_ws();
                    parts.push(self.parse_int()?);
                }
                _ => break,
            }
        }
        Ok(PartSet::explicit(&parts))
    }
}
