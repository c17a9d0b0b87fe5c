//! Plain-text poset format.
//!
//! ```text
//! elements: 3
//! 0 a
//! 1 b
//! 2 c
//! covers:
//! 0 < 1
//! 1 < 2
//! bottom: 0
//! top: 2
//! ```
//!
//! Labels are read back as [`Label::Text`]. `bottom:` and `top:` are
//! optional on input; when present they must agree with the order.

use std::fmt::Write as _;

use super::{Label, Poset};
use crate::error::{Error, Result};

impl Poset {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "elements: {}", self.len());
        for (i, l) in self.labels().iter().enumerate() {
            let _ = writeln!(out, "{i} {l}");
        }
        out.push_str("covers:\n");
        for (i, j) in self.cover_pairs() {
            let _ = writeln!(out, "{i} < {j}");
        }
        if let Some(b) = self.bottom() {
            let _ = writeln!(out, "bottom: {b}");
        }
        if let Some(t) = self.top() {
            let _ = writeln!(out, "top: {t}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Poset> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .filter(|(_, l)| !l.trim().is_empty());

        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
        let count: usize = header
            .strip_prefix("elements:")
            .ok_or_else(|| Error::parse(ln, "expected `elements: <k>`"))?
            .trim()
            .parse()
            .map_err(|_| Error::parse(ln, "bad element count"))?;

        let mut labels = Vec::with_capacity(count);
        for expected in 0..count {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| Error::parse(ln, format!("missing element line {expected}")))?;
            let (idx, label) = match line.split_once(' ') {
                Some((i, l)) => (i, l),
                None => (line, ""),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::parse(ln, "bad element index"))?;
            if idx != expected {
                return Err(Error::parse(
                    ln,
                    format!("element {idx} out of order, expected {expected}"),
                ));
            }
            labels.push(Label::Text(label.to_string()));
        }

        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(ln, "missing `covers:` section"))?;
        if line.trim() != "covers:" {
            return Err(Error::parse(ln, "expected `covers:`"));
        }
        let mut covers = Vec::new();
        let mut bottom = None;
        let mut top = None;
        for (ln, line) in lines {
            let line = line.trim();
            let index = |s: &str| -> Result<usize> {
                s.trim()
                    .parse()
                    .ok()
                    .filter(|&i| i < count)
                    .ok_or_else(|| Error::parse(ln, format!("bad element index `{}`", s.trim())))
            };
            if let Some(rest) = line.strip_prefix("bottom:") {
                bottom = Some(index(rest)?);
            } else if let Some(rest) = line.strip_prefix("top:") {
                top = Some(index(rest)?);
            } else if let Some((i, j)) = line.split_once('<') {
                if bottom.is_some() || top.is_some() {
                    return Err(Error::parse(ln, "cover line after bounds"));
                }
                covers.push((index(i)?, index(j)?));
            } else {
                return Err(Error::parse(ln, format!("unrecognised line `{line}`")));
            }
        }
        let p = Poset::from_covers(labels, &covers)?;
        if bottom.is_some() && bottom != p.bottom() {
            return Err(Error::contract("declared bottom is not the unique minimal element"));
        }
        if top.is_some() && top != p.top() {
            return Err(Error::contract("declared top is not the unique maximal element"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multidegree::Multidegree;
    use crate::poset::{is_isomorphic, make_proper_div_poset};

    #[test]
    fn round_trip_keeps_structure() {
        let p = make_proper_div_poset(&Multidegree::new(vec![3, 2]).unwrap()).unwrap();
        let text = p.to_text();
        assert!(text.starts_with("elements: 7\n0 (0,0)\n"));
        let back = Poset::from_text(&text).unwrap();
        assert_eq!(back.cover_pairs(), p.cover_pairs());
        assert_eq!(back.bottom(), p.bottom());
        assert_eq!(back.top(), p.top());
        assert_eq!(back.label(6), &Label::Text("(3,2)".into()));
        assert!(is_isomorphic(&back, &p).unwrap().is_some());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Poset::from_text("").is_err());
        assert!(Poset::from_text("elements: 2\n0 a\n").is_err());
        assert!(Poset::from_text("elements: 2\n1 a\n0 b\ncovers:\n").is_err());
        assert!(Poset::from_text("elements: 2\n0 a\n1 b\ncovers:\n0 < 5\n").is_err());
        assert!(Poset::from_text("elements: 2\n0 a\n1 b\ncovers:\n0 < 1\n1 < 0\n").is_err());
        let wrong_bottom = "elements: 2\n0 a\n1 b\ncovers:\n0 < 1\nbottom: 1\n";
        assert!(matches!(Poset::from_text(wrong_bottom), Err(Error::Contract(_))));
    }

    #[test]
    fn bounds_are_optional() {
        let p = Poset::from_text("elements: 2\n0 x\n1 y\ncovers:\n0 < 1\n").unwrap();
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(1));
    }
}
