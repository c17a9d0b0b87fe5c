//! Poset descriptors.
//!
//! ```text
//! pdiv a1,a2,...    P(a1,...,an)
//! bool n            Boolean lattice B_n
//! chain k           chain of length k
//! dual <desc>       order dual
//! prod <desc> <desc>
//! file <path>       poset text format
//! ```
//!
//! A nested descriptor may be one quoted word (`prod "bool 2" "bool 6"`) or
//! spread over several (`prod bool 2 bool 6`).

use std::fmt;

use properdiv::poset::{
    dual, make_boolean_lattice_with, make_chain, make_proper_div_poset_with, proper_product_with,
};
use properdiv::{Limits, Multidegree, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Desc {
    Pdiv(Vec<u32>),
    Bool(usize),
    Chain(usize),
    Dual(Box<Desc>),
    Prod(Box<Desc>, Box<Desc>),
    File(String),
}

impl fmt::Display for Desc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Desc::Pdiv(v) => {
                let parts: Vec<String> = v.iter().map(u32::to_string).collect();
                write!(f, "P({})", parts.join(","))
            }
            Desc::Bool(n) => write!(f, "B{n}"),
            Desc::Chain(k) => write!(f, "C{}", k + 1),
            Desc::Dual(d) => write!(f, "({d})*"),
            Desc::Prod(p, q) => write!(f, "{p} ×p {q}"),
            Desc::File(path) => write!(f, "{path}"),
        }
    }
}

pub fn parse_exponents(s: &str) -> Result<Vec<u32>, String> {
    let v: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
    match v {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(format!("expected comma-separated exponents like 3,4, got {s:?}")),
    }
}

pub fn parse(words: &[String]) -> Result<Desc, String> {
    let tokens: Vec<&str> = words.iter().flat_map(|w| w.split_whitespace()).collect();
    if tokens.is_empty() {
        return Err("missing poset descriptor".into());
    }
    let (d, rest) = parse_one(&tokens)?;
    if !rest.is_empty() {
        return Err(format!("unexpected trailing input: {}", rest.join(" ")));
    }
    Ok(d)
}

fn parse_one<'a>(t: &'a [&'a str]) -> Result<(Desc, &'a [&'a str]), String> {
    let arg = |i: usize| t.get(i).copied().ok_or_else(|| format!("`{}` needs an argument", t[0]));
    let number = |s: &str| s.parse::<usize>().map_err(|_| format!("expected a number, got {s:?}"));
    match t.first().copied() {
        Some("pdiv") => Ok((Desc::Pdiv(parse_exponents(arg(1)?)?), &t[2..])),
        Some("bool") => Ok((Desc::Bool(number(arg(1)?)?), &t[2..])),
        Some("chain") => Ok((Desc::Chain(number(arg(1)?)?), &t[2..])),
        Some("file") => Ok((Desc::File(arg(1)?.to_string()), &t[2..])),
        Some("dual") => {
            let (d, rest) = parse_one(&t[1..])?;
            Ok((Desc::Dual(Box::new(d)), rest))
        }
        Some("prod") => {
            let (p, rest) = parse_one(&t[1..])?;
            let (q, rest) = parse_one(rest)?;
            Ok((Desc::Prod(Box::new(p), Box::new(q)), rest))
        }
        Some(other) => Err(format!("unknown descriptor {other:?}; expected pdiv, bool, chain, dual, prod or file")),
        None => Err("missing poset descriptor".into()),
    }
}

pub enum BuildError {
    Io(String),
    Core(properdiv::Error),
}

impl From<properdiv::Error> for BuildError {
    fn from(e: properdiv::Error) -> Self {
        BuildError::Core(e)
    }
}

pub fn build(d: &Desc, limits: &Limits) -> Result<Poset, BuildError> {
    Ok(match d {
        Desc::Pdiv(v) => make_proper_div_poset_with(&Multidegree::new(v.clone())?, limits)?,
        Desc::Bool(n) => make_boolean_lattice_with(*n, limits)?,
        Desc::Chain(k) => make_chain(*k),
        Desc::Dual(d) => dual(&build(d, limits)?),
        Desc::Prod(p, q) => proper_product_with(&build(p, limits)?, &build(q, limits)?, limits)?,
        Desc::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| BuildError::Io(format!("{path}: {e}")))?;
            Poset::from_text(&text)?
        }
    })
}
