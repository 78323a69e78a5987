//! Text notation for elements: `G(m,p,n):[(1 2 3)(6 7); 0,0,1,5,4,2,0,0]`.
//!
//! The canonical form written by [`format`] (and by the `Display` impl on
//! [`WreathElement`]) lists nontrivial cycles by minimal element, each
//! rotated to start at its minimal element, omits fixed points, and prints
//! weights as residues `0..m`. [`parse`] is more liberal: it accepts cycles
//! in any order and rotation and arbitrary integers for weights (reduced
//! mod `m`), so `format(parse(s))` is the canonicalization of `s`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::element::{GroupParams, WreathElement};
use crate::error::Error;

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        write!(f, "G({},{},{}):[", p.m(), p.p(), p.n())?;
        for cycle in self.cycle_data().cycles() {
            if cycle.len() < 2 {
                continue;
            }
            write!(f, "(")?;
            for (k, &pos) in cycle.support.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pos + 1)?;
            }
            write!(f, ")")?;
        }
        write!(f, "; ")?;
        for (k, &w) in self.weights().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

/// Canonical text form of an element, including its group prefix.
pub fn format(w: &WreathElement) -> String {
    w.to_string()
}

/// Parses `G(m,p,n):[cycles; weights]`.
pub fn parse(text: &str) -> Result<(GroupParams, WreathElement), Error> {
    let text = text.trim();
    let rest = text
        .strip_prefix("G(")
        .ok_or_else(|| err("expected group prefix `G(m,p,n)`"))?;
    let close = rest
        .find(')')
        .ok_or_else(|| err("unterminated group prefix"))?;
    let nums: Vec<&str> = rest[..close].split(',').map(str::trim).collect();
    if nums.len() != 3 {
        return Err(err("group prefix needs exactly three parameters"));
    }
    let m: u64 = nums[0].parse().map_err(|_| err("bad m"))?;
    let p: u64 = nums[1].parse().map_err(|_| err("bad p"))?;
    let n: usize = nums[2].parse().map_err(|_| err("bad n"))?;
    let params = GroupParams::new(m, p, n)?;

    let rest = rest[close + 1..]
        .trim_start()
        .strip_prefix(':')
        .ok_or_else(|| err("expected `:` after group prefix"))?;
    let rest = rest
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err("element must be bracketed `[...]`"))?;
    let (cycles_part, weights_part) = rest
        .split_once(';')
        .ok_or_else(|| err("expected `;` between cycles and weights"))?;

    let perm = parse_cycles(cycles_part.trim(), n)?;
    let weights = parse_weights(weights_part.trim(), n)?;
    WreathElement::new(params, perm, &weights).map(|w| (params, w))
}

fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>, Error> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut rest = text;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| err("cycle must start with `(`"))?;
        let close = body.find(')').ok_or_else(|| err("unterminated cycle"))?;
        let mut positions = Vec::new();
        for token in body[..close].split_whitespace() {
            let value: usize = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle entry `{token}`")))?;
            if value == 0 || value > n {
                return Err(Error::Parse(format!(
                    "position {value} out of range 1..={n}"
                )));
            }
            if used[value - 1] {
                return Err(Error::Parse(format!("position {value} appears twice")));
            }
            used[value - 1] = true;
            positions.push(value - 1);
        }
        if positions.is_empty() {
            return Err(err("empty cycle"));
        }
        for k in 0..positions.len() {
            perm[positions[k]] = positions[(k + 1) % positions.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(perm)
}

fn parse_weights(text: &str, n: usize) -> Result<Vec<i64>, Error> {
    if text.is_empty() {
        if n == 0 {
            return Ok(Vec::new());
        }
        return Err(Error::LengthMismatch {
            expected: n,
            got: 0,
        });
    }
    let mut weights = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value: i64 = token
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight `{token}`")))?;
        weights.push(value);
    }
    if weights.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    Ok(weights)
}

fn err(msg: &str) -> Error {
    Error::Parse(msg.to_string())
}
