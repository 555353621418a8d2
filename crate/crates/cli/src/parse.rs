//! Text syntax for games, positions and shapes.
//!
//! Positions and shapes use commas within a component and semicolons
//! between components; whitespace is ignored everywhere.

use std::fs;

use anyhow::{bail, Context, Result};
use grundy_core::gamecore::parse_summands;
use grundy_core::{DiagramTuple, GameSpec, YoungDiagram};

fn strip(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

fn numbers(text: &str) -> Result<Vec<u64>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|x| x.parse::<u64>().with_context(|| format!("'{x}' is not a natural number"))).collect()
}

/// `"7,5,3;3"` into `[[7, 5, 3], [3]]`.
pub fn components(text: &str) -> Result<Vec<Vec<u64>>> {
    strip(text).split(';').map(numbers).collect()
}

pub fn position(text: &str) -> Result<Vec<u64>> {
    Ok(components(text)?.concat())
}

/// A single diagram, or a tuple when the text contains `;`.
pub enum ShapeArg {
    Single(YoungDiagram),
    Tuple(DiagramTuple),
}

pub fn shape(text: &str) -> Result<ShapeArg> {
    let parts = components(text)?;
    let mut diagrams = parts.into_iter().map(YoungDiagram::new).collect::<Result<Vec<_>, _>>()?;
    if strip(text).contains(';') {
        Ok(ShapeArg::Tuple(DiagramTuple::new(diagrams)?))
    } else {
        Ok(ShapeArg::Single(diagrams.pop().expect("split yields one part")))
    }
}

/// `nim:m`, `welter:m`, `explicit:@file` or a `sum:` of those joined by `+`.
pub fn game(text: &str) -> Result<GameSpec> {
    let text = strip(text);
    let pieces: Vec<&str> = match text.strip_prefix("sum:") {
        Some(rest) => rest.split('+').collect(),
        None => vec![text.as_str()],
    };
    let mut parts = Vec::new();
    for piece in pieces {
        match piece.strip_prefix("explicit:@") {
            Some(path) => parts.push(explicit_file(path)?),
            None => parts.extend(parse_summands(piece)?),
        }
    }
    Ok(GameSpec::sum(&parts)?)
}

/// Reads an explicit game: a header `m=<arity>`, one move vector per line,
/// then `positions:` followed by one position per line. Blank lines and
/// lines starting with `#` are skipped.
pub fn explicit_file(path: &str) -> Result<GameSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    explicit_text(&text).with_context(|| format!("in {path}"))
}

pub fn explicit_text(text: &str) -> Result<GameSpec> {
    let mut lines = text.lines().map(strip).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().context("missing 'm=<arity>' header")?;
    let arity: usize =
        header.strip_prefix("m=").and_then(|m| m.parse().ok()).with_context(|| format!("bad header '{header}'"))?;
    let mut moves = Vec::new();
    let mut positions = Vec::new();
    let mut in_positions = false;
    for line in lines {
        if line == "positions:" {
            in_positions = true;
            continue;
        }
        let v = numbers(&line)?;
        if in_positions {
            positions.push(v);
        } else {
            moves.push(v);
        }
    }
    if !in_positions {
        bail!("missing 'positions:' section");
    }
    Ok(GameSpec::explicit(arity, moves, positions)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_and_components() {
        assert_eq!(components(" 7, 5,3 ; 3").unwrap(), vec![vec![7, 5, 3], vec![3]]);
        assert_eq!(position("1,2").unwrap(), vec![1, 2]);
        assert!(position("1,x").is_err());
        assert!(position("1,,2").is_err());
    }

    #[test]
    fn shapes() {
        assert!(matches!(shape("").unwrap(), ShapeArg::Single(y) if y.is_empty()));
        assert!(matches!(shape("4,4,2;2,1").unwrap(), ShapeArg::Tuple(_)));
        assert!(shape("1,2").is_err());
    }

    #[test]
    fn explicit_games() {
        let g = explicit_text("m=1\n3\npositions:\n0\n3\n").unwrap();
        assert_eq!(g.arity(), 1);
        assert!(g.contains(&[3]));
        assert!(!g.contains(&[2]));
        assert!(explicit_text("m=1\n3\n").is_err());
        assert!(explicit_text("3\npositions:\n").is_err());
    }

    #[test]
    fn sums() {
        assert_eq!(game("sum:nim:1+nim:1").unwrap(), GameSpec::nim(2).unwrap());
        assert!(game("nim").is_err());
    }
}
