//! Group definition files and construction directives.
//!
//! ```text
//! group S3
//! degree 3
//! gen (1 2)
//! gen (1 2 3)
//! end
//! ```
//!
//! A file gives either `gen` lines (with `degree`) or a single
//! `construct <directive>` line, e.g. `construct sdp:2:2:0,1,1,1:3`.
//! Blank lines and lines starting with `#` are ignored; CRLF is accepted.

use std::fmt::Write as _;
use std::path::Path;

use pitheory_core::construct::Recipe;
use pitheory_core::{Caps, Group, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: point {point} exceeds degree {degree}")]
    DegreeMismatch { line: usize, col: usize, point: usize, degree: usize },
}

impl ParseError {
    fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { line, col, msg: msg.into() }
    }

    /// Shifts a single-line error onto `line`, starting at column `col0`.
    fn at(self, line: usize, col0: usize) -> Self {
        match self {
            ParseError::Syntax { col, msg, .. } => ParseError::Syntax { line, col: col + col0 - 1, msg },
            ParseError::DegreeMismatch { col, point, degree, .. } => {
                ParseError::DegreeMismatch { line, col: col + col0 - 1, point, degree }
            }
        }
    }

    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::DegreeMismatch { line, .. } => *line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Generators { degree: usize, gens: Vec<Permutation> },
    Directive(Recipe),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpecFile {
    pub name: String,
    pub source: GroupSource,
}

impl GroupSpecFile {
    pub fn recipe(&self) -> Recipe {
        match &self.source {
            GroupSource::Generators { degree, gens } => Recipe::Generators { degree: *degree, gens: gens.clone() },
            GroupSource::Directive(r) => r.clone(),
        }
    }

    pub fn build(&self, caps: Caps) -> pitheory_core::Result<Group> {
        Ok(self.recipe().build_with(caps)?.with_name(self.name.clone()))
    }

    /// The generator form of a group.
    pub fn from_group(name: &str, g: &Group) -> Self {
        GroupSpecFile {
            name: name.into(),
            source: GroupSource::Generators { degree: g.degree(), gens: g.generators().to_vec() },
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("group {}\n", self.name);
        match &self.source {
            GroupSource::Generators { degree, gens } => {
                writeln!(s, "degree {degree}").unwrap();
                for g in gens {
                    writeln!(s, "gen {}", g.to_cycle_string()).unwrap();
                }
            }
            GroupSource::Directive(r) => writeln!(s, "construct {r}").unwrap(),
        }
        s.push_str("end\n");
        s
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

pub fn parse_group_file(path: &Path) -> Result<GroupSpecFile, LoadError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    parse_group_str(&text).map_err(|source| LoadError::Parse { path: path.display().to_string(), source })
}

/// One logical line with its 1-based number; `\r` already stripped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
}

pub fn parse_group_str(text: &str) -> Result<GroupSpecFile, ParseError> {
    let mut name: Option<String> = None;
    let mut degree: Option<(usize, usize)> = None;
    let mut gen_lines: Vec<(usize, usize, &str)> = Vec::new();
    let mut directive: Option<Recipe> = None;
    let mut ended = false;
    let mut last_line = 1;

    for (n, raw) in lines(text) {
        last_line = n;
        let body = raw.trim_start();
        let indent = raw.len() - body.len();
        let body = body.trim_end();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        if ended {
            return Err(ParseError::syntax(n, indent + 1, "content after `end`"));
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest_col = indent + 1 + body.len() - rest.trim_start().len();
        let rest = rest.trim();
        match keyword {
            "group" => {
                if name.is_some() {
                    return Err(ParseError::syntax(n, indent + 1, "duplicate `group` line"));
                }
                if rest.is_empty() {
                    return Err(ParseError::syntax(n, rest_col, "missing group name"));
                }
                name = Some(rest.into());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(ParseError::syntax(n, indent + 1, "duplicate `degree` line"));
                }
                let d = rest.parse::<usize>().map_err(|_| ParseError::syntax(n, rest_col, "expected a degree"))?;
                degree = Some((d, n));
            }
            "gen" => gen_lines.push((n, rest_col, rest)),
            "construct" => {
                if directive.is_some() {
                    return Err(ParseError::syntax(n, indent + 1, "duplicate `construct` line"));
                }
                directive = Some(parse_directive(rest).map_err(|e| e.at(n, rest_col))?);
            }
            "end" => ended = true,
            other => return Err(ParseError::syntax(n, indent + 1, format!("unknown keyword `{other}`"))),
        }
    }

    if !ended {
        return Err(ParseError::syntax(last_line, 1, "missing `end`"));
    }
    let name = name.ok_or_else(|| ParseError::syntax(1, 1, "missing `group` line"))?;
    let source = match (directive, gen_lines.is_empty()) {
        (Some(_), false) => {
            let (n, ..) = gen_lines[0];
            return Err(ParseError::syntax(n, 1, "`gen` lines and `construct` are mutually exclusive"));
        }
        (Some(r), true) => {
            if let Some((_, n)) = degree {
                return Err(ParseError::syntax(n, 1, "`degree` is only used with `gen` lines"));
            }
            GroupSource::Directive(r)
        }
        (None, _) => {
            let (degree, _) = degree.ok_or_else(|| ParseError::syntax(last_line, 1, "missing `degree` line"))?;
            let gens = gen_lines
                .iter()
                .map(|&(n, col, s)| parse_permutation(s, degree).map_err(|e| e.at(n, col)))
                .collect::<Result<Vec<_>, _>>()?;
            GroupSource::Generators { degree, gens }
        }
    };
    Ok(GroupSpecFile { name, source })
}

/// Parses a product of cycles such as `(1 2)(3 4)` or `(1,2,3)`, composed
/// left to right. Empty input and `()` give the identity. Errors are
/// reported on line 1.
pub fn parse_permutation(s: &str, degree: usize) -> Result<Permutation, ParseError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<(usize, Vec<(usize, usize)>)> = None;
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        let col = s[..byte].chars().count() + 1;
        match c {
            '(' => {
                if let Some((open, _)) = current {
                    return Err(ParseError::syntax(
                        1,
                        col,
                        format!("nested `(`; cycle opened at column {open} is unclosed"),
                    ));
                }
                current = Some((col, Vec::new()));
            }
            ')' => {
                let (_, pts) = current.take().ok_or_else(|| ParseError::syntax(1, col, "`)` without `(`"))?;
                for (k, &(p, pcol)) in pts.iter().enumerate() {
                    if pts[..k].iter().any(|&(q, _)| q == p) {
                        return Err(ParseError::syntax(1, pcol, format!("point {p} repeated in a cycle")));
                    }
                }
                cycles.push(pts.into_iter().map(|(p, _)| p).collect());
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i + 1).map_or(s.len(), |&(b, _)| b);
                let text = &s[chars[start].0..end];
                let Some((_, pts)) = current.as_mut() else {
                    return Err(ParseError::syntax(1, col, "point outside a cycle"));
                };
                let p: usize = text.parse().map_err(|_| ParseError::syntax(1, col, "point out of range"))?;
                if p == 0 {
                    return Err(ParseError::syntax(1, col, "points are numbered from 1"));
                }
                if p > degree {
                    return Err(ParseError::DegreeMismatch { line: 1, col, point: p, degree });
                }
                pts.push((p, col));
            }
            c if c.is_whitespace() || c == ',' => {}
            other => return Err(ParseError::syntax(1, col, format!("unexpected `{other}`"))),
        }
        i += 1;
    }
    if let Some((open, _)) = current {
        return Err(ParseError::syntax(1, open, "unclosed cycle"));
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| ParseError::syntax(1, 1, e.to_string()))
}

/// Splits `(1 2)(3 4), (1 2 3)` at commas outside parentheses and parses
/// each part. Blank input gives no generators.
pub fn parse_generator_list(s: &str, degree: usize) -> Result<Vec<Permutation>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let mut push = |part_start: usize, part: &str| -> Result<(), ParseError> {
        if !part.trim().is_empty() {
            let col0 = s[..part_start].chars().count() + 1;
            out.push(parse_permutation(part, degree).map_err(|e| e.at(1, col0))?);
        }
        Ok(())
    };
    for (b, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                push(start, &s[start..b])?;
                start = b + 1;
            }
            _ => {}
        }
    }
    push(start, &s[start..])?;
    Ok(out)
}

fn number(s: &str, col: usize, what: &str) -> Result<usize, ParseError> {
    s.trim().parse().map_err(|_| ParseError::syntax(1, col, format!("expected {what}, found `{s}`")))
}

fn entries(s: &str, col: usize) -> Result<Vec<u32>, ParseError> {
    s.split(',')
        .map(|e| e.trim().parse().map_err(|_| ParseError::syntax(1, col, format!("bad matrix entry `{e}`"))))
        .collect()
}

/// Parses a construction directive, the inverse of `Recipe`'s `Display`.
/// Errors are reported on line 1.
pub fn parse_directive(s: &str) -> Result<Recipe, ParseError> {
    let s = s.trim();
    let (kind, rest) =
        s.split_once(':').ok_or_else(|| ParseError::syntax(1, 1, format!("expected `kind:...`, found `{s}`")))?;
    let col = kind.chars().count() + 2;
    let parts: Vec<&str> = rest.split(':').collect();
    let want = |n: usize| -> Result<(), ParseError> {
        if kind != "dp" && parts.len() != n {
            return Err(ParseError::syntax(1, col, format!("`{kind}` takes {n} parameter(s), found {}", parts.len())));
        }
        Ok(())
    };
    let recipe = match kind {
        "cyclic" | "dihedral" | "quaternion" | "semidihedral" | "sym" | "alt" => {
            want(1)?;
            let n = number(parts[0], col, "an order or degree")?;
            match kind {
                "cyclic" => Recipe::Cyclic(n),
                "dihedral" => Recipe::Dihedral(n),
                "quaternion" => Recipe::Quaternion(n),
                "semidihedral" => Recipe::Semidihedral(n),
                "sym" => Recipe::Symmetric(n),
                _ => Recipe::Alternating(n),
            }
        }
        "elemab" => {
            want(2)?;
            Recipe::ElementaryAbelian {
                p: number(parts[0], col, "a prime")? as u64,
                k: number(parts[1], col, "a rank")?,
            }
        }
        "sdp" => {
            want(4)?;
            Recipe::Semidirect {
                p: number(parts[0], col, "a prime")? as u64,
                k: number(parts[1], col, "a dimension")?,
                matrix: entries(parts[2], col)?,
                m: number(parts[3], col, "an order")?,
            }
        }
        "affine" | "linear" => {
            want(3)?;
            let p = number(parts[0], col, "a prime")? as u64;
            let k = number(parts[1], col, "a dimension")?;
            let matrices = match parts[2] {
                "" => Vec::new(),
                ms => ms.split(';').map(|m| entries(m, col)).collect::<Result<Vec<_>, _>>()?,
            };
            if kind == "affine" {
                Recipe::Affine { p, k, matrices }
            } else {
                Recipe::Linear { p, k, matrices }
            }
        }
        "dp" => {
            // Factors may themselves be products, so try every separator.
            for (b, c) in rest.char_indices().filter(|&(_, c)| c == '×' || c == 'x') {
                let (l, r) = (&rest[..b], &rest[b + c.len_utf8()..]);
                if let (Ok(a), Ok(b)) = (parse_directive(l), parse_directive(r)) {
                    return Ok(Recipe::DirectProduct(Box::new(a), Box::new(b)));
                }
            }
            return Err(ParseError::syntax(1, col, "expected `dp:<directive>×<directive>`"));
        }
        other => return Err(ParseError::syntax(1, 1, format!("unknown construction `{other}`"))),
    };
    Ok(recipe)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym3_file() {
        let f = parse_group_str("group S3\ndegree 3\ngen (1 2)\ngen (1 2 3)\nend").unwrap();
        assert_eq!(f.name, "S3");
        assert_eq!(f.build(Caps::default()).unwrap().order(), 6);
    }

    #[test]
    fn crlf_comments_and_blank_lines() {
        let f =
            parse_group_str("# a comment\r\ngroup V4\r\n\r\ndegree 4\r\ngen (1 2)(3 4)\r\ngen (1 3)(2 4)\r\nend\r\n")
                .unwrap();
        assert_eq!(f.build(Caps::default()).unwrap().order(), 4);
    }

    #[test]
    fn unclosed_cycle_points_at_the_parenthesis() {
        let e = parse_group_str("group X\ndegree 3\ngen (1 2 3\nend").unwrap_err();
        assert_eq!(e, ParseError::Syntax { line: 3, col: 5, msg: "unclosed cycle".into() });
    }

    #[test]
    fn degree_mismatch_names_the_point() {
        let e = parse_group_str("group X\ndegree 3\ngen (1 4)\nend").unwrap_err();
        assert_eq!(e, ParseError::DegreeMismatch { line: 3, col: 8, point: 4, degree: 3 });
    }

    #[test]
    fn structural_errors() {
        assert!(parse_group_str("group X\ndegree 3\ngen (1 2)").is_err());
        assert!(parse_group_str("degree 3\ngen (1 2)\nend").is_err());
        assert!(parse_group_str("group X\ngen (1 2)\nend").is_err());
        assert!(parse_group_str("group X\ndegree 3\ngen (1 2)\nconstruct sym:3\nend").is_err());
        assert!(parse_group_str("group X\nconstruct sym:3\nend\ngen (1 2)").is_err());
        assert!(parse_group_str("group X\nfoo\nend").is_err());
        assert!(parse_group_str("group X\ndegree 3\ngen (1 1)\nend").is_err());
        assert!(parse_group_str("group X\ndegree 3\ngen (0 1)\nend").is_err());
    }

    #[test]
    fn identity_generators() {
        assert!(parse_permutation("", 3).unwrap().is_identity());
        assert!(parse_permutation("()", 3).unwrap().is_identity());
        assert_eq!(parse_permutation("(1,2,3)", 3).unwrap(), parse_permutation("(1 2 3)", 3).unwrap());
    }

    #[test]
    fn generator_lists() {
        let gens = parse_generator_list("(1 2)(3 4), (1,2,3)", 4).unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_generator_list("  ", 4).unwrap().is_empty());
        let e = parse_generator_list("(1 2), (1 5)", 4).unwrap_err();
        assert_eq!(e, ParseError::DegreeMismatch { line: 1, col: 11, point: 5, degree: 4 });
    }

    #[test]
    fn directives() {
        let r = parse_directive("sdp:2:2:0,1,1,1:3").unwrap();
        assert_eq!(r, Recipe::Semidirect { p: 2, k: 2, matrix: vec![0, 1, 1, 1], m: 3 });
        assert_eq!(r.build().unwrap().order(), 12);
        let dp = parse_directive("dp:sym:3×cyclic:2").unwrap();
        assert_eq!(dp.build().unwrap().order(), 12);
        let nested = parse_directive("dp:dp:cyclic:2×cyclic:2×cyclic:3").unwrap();
        assert_eq!(nested.build().unwrap().order(), 12);
        assert!(parse_directive("sym").is_err());
        assert!(parse_directive("sym:3:4").is_err());
        assert!(parse_directive("torus:3").is_err());
        assert!(parse_directive("sdp:2:2:0,1,x,1:3").is_err());
    }
}
