//! Line-oriented text formats.
//!
//! * permutation: one line of `n` integers; two such lines compare two
//!   permutations;
//! * tree: a line `n`, then `n - 1` lines `u v`;
//! * DAG: a line `n m`, then `m` lines `u v` for the arc `u -> v`;
//! * generator: lines `R: ...` and `L: ...`, or JSON `{"n", "R", "L"}`.
//!
//! Lines starting with `#` and blank lines are ignored. Errors carry the
//! 1-based line number in the source text.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Generator, RawInput, StructureKind};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

fn pairs(
    lines: &mut dyn Iterator<Item = (usize, &str)>,
    count: usize,
    what: &str,
    last_line: usize,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, s) = lines.next().ok_or_else(|| Error::Parse {
            line: last_line,
            msg: format!("expected {count} {what} lines, found {}", out.len()),
        })?;
        match numbers(line, s)?[..] {
            [u, v] => out.push((u, v)),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected \"u v\" for {what}"),
                })
            }
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            msg: format!("unexpected line after {count} {what} lines"),
        });
    }
    Ok(out)
}

/// Parse `text` as the given structure kind. Validation of the structure
/// itself happens in [`crate::validate_structure`].
pub fn parse_input(text: &str, kind: StructureKind) -> Result<RawInput> {
    let last_line = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let empty = || Error::Parse {
        line: last_line,
        msg: "no content".into(),
    };
    match kind {
        StructureKind::Permutation => {
            let rows: Vec<(usize, &str)> = lines.collect();
            match rows[..] {
                [] => Err(empty()),
                [(l, a)] => Ok(RawInput::Permutation(numbers(l, a)?)),
                [(l1, a), (l2, b)] => {
                    Ok(RawInput::TwoPermutations(numbers(l1, a)?, numbers(l2, b)?))
                }
                [_, _, (l, _), ..] => Err(Error::Parse {
                    line: l,
                    msg: "a permutation file has one or two lines".into(),
                }),
            }
        }
        StructureKind::Tree => {
            let (line, head) = lines.next().ok_or_else(empty)?;
            let n = match numbers(line, head)?[..] {
                [n] => n,
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: "expected \"n\"".into(),
                    })
                }
            };
            let edges = pairs(&mut lines, n.saturating_sub(1), "edge", last_line)?;
            Ok(RawInput::Tree { n, edges })
        }
        StructureKind::Dag => {
            let (line, head) = lines.next().ok_or_else(empty)?;
            let (n, m) = match numbers(line, head)?[..] {
                [n, m] => (n, m),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: "expected \"n m\"".into(),
                    })
                }
            };
            let arcs = pairs(&mut lines, m, "arc", last_line)?;
            Ok(RawInput::Dag { n, arcs })
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorDoc {
    n: usize,
    #[serde(rename = "R")]
    r: Vec<usize>,
    #[serde(rename = "L")]
    l: Vec<usize>,
}

/// `R: ...` and `L: ...` lines, 1-based vertices.
pub fn format_generator_text(g: &Generator) -> String {
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    format!("R: {}\nL: {}\n", join(g.right()), join(g.left()))
}

/// `{"n":..,"R":[..],"L":[..]}` on one line.
pub fn format_generator_json(g: &Generator) -> String {
    let doc = GeneratorDoc {
        n: g.n(),
        r: g.right().to_vec(),
        l: g.left().to_vec(),
    };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}

/// Read a generator in either output format.
pub fn parse_generator(text: &str) -> Result<Generator> {
    if text.trim_start().starts_with('{') {
        let doc: GeneratorDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        if doc.r.len() != doc.n {
            return Err(Error::SizeMismatch(doc.n, doc.r.len()));
        }
        return Generator::new(doc.r, doc.l);
    }
    let (mut r, mut l) = (None, None);
    for (line, s) in content_lines(text) {
        let (slot, rest) = if let Some(rest) = s.strip_prefix("R:") {
            (&mut r, rest)
        } else if let Some(rest) = s.strip_prefix("L:") {
            (&mut l, rest)
        } else {
            return Err(Error::Parse {
                line,
                msg: "expected a line starting with R: or L:".into(),
            });
        };
        if slot.is_some() {
            return Err(Error::Parse {
                line,
                msg: "repeated generator line".into(),
            });
        }
        *slot = Some(numbers(line, rest)?);
    }
    match (r, l) {
        (Some(r), Some(l)) => Generator::new(r, l),
        _ => Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "missing R: or L: line".into(),
        }),
    }
}
