//! The PLE text format for embedded graphs.
//!
//! ```text
//! PLE <n>
//! R <v> <u1> <u2> ... <uk>     # neighbours of v in clockwise order
//! C <v> <blue|red|green>       # optional vertex colour
//! ```
//!
//! `#` starts a comment. Serialisation writes the header, then every `R`
//! line in vertex order, then `C` lines in vertex order, separated by single
//! spaces, so a canonical file round-trips byte for byte once comments are
//! stripped.

use std::fmt;

use thiserror::Error;

use crate::coloring::{Colour, VertexColoring};
use crate::embedding::{EmbeddingError, PlanarEmbedding};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PleError {
    #[error("missing `PLE <n>` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no rotation line for vertex {0}")]
    MissingRotation(usize),
    #[error("colouring is partial: vertex {0} has no colour")]
    PartialColouring(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PleDocument {
    pub rotations: Vec<Vec<usize>>,
    pub colours: Vec<Option<Colour>>,
}

fn syntax(line: usize, message: impl Into<String>) -> PleError {
    PleError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_id(tok: &str, line: usize, n: usize) -> Result<usize, PleError> {
    let v: usize = tok
        .parse()
        .map_err(|_| syntax(line, format!("bad vertex id {tok:?}")))?;
    if v >= n {
        return Err(syntax(line, format!("vertex {v} out of range (n = {n})")));
    }
    Ok(v)
}

impl PleDocument {
    pub fn parse(text: &str) -> Result<Self, PleError> {
        let mut n: Option<usize> = None;
        let mut rotations: Vec<Option<Vec<usize>>> = Vec::new();
        let mut colours: Vec<Option<Colour>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut toks = content.split_whitespace();
            let Some(tag) = toks.next() else { continue };
            let Some(count) = n else {
                if tag != "PLE" {
                    return Err(PleError::MissingHeader);
                }
                let count: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| syntax(line, "expected `PLE <n>`"))?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens after header"));
                }
                n = Some(count);
                rotations = vec![None; count];
                colours = vec![None; count];
                continue;
            };
            match tag {
                "R" => {
                    let v = parse_id(
                        toks.next().ok_or_else(|| syntax(line, "missing vertex"))?,
                        line,
                        count,
                    )?;
                    let nbrs = toks
                        .map(|t| parse_id(t, line, count))
                        .collect::<Result<Vec<_>, _>>()?;
                    if rotations[v].replace(nbrs).is_some() {
                        return Err(syntax(line, format!("second rotation for vertex {v}")));
                    }
                }
                "C" => {
                    let v = parse_id(
                        toks.next().ok_or_else(|| syntax(line, "missing vertex"))?,
                        line,
                        count,
                    )?;
                    let c: Colour = toks
                        .next()
                        .ok_or_else(|| syntax(line, "missing colour"))?
                        .parse()
                        .map_err(|e: crate::coloring::UnknownColour| syntax(line, e.to_string()))?;
                    if toks.next().is_some() {
                        return Err(syntax(line, "trailing tokens after colour"));
                    }
                    if colours[v].replace(c).is_some() {
                        return Err(syntax(line, format!("second colour for vertex {v}")));
                    }
                }
                "PLE" => return Err(syntax(line, "duplicate header")),
                other => return Err(syntax(line, format!("unknown record {other:?}"))),
            }
        }
        if n.is_none() {
            return Err(PleError::MissingHeader);
        }
        let rotations = rotations
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or(PleError::MissingRotation(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PleDocument { rotations, colours })
    }

    pub fn from_embedding(emb: &PlanarEmbedding, colouring: Option<&VertexColoring>) -> Self {
        PleDocument {
            rotations: emb.rotations().to_vec(),
            colours: match colouring {
                Some(c) => c.colours().iter().map(|&x| Some(x)).collect(),
                None => vec![None; emb.vertex_count()],
            },
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn embedding(&self) -> Result<PlanarEmbedding, PleError> {
        Ok(PlanarEmbedding::from_rotations(self.rotations.clone())?)
    }

    pub fn triangulation(&self) -> Result<Triangulation, PleError> {
        Ok(Triangulation::new(self.embedding()?)?)
    }

    pub fn has_colours(&self) -> bool {
        self.colours.iter().any(Option::is_some)
    }

    /// The colouring, if every vertex has a `C` line; `None` if there are no
    /// colour lines at all.
    pub fn colouring(&self) -> Result<Option<VertexColoring>, PleError> {
        if !self.has_colours() {
            return Ok(None);
        }
        let colours = self
            .colours
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(PleError::PartialColouring(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(VertexColoring::new(colours)))
    }
}

impl fmt::Display for PleDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PLE {}", self.rotations.len())?;
        for (v, rot) in self.rotations.iter().enumerate() {
            write!(f, "R {v}")?;
            for u in rot {
                write!(f, " {u}")?;
            }
            writeln!(f)?;
        }
        for (v, c) in self.colours.iter().enumerate() {
            if let Some(c) = c {
                writeln!(f, "C {v} {c}")?;
            }
        }
        Ok(())
    }
}
