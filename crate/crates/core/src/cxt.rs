//! Burmeister `.cxt` context files.
//!
//! ```text
//! B
//! <title, may be empty>
//! <object count>
//! <attribute count>
//! <optional blank line>
//! <object names, one per line>
//! <attribute names, one per line>
//! <one row of marks per object: X or x for a cross, . for a blank>
//! ```

use crate::context::FormalContext;
use crate::error::{Error, Result};

/// A parsed file before it is turned into a [`FormalContext`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CxtDocument {
    pub title: String,
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub rows: Vec<Vec<bool>>,
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate().peekable(),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, l)) => {
                self.last = i + 1;
                Ok((i + 1, l.trim_end()))
            }
            None => Err(Error::Parse {
                line: self.last + 1,
                msg: format!("unexpected end of file, expected {what}"),
            }),
        }
    }

    fn skip_blank(&mut self) {
        if let Some((i, l)) = self.inner.peek() {
            if l.trim().is_empty() {
                self.last = i + 1;
                self.inner.next();
            }
        }
    }
}

fn parse_count(lines: &mut Lines<'_>, what: &str) -> Result<usize> {
    let (line, text) = lines.next(what)?;
    text.trim().parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found `{text}`"),
    })
}

pub fn parse_document(text: &str) -> Result<CxtDocument> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next("header `B`")?;
    if header.trim() != "B" {
        return Err(Error::Parse {
            line,
            msg: format!("expected header `B`, found `{header}`"),
        });
    }
    let (_, title) = lines.next("title line")?;
    let n = parse_count(&mut lines, "object count")?;
    let m = parse_count(&mut lines, "attribute count")?;
    lines.skip_blank();

    let mut names = |count: usize, kind: &'static str| -> Result<Vec<String>> {
        let mut out: Vec<String> = Vec::with_capacity(count);
        for _ in 0..count {
            let (line, name) = lines.next(&format!("{kind} name"))?;
            if out.iter().any(|x| x == name) {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate {kind} name `{name}`"),
                });
            }
            out.push(name.to_string());
        }
        Ok(out)
    };
    let objects = names(n, "object")?;
    let attributes = names(m, "attribute")?;

    let mut rows = Vec::with_capacity(n);
    for name in &objects {
        let (line, text) = lines.next(&format!("row for object `{name}`"))?;
        let marks: Vec<char> = text.chars().collect();
        if marks.len() != m {
            return Err(Error::Parse {
                line,
                msg: format!("row has {} marks, expected {m}", marks.len()),
            });
        }
        let row = marks
            .iter()
            .map(|&c| match c {
                'X' | 'x' => Ok(true),
                '.' => Ok(false),
                other => Err(Error::Parse {
                    line,
                    msg: format!("illegal mark `{other}`"),
                }),
            })
            .collect::<Result<Vec<bool>>>()?;
        rows.push(row);
    }
    for (i, rest) in lines.inner {
        if !rest.trim().is_empty() {
            return Err(Error::Parse {
                line: i + 1,
                msg: "unexpected content after the last row".into(),
            });
        }
    }
    Ok(CxtDocument {
        title: title.to_string(),
        objects,
        attributes,
        rows,
    })
}

pub fn parse_cxt(text: &str) -> Result<FormalContext> {
    let doc = parse_document(text)?;
    if doc.objects.is_empty() {
        return Err(Error::Parse {
            line: 3,
            msg: "a context needs at least one object".into(),
        });
    }
    if doc.attributes.is_empty() {
        return Err(Error::Parse {
            line: 4,
            msg: "a context needs at least one attribute".into(),
        });
    }
    FormalContext::new(doc.objects, doc.attributes, &doc.rows)
}

/// Canonical form: empty title, blank separator line, `X`/`.` marks,
/// newline after every line.
pub fn write_cxt(ctx: &FormalContext) -> String {
    let mut out = format!("B\n\n{}\n{}\n\n", ctx.num_objects(), ctx.num_attributes());
    for name in ctx.objects().iter().chain(ctx.attributes()) {
        out.push_str(name);
        out.push('\n');
    }
    for o in 0..ctx.num_objects() {
        out.extend((0..ctx.num_attributes()).map(|a| if ctx.incident(o, a) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}
