//! Group specifications: the inline `kind:args` form used on the command
//! line and the line-oriented file format.
//!
//! A file holds exactly one of the forms below; `#` starts a comment.
//!
//! ```text
//! named dihedral 6
//! paper g150
//! twisted 4
//! perm n=4          # then one image list per line, points 0..n-1
//! 1 2 3 0
//! matrix p=5 n=2    # then one generator per line, rows split by ';',
//! 0 1; 4 0          # entries by spaces or commas
//! semidirect p=5 n=2
//! 2 0; 0 3          # generators of the acting matrix group
//! ```
//!
//! A `semidirect` header may be followed by a matching `matrix` header
//! before its generator lines.

use std::fmt;
use std::path::Path;

use realgraph_core::constructions::{GroupSpec, MatrixElem, PermElem};

use crate::error::CliError;

/// Syntax or semantic error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn parse<T: std::str::FromStr>(&self, what: &str) -> Result<T, ParseError> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }
}

/// A non-blank line split into tokens. `;` is its own token.
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    end_column: usize,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start: Option<usize> = None;
        for (pos, ch) in content.char_indices() {
            let boundary = ch.is_whitespace() || ch == ';' || ch == ',';
            if boundary {
                if let Some(s) = start.take() {
                    tokens.push(token(content, s, pos, i));
                }
                if ch == ';' {
                    tokens.push(token(content, pos, pos + 1, i));
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if let Some(s) = start {
            tokens.push(token(content, s, content.len(), i));
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: i + 1,
                tokens,
                end_column: content.trim_end().chars().count() + 1,
            });
        }
    }
    out
}

fn token(content: &str, from: usize, to: usize, line: usize) -> Token<'_> {
    Token {
        text: &content[from..to],
        line: line + 1,
        column: content[..from].chars().count() + 1,
    }
}

struct Header {
    p: Option<u32>,
    n: usize,
}

/// Reads `key=value` pairs after a keyword; `wanted` lists the keys that
/// must all appear once.
fn header(line: &Line<'_>, wanted: &[&str]) -> Result<Vec<usize>, ParseError> {
    let mut values: Vec<Option<usize>> = vec![None; wanted.len()];
    for t in &line.tokens[1..] {
        let Some((key, value)) = t.text.split_once('=') else {
            return Err(t.error(format!("expected key=value, found `{}`", t.text)));
        };
        let Some(slot) = wanted.iter().position(|&w| w == key) else {
            return Err(t.error(format!(
                "unknown key `{key}` for `{}`; expected {}",
                line.tokens[0].text,
                wanted.join(", ")
            )));
        };
        if values[slot].is_some() {
            return Err(t.error(format!("duplicate key `{key}`")));
        }
        let v = value
            .parse::<usize>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| t.error(format!("`{key}` needs a positive integer, found `{value}`")))?;
        values[slot] = Some(v);
    }
    values
        .into_iter()
        .zip(wanted)
        .map(|(v, key)| {
            v.ok_or_else(|| ParseError {
                line: line.number,
                column: line.end_column,
                message: format!("missing `{key}=`"),
            })
        })
        .collect()
}

fn matrix_header(line: &Line<'_>) -> Result<Header, ParseError> {
    let v = header(line, &["p", "n"])?;
    let p = u32::try_from(v[0]).map_err(|_| line.tokens[0].error("modulus too large"))?;
    Ok(Header { p: Some(p), n: v[1] })
}

fn expect_arity(line: &Line<'_>, count: usize, usage: &str) -> Result<(), ParseError> {
    match line.tokens.get(count) {
        Some(t) => Err(t.error(format!("unexpected `{}`; usage: {usage}", t.text))),
        None if line.tokens.len() < count => Err(ParseError {
            line: line.number,
            column: line.end_column,
            message: format!("missing argument; usage: {usage}"),
        }),
        None => Ok(()),
    }
}

fn matrix_rows(line: &Line<'_>, h: &Header) -> Result<Vec<Vec<i64>>, ParseError> {
    let mut rows = vec![Vec::new()];
    for t in &line.tokens {
        if t.text == ";" {
            rows.push(Vec::new());
        } else {
            rows.last_mut().expect("nonempty").push(t.parse::<i64>("an integer entry")?);
        }
    }
    let first = line.tokens[0];
    if rows.len() != h.n {
        return Err(first.error(format!("generator has {} rows, expected {}", rows.len(), h.n)));
    }
    if let Some(r) = rows.iter().position(|r| r.len() != h.n) {
        return Err(first.error(format!(
            "row {} has {} entries, expected {}",
            r + 1,
            rows[r].len(),
            h.n
        )));
    }
    MatrixElem::new(h.p.expect("matrix header"), &rows).map_err(|e| first.error(e.to_string()))?;
    Ok(rows)
}

fn perm_images(line: &Line<'_>, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut images = Vec::with_capacity(n);
    for t in &line.tokens {
        if t.text == ";" {
            return Err(t.error("unexpected `;` in an image list"));
        }
        let v: usize = t.parse("a point")?;
        if v >= n {
            return Err(t.error(format!("point {v} is outside 0..{n}")));
        }
        images.push(v);
    }
    if images.len() != n {
        return Err(line.tokens[0].error(format!(
            "image list has {} points, expected {n}",
            images.len()
        )));
    }
    PermElem::new(images.clone()).map_err(|e| line.tokens[0].error(e.to_string()))?;
    Ok(images)
}

fn no_generators(line: &Line<'_>) -> ParseError {
    ParseError {
        line: line.number,
        column: line.end_column,
        message: "expected at least one generator line".into(),
    }
}

/// Parses the file format into exactly one group.
pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let lines = tokenize(text);
    let Some(first) = lines.first() else {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "empty specification".into(),
        });
    };
    let keyword = first.tokens[0];
    let single = |rest: &[Line<'_>]| match rest.first() {
        Some(l) => Err(l.tokens[0].error("only one group per specification")),
        None => Ok(()),
    };
    match keyword.text {
        "named" => {
            let name = first
                .tokens
                .get(1)
                .ok_or_else(|| no_arg(first, "named <family> [param]"))?;
            let param = match first.tokens.get(2) {
                Some(t) => Some(t.parse::<u32>("a nonnegative integer parameter")?),
                None => None,
            };
            expect_arity(first, if param.is_some() { 3 } else { 2 }, "named <family> [param]")?;
            single(&lines[1..])?;
            let spec = GroupSpec::named(name.text, param);
            validate_named(&spec, name)?;
            Ok(spec)
        }
        "paper" => {
            let which = first.tokens.get(1).ok_or_else(|| no_arg(first, "paper g150|h199650"))?;
            expect_arity(first, 2, "paper g150|h199650")?;
            single(&lines[1..])?;
            match which.text {
                "g150" => Ok(GroupSpec::PaperG150),
                "h199650" => Ok(GroupSpec::PaperH199650),
                other => Err(which.error(format!("unknown example `{other}`; expected g150 or h199650"))),
            }
        }
        "twisted" => {
            let k = first.tokens.get(1).ok_or_else(|| no_arg(first, "twisted <k>"))?;
            expect_arity(first, 2, "twisted <k>")?;
            single(&lines[1..])?;
            Ok(GroupSpec::Twisted(k.parse("a ring degree")?))
        }
        "perm" => {
            let n = header(first, &["n"])?[0];
            if n > u16::MAX as usize {
                return Err(keyword.error("degree too large"));
            }
            let generators = lines[1..]
                .iter()
                .map(|l| perm_images(l, n))
                .collect::<Result<Vec<_>, _>>()?;
            if generators.is_empty() {
                return Err(no_generators(first));
            }
            Ok(GroupSpec::Permutation { degree: n, generators })
        }
        "matrix" => {
            let h = matrix_header(first)?;
            let generators = matrix_block(first, &lines[1..], &h)?;
            Ok(GroupSpec::Matrix {
                p: h.p.expect("set"),
                n: h.n,
                generators,
            })
        }
        "semidirect" => {
            let h = matrix_header(first)?;
            let mut rest = &lines[1..];
            let mut last = first;
            if let Some(inner) = rest.first().filter(|l| l.tokens[0].text == "matrix") {
                let ih = matrix_header(inner)?;
                if ih.p != h.p || ih.n != h.n {
                    return Err(inner.tokens[0].error(
                        "inner matrix header must repeat the p and n of the semidirect header",
                    ));
                }
                last = inner;
                rest = &rest[1..];
            }
            let generators = matrix_block(last, rest, &h)?;
            Ok(GroupSpec::Semidirect {
                p: h.p.expect("set"),
                n: h.n,
                generators,
            })
        }
        other => Err(keyword.error(format!(
            "unknown tag `{other}`; expected named, paper, twisted, perm, matrix or semidirect"
        ))),
    }
}

fn matrix_block(head: &Line<'_>, rest: &[Line<'_>], h: &Header) -> Result<Vec<Vec<Vec<i64>>>, ParseError> {
    if h.n > 4 {
        return Err(head.tokens[0].error("matrix dimension must be at most 4"));
    }
    let generators = rest
        .iter()
        .map(|l| matrix_rows(l, h))
        .collect::<Result<Vec<_>, _>>()?;
    if generators.is_empty() {
        return Err(no_generators(head));
    }
    Ok(generators)
}

fn no_arg(line: &Line<'_>, usage: &str) -> ParseError {
    ParseError {
        line: line.number,
        column: line.end_column,
        message: format!("missing argument; usage: {usage}"),
    }
}

fn validate_named(spec: &GroupSpec, at: &Token<'_>) -> Result<(), ParseError> {
    let GroupSpec::Named { name, param } = spec else {
        return Ok(());
    };
    check_named(name, *param).map_err(|m| at.error(m))
}

/// Family and parameter checks shared by both spec syntaxes.
fn check_named(name: &str, param: Option<u32>) -> Result<(), String> {
    use realgraph_core::constructions::NAMED_FAMILIES;
    if name == "quaternion" {
        return match param {
            Some(8) => Ok(()),
            _ => Err("quaternion needs parameter 8".into()),
        };
    }
    if !NAMED_FAMILIES.contains(&name) {
        return Err(format!(
            "unknown family `{name}`; expected one of {}",
            NAMED_FAMILIES.join(", ")
        ));
    }
    match (name, param) {
        ("quaternion8", None | Some(8)) => Ok(()),
        ("quaternion8", Some(p)) => Err(format!("quaternion8 takes no parameter, found {p}")),
        (_, None) => Err(format!("{name} needs a parameter")),
        _ => Ok(()),
    }
}

/// Parses a command-line spec string: `named:<family>[:<param>]`,
/// `paper:g150`, `paper:h199650`, `twisted:<k>` or `file:<path>`.
pub fn parse_spec_arg(arg: &str) -> Result<GroupSpec, CliError> {
    let (kind, rest) = arg
        .split_once(':')
        .ok_or_else(|| CliError::usage(format!("spec `{arg}` needs the form kind:args")))?;
    match kind {
        "named" => {
            let (name, param) = match rest.split_once(':') {
                Some((n, p)) => {
                    let p = p
                        .parse::<u32>()
                        .map_err(|_| CliError::usage(format!("bad parameter `{p}` in `{arg}`")))?;
                    (n, Some(p))
                }
                None => (rest, None),
            };
            check_named(name, param).map_err(CliError::Usage)?;
            Ok(GroupSpec::named(name, param))
        }
        "paper" => match rest {
            "g150" => Ok(GroupSpec::PaperG150),
            "h199650" => Ok(GroupSpec::PaperH199650),
            _ => Err(CliError::usage(format!(
                "unknown example `{rest}`; expected g150 or h199650"
            ))),
        },
        "twisted" => rest
            .parse::<usize>()
            .map(GroupSpec::Twisted)
            .map_err(|_| CliError::usage(format!("bad ring degree `{rest}`"))),
        "file" => read_spec_file(Path::new(rest)),
        _ => Err(CliError::usage(format!(
            "unknown spec kind `{kind}`; expected named, paper, twisted or file"
        ))),
    }
}

pub fn read_spec_file(path: &Path) -> Result<GroupSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse_spec(text).unwrap_err()
    }

    #[test]
    fn simple_forms() {
        assert_eq!(parse_spec("named dihedral 6").unwrap(), GroupSpec::named("dihedral", Some(6)));
        assert_eq!(parse_spec("# c\n\npaper g150\n").unwrap(), GroupSpec::PaperG150);
        assert_eq!(parse_spec("twisted 4").unwrap(), GroupSpec::Twisted(4));
        assert_eq!(parse_spec("named quaternion8").unwrap(), GroupSpec::named("quaternion8", None));
    }

    #[test]
    fn perm_and_matrix_blocks() {
        let spec = parse_spec("perm n=3\n1 0 2\n1 2 0\n").unwrap();
        assert_eq!(
            spec,
            GroupSpec::Permutation {
                degree: 3,
                generators: vec![vec![1, 0, 2], vec![1, 2, 0]]
            }
        );
        let spec = parse_spec("matrix p=3 n=2\n0 1; 2 0\n1 1;0 1\n").unwrap();
        assert_eq!(
            spec,
            GroupSpec::Matrix {
                p: 3,
                n: 2,
                generators: vec![vec![vec![0, 1], vec![2, 0]], vec![vec![1, 1], vec![0, 1]]]
            }
        );
    }

    #[test]
    fn semidirect_with_and_without_inner_header() {
        let a = parse_spec("semidirect p=5 n=2\n2 0; 0 3\n").unwrap();
        let b = parse_spec("semidirect p=5 n=2\nmatrix n=2 p=5\n2 0; 0 3\n").unwrap();
        assert_eq!(a, b);
        let e = err("semidirect p=5 n=2\nmatrix p=7 n=2\n2 0; 0 3\n");
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn errors_carry_locations() {
        let e = err("frobnicate 3");
        assert_eq!((e.line, e.column), (1, 1));
        assert!(e.message.contains("unknown tag"));

        let e = err("matrix p=6 n=2\n1 0; 0 1");
        assert_eq!((e.line, e.column), (2, 1));
        assert!(e.message.contains("prime"), "{e}");

        let e = err("matrix p=5 n=2\n1 2; 2 4");
        assert!(e.message.contains("singular"), "{e}");

        let e = err("perm n=3\n0 1 x");
        assert_eq!((e.line, e.column), (2, 5));

        let e = err("perm n=3\n0 0 1");
        assert_eq!(e.line, 2);

        let e = err("matrix p=5 q=2");
        assert_eq!((e.line, e.column), (1, 12));

        let e = err("matrix p=5");
        assert_eq!((e.line, e.column), (1, 11));
        assert!(e.message.contains("missing `n=`"));

        let e = err("twisted 4\ntwisted 2");
        assert_eq!(e.line, 2);

        let e = err("   \n  named dodecahedral 3");
        assert_eq!((e.line, e.column), (2, 9));

        assert_eq!(err("").line, 1);
        assert!(err("perm n=2\n").message.contains("generator"));
        assert_eq!(err("named cyclic 4 5").column, 16);
    }

    #[test]
    fn inline_specs() {
        assert_eq!(parse_spec_arg("named:cyclic:6").unwrap(), GroupSpec::named("cyclic", Some(6)));
        assert_eq!(parse_spec_arg("named:quaternion8").unwrap(), GroupSpec::named("quaternion8", None));
        assert_eq!(parse_spec_arg("named:quaternion:8").unwrap(), GroupSpec::named("quaternion", Some(8)));
        assert_eq!(parse_spec_arg("paper:h199650").unwrap(), GroupSpec::PaperH199650);
        assert_eq!(parse_spec_arg("twisted:2").unwrap(), GroupSpec::Twisted(2));
        for bad in ["cyclic", "named:cyclic", "named:blob:3", "paper:g151", "twisted:x", "file:/nonexistent/x"] {
            assert_eq!(parse_spec_arg(bad).unwrap_err().exit_code(), 2, "{bad}");
        }
    }
}
