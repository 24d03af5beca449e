//! Plain-text formats.
//!
//! Braid words: an optional header token `d=<int>;` followed by
//! whitespace-separated nonzero integers, e.g. `d=3; 1 2 -1`. Without a
//! header the strand count is inferred as the smallest one admitting every
//! letter.
//!
//! Monodromy morphisms: `theta: N=<int>; (a b) (c d) ...`, one parenthesized
//! transposition per geometric generator, 1-based.
//!
//! Factorization files (line oriented, UTF-8):
//!
//! ```text
//! braid-factorization v1
//! strands: <d>
//! half-turns: <n>
//! theta: N=<int>; (a b) ...     (optional)
//! factor: e=<+1|+2|-2|+3> conj="<braid word body>"
//! ```
//!
//! Parsing is strict: unknown keys, out-of-order lines and malformed tokens
//! are errors with 1-based line positions. Rendering is canonical, so
//! `render . parse . render = render` byte for byte.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::{Factor, FactorKind, Factorization};
use crate::monodromy::MonodromyMorphism;

/// A parsed factorization file: the factorization and its optional
/// monodromy morphism.
#[derive(Debug, Clone)]
pub struct FactorizationFile {
    pub factorization: Factorization,
    pub theta: Option<MonodromyMorphism>,
}

fn parse_int(token: &str, line: usize, what: &str) -> Result<i64> {
    token
        .parse::<i64>()
        .map_err(|_| Error::parse(line, format!("expected {what}, got `{token}`")))
}

fn parse_letters(body: &str, line: usize) -> Result<Vec<i32>> {
    let mut letters = Vec::new();
    for token in body.split_whitespace() {
        let value = parse_int(token, line, "a nonzero letter")?;
        if value == 0 {
            return Err(Error::parse(line, "letter 0 is not a generator"));
        }
        let value = i32::try_from(value)
            .map_err(|_| Error::parse(line, format!("letter `{token}` out of range")))?;
        letters.push(value);
    }
    Ok(letters)
}

/// Parses a braid word body (no header) against a known strand count.
pub fn parse_braid_body(body: &str, strands: usize, line: usize) -> Result<BraidWord> {
    let letters = parse_letters(body, line)?;
    BraidWord::new(strands, letters)
        .map_err(|e| Error::parse(line, format!("invalid braid word: {e}")))
}

/// Parses a braid word with an optional `d=<int>;` header. Without a
/// header, the strand count is inferred from the largest letter; an empty
/// headerless word is rejected since its strand count is undetermined.
pub fn parse_braid_word(text: &str) -> Result<BraidWord> {
    let line = 1;
    let trimmed = text.trim();
    if let Some(rest) = trimmed.strip_prefix("d=") {
        let (head, body) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(line, "missing `;` after strand count"))?;
        let strands = parse_int(head.trim(), line, "a strand count")?;
        if strands < 1 {
            return Err(Error::parse(line, "strand count must be at least 1"));
        }
        parse_braid_body(body, strands as usize, line)
    } else {
        let letters = parse_letters(trimmed, line)?;
        let strands = letters
            .iter()
            .map(|g| g.unsigned_abs() as usize + 1)
            .max()
            .ok_or_else(|| {
                Error::parse(line, "cannot infer strand count of an empty word; add d=<n>;")
            })?;
        BraidWord::new(strands, letters)
            .map_err(|e| Error::parse(line, format!("invalid braid word: {e}")))
    }
}

/// Canonical body rendering: letters separated by single spaces.
pub fn render_braid_body(word: &BraidWord) -> String {
    word.letters()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical rendering with header, e.g. `d=3; 1 2 -1`.
pub fn render_braid_word(word: &BraidWord) -> String {
    let body = render_braid_body(word);
    if body.is_empty() {
        format!("d={};", word.strands())
    } else {
        format!("d={}; {}", word.strands(), body)
    }
}

fn parse_theta_at(text: &str, line: usize) -> Result<MonodromyMorphism> {
    let rest = text.trim();
    let rest = rest.strip_prefix("theta:").unwrap_or(rest).trim();
    let rest = rest
        .strip_prefix("N=")
        .ok_or_else(|| Error::parse(line, "expected `N=<int>;`"))?;
    let (head, body) = rest
        .split_once(';')
        .ok_or_else(|| Error::parse(line, "missing `;` after sheet count"))?;
    let sheets = parse_int(head.trim(), line, "a sheet count")?;
    if sheets < 1 {
        return Err(Error::parse(line, "sheet count must be at least 1"));
    }
    let mut pairs = Vec::new();
    let mut remaining = body.trim();
    while !remaining.is_empty() {
        let open = remaining
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(line, format!("expected `(` at `{remaining}`")))?;
        let (inside, rest) = open
            .split_once(')')
            .ok_or_else(|| Error::parse(line, "unclosed transposition"))?;
        let points: Vec<&str> = inside.split_whitespace().collect();
        let [a, b] = points.as_slice() else {
            return Err(Error::parse(
                line,
                format!("transposition needs two points, got `({inside})`"),
            ));
        };
        let a = parse_int(a, line, "a point")?;
        let b = parse_int(b, line, "a point")?;
        if a < 1 || b < 1 {
            return Err(Error::parse(line, "points are 1-based"));
        }
        pairs.push((a as usize, b as usize));
        remaining = rest.trim_start();
    }
    if pairs.is_empty() {
        return Err(Error::parse(line, "morphism needs at least one image"));
    }
    MonodromyMorphism::from_transpositions(sheets as usize, &pairs)
        .map_err(|e| Error::parse(line, format!("invalid morphism: {e}")))
}

/// Parses `theta: N=<int>; (a b) (c d) ...`; the `theta:` prefix may be
/// omitted.
pub fn parse_theta(text: &str) -> Result<MonodromyMorphism> {
    parse_theta_at(text, 1)
}

/// Canonical rendering, always with the `theta:` prefix. Fails when an
/// image is not a transposition, which the grammar cannot express.
pub fn render_theta(theta: &MonodromyMorphism) -> Result<String> {
    let mut out = format!("theta: N={};", theta.sheets());
    for image in theta.images() {
        let (a, b) = image
            .as_transposition()
            .ok_or_else(|| Error::NotATransposition(image.to_string()))?;
        out.push_str(&format!(" ({a} {b})"));
    }
    Ok(out)
}

fn kind_token(kind: FactorKind) -> &'static str {
    match kind {
        FactorKind::Tangency => "+1",
        FactorKind::PositiveNode => "+2",
        FactorKind::NegativeNode => "-2",
        FactorKind::Cusp => "+3",
    }
}

fn parse_kind(token: &str, line: usize) -> Result<FactorKind> {
    match token {
        "+1" => Ok(FactorKind::Tangency),
        "+2" => Ok(FactorKind::PositiveNode),
        "-2" => Ok(FactorKind::NegativeNode),
        "+3" => Ok(FactorKind::Cusp),
        other => Err(Error::parse(
            line,
            format!("exponent must be one of +1, +2, -2, +3; got `{other}`"),
        )),
    }
}

/// Parses a factorization file.
pub fn parse_factorization(text: &str) -> Result<FactorizationFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty file"))?;
    if header != "braid-factorization v1" {
        return Err(Error::parse(
            line,
            format!("expected `braid-factorization v1`, got `{header}`"),
        ));
    }
    let (line, strands_line) = lines
        .next()
        .ok_or_else(|| Error::parse(2, "missing `strands:` line"))?;
    let strands = match strands_line.strip_prefix("strands: ") {
        Some(rest) => parse_int(rest.trim(), line, "a strand count")?,
        None => return Err(Error::parse(line, "expected `strands: <d>`")),
    };
    if strands < 2 {
        return Err(Error::parse(line, "strand count must be at least 2"));
    }
    let strands = strands as usize;
    let (line, turns_line) = lines
        .next()
        .ok_or_else(|| Error::parse(3, "missing `half-turns:` line"))?;
    let half_turns = match turns_line.strip_prefix("half-turns: ") {
        Some(rest) => parse_int(rest.trim(), line, "a half-turn count")?,
        None => return Err(Error::parse(line, "expected `half-turns: <n>`")),
    };
    if half_turns < 1 {
        return Err(Error::parse(line, "half-turn count must be at least 1"));
    }

    let mut theta = None;
    let mut factors = Vec::new();
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("theta: ") {
            if theta.is_some() {
                return Err(Error::parse(line, "duplicate `theta:` line"));
            }
            if !factors.is_empty() {
                return Err(Error::parse(line, "`theta:` must precede factor lines"));
            }
            let morphism = parse_theta_at(rest, line)?;
            if morphism.degree() != strands {
                return Err(Error::parse(
                    line,
                    format!(
                        "morphism has {} images but the factorization has {} strands",
                        morphism.degree(),
                        strands
                    ),
                ));
            }
            theta = Some(morphism);
        } else if let Some(rest) = content.strip_prefix("factor: ") {
            let rest = rest
                .strip_prefix("e=")
                .ok_or_else(|| Error::parse(line, "expected `e=<exponent>`"))?;
            let (kind_token, rest) = rest
                .split_once(' ')
                .ok_or_else(|| Error::parse(line, "expected ` conj=\"...\"` after exponent"))?;
            let kind = parse_kind(kind_token, line)?;
            let body = rest
                .strip_prefix("conj=\"")
                .and_then(|r| r.strip_suffix('"'))
                .ok_or_else(|| Error::parse(line, "expected `conj=\"<braid word>\"`"))?;
            let conjugator = parse_braid_body(body, strands, line)?;
            factors.push(
                Factor::new(conjugator, kind)
                    .map_err(|e| Error::parse(line, format!("invalid factor: {e}")))?,
            );
        } else if content.is_empty() {
            return Err(Error::parse(line, "blank lines are not allowed"));
        } else {
            let key = content.split([':', ' ']).next().unwrap_or(content);
            return Err(Error::parse(line, format!("unknown key `{key}`")));
        }
    }
    let factorization = Factorization::new(strands, half_turns as u32, factors)
        .map_err(|e| Error::parse(1, format!("invalid factorization: {e}")))?;
    Ok(FactorizationFile {
        factorization,
        theta,
    })
}

/// Canonical rendering of a factorization file, ending with a newline.
pub fn render_factorization(file: &FactorizationFile) -> Result<String> {
    let f = &file.factorization;
    let mut out = String::from("braid-factorization v1\n");
    out.push_str(&format!("strands: {}\n", f.strands()));
    out.push_str(&format!("half-turns: {}\n", f.half_turns()));
    if let Some(theta) = &file.theta {
        out.push_str(&render_theta(theta)?);
        out.push('\n');
    }
    for factor in f.factors() {
        out.push_str(&format!(
            "factor: e={} conj=\"{}\"\n",
            kind_token(factor.kind()),
            render_braid_body(factor.conjugator())
        ));
    }
    Ok(out)
}
