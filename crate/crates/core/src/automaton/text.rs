//! Line-oriented text format.
//!
//! ```text
//! dfa <states> <alphabet> <transitions> <finals> <initial>
//! <tail> <label> <head>        (one line per transition)
//! <state>                      (one line per final state)
//! ```
//!
//! Lines starting with `#` and blank lines are skipped when parsing.
//! Serialization always emits transitions sorted by `(tail, label, head)`
//! and finals ascending, one space between tokens, LF line endings.

use std::fmt::Write as _;

use thiserror::Error;

use super::{validate, PtDfa, RawDfa, Transition, ValidationErrors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid automaton: {0}")]
    Invalid(#[from] ValidationErrors),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N], ParseError> {
    let mut out = [0usize; N];
    let mut tokens = line.split_whitespace();
    for slot in out.iter_mut() {
        let tok = tokens
            .next()
            .ok_or_else(|| syntax(line_no, format!("expected {N} numbers")))?;
        *slot = tok
            .parse()
            .map_err(|_| syntax(line_no, format!("`{tok}` is not a non-negative integer")))?;
    }
    if let Some(extra) = tokens.next() {
        return Err(syntax(line_no, format!("unexpected token `{extra}`")));
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<PtDfa, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let last_line = text.lines().count().max(1);

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| syntax(last_line, "missing `dfa` header"))?;
    let rest = header
        .strip_prefix("dfa")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| syntax(header_no, "header must start with `dfa`"))?;
    let [states, alphabet, m, k, initial] = numbers::<5>(header_no, rest)?;

    let mut transitions = Vec::with_capacity(m.min(1 << 24));
    for i in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(last_line, format!("expected {m} transitions, found {i}")))?;
        let [tail, label, head] = numbers::<3>(no, line)?;
        transitions.push(Transition { tail, label, head });
    }
    let mut finals = Vec::with_capacity(k.min(1 << 24));
    for i in 0..k {
        let (no, line) = lines
            .next()
            .ok_or_else(|| syntax(last_line, format!("expected {k} final states, found {i}")))?;
        let [q] = numbers::<1>(no, line)?;
        finals.push(q);
    }
    if let Some((no, _)) = lines.next() {
        return Err(syntax(no, "trailing content after the final states"));
    }
    Ok(validate(RawDfa {
        states,
        alphabet,
        transitions,
        initial,
        finals,
    })?)
}

pub fn serialize(d: &PtDfa) -> String {
    let mut out = String::with_capacity(16 * (d.transition_count() + d.finals().len() + 1));
    let _ = writeln!(
        out,
        "dfa {} {} {} {} {}",
        d.states(),
        d.alphabet(),
        d.transition_count(),
        d.finals().len(),
        d.initial()
    );
    for t in d.transitions() {
        let _ = writeln!(out, "{} {} {}", t.tail, t.label, t.head);
    }
    for q in d.finals() {
        let _ = writeln!(out, "{q}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only() {
        let d = parse("dfa 1 1 0 0 0").unwrap();
        assert_eq!(d.states(), 1);
        assert_eq!(d.transition_count(), 0);
        assert!(d.finals().is_empty());
        assert_eq!(serialize(&d), "dfa 1 1 0 0 0\n");
    }

    #[test]
    fn unsorted_input_reserializes_sorted() {
        let text = "# comment\ndfa 2 2 3 1 0\n1 0 0\n0 1 1\n0 0 1\n\n1\n";
        let d = parse(text).unwrap();
        assert_eq!(serialize(&d), "dfa 2 2 3 1 0\n0 0 1\n0 1 1\n1 0 0\n1\n");
    }

    #[test]
    fn malformed_header_names_line() {
        let err = parse("\n# x\ndfx 1 1 0 0 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }), "{err}");
        let err = parse("dfa 1 1 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }), "{err}");
    }

    #[test]
    fn bad_token_and_truncation() {
        let err = parse("dfa 2 1 1 0 0\n0 x 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
        let err = parse("dfa 2 1 2 0 0\n0 0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }), "{err}");
        let err = parse("dfa 2 1 0 0 0\n1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
    }

    #[test]
    fn validation_errors_propagate() {
        let err = parse("dfa 2 1 2 0 0\n0 0 1\n0 0 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid(_)), "{err}");
    }
}
