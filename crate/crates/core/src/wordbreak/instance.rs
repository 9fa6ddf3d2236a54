//! Instances and the `.wbi` file format.
//!
//! ```text
//! # comment
//! wbi 1
//! text: "aababab"
//! word: "ab"
//! word: 97 97
//! ```
//!
//! A value is either a quoted byte string (everything between the first and
//! last quote, no escapes) or whitespace-separated decimal symbol ids. Empty
//! words are rejected at parse time.

use std::fmt;

use crate::regex::Text;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordBreakInstance {
    pub text: Text,
    pub words: Vec<Text>,
}

impl WordBreakInstance {
    pub fn new(text: Text, words: Vec<Text>) -> WordBreakInstance {
        WordBreakInstance { text, words }
    }

    pub fn n(&self) -> usize {
        self.text.len()
    }

    /// Total dictionary size, the `m` in all the bounds.
    pub fn m(&self) -> usize {
        self.words.iter().map(Text::len).sum()
    }

    /// Sorted, deduplicated, and without words that cannot occur: empty ones
    /// (harmless for the answer, since zero rounds already give the empty
    /// text) and those longer than the text.
    pub fn normalized(&self) -> WordBreakInstance {
        let n = self.n();
        let mut words: Vec<Text> = self
            .words
            .iter()
            .filter(|w| !w.is_empty() && w.len() <= n)
            .cloned()
            .collect();
        words.sort_unstable_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
        words.dedup();
        WordBreakInstance {
            text: self.text.clone(),
            words,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WbiError {
    /// 1-based.
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for WbiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for WbiError {}

fn parse_value(raw: &str, line: usize) -> Result<Text, WbiError> {
    let v = raw.trim();
    if let Some(rest) = v.strip_prefix('"') {
        let inner = rest.strip_suffix('"').ok_or_else(|| WbiError {
            line,
            msg: "unterminated quote".into(),
        })?;
        if inner.contains('"') {
            return Err(WbiError {
                line,
                msg: "stray quote inside quoted value".into(),
            });
        }
        Ok(Text::from_ascii(inner.as_bytes()))
    } else {
        let ids: Result<Vec<u32>, _> = v.split_whitespace().map(str::parse).collect();
        match ids {
            Ok(ids) => Ok(Text::from_ids(&ids)),
            Err(_) => Err(WbiError {
                line,
                msg: format!("expected quoted string or symbol ids, got {v:?}"),
            }),
        }
    }
}

pub fn read_wbi(input: &str) -> Result<WordBreakInstance, WbiError> {
    let mut text: Option<Text> = None;
    let mut words = Vec::new();
    let mut saw_version = false;
    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_version {
            if line != "wbi 1" {
                return Err(WbiError {
                    line: lineno,
                    msg: format!("expected header 'wbi 1', got {line:?}"),
                });
            }
            saw_version = true;
            continue;
        }
        if let Some(v) = line.strip_prefix("text:") {
            if text.is_some() {
                return Err(WbiError {
                    line: lineno,
                    msg: "second 'text:' line".into(),
                });
            }
            text = Some(parse_value(v, lineno)?);
        } else if let Some(v) = line.strip_prefix("word:") {
            let w = parse_value(v, lineno)?;
            if w.is_empty() {
                return Err(WbiError {
                    line: lineno,
                    msg: "empty word".into(),
                });
            }
            words.push(w);
        } else {
            return Err(WbiError {
                line: lineno,
                msg: format!("expected 'text:' or 'word:', got {line:?}"),
            });
        }
    }
    if !saw_version {
        return Err(WbiError {
            line: input.lines().count() + 1,
            msg: "missing 'wbi 1' header".into(),
        });
    }
    match text {
        Some(text) => Ok(WordBreakInstance { text, words }),
        None => Err(WbiError {
            line: input.lines().count() + 1,
            msg: "missing 'text:' line".into(),
        }),
    }
}

fn write_value(t: &Text, out: &mut String) {
    let quotable = !t.0.is_empty()
        && t.0
            .iter()
            .all(|s| (33..=126).contains(&s.0) && s.0 != u32::from(b'"'));
    if quotable || t.0.is_empty() {
        out.push('"');
        for s in &t.0 {
            out.push(s.0 as u8 as char);
        }
        out.push('"');
    } else {
        let ids: Vec<String> = t.0.iter().map(|s| s.0.to_string()).collect();
        out.push_str(&ids.join(" "));
    }
}

pub fn write_wbi(inst: &WordBreakInstance) -> String {
    let mut out = String::from("wbi 1\n");
    out.push_str("text: ");
    write_value(&inst.text, &mut out);
    out.push('\n');
    for w in &inst.words {
        out.push_str("word: ");
        write_value(w, &mut out);
        out.push('\n');
    }
    out
}
