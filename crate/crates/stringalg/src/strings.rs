//! Strings, bands, and the linear orders on hammock sets.
//!
//! A *word* is a walk in the quiver whose steps are arrows (`a`) or formal
//! inverses (`a-`). Words are read **right to left** — the walk starts at the
//! source of the rightmost syllable — but stored and serialized leftmost
//! syllable first, so consecutive stored syllables satisfy
//! `s(wᵢ) = t(wᵢ₊₁)`. A word is a *string* when, additionally, no syllable is
//! followed by its own inverse and no maximal run of equally-oriented
//! syllables contains a blocking relation (or an inverted one). *Trivial*
//! strings `1_(v,i)` — one per vertex `v` and sign `i ∈ {−1,+1}` — act as
//! local units: `x · 1_(v,i)` is defined iff `s(x) = v` and `σ(x) = −i`, and
//! `1_(v,i) · x` iff `t(x) = v` and `τ(x) = i`.
//!
//! The *left hammock* `H_l(v,i)` collects `1_(v,i)` together with all strings
//! `x` with `x · 1_(v,i)` defined; it carries the total order [`compare_l`].
//! Mapping each string to its [`sign_sequence`] embeds `(H_l, <_l)` into the
//! in-order on binary positions, which is what the automata in
//! [`crate::hammock`] exploit.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::presentation::StringAlgebra;

/// One step of a walk: an arrow traversed forwards (`inverse = false`) or
/// backwards (`inverse = true`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    /// Arrow index into the presentation.
    pub arrow: usize,
    /// Whether the arrow is traversed against its direction.
    pub inverse: bool,
}

impl Syllable {
    /// The direct syllable for arrow `a`.
    pub fn direct(arrow: usize) -> Syllable {
        Syllable { arrow, inverse: false }
    }

    /// The inverse syllable for arrow `a`.
    pub fn inverted(arrow: usize) -> Syllable {
        Syllable { arrow, inverse: true }
    }

    /// The same arrow traversed the other way.
    pub fn flipped(self) -> Syllable {
        Syllable { arrow: self.arrow, inverse: !self.inverse }
    }
}

/// A trivial string `1_(v,i)` or a nonempty word, stored leftmost syllable
/// first.
///
/// The derived `Ord` is structural (used only for deterministic containers);
/// the mathematically meaningful orders are [`compare_l`] and [`compare_r`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StringWord {
    /// The local unit at vertex `vertex` with sign `i ∈ {−1,+1}`.
    Trivial {
        /// Vertex index into the presentation.
        vertex: usize,
        /// Sign component of the unit, `−1` or `+1`.
        i: i8,
    },
    /// A nonempty word, leftmost syllable first.
    Word(Vec<Syllable>),
}

impl StringWord {
    /// The trivial string `1_(v,i)`; panics unless `i` is `±1`.
    pub fn trivial(vertex: usize, i: i8) -> StringWord {
        assert!(i == 1 || i == -1, "trivial string sign must be ±1");
        StringWord::Trivial { vertex, i }
    }

    /// A word from its syllables (leftmost first); panics when empty.
    pub fn from_syllables(syllables: Vec<Syllable>) -> StringWord {
        assert!(!syllables.is_empty(), "words are nonempty; use StringWord::trivial");
        StringWord::Word(syllables)
    }

    /// Number of syllables (trivial strings have length 0).
    pub fn len(&self) -> usize {
        match self {
            StringWord::Trivial { .. } => 0,
            StringWord::Word(s) => s.len(),
        }
    }

    /// Whether this is a trivial string.
    pub fn is_trivial(&self) -> bool {
        matches!(self, StringWord::Trivial { .. })
    }

    /// The syllables, leftmost first (empty for trivial strings).
    pub fn syllables(&self) -> &[Syllable] {
        match self {
            StringWord::Trivial { .. } => &[],
            StringWord::Word(s) => s,
        }
    }
}

fn syll_source(alg: &StringAlgebra, s: Syllable) -> usize {
    let a = &alg.presentation().arrows()[s.arrow];
    if s.inverse { a.target } else { a.source }
}

fn syll_target(alg: &StringAlgebra, s: Syllable) -> usize {
    let a = &alg.presentation().arrows()[s.arrow];
    if s.inverse { a.source } else { a.target }
}

fn syll_sigma(alg: &StringAlgebra, s: Syllable) -> i8 {
    if s.inverse { alg.signs().tau(s.arrow) } else { alg.signs().sigma(s.arrow) }
}

fn syll_tau(alg: &StringAlgebra, s: Syllable) -> i8 {
    if s.inverse { alg.signs().sigma(s.arrow) } else { alg.signs().tau(s.arrow) }
}

/// Start vertex of the walk: the source of the rightmost syllable, or `v`
/// for `1_(v,i)`.
pub fn source(alg: &StringAlgebra, w: &StringWord) -> usize {
    match w {
        StringWord::Trivial { vertex, .. } => *vertex,
        StringWord::Word(s) => syll_source(alg, *s.last().unwrap()),
    }
}

/// End vertex of the walk: the target of the leftmost syllable, or `v` for
/// `1_(v,i)`.
pub fn target(alg: &StringAlgebra, w: &StringWord) -> usize {
    match w {
        StringWord::Trivial { vertex, .. } => *vertex,
        StringWord::Word(s) => syll_target(alg, s[0]),
    }
}

/// σ of a word: σ of its rightmost syllable; `σ(1_(v,i)) = −i`.
pub fn sigma(alg: &StringAlgebra, w: &StringWord) -> i8 {
    match w {
        StringWord::Trivial { i, .. } => -i,
        StringWord::Word(s) => syll_sigma(alg, *s.last().unwrap()),
    }
}

/// τ of a word: τ of its leftmost syllable; `τ(1_(v,i)) = i`.
pub fn tau(alg: &StringAlgebra, w: &StringWord) -> i8 {
    match w {
        StringWord::Trivial { i, .. } => *i,
        StringWord::Word(s) => syll_tau(alg, s[0]),
    }
}

/// Whether `w` is a string: composable, backtrack-free, and avoiding every
/// blocking relation in both orientations. Trivial strings qualify.
pub fn is_string(alg: &StringAlgebra, w: &StringWord) -> bool {
    let s = match w {
        StringWord::Trivial { .. } => return true,
        StringWord::Word(s) => s,
    };
    for pair in s.windows(2) {
        if syll_source(alg, pair[0]) != syll_target(alg, pair[1]) {
            return false;
        }
        if pair[0] == pair[1].flipped() {
            return false;
        }
    }
    for rel in alg.presentation().relations() {
        let k = rel.len();
        if k > s.len() {
            continue;
        }
        for win in s.windows(k) {
            // Forward occurrence: a run of direct syllables spelling `rel`.
            if win.iter().zip(rel).all(|(syl, &a)| !syl.inverse && syl.arrow == a) {
                return false;
            }
            // Inverted occurrence: a run of inverse syllables spelling the
            // reversed relation.
            if win.iter().zip(rel.iter().rev()).all(|(syl, &a)| syl.inverse && syl.arrow == a) {
                return false;
            }
        }
    }
    true
}

/// The formal inverse: syllables reversed and flipped; `1_(v,i)⁻ = 1_(v,−i)`.
pub fn inverse(w: &StringWord) -> StringWord {
    match w {
        StringWord::Trivial { vertex, i } => StringWord::Trivial { vertex: *vertex, i: -i },
        StringWord::Word(s) => StringWord::Word(s.iter().rev().map(|syl| syl.flipped()).collect()),
    }
}

/// The word's direction bits, rightmost syllable first: `0` for a direct
/// syllable, `1` for an inverse one. Trivial strings map to the empty
/// sequence. This map embeds `(H_l(v,i), <_l)` into the in-order on binary
/// sequences.
pub fn sign_sequence(w: &StringWord) -> Vec<u8> {
    w.syllables().iter().rev().map(|s| if s.inverse { 1 } else { 0 }).collect()
}

/// Compares two strings in the left order `<_l`.
///
/// Both must start at the same vertex with the same σ (as members of a
/// common left hammock); otherwise the words are not comparable and an error
/// is returned. The rule: discard the longest common right part `z` of
/// `x = x′z` and `y = y′z`; then `x <_l y` iff `x′` is nonempty with direct
/// rightmost syllable, or `y′` is nonempty with inverse rightmost syllable.
pub fn compare_l(alg: &StringAlgebra, x: &StringWord, y: &StringWord) -> Result<Ordering> {
    if source(alg, x) != source(alg, y) || sigma(alg, x) != sigma(alg, y) {
        return Err(Error::NotComparable {
            detail: format!(
                "`{}` (source {}, sigma {}) and `{}` (source {}, sigma {}) do not share a left hammock",
                format_word(alg, x),
                alg.presentation().vertex_name(source(alg, x)),
                sigma(alg, x),
                format_word(alg, y),
                alg.presentation().vertex_name(source(alg, y)),
                sigma(alg, y),
            ),
        });
    }
    let xs = x.syllables();
    let ys = y.syllables();
    let mut common = 0;
    while common < xs.len()
        && common < ys.len()
        && xs[xs.len() - 1 - common] == ys[ys.len() - 1 - common]
    {
        common += 1;
    }
    let x_rest = &xs[..xs.len() - common];
    let y_rest = &ys[..ys.len() - common];
    Ok(if x_rest.is_empty() && y_rest.is_empty() {
        Ordering::Equal
    } else if x_rest.last().is_some_and(|s| !s.inverse) {
        Ordering::Less
    } else if y_rest.last().is_some_and(|s| s.inverse) {
        Ordering::Less
    } else {
        Ordering::Greater
    })
}

/// Compares two strings in the right order `<_r`, defined by
/// `x <_r y ⟺ x⁻ <_l y⁻`.
pub fn compare_r(alg: &StringAlgebra, x: &StringWord, y: &StringWord) -> Result<Ordering> {
    compare_l(alg, &inverse(x), &inverse(y))
}

/// All rotations of a word (the word itself for trivial strings).
pub fn rotations(w: &StringWord) -> Vec<StringWord> {
    match w {
        StringWord::Trivial { .. } => vec![w.clone()],
        StringWord::Word(s) => (0..s.len())
            .map(|k| {
                let mut rot = s[k..].to_vec();
                rot.extend_from_slice(&s[..k]);
                StringWord::Word(rot)
            })
            .collect(),
    }
}

fn is_primitive(s: &[Syllable]) -> bool {
    let n = s.len();
    for d in 1..n {
        if n % d == 0 && (d..n).all(|j| s[j] == s[j % d]) {
            return false;
        }
    }
    true
}

/// Whether `w` is a band: a primitive string containing both a direct and an
/// inverse syllable whose square is again a string. Each rotation of a band
/// is itself a band, so this recognizes any representative of the rotation
/// class.
pub fn is_band(alg: &StringAlgebra, w: &StringWord) -> bool {
    let s = match w {
        StringWord::Trivial { .. } => return false,
        StringWord::Word(s) => s,
    };
    if !s.iter().any(|syl| syl.inverse) || !s.iter().any(|syl| !syl.inverse) {
        return false;
    }
    if !is_primitive(s) {
        return false;
    }
    let mut square = s.clone();
    square.extend_from_slice(s);
    is_string(alg, w) && is_string(alg, &StringWord::Word(square))
}

/// Which end of the stored band representative must hold the direct
/// syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BandOrientation {
    /// Canonical rotation ends (rightmost syllable) direct and starts
    /// (leftmost syllable) inverse.
    #[default]
    RightmostDirect,
    /// Canonical rotation starts direct and ends inverse.
    LeftmostDirect,
}

/// The canonical stored rotation of a band: among rotations whose boundary
/// syllables match `orientation`, the lexicographically least token
/// sequence. Errors when `w` is not a band.
pub fn canonical_band_rotation(
    alg: &StringAlgebra,
    w: &StringWord,
    orientation: BandOrientation,
) -> Result<StringWord> {
    if !is_band(alg, w) {
        return Err(Error::InvalidBand {
            detail: format!("`{}` is not a band", format_word(alg, w)),
        });
    }
    let mut best: Option<(Vec<String>, StringWord)> = None;
    for rot in rotations(w) {
        let s = rot.syllables();
        let ok = match orientation {
            BandOrientation::RightmostDirect => !s.last().unwrap().inverse && s[0].inverse,
            BandOrientation::LeftmostDirect => !s[0].inverse && s.last().unwrap().inverse,
        };
        if !ok {
            continue;
        }
        let key: Vec<String> = s.iter().map(|syl| token(alg, *syl)).collect();
        if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
            best = Some((key, rot));
        }
    }
    best.map(|(_, rot)| rot).ok_or_else(|| Error::Invariant {
        detail: "a band always has a rotation with the requested boundary orientation".into(),
    })
}

/// The window width `w = max(r−1, 1)` used by short strings and brackets.
pub fn width(alg: &StringAlgebra) -> usize {
    alg.presentation().r().saturating_sub(1).max(1)
}

/// The leftmost `min(len, width)` syllables of `w` — its longest short
/// prefix in writing order. Trivial strings are their own bracket.
pub fn bracket(alg: &StringAlgebra, w: &StringWord) -> StringWord {
    match w {
        StringWord::Trivial { .. } => w.clone(),
        StringWord::Word(s) => {
            let keep = s.len().min(width(alg));
            StringWord::Word(s[..keep].to_vec())
        }
    }
}

/// Whether `1_(v,i) · x` is defined: `t(x) = v` and `τ(x) = i`.
pub fn can_left_multiply(alg: &StringAlgebra, v: usize, i: i8, x: &StringWord) -> bool {
    target(alg, x) == v && tau(alg, x) == i
}

/// Whether `x · 1_(v,i)` is defined: `s(x) = v` and `σ(x) = −i`.
pub fn can_right_multiply(alg: &StringAlgebra, x: &StringWord, v: usize, i: i8) -> bool {
    source(alg, x) == v && sigma(alg, x) == -i
}

fn all_syllables(alg: &StringAlgebra) -> Vec<Syllable> {
    (0..alg.presentation().arrows().len())
        .flat_map(|a| [Syllable::direct(a), Syllable::inverted(a)])
        .collect()
}

/// Every string of length at most [`width`], together with all trivial
/// strings, in a deterministic order (trivials by vertex and sign, then
/// words by length and token sequence).
pub fn short_universe(alg: &StringAlgebra) -> Vec<StringWord> {
    let mut out: Vec<StringWord> = Vec::new();
    for v in 0..alg.presentation().vertices().len() {
        for i in [-1, 1] {
            out.push(StringWord::trivial(v, i));
        }
    }
    let mut layer: Vec<StringWord> = all_syllables(alg)
        .into_iter()
        .map(|s| StringWord::Word(vec![s]))
        .filter(|w| is_string(alg, w))
        .collect();
    for _ in 0..width(alg) {
        let mut next = Vec::new();
        for w in &layer {
            for beta in all_syllables(alg) {
                if syll_source(alg, beta) != target(alg, w) {
                    continue;
                }
                let mut s = vec![beta];
                s.extend_from_slice(w.syllables());
                let cand = StringWord::Word(s);
                if is_string(alg, &cand) {
                    next.push(cand);
                }
            }
        }
        sort_words_deterministically(alg, &mut layer);
        out.append(&mut layer);
        layer = next;
    }
    out
}

fn sort_words_deterministically(alg: &StringAlgebra, words: &mut [StringWord]) {
    words.sort_by_key(|w| {
        (w.len(), w.syllables().iter().map(|s| token(alg, *s)).collect::<Vec<_>>())
    });
}

/// Enumerates `H_l(v,i)` up to word length `maxlen` by breadth-first left
/// extension, returned in ascending `<_l` order.
pub fn enumerate_hl_naive(alg: &StringAlgebra, v: usize, i: i8, maxlen: usize) -> Vec<StringWord> {
    let mut out = vec![StringWord::trivial(v, i)];
    let mut layer: Vec<StringWord> = all_syllables(alg)
        .into_iter()
        .filter(|&s| syll_source(alg, s) == v && syll_sigma(alg, s) == -i)
        .map(|s| StringWord::Word(vec![s]))
        .filter(|w| is_string(alg, w))
        .collect();
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for w in &layer {
            for beta in all_syllables(alg) {
                if syll_source(alg, beta) != target(alg, w) {
                    continue;
                }
                let mut s = vec![beta];
                s.extend_from_slice(w.syllables());
                let cand = StringWord::Word(s);
                if is_string(alg, &cand) {
                    next.push(cand);
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out.sort_by(|x, y| compare_l(alg, x, y).expect("left-hammock members are mutually comparable"));
    out
}

/// The text token for one syllable: the arrow name, with `-` appended for
/// inverse syllables.
pub fn token(alg: &StringAlgebra, s: Syllable) -> String {
    let name = alg.presentation().arrow_name(s.arrow);
    if s.inverse { format!("{name}-") } else { name.to_string() }
}

/// Formats a word as its concatenated tokens (e.g. `b-a`), or `1_(v,i)` for
/// a trivial string.
pub fn format_word(alg: &StringAlgebra, w: &StringWord) -> String {
    match w {
        StringWord::Trivial { vertex, i } => {
            format!("1_({},{})", alg.presentation().vertex_name(*vertex), i)
        }
        StringWord::Word(s) => s.iter().map(|syl| token(alg, *syl)).collect(),
    }
}

fn parse_token(alg: &StringAlgebra, tok: &str) -> Result<Syllable> {
    let (name, inverse) = match tok.strip_suffix('-') {
        Some(name) => (name, true),
        None => (tok, false),
    };
    let arrow = alg.presentation().arrow_id(name).ok_or_else(|| Error::UnknownReference {
        kind: "arrow",
        name: name.to_string(),
        context: format!("in word token `{tok}`"),
    })?;
    Ok(Syllable { arrow, inverse })
}

/// Parses the textual forms produced by [`format_word`].
///
/// Accepted: `1_(v,i)` for trivial strings; dot-separated tokens
/// (`b-.a`); or concatenated tokens (`b-a`), resolved by matching arrow
/// names — ambiguous concatenations (possible when one arrow name prefixes
/// another) are rejected with a hint to use the dotted form.
pub fn parse_word(alg: &StringAlgebra, text: &str) -> Result<StringWord> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "empty word; trivial strings are written 1_(v,i)".into(),
        });
    }
    if let Some(rest) = text.strip_prefix("1_(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| Error::Syntax {
            line: 1,
            column: text.len(),
            message: "trivial string must look like 1_(v,i)".into(),
        })?;
        let (vname, istr) = inner.rsplit_once(',').ok_or_else(|| Error::Syntax {
            line: 1,
            column: 1,
            message: "trivial string must look like 1_(v,i)".into(),
        })?;
        let vertex =
            alg.presentation().vertex_id(vname.trim()).ok_or_else(|| Error::UnknownReference {
                kind: "vertex",
                name: vname.trim().to_string(),
                context: "in trivial string".into(),
            })?;
        let i: i8 = istr.trim().parse().map_err(|_| Error::Syntax {
            line: 1,
            column: 1,
            message: format!("trivial string sign must be 1 or -1, got `{istr}`"),
        })?;
        if i != 1 && i != -1 {
            return Err(Error::Syntax {
                line: 1,
                column: 1,
                message: format!("trivial string sign must be 1 or -1, got `{i}`"),
            });
        }
        return Ok(StringWord::trivial(vertex, i));
    }
    if text.contains('.') {
        let syllables: Vec<Syllable> =
            text.split('.').map(|tok| parse_token(alg, tok.trim())).collect::<Result<_>>()?;
        return Ok(StringWord::from_syllables(syllables));
    }
    tokenize_concatenated(alg, text)
}

/// Unique-parse tokenization of a concatenated word against the arrow-name
/// alphabet; counts parses (capped at 2) to detect ambiguity.
fn tokenize_concatenated(alg: &StringAlgebra, text: &str) -> Result<StringWord> {
    let bytes = text.as_bytes();
    let n = bytes.len();
    let names: Vec<&str> = alg.presentation().arrows().iter().map(|a| a.name.as_str()).collect();
    // ways[pos] = number of tokenizations of text[pos..], capped at 2;
    // choice[pos] = the unique first token when ways[pos] == 1.
    let mut ways = vec![0usize; n + 1];
    let mut choice: Vec<Option<(Syllable, usize)>> = vec![None; n + 1];
    ways[n] = 1;
    for pos in (0..n).rev() {
        for (arrow, name) in names.iter().enumerate() {
            if !text[pos..].starts_with(name) {
                continue;
            }
            let mut end = pos + name.len();
            for inverse in [false, true] {
                if inverse {
                    if end < n && bytes[end] == b'-' {
                        end += 1;
                    } else {
                        continue;
                    }
                }
                if ways[end] > 0 {
                    ways[pos] = (ways[pos] + ways[end]).min(2);
                    choice[pos] = Some((Syllable { arrow, inverse }, end));
                }
            }
        }
    }
    match ways[0] {
        0 => Err(Error::Syntax {
            line: 1,
            column: 1,
            message: format!("`{text}` is not a concatenation of arrow tokens"),
        }),
        1 => {
            let mut syllables = Vec::new();
            let mut pos = 0;
            while pos < n {
                let (syl, next) = choice[pos].unwrap();
                syllables.push(syl);
                pos = next;
            }
            Ok(StringWord::from_syllables(syllables))
        }
        _ => Err(Error::Syntax {
            line: 1,
            column: 1,
            message: format!(
                "`{text}` tokenizes in more than one way; separate tokens with dots (e.g. `b-.a`)"
            ),
        }),
    }
}

/// JSON form: trivial strings as `{"vertex": name, "i": ±1}`, words as
/// arrays of tokens like `["b-","a"]`.
pub fn word_to_json(alg: &StringAlgebra, w: &StringWord) -> serde_json::Value {
    match w {
        StringWord::Trivial { vertex, i } => serde_json::json!({
            "vertex": alg.presentation().vertex_name(*vertex),
            "i": i,
        }),
        StringWord::Word(s) => serde_json::Value::Array(
            s.iter().map(|syl| serde_json::Value::String(token(alg, *syl))).collect(),
        ),
    }
}

/// Parses the JSON forms produced by [`word_to_json`].
pub fn word_from_json(alg: &StringAlgebra, value: &serde_json::Value) -> Result<StringWord> {
    match value {
        serde_json::Value::Array(tokens) => {
            if tokens.is_empty() {
                return Err(Error::Syntax {
                    line: 1,
                    column: 1,
                    message: "a word needs at least one token; trivial strings are objects".into(),
                });
            }
            let syllables: Vec<Syllable> = tokens
                .iter()
                .map(|t| {
                    t.as_str()
                        .ok_or_else(|| Error::Syntax {
                            line: 1,
                            column: 1,
                            message: format!("word tokens must be strings, got {t}"),
                        })
                        .and_then(|tok| parse_token(alg, tok))
                })
                .collect::<Result<_>>()?;
            Ok(StringWord::from_syllables(syllables))
        }
        serde_json::Value::Object(map) => {
            let vname =
                map.get("vertex").and_then(|v| v.as_str()).ok_or_else(|| Error::Syntax {
                    line: 1,
                    column: 1,
                    message: "trivial string object needs a string `vertex`".into(),
                })?;
            let i = map.get("i").and_then(|v| v.as_i64()).ok_or_else(|| Error::Syntax {
                line: 1,
                column: 1,
                message: "trivial string object needs an integer `i`".into(),
            })?;
            if i != 1 && i != -1 {
                return Err(Error::Syntax {
                    line: 1,
                    column: 1,
                    message: format!("trivial string sign must be 1 or -1, got {i}"),
                });
            }
            let vertex =
                alg.presentation().vertex_id(vname).ok_or_else(|| Error::UnknownReference {
                    kind: "vertex",
                    name: vname.to_string(),
                    context: "in trivial string".into(),
                })?;
            Ok(StringWord::trivial(vertex, i as i8))
        }
        other => Err(Error::Syntax {
            line: 1,
            column: 1,
            message: format!("expected a token array or trivial-string object, got {other}"),
        }),
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) const GP23: &str = r#"{
        "vertices": ["v"],
        "arrows": [
            {"name": "a", "source": "v", "target": "v"},
            {"name": "b", "source": "v", "target": "v"}
        ],
        "relations": [["a","a"], ["b","b","b"], ["a","b"], ["b","a"]]
    }"#;

    pub(crate) const KRONECKER: &str = r#"{
        "vertices": ["1", "2"],
        "arrows": [
            {"name": "a", "source": "1", "target": "2"},
            {"name": "b", "source": "1", "target": "2"}
        ],
        "relations": []
    }"#;

    pub(crate) const LOOP: &str = r#"{
        "vertices": ["v"],
        "arrows": [{"name": "a", "source": "v", "target": "v"}],
        "relations": [["a","a"]]
    }"#;

    pub(crate) fn gp23() -> StringAlgebra {
        StringAlgebra::from_json(GP23).unwrap()
    }

    pub(crate) fn kronecker() -> StringAlgebra {
        StringAlgebra::from_json(KRONECKER).unwrap()
    }

    pub(crate) fn loop_algebra() -> StringAlgebra {
        StringAlgebra::from_json(LOOP).unwrap()
    }

    pub(crate) fn w(alg: &StringAlgebra, text: &str) -> StringWord {
        parse_word(alg, text).unwrap()
    }

    #[test]
    fn word_text_roundtrips() {
        let alg = gp23();
        for text in ["a", "b-", "ab-", "b-a", "b-b-", "1_(v,1)", "1_(v,-1)"] {
            let word = w(&alg, text);
            assert_eq!(format_word(&alg, &word), text);
        }
        assert_eq!(w(&alg, "b-.a"), w(&alg, "b-a"));
    }

    #[test]
    fn word_json_roundtrips() {
        let alg = gp23();
        for text in ["ab-", "1_(v,-1)"] {
            let word = w(&alg, text);
            let json = word_to_json(&alg, &word);
            assert_eq!(word_from_json(&alg, &json).unwrap(), word);
        }
        assert_eq!(word_to_json(&alg, &w(&alg, "b-a")), serde_json::json!(["b-", "a"]));
    }

    #[test]
    fn ambiguous_concatenation_requires_dots() {
        // Arrow names `a` and `aa` make `aaa` tokenize two ways.
        let doc = r#"{
            "vertices": ["u", "v"],
            "arrows": [
                {"name": "a", "source": "u", "target": "v"},
                {"name": "aa", "source": "v", "target": "u"}
            ],
            "relations": []
        }"#;
        let alg = StringAlgebra::from_json(doc).unwrap();
        match parse_word(&alg, "aaa") {
            Err(Error::Syntax { message, .. }) => assert!(message.contains("dots"), "{message}"),
            other => panic!("expected an ambiguity error, got {other:?}"),
        }
        let dotted = parse_word(&alg, "a.aa").unwrap();
        assert_eq!(dotted.len(), 2);
        assert_eq!(dotted.syllables()[0].arrow, alg.presentation().arrow_id("a").unwrap());
        // A single token is never ambiguous.
        assert_eq!(w(&alg, "a-").len(), 1);
    }

    #[test]
    fn source_target_and_signs_follow_the_reading_direction() {
        let alg = kronecker();
        let v1 = alg.presentation().vertex_id("1").unwrap();
        let v2 = alg.presentation().vertex_id("2").unwrap();
        let ba = w(&alg, "b-a"); // walk: a from 1 to 2, then b backwards to 1
        assert_eq!(source(&alg, &ba), v1);
        assert_eq!(target(&alg, &ba), v1);
        assert_eq!(sigma(&alg, &ba), -1); // σ of the rightmost syllable a
        assert_eq!(tau(&alg, &ba), 1); // τ(b⁻) = σ(b) = +1

        let t = StringWord::trivial(v2, 1);
        assert_eq!(sigma(&alg, &t), -1);
        assert_eq!(tau(&alg, &t), 1);
        assert_eq!(source(&alg, &t), v2);
    }

    #[test]
    fn string_recognition_blocks_relations_and_backtracking() {
        let alg = gp23();
        for good in ["a", "b", "a-", "b-", "ab-", "b-a", "a-b", "ba-", "bb", "b-b-", "ab-a"] {
            assert!(is_string(&alg, &w(&alg, good)), "{good} should be a string");
        }
        for bad in ["aa", "ab", "ba", "a-a-", "b-a-", "a-b-"] {
            assert!(!is_string(&alg, &w(&alg, bad)), "{bad} must not be a string");
        }
        // Backtracking pairs.
        for bad in ["aa-", "a-a", "bb-", "b-b"] {
            assert!(!is_string(&alg, &w(&alg, bad)), "{bad} backtracks");
        }
        // bbb is blocked but bb is fine; the inverse block b-b-b- too.
        assert!(!is_string(&alg, &w(&alg, "bbb")));
        assert!(!is_string(&alg, &w(&alg, "b-b-b-")));
        // Non-composable pairs in the Kronecker quiver.
        let k = kronecker();
        assert!(!is_string(&k, &w(&k, "a.b")));
        assert!(is_string(&k, &w(&k, "ab-")));
    }

    #[test]
    fn inverse_is_an_involution_that_flips_trivial_signs() {
        let alg = gp23();
        let x = w(&alg, "ab-");
        assert_eq!(inverse(&x), w(&alg, "ba-"));
        assert_eq!(inverse(&inverse(&x)), x);
        let t = w(&alg, "1_(v,1)");
        assert_eq!(inverse(&t), w(&alg, "1_(v,-1)"));
    }

    #[test]
    fn sign_sequence_reads_rightmost_first() {
        let alg = gp23();
        assert_eq!(sign_sequence(&w(&alg, "ab-")), vec![1, 0]);
        assert_eq!(sign_sequence(&w(&alg, "b-a")), vec![0, 1]);
        assert_eq!(sign_sequence(&w(&alg, "1_(v,1)")), Vec::<u8>::new());
    }

    #[test]
    fn left_order_matches_the_pinned_hammock_listing() {
        let alg = gp23();
        let mut words: Vec<StringWord> =
            ["b-b-", "ab-", "1_(v,1)", "b-", "b-a", "a"].iter().map(|t| w(&alg, t)).collect();
        words.sort_by(|x, y| compare_l(&alg, x, y).unwrap());
        let formatted: Vec<String> = words.iter().map(|x| format_word(&alg, x)).collect();
        assert_eq!(formatted, ["a", "b-a", "1_(v,1)", "ab-", "b-", "b-b-"]);
    }

    #[test]
    fn right_order_inverts_the_left_order() {
        let alg = gp23();
        // x <_r y iff x⁻ <_l y⁻; b and a⁻b lie in H_r(v, -1)-style position:
        // t = v, shared τ. Their inverses are b- and b-a.
        let x = w(&alg, "b");
        let y = w(&alg, "a-b");
        let left = compare_l(&alg, &inverse(&x), &inverse(&y)).unwrap();
        assert_eq!(compare_r(&alg, &x, &y).unwrap(), left);
    }

    #[test]
    fn incomparable_words_error() {
        let alg = gp23();
        // σ(a) = −1 but σ(b) = +1, so a and b share no left hammock.
        assert!(matches!(
            compare_l(&alg, &w(&alg, "a"), &w(&alg, "b")),
            Err(Error::NotComparable { .. })
        ));
        assert!(matches!(
            compare_l(&alg, &w(&alg, "1_(v,1)"), &w(&alg, "1_(v,-1)")),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn band_recognition() {
        let alg = gp23();
        assert!(is_band(&alg, &w(&alg, "ab-")));
        assert!(is_band(&alg, &w(&alg, "b-a")));
        assert!(!is_band(&alg, &w(&alg, "ab-ab-")), "proper powers are not primitive");
        assert!(!is_band(&alg, &w(&alg, "bb")), "one-directional words are not bands");
        assert!(!is_band(&alg, &w(&alg, "a")));
        assert!(!is_band(&alg, &w(&alg, "1_(v,1)")));
        let k = kronecker();
        assert!(is_band(&k, &w(&k, "ab-")));
    }

    #[test]
    fn canonical_band_rotations_respect_orientation() {
        let alg = gp23();
        let band = w(&alg, "ab-");
        let canon = canonical_band_rotation(&alg, &band, BandOrientation::RightmostDirect).unwrap();
        assert_eq!(format_word(&alg, &canon), "b-a");
        let canon = canonical_band_rotation(&alg, &band, BandOrientation::LeftmostDirect).unwrap();
        assert_eq!(format_word(&alg, &canon), "ab-");
        assert!(canonical_band_rotation(&alg, &w(&alg, "bb"), BandOrientation::default()).is_err());
    }

    #[test]
    fn short_universe_sizes_and_bound() {
        let gp = gp23();
        let universe = short_universe(&gp);
        assert_eq!(universe.len(), 12);
        let nontrivial: Vec<String> =
            universe.iter().filter(|x| !x.is_trivial()).map(|x| format_word(&gp, x)).collect();
        assert_eq!(nontrivial, ["a", "a-", "b", "b-", "ab-", "a-b", "ba-", "bb", "b-a", "b-b-"]);

        assert_eq!(short_universe(&loop_algebra()).len(), 4);
        assert_eq!(short_universe(&kronecker()).len(), 8);
    }

    #[test]
    fn bracket_truncates_to_the_window() {
        let alg = gp23();
        assert_eq!(width(&alg), 2);
        assert_eq!(bracket(&alg, &w(&alg, "ab-a")), w(&alg, "ab-"));
        assert_eq!(bracket(&alg, &w(&alg, "a")), w(&alg, "a"));
        assert_eq!(bracket(&alg, &w(&alg, "1_(v,1)")), w(&alg, "1_(v,1)"));
        assert_eq!(width(&kronecker()), 1);
        assert_eq!(width(&loop_algebra()), 1);
    }

    #[test]
    fn bracket_window_suffices_for_left_extension() {
        // [βx] = [β[x]] for every string x and left extension βx.
        let alg = gp23();
        for v in 0..1 {
            for i in [-1, 1] {
                for x in enumerate_hl_naive(&alg, v, i, 4) {
                    if x.is_trivial() {
                        continue;
                    }
                    for beta in all_syllables(&alg) {
                        if syll_source(&alg, beta) != target(&alg, &x) {
                            continue;
                        }
                        let mut s = vec![beta];
                        s.extend_from_slice(x.syllables());
                        let bx = StringWord::Word(s);
                        if !is_string(&alg, &bx) {
                            continue;
                        }
                        let mut s2 = vec![beta];
                        s2.extend_from_slice(bracket(&alg, &x).syllables());
                        let b_brx = StringWord::Word(s2);
                        assert!(is_string(&alg, &b_brx));
                        assert_eq!(bracket(&alg, &bx), bracket(&alg, &b_brx));
                    }
                }
            }
        }
    }

    #[test]
    fn unit_multiplication_definedness() {
        let alg = gp23();
        let v = 0;
        let a = w(&alg, "a");
        assert!(can_right_multiply(&alg, &a, v, 1)); // σ(a) = −1
        assert!(!can_right_multiply(&alg, &a, v, -1));
        let b = w(&alg, "b");
        assert!(can_left_multiply(&alg, v, -1, &b)); // τ(b) = −1
        assert!(!can_left_multiply(&alg, v, 1, &b));
        let t = w(&alg, "1_(v,1)");
        assert!(can_right_multiply(&alg, &t, v, 1));
        assert!(can_left_multiply(&alg, v, 1, &t));
    }

    #[test]
    fn naive_left_hammock_enumerations_are_pinned() {
        let gp = gp23();
        let listing: Vec<String> =
            enumerate_hl_naive(&gp, 0, 1, 2).iter().map(|x| format_word(&gp, x)).collect();
        assert_eq!(listing, ["a", "b-a", "1_(v,1)", "ab-", "b-", "b-b-"]);

        let lp = loop_algebra();
        let listing: Vec<String> =
            enumerate_hl_naive(&lp, 0, 1, 3).iter().map(|x| format_word(&lp, x)).collect();
        assert_eq!(listing, ["a", "1_(v,1)"]);

        let k = kronecker();
        let listing: Vec<String> =
            enumerate_hl_naive(&k, 0, 1, 3).iter().map(|x| format_word(&k, x)).collect();
        assert_eq!(listing, ["a", "ab-a", "b-a", "1_(1,1)"]);
    }

    #[test]
    fn hammock_membership_matches_unit_multiplication() {
        let gp = gp23();
        for x in enumerate_hl_naive(&gp, 0, 1, 3) {
            assert!(can_right_multiply(&gp, &x, 0, 1), "{}", format_word(&gp, &x));
            assert!(is_string(&gp, &x));
        }
    }
}
