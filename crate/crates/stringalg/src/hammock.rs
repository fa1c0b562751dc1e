//! Finite automata recognizing hammocks and the set of all strings.
//!
//! The *left hammock automaton* at an anchor string `x₀` accepts exactly the
//! sign sequences of the left extensions of `x₀` (for the trivial anchor
//! `1_(v,i)`, the sign sequences of `H_l(v,i)`). Its crucial finiteness
//! device is the *bracket*: a string is prepended one syllable at a time,
//! and whether a further syllable can be prepended only depends on the
//! leftmost `w = max(r−1, 1)` syllables — so states are brackets, i.e. short
//! strings, and there are finitely many. Every state is accepting, the
//! `0`/`1` letters mean "extend by a direct/inverse syllable", and a valid
//! sign assignment guarantees at most one extension per letter, so the
//! automaton is deterministic. Reading in-order through the transition tree
//! reproduces the hammock's linear order `<_l`.
//!
//! The *right* hammock automaton reuses the same machinery on the inverted
//! anchor and then relabels each state by inversion, keeping the raw
//! transition letters: label-for-label it stores right extensions, while the
//! in-order of the letters kept raw realizes `<_r` (which reverses under
//! inversion).
//!
//! The *string acceptor* reads arrow tokens (`a`, `a-`) left to right and
//! accepts exactly the nonempty strings, tracking the rightmost `w`
//! syllables read so far (trivial strings are not part of its language —
//! they have no tokens to read).

use std::collections::{BTreeMap, VecDeque};

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::presentation::StringAlgebra;
use crate::strings::{
    self, StringWord, Syllable, bracket, format_word, is_string, sigma, source, width,
};

/// A hammock automaton: the acceptor plus the short string each state
/// denotes (parallel to `dfa.states`).
#[derive(Debug, Clone)]
pub struct HammockAutomaton {
    /// Binary acceptor; all states accepting, start = bracket of the anchor.
    pub dfa: Dfa,
    /// The short string denoted by each state.
    pub words: Vec<StringWord>,
}

fn all_syllables(alg: &StringAlgebra) -> Vec<Syllable> {
    (0..alg.presentation().arrows().len())
        .flat_map(|a| [Syllable::direct(a), Syllable::inverted(a)])
        .collect()
}

/// The unique syllable of direction `bit` that can be prepended to `x`
/// (where `x` stands for any string with bracket `x`); errors if two
/// qualify, which a valid sign assignment rules out.
fn left_extension(
    alg: &StringAlgebra,
    x: &StringWord,
    bit: u8,
) -> Result<Option<(Syllable, StringWord)>> {
    let mut found: Option<(Syllable, StringWord)> = None;
    for beta in all_syllables(alg) {
        if beta.inverse != (bit == 1) {
            continue;
        }
        let extended = match x {
            StringWord::Trivial { vertex, i } => {
                let one = StringWord::from_syllables(vec![beta]);
                if source(alg, &one) != *vertex || sigma(alg, &one) != -i {
                    continue;
                }
                one
            }
            StringWord::Word(s) => {
                let mut syllables = vec![beta];
                syllables.extend_from_slice(s);
                StringWord::Word(syllables)
            }
        };
        if !is_string(alg, &extended) {
            continue;
        }
        if let Some((other, _)) = &found {
            return Err(Error::Invariant {
                detail: format!(
                    "two competing left extensions of `{}` with direction bit {bit}: `{}` and `{}`",
                    format_word(alg, x),
                    strings::token(alg, *other),
                    strings::token(alg, beta),
                ),
            });
        }
        found = Some((beta, extended));
    }
    Ok(found)
}

/// Builds the left hammock automaton at `anchor` (any string; use
/// `StringWord::trivial(v, i)` for the hammock `H_l(v,i)`).
///
/// The accepted language is `{ sgn(y) : y·anchor is a string }`, including
/// the empty word for the anchor itself, and in-order enumeration lists it
/// ascending by `<_l`.
pub fn build_hammock_automaton(
    alg: &StringAlgebra,
    anchor: &StringWord,
) -> Result<HammockAutomaton> {
    if !is_string(alg, anchor) {
        return Err(Error::NotAString {
            detail: format!("hammock anchor `{}` is not a string", format_word(alg, anchor)),
        });
    }
    let start_word = bracket(alg, anchor);
    let mut dfa = Dfa::new(vec!["0".into(), "1".into()]);
    let mut words = vec![start_word.clone()];
    let mut index: BTreeMap<StringWord, usize> = BTreeMap::from([(start_word.clone(), 0)]);
    dfa.add_state(format_word(alg, &start_word), true);
    dfa.set_start(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        let x = words[q].clone();
        for bit in [0u8, 1u8] {
            let Some((_, extended)) = left_extension(alg, &x, bit)? else { continue };
            let next_word = bracket(alg, &extended);
            let next = match index.get(&next_word) {
                Some(&idx) => idx,
                None => {
                    let idx = dfa.add_state(format_word(alg, &next_word), true);
                    index.insert(next_word.clone(), idx);
                    words.push(next_word);
                    queue.push_back(idx);
                    idx
                }
            };
            dfa.add_transition(q, bit as usize, next);
        }
    }
    Ok(HammockAutomaton { dfa, words })
}

/// Builds the right hammock automaton at `anchor` (use
/// `StringWord::trivial(v, i)` for `H_r(v,i)`): the left automaton at the
/// inverted anchor with every state relabeled by inversion and the raw
/// transition letters kept, so in-order enumeration lists the right
/// extensions ascending by `<_r`.
pub fn build_right_hammock_automaton(
    alg: &StringAlgebra,
    anchor: &StringWord,
) -> Result<HammockAutomaton> {
    let raw = build_hammock_automaton(alg, &strings::inverse(anchor))?;
    let words: Vec<StringWord> = raw.words.iter().map(strings::inverse).collect();
    let mut dfa = raw.dfa;
    for (q, word) in words.iter().enumerate() {
        dfa.states[q].label = format_word(alg, word);
    }
    Ok(HammockAutomaton { dfa, words })
}

/// Builds the string acceptor: reads arrow tokens (`a`, `a-`) in writing
/// order and accepts exactly the nonempty strings. The alphabet lists, per
/// arrow in declaration order, the direct token then the inverse token.
pub fn build_rees_automaton(alg: &StringAlgebra) -> Dfa {
    let w = width(alg);
    let syllables = all_syllables(alg);
    let alphabet: Vec<String> = syllables.iter().map(|&s| strings::token(alg, s)).collect();
    let mut dfa = Dfa::new(alphabet);
    let start = dfa.add_state("ε", false);
    dfa.set_start(start);

    let dual_bracket = |s: &[Syllable]| -> StringWord {
        let keep = s.len().min(w);
        StringWord::Word(s[s.len() - keep..].to_vec())
    };

    let mut words: Vec<Option<StringWord>> = vec![None];
    let mut index: BTreeMap<StringWord, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(q) = queue.pop_front() {
        for (letter, &syl) in syllables.iter().enumerate() {
            let candidate = match &words[q] {
                None => vec![syl],
                Some(word) => {
                    let mut s = word.syllables().to_vec();
                    s.push(syl);
                    s
                }
            };
            let candidate = StringWord::Word(candidate);
            if !is_string(alg, &candidate) {
                continue;
            }
            let next_word = dual_bracket(candidate.syllables());
            let next = match index.get(&next_word) {
                Some(&idx) => idx,
                None => {
                    let idx = dfa.add_state(format_word(alg, &next_word), true);
                    index.insert(next_word.clone(), idx);
                    words.push(Some(next_word));
                    queue.push_back(idx);
                    idx
                }
            };
            dfa.add_transition(q, letter, next);
        }
    }
    dfa
}

/// Whether every hammock of the algebra is scattered: for each vertex `v`
/// and sign `i`, the start of the hammock automaton at `1_(v,i)` must not
/// reach an η-state. Algebras failing this have hammocks embedding the
/// rationals.
pub fn is_domestic(alg: &StringAlgebra) -> bool {
    for v in 0..alg.presentation().vertices().len() {
        for i in [-1i8, 1i8] {
            let hammock = build_hammock_automaton(alg, &StringWord::trivial(v, i))
                .expect("hammock construction cannot fail on a validated algebra");
            let Some(start) = hammock.dfa.start else { continue };
            if hammock.dfa.classify_states()[start].eta_bar {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::tests::{gp23, kronecker, loop_algebra, w};
    use crate::strings::{enumerate_hl_naive, sign_sequence};

    /// label → (bit → label) rendering of a transition table.
    fn table(h: &HammockAutomaton) -> BTreeMap<String, BTreeMap<u8, String>> {
        let mut out = BTreeMap::new();
        for (q, st) in h.dfa.states.iter().enumerate() {
            let mut row = BTreeMap::new();
            for (&c, &next) in &st.trans {
                row.insert(c as u8, h.dfa.states[next].label.clone());
            }
            out.insert(st.label.clone(), row);
            assert_eq!(st.label, format_word(&gp23(), &h.words[q]).as_str().to_string());
        }
        out
    }

    fn row(pairs: &[(u8, &str)]) -> BTreeMap<u8, String> {
        pairs.iter().map(|&(b, l)| (b, l.to_string())).collect()
    }

    #[test]
    fn gp23_left_hammock_table_is_pinned() {
        let alg = gp23();
        let h = build_hammock_automaton(&alg, &StringWord::trivial(0, 1)).unwrap();
        assert_eq!(h.dfa.states.len(), 6);
        assert!(h.dfa.states.iter().all(|s| s.accepting));
        assert_eq!(h.dfa.start, Some(0));
        assert_eq!(h.dfa.states[0].label, "1_(v,1)");
        let expected: BTreeMap<String, BTreeMap<u8, String>> = [
            ("1_(v,1)".to_string(), row(&[(0, "a"), (1, "b-")])),
            ("a".to_string(), row(&[(1, "b-a")])),
            ("b-".to_string(), row(&[(0, "ab-"), (1, "b-b-")])),
            ("b-b-".to_string(), row(&[(0, "ab-")])),
            ("ab-".to_string(), row(&[(1, "b-a")])),
            ("b-a".to_string(), row(&[(0, "ab-"), (1, "b-b-")])),
        ]
        .into_iter()
        .collect();
        assert_eq!(table(&h), expected);
    }

    #[test]
    fn loop_left_hammock_is_two_states_one_transition() {
        let alg = loop_algebra();
        let h = build_hammock_automaton(&alg, &StringWord::trivial(0, 1)).unwrap();
        assert_eq!(h.dfa.states.len(), 2);
        let labels: Vec<&str> = h.dfa.states.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["1_(v,1)", "a"]);
        let transition_count: usize = h.dfa.states.iter().map(|s| s.trans.len()).sum();
        assert_eq!(transition_count, 1);
        assert_eq!(h.dfa.step(0, 0), Some(1));
    }

    #[test]
    fn kronecker_left_hammocks_alternate() {
        let alg = kronecker();
        let h1 = build_hammock_automaton(&alg, &StringWord::trivial(0, 1)).unwrap();
        let labels: Vec<&str> = h1.dfa.states.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["1_(1,1)", "a", "b-"]);
        assert_eq!(h1.dfa.step(0, 0), Some(1)); // root —0→ a
        assert_eq!(h1.dfa.step(1, 1), Some(2)); // a —1→ b⁻
        assert_eq!(h1.dfa.step(2, 0), Some(1)); // b⁻ —0→ a
        assert_eq!(h1.dfa.step(0, 1), None);

        let h2 = build_hammock_automaton(&alg, &StringWord::trivial(1, 1)).unwrap();
        let labels: Vec<&str> = h2.dfa.states.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["1_(2,1)", "b-", "a"]);
        assert_eq!(h2.dfa.step(0, 1), Some(1)); // root —1→ b⁻
        assert_eq!(h2.dfa.step(1, 0), Some(2)); // b⁻ —0→ a
        assert_eq!(h2.dfa.step(2, 1), Some(1)); // a —1→ b⁻
    }

    #[test]
    fn right_hammock_states_denote_right_extensions() {
        let alg = kronecker();
        let h = build_right_hammock_automaton(&alg, &StringWord::trivial(1, 1)).unwrap();
        let labels: Vec<&str> = h.dfa.states.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["1_(2,1)", "a", "b-"]);
    }

    #[test]
    fn right_hammock_language_lists_right_extensions_in_right_order() {
        // H_r(v,i) = { x⁻ : x ∈ H_l(v,−i) }, and the right automaton reads
        // x ∈ H_r via sgn(x⁻); its in-order enumeration must list H_r sorted
        // ascending by <_r.
        for alg in [gp23(), kronecker(), loop_algebra()] {
            for v in 0..alg.presentation().vertices().len() {
                for i in [-1, 1] {
                    let right =
                        build_right_hammock_automaton(&alg, &StringWord::trivial(v, i)).unwrap();
                    for maxlen in [0, 2, 4] {
                        let mut hr: Vec<StringWord> = enumerate_hl_naive(&alg, v, -i, maxlen)
                            .iter()
                            .map(strings::inverse)
                            .collect();
                        hr.sort_by(|x, y| crate::strings::compare_r(&alg, x, y).unwrap());
                        let expected: Vec<Vec<u8>> =
                            hr.iter().map(|x| sign_sequence(&strings::inverse(x))).collect();
                        assert_eq!(
                            right.dfa.enumerate_linguage(maxlen),
                            expected,
                            "vertex {v}, sign {i}, maxlen {maxlen}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn right_hammock_runs_land_on_the_right_window() {
        // Running the right automaton on sgn(x⁻) ends in the state whose
        // label is the rightmost-w window of x.
        let alg = gp23();
        let right = build_right_hammock_automaton(&alg, &StringWord::trivial(0, 1)).unwrap();
        let win = width(&alg);
        for x in enumerate_hl_naive(&alg, 0, -1, 4).iter().map(strings::inverse) {
            let word: Vec<usize> =
                sign_sequence(&strings::inverse(&x)).iter().map(|&b| b as usize).collect();
            let mut q = right.dfa.start.unwrap();
            for &c in &word {
                q = right.dfa.step(q, c).unwrap();
            }
            let expected = if x.is_trivial() {
                format_word(&alg, &x)
            } else {
                let s = x.syllables();
                let keep = s.len().min(win);
                format_word(&alg, &StringWord::Word(s[s.len() - keep..].to_vec()))
            };
            assert_eq!(right.dfa.states[q].label, expected);
        }
    }

    #[test]
    fn hammock_language_equals_naive_enumeration() {
        for alg in [gp23(), kronecker(), loop_algebra()] {
            for v in 0..alg.presentation().vertices().len() {
                for i in [-1, 1] {
                    let h = build_hammock_automaton(&alg, &StringWord::trivial(v, i)).unwrap();
                    for maxlen in [0, 1, 3, 5] {
                        let from_automaton = h.dfa.enumerate_linguage(maxlen);
                        let from_naive: Vec<Vec<u8>> = enumerate_hl_naive(&alg, v, i, maxlen)
                            .iter()
                            .map(sign_sequence)
                            .collect();
                        assert_eq!(
                            from_automaton, from_naive,
                            "vertex {v}, sign {i}, maxlen {maxlen}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn anchored_hammock_is_the_subautomaton_at_the_anchor_bracket() {
        let alg = gp23();
        let full = build_hammock_automaton(&alg, &StringWord::trivial(0, 1)).unwrap();
        let anchored = build_hammock_automaton(&alg, &w(&alg, "b-")).unwrap();
        // Every anchored state also appears in the full automaton with the
        // same outgoing rows.
        let full_table = table(&full);
        let anchored_table = table(&anchored);
        assert_eq!(anchored_table.get("b-"), full_table.get("b-"));
        for (label, row) in &anchored_table {
            assert_eq!(Some(row), full_table.get(label), "state {label}");
        }
        assert_eq!(anchored.dfa.states[anchored.dfa.start.unwrap()].label, "b-");
    }

    #[test]
    fn anchors_must_be_strings() {
        let alg = gp23();
        assert!(matches!(
            build_hammock_automaton(&alg, &w(&alg, "aa")),
            Err(Error::NotAString { .. })
        ));
    }

    #[test]
    fn rees_acceptor_recognizes_exactly_the_nonempty_short_words() {
        let alg = gp23();
        let rees = build_rees_automaton(&alg);
        assert_eq!(rees.alphabet, ["a", "a-", "b", "b-"]);
        assert!(!rees.accepts(&[]), "the empty word is rejected");
        let words = rees.enumerate_lenlex(2);
        assert_eq!(words.len(), 10);
        let rendered: Vec<String> = words
            .iter()
            .map(|word| word.iter().map(|&c| rees.alphabet[c].clone()).collect())
            .collect();
        for expected in ["a", "b", "a-", "b-", "ab-", "a-b", "bb", "b-b-", "ba-", "b-a"] {
            assert!(rendered.contains(&expected.to_string()), "{expected} missing");
        }
        for rejected in ["aa", "ab", "ba", "aa-"] {
            assert!(!rendered.contains(&rejected.to_string()), "{rejected} accepted");
        }
    }

    #[test]
    fn rees_acceptor_agrees_with_is_string_on_longer_words() {
        let alg = gp23();
        let rees = build_rees_automaton(&alg);
        // All token sequences of length ≤ 4 (16^2... keep it 4^4 = 256).
        let n = rees.alphabet.len();
        let mut stack = vec![Vec::new()];
        while let Some(word) = stack.pop() {
            if !word.is_empty() {
                let syllables: Vec<Syllable> = word
                    .iter()
                    .map(|&c: &usize| Syllable { arrow: c / 2, inverse: c % 2 == 1 })
                    .collect();
                let as_word = StringWord::Word(syllables);
                assert_eq!(
                    rees.accepts(&word),
                    is_string(&alg, &as_word),
                    "{}",
                    format_word(&alg, &as_word)
                );
            }
            if word.len() < 4 {
                for c in 0..n {
                    let mut next = word.clone();
                    next.push(c);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn domesticity_is_decided_per_algebra() {
        assert!(!is_domestic(&gp23()));
        assert!(is_domestic(&loop_algebra()));
        assert!(is_domestic(&kronecker()));
    }
}
