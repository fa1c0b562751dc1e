//! Deterministic finite automata over ordered alphabets, and the
//! order-theoretic state classification their languages inherit.
//!
//! The languages of interest are not mere sets: over the binary alphabet
//! `{0, 1}`, the accepted words carry the *in-order* `<_2` (strip the common
//! prefix; a word continuing with `0` precedes, one continuing with `1`
//! follows, and a proper prefix sits in between). [`Dfa::enumerate_linguage`]
//! walks the transition tree in-order and therefore emits accepted words
//! already sorted by `<_2`, while [`Dfa::linguage_flags`] answers the
//! emptiness, finiteness, and scatteredness of the whole (possibly infinite)
//! ordered language from a state classification alone:
//!
//! * a state is an **ω-state** when it lies on a cycle, and **ω̄** when it
//!   reaches an ω-state — the start is ω̄ iff the language is infinite;
//! * a state is an **η-state** when both its one-letter successors exist and
//!   can return to it, and **η̄** when it reaches an η-state — the start is η̄
//!   iff the ordered language is non-scattered (it then embeds the rationals).
//!
//! Automata are *partial*: a missing transition kills the branch. The
//! canonical empty automaton has no states and no start.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// One state: a display label, acceptance, and outgoing transitions keyed by
/// letter index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaState {
    /// Display label (shown in DOT/JSON output; not required to be unique).
    pub label: String,
    /// Whether the state accepts.
    pub accepting: bool,
    /// Outgoing transitions, letter index → state index.
    pub trans: BTreeMap<usize, usize>,
}

/// A partial DFA over an ordered alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    /// Alphabet letters in order; index is the letter's rank.
    pub alphabet: Vec<String>,
    /// States; indices are stable identifiers.
    pub states: Vec<DfaState>,
    /// Start state, if any. `None` means the canonical empty automaton.
    pub start: Option<usize>,
}

/// Order-theoretic classification of one state (see the module docs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StateClass {
    /// Lies on a cycle.
    pub omega: bool,
    /// Reaches a state on a cycle.
    pub omega_bar: bool,
    /// Both one-letter successors exist and can return here.
    pub eta: bool,
    /// Reaches an η-state.
    pub eta_bar: bool,
}

/// Emptiness, finiteness, and scatteredness of the ordered language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinguageFlags {
    /// No word is accepted.
    pub empty: bool,
    /// Finitely many words are accepted.
    pub finite: bool,
    /// The ordered language embeds no copy of the rationals.
    pub scattered: bool,
}

impl Dfa {
    /// A fresh automaton with the given alphabet, no states, and no start.
    pub fn new(alphabet: Vec<String>) -> Dfa {
        Dfa { alphabet, states: Vec::new(), start: None }
    }

    /// Adds a state and returns its index.
    pub fn add_state(&mut self, label: impl Into<String>, accepting: bool) -> usize {
        self.states.push(DfaState { label: label.into(), accepting, trans: BTreeMap::new() });
        self.states.len() - 1
    }

    /// Marks the start state.
    pub fn set_start(&mut self, q: usize) {
        assert!(q < self.states.len());
        self.start = Some(q);
    }

    /// Installs `from --letter--> to`; panics on a conflicting duplicate
    /// (the automata built here are deterministic by construction).
    pub fn add_transition(&mut self, from: usize, letter: usize, to: usize) {
        assert!(letter < self.alphabet.len(), "letter index out of range");
        assert!(from < self.states.len() && to < self.states.len());
        let old = self.states[from].trans.insert(letter, to);
        assert!(
            old.is_none() || old == Some(to),
            "conflicting transition from state {from} on letter {letter}"
        );
    }

    /// The `letter`-successor of `q`, if defined.
    pub fn step(&self, q: usize, letter: usize) -> Option<usize> {
        self.states[q].trans.get(&letter).copied()
    }

    /// Runs the word (letter indices) from the start; `true` iff it ends in
    /// an accepting state.
    pub fn accepts(&self, word: &[usize]) -> bool {
        let Some(mut q) = self.start else { return false };
        for &c in word {
            match self.step(q, c) {
                Some(next) => q = next,
                None => return false,
            }
        }
        self.states[q].accepting
    }

    /// Restricts to states that are reachable from the start *and* reach an
    /// accepting state, preserving state order and labels. When nothing
    /// survives (in particular when the language is empty) the canonical
    /// empty automaton is returned.
    pub fn trim_good(&self) -> Dfa {
        let n = self.states.len();
        let mut reachable = vec![false; n];
        if let Some(start) = self.start {
            let mut queue = vec![start];
            reachable[start] = true;
            while let Some(q) = queue.pop() {
                for (_, &next) in &self.states[q].trans {
                    if !reachable[next] {
                        reachable[next] = true;
                        queue.push(next);
                    }
                }
            }
        }
        // Co-reachability: breadth-first on reversed edges from acceptors.
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (q, st) in self.states.iter().enumerate() {
            for (_, &next) in &st.trans {
                rev[next].push(q);
            }
        }
        let mut productive = vec![false; n];
        let mut queue: Vec<usize> = (0..n).filter(|&q| self.states[q].accepting).collect();
        for &q in &queue {
            productive[q] = true;
        }
        while let Some(q) = queue.pop() {
            for &p in &rev[q] {
                if !productive[p] {
                    productive[p] = true;
                    queue.push(p);
                }
            }
        }

        let keep: Vec<usize> = (0..n).filter(|&q| reachable[q] && productive[q]).collect();
        let mut index = vec![usize::MAX; n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut out = Dfa::new(self.alphabet.clone());
        for &old in &keep {
            let st = &self.states[old];
            let id = out.add_state(st.label.clone(), st.accepting);
            debug_assert_eq!(id, index[old]);
        }
        for &old in &keep {
            for (&c, &next) in &self.states[old].trans {
                if index[next] != usize::MAX {
                    out.add_transition(index[old], c, index[next]);
                }
            }
        }
        match self.start {
            Some(s) if index[s] != usize::MAX => out.set_start(index[s]),
            _ => {
                // The start died, so no word is accepted at all.
                out.states.clear();
            }
        }
        out
    }

    /// Reflexive-transitive reachability matrix.
    fn closure(&self) -> Vec<Vec<bool>> {
        let n = self.states.len();
        let mut reach = vec![vec![false; n]; n];
        for (q, row) in reach.iter_mut().enumerate() {
            row[q] = true;
            let mut queue = vec![q];
            while let Some(x) = queue.pop() {
                for (_, &next) in &self.states[x].trans {
                    if !row[next] {
                        row[next] = true;
                        queue.push(next);
                    }
                }
            }
        }
        reach
    }

    /// Classifies every state (see the module docs); purely graph-theoretic,
    /// so callers interested in language semantics should trim first.
    pub fn classify_states(&self) -> Vec<StateClass> {
        let n = self.states.len();
        let reach = self.closure();
        let omega: Vec<bool> =
            (0..n).map(|q| self.states[q].trans.values().any(|&next| reach[next][q])).collect();
        // At least two distinct one-letter branches must return; over the
        // binary alphabet this is exactly "both successors exist and return".
        let eta: Vec<bool> = (0..n)
            .map(|q| {
                (0..self.alphabet.len())
                    .filter(|&c| self.step(q, c).is_some_and(|next| reach[next][q]))
                    .count()
                    >= 2
            })
            .collect();
        (0..n)
            .map(|q| StateClass {
                omega: omega[q],
                omega_bar: (0..n).any(|z| omega[z] && reach[q][z]),
                eta: eta[q],
                eta_bar: (0..n).any(|z| eta[z] && reach[q][z]),
            })
            .collect()
    }

    /// Emptiness, finiteness, and scatteredness of the accepted ordered
    /// language; trims internally.
    pub fn linguage_flags(&self) -> LinguageFlags {
        let trimmed = self.trim_good();
        let Some(start) = trimmed.start else {
            return LinguageFlags { empty: true, finite: true, scattered: true };
        };
        let classes = trimmed.classify_states();
        LinguageFlags {
            empty: false,
            finite: !classes[start].omega_bar,
            scattered: !classes[start].eta_bar,
        }
    }

    /// Accepted words of length at most `maxlen` over a **binary** alphabet,
    /// in ascending in-order `<_2`: the `0`-subtree first, then the word at
    /// the current state, then the `1`-subtree.
    pub fn enumerate_linguage(&self, maxlen: usize) -> Vec<Vec<u8>> {
        assert_eq!(self.alphabet.len(), 2, "in-order enumeration needs a binary alphabet");
        let mut out = Vec::new();
        let Some(start) = self.start else { return out };
        let mut word = Vec::new();
        self.inorder(start, maxlen, &mut word, &mut out);
        out
    }

    fn inorder(&self, q: usize, budget: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if budget > 0
            && let Some(next) = self.step(q, 0)
        {
            word.push(0);
            self.inorder(next, budget - 1, word, out);
            word.pop();
        }
        if self.states[q].accepting {
            out.push(word.clone());
        }
        if budget > 0
            && let Some(next) = self.step(q, 1)
        {
            word.push(1);
            self.inorder(next, budget - 1, word, out);
            word.pop();
        }
    }

    /// Accepted words of length at most `maxlen` over any alphabet, in
    /// length-lexicographic order (letter indices).
    pub fn enumerate_lenlex(&self, maxlen: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let Some(start) = self.start else { return out };
        let mut layer = vec![(start, Vec::new())];
        if self.states[start].accepting {
            out.push(Vec::new());
        }
        for _ in 0..maxlen {
            let mut next_layer = Vec::new();
            for (q, word) in layer {
                for c in 0..self.alphabet.len() {
                    if let Some(next) = self.step(q, c) {
                        let mut w = word.clone();
                        w.push(c);
                        if self.states[next].accepting {
                            out.push(w.clone());
                        }
                        next_layer.push((next, w));
                    }
                }
            }
            layer = next_layer;
        }
        out
    }

    /// JSON document (`schema_version` 1) with letter-keyed transitions.
    pub fn to_json(&self) -> serde_json::Value {
        let states: Vec<serde_json::Value> = self
            .states
            .iter()
            .map(|st| {
                let trans: BTreeMap<&str, usize> =
                    st.trans.iter().map(|(&c, &next)| (self.alphabet[c].as_str(), next)).collect();
                serde_json::json!({
                    "label": st.label,
                    "accepting": st.accepting,
                    "transitions": trans,
                })
            })
            .collect();
        serde_json::json!({
            "schema_version": 1,
            "alphabet": self.alphabet,
            "start": self.start,
            "states": states,
        })
    }

    /// Parses the documents produced by [`Dfa::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<Dfa> {
        let bad = |message: String| Error::Syntax { line: 1, column: 1, message };
        let alphabet: Vec<String> = value
            .get("alphabet")
            .and_then(|a| a.as_array())
            .ok_or_else(|| bad("automaton document needs an `alphabet` array".into()))?
            .iter()
            .map(|l| l.as_str().map(str::to_string).ok_or_else(|| bad(format!("bad letter {l}"))))
            .collect::<Result<_>>()?;
        let letter_index: BTreeMap<String, usize> =
            alphabet.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        if letter_index.len() != alphabet.len() {
            return Err(bad("alphabet letters must be distinct".into()));
        }
        let mut dfa = Dfa::new(alphabet);
        let states = value
            .get("states")
            .and_then(|s| s.as_array())
            .ok_or_else(|| bad("automaton document needs a `states` array".into()))?;
        for (i, st) in states.iter().enumerate() {
            let label = st
                .get("label")
                .and_then(|l| l.as_str())
                .map(str::to_string)
                .unwrap_or_else(|| format!("q{i}"));
            let accepting = st.get("accepting").and_then(|a| a.as_bool()).unwrap_or(false);
            dfa.add_state(label, accepting);
        }
        for (i, st) in states.iter().enumerate() {
            let Some(trans) = st.get("transitions") else { continue };
            let map = trans
                .as_object()
                .ok_or_else(|| bad(format!("state {i} transitions must be an object")))?;
            for (letter, target) in map {
                let &c =
                    letter_index.get(letter.as_str()).ok_or_else(|| Error::UnknownReference {
                        kind: "letter",
                        name: letter.clone(),
                        context: format!("in transitions of state {i}"),
                    })?;
                let t = target
                    .as_u64()
                    .map(|t| t as usize)
                    .filter(|&t| t < dfa.states.len())
                    .ok_or_else(|| bad(format!("state {i} has a bad target {target}")))?;
                dfa.add_transition(i, c, t);
            }
        }
        match value.get("start") {
            None | Some(serde_json::Value::Null) => {}
            Some(s) => {
                let s = s
                    .as_u64()
                    .map(|s| s as usize)
                    .filter(|&s| s < dfa.states.len())
                    .ok_or_else(|| bad(format!("bad start state {s}")))?;
                dfa.set_start(s);
            }
        }
        Ok(dfa)
    }

    /// Graphviz rendering: accepting states as double circles, the start
    /// marked by a sourceless arrow, edges labelled by their letters.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        if let Some(start) = self.start {
            out.push_str("  __start [shape=point, style=invis];\n");
            out.push_str(&format!("  __start -> q{start};\n"));
        }
        for (q, st) in self.states.iter().enumerate() {
            let shape = if st.accepting { "doublecircle" } else { "circle" };
            out.push_str(&format!(
                "  q{q} [shape={shape}, label=\"{}\"];\n",
                st.label.replace('\\', "\\\\").replace('"', "\\\"")
            ));
        }
        for (q, st) in self.states.iter().enumerate() {
            for (&c, &next) in &st.trans {
                out.push_str(&format!(
                    "  q{q} -> q{next} [label=\"{}\"];\n",
                    self.alphabet[c].replace('\\', "\\\\").replace('"', "\\\"")
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Renders a bit word (`[0,1,0]`) as text (`"010"`); the empty word renders
/// as `"ε"`.
pub fn format_bits(bits: &[u8]) -> String {
    if bits.is_empty() {
        "ε".to_string()
    } else {
        bits.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Accepts `{0ⁿ1 : n ≥ 1}`, which is ordered like ω*.
    pub(crate) fn m1() -> Dfa {
        let mut d = Dfa::new(vec!["0".into(), "1".into()]);
        let p0 = d.add_state("p0", false);
        let p1 = d.add_state("p1", false);
        let p2 = d.add_state("p2", true);
        d.add_transition(p0, 0, p1);
        d.add_transition(p1, 0, p1);
        d.add_transition(p1, 1, p2);
        d.set_start(p0);
        d
    }

    /// Two η-states; the ordered language is a dense order.
    pub(crate) fn m2() -> Dfa {
        let mut d = Dfa::new(vec!["0".into(), "1".into()]);
        let p = d.add_state("p", false);
        let q = d.add_state("q", true);
        d.add_transition(p, 0, p);
        d.add_transition(p, 1, q);
        d.add_transition(q, 0, q);
        d.add_transition(q, 1, p);
        d.set_start(p);
        d
    }

    #[test]
    fn m1_enumerates_in_order() {
        let words: Vec<String> =
            m1().enumerate_linguage(3).iter().map(|w| format_bits(w)).collect();
        assert_eq!(words, ["001", "01"]);
        let words: Vec<String> =
            m1().enumerate_linguage(5).iter().map(|w| format_bits(w)).collect();
        assert_eq!(words, ["00001", "0001", "001", "01"]);
    }

    #[test]
    fn m1_is_infinite_but_scattered() {
        let flags = m1().linguage_flags();
        assert!(!flags.empty);
        assert!(!flags.finite);
        assert!(flags.scattered);
    }

    #[test]
    fn m2_is_dense() {
        let d = m2();
        let classes = d.classify_states();
        assert!(classes.iter().all(|c| c.eta), "both states of m2 are η-states");
        let flags = d.linguage_flags();
        assert!(!flags.empty);
        assert!(!flags.finite);
        assert!(!flags.scattered);
    }

    #[test]
    fn classification_implications_hold() {
        for d in [m1(), m2()] {
            for c in d.classify_states() {
                assert!(!c.eta || c.omega, "η implies ω");
                assert!(!c.eta || c.eta_bar, "η implies η̄");
                assert!(!c.eta_bar || c.omega_bar, "η̄ implies ω̄");
                assert!(!c.omega || c.omega_bar, "ω implies ω̄");
            }
        }
    }

    #[test]
    fn trimming_preserves_the_language() {
        // m1 plus an unreachable state and a reachable dead end.
        let mut d = m1();
        let dead = d.add_state("dead", false);
        d.add_transition(2, 0, dead);
        d.add_state("unreachable", true);
        let trimmed = d.trim_good();
        assert_eq!(trimmed.states.len(), 3);
        assert_eq!(trimmed.enumerate_linguage(6), m1().enumerate_linguage(6));
        assert!(trimmed.states.iter().all(|s| s.label != "dead" && s.label != "unreachable"));
    }

    #[test]
    fn empty_language_trims_to_the_canonical_empty_automaton() {
        let mut d = Dfa::new(vec!["0".into(), "1".into()]);
        let a = d.add_state("a", false);
        let b = d.add_state("b", false);
        d.add_transition(a, 0, b);
        d.set_start(a);
        let trimmed = d.trim_good();
        assert!(trimmed.states.is_empty());
        assert_eq!(trimmed.start, None);
        let flags = d.linguage_flags();
        assert!(flags.empty && flags.finite && flags.scattered);
    }

    #[test]
    fn acceptance_follows_partial_transitions() {
        let d = m1();
        assert!(d.accepts(&[0, 1]));
        assert!(d.accepts(&[0, 0, 0, 1]));
        assert!(!d.accepts(&[1]), "δ(p0, 1) is undefined");
        assert!(!d.accepts(&[0, 1, 1]), "runs dead after p2");
        assert!(!d.accepts(&[]));
    }

    #[test]
    fn json_roundtrip_preserves_the_automaton() {
        for d in [m1(), m2(), Dfa::new(vec!["0".into(), "1".into()])] {
            let json = d.to_json();
            assert_eq!(json["schema_version"], 1);
            let back = Dfa::from_json(&json).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn dot_marks_acceptance_and_start() {
        let dot = m1().to_dot();
        assert!(dot.contains("doublecircle"));
        assert!(dot.contains("__start -> q0"));
        assert!(dot.contains("q1 -> q2 [label=\"1\"]"));
    }

    #[test]
    fn lenlex_enumeration_covers_all_short_words() {
        let d = m2();
        let words = d.enumerate_lenlex(2);
        // Words ending in the accepting state q: "1"; of length two, "01"
        // and "10" (while "00" and "11" end back in p).
        let rendered: Vec<String> = words
            .iter()
            .map(|w| w.iter().map(|&c| d.alphabet[c].clone()).collect::<String>())
            .collect();
        assert_eq!(rendered, ["1", "01", "10"]);
    }
}
