//! Word problems over the one-letter terminal alphabet `{*}` and their
//! order-type solutions.
//!
//! A word problem is a finite system of equations `u = s₁ s₂ … sₖ`, one per
//! unknown, where each symbol is either the terminal `*` or an unknown. Its
//! least solution assigns every unknown a countable linear order: unfold the
//! equations forever and read off the terminal positions from left to right.
//! For systems arising from automata via [`automaton_to_word_problem`], the
//! unknown of a state denotes the in-order language below that state, so
//! solving the system computes the order type of the automaton's language —
//! and hence of a hammock when the automaton is a hammock acceptor.
//!
//! [`solve`] produces the answer as a normalized [`OrderTerm`] by processing
//! strongly connected components of the unknown-dependency graph bottom-up:
//! non-recursive unknowns are sums, single-recursion components contribute
//! `P . w + S . w*` spines, and components with branching recursion
//! additionally develop a dense shuffle between the spines.
//! [`expand_tree`] materializes finitely many unfolding steps for
//! inspection, and [`quasi_rational`] detects systems without branching
//! recursion (those with scattered solutions).

use std::collections::BTreeSet;

use serde_json::{Value, json};

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::regular_orders::{OrderTerm, normalize};

/// One right-hand-side symbol of an equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    /// The terminal letter `*`.
    Star,
    /// A reference to the unknown with this index.
    Unknown(usize),
}

/// A system of equations, one per unknown, over the terminal alphabet `{*}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordProblem {
    unknowns: Vec<String>,
    equations: Vec<Vec<Symbol>>,
}

fn valid_unknown_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "*"
}

impl WordProblem {
    /// Builds a system from unknown names and one right-hand side per
    /// unknown, validating name syntax, uniqueness, and reference indices.
    pub fn new(unknowns: Vec<String>, equations: Vec<Vec<Symbol>>) -> Result<WordProblem> {
        if unknowns.len() != equations.len() {
            return Err(Error::Invariant {
                detail: format!("{} unknowns but {} equations", unknowns.len(), equations.len()),
            });
        }
        let mut seen = BTreeSet::new();
        for name in &unknowns {
            if !valid_unknown_name(name) {
                return Err(Error::BadIdentifier { kind: "unknown", name: name.clone() });
            }
            if !seen.insert(name.clone()) {
                return Err(Error::Duplicate { kind: "unknown", name: name.clone() });
            }
        }
        for rhs in &equations {
            for sym in rhs {
                if let Symbol::Unknown(i) = sym
                    && *i >= unknowns.len()
                {
                    return Err(Error::Invariant {
                        detail: format!("equation references unknown index {i} out of range"),
                    });
                }
            }
        }
        Ok(WordProblem { unknowns, equations })
    }

    /// The unknown names, in declaration order.
    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    /// The right-hand sides, indexed like [`WordProblem::unknowns`].
    pub fn equations(&self) -> &[Vec<Symbol>] {
        &self.equations
    }

    /// Index of the unknown with the given name.
    pub fn unknown_index(&self, name: &str) -> Option<usize> {
        self.unknowns.iter().position(|u| u == name)
    }

    /// Serializes the system to JSON.
    pub fn to_json(&self) -> Value {
        let equations: Vec<Value> = self
            .unknowns
            .iter()
            .zip(&self.equations)
            .map(|(name, rhs)| {
                let symbols: Vec<String> = rhs
                    .iter()
                    .map(|s| match s {
                        Symbol::Star => "*".to_string(),
                        Symbol::Unknown(i) => self.unknowns[*i].clone(),
                    })
                    .collect();
                json!({ "unknown": name, "rhs": symbols })
            })
            .collect();
        json!({
            "schema_version": 1,
            "terminals": ["*"],
            "equations": equations,
        })
    }

    /// Reads a system back from the JSON produced by
    /// [`WordProblem::to_json`].
    pub fn from_json(value: &Value) -> Result<WordProblem> {
        let equations =
            value.get("equations").and_then(Value::as_array).ok_or_else(|| Error::Syntax {
                line: 1,
                column: 1,
                message: "word problem JSON needs an `equations` array".into(),
            })?;
        let mut unknowns = Vec::new();
        let mut sides: Vec<Vec<String>> = Vec::new();
        for eq in equations {
            let name = eq.get("unknown").and_then(Value::as_str).ok_or_else(|| Error::Syntax {
                line: 1,
                column: 1,
                message: "each equation needs an `unknown` name".into(),
            })?;
            let rhs = eq.get("rhs").and_then(Value::as_array).ok_or_else(|| Error::Syntax {
                line: 1,
                column: 1,
                message: "each equation needs an `rhs` array".into(),
            })?;
            unknowns.push(name.to_string());
            sides.push(
                rhs.iter()
                    .map(|s| {
                        s.as_str().map(str::to_string).ok_or_else(|| Error::Syntax {
                            line: 1,
                            column: 1,
                            message: "rhs entries must be strings".into(),
                        })
                    })
                    .collect::<Result<Vec<String>>>()?,
            );
        }
        resolve_system(unknowns, sides)
    }
}

fn resolve_system(unknowns: Vec<String>, sides: Vec<Vec<String>>) -> Result<WordProblem> {
    let lookup: std::collections::BTreeMap<&str, usize> =
        unknowns.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut equations = Vec::new();
    for (name, rhs) in unknowns.iter().zip(&sides) {
        let mut symbols = Vec::new();
        for tok in rhs {
            if tok == "*" {
                symbols.push(Symbol::Star);
            } else if let Some(&i) = lookup.get(tok.as_str()) {
                symbols.push(Symbol::Unknown(i));
            } else {
                return Err(Error::UnknownReference {
                    kind: "unknown",
                    name: tok.clone(),
                    context: format!("equation for `{name}`"),
                });
            }
        }
        equations.push(symbols);
    }
    WordProblem::new(unknowns, equations)
}

/// Parses the line format: one equation per line, `name = sym sym …`, where
/// each symbol is `*` or an unknown name (every unknown must have exactly
/// one defining line; right-hand sides may reference unknowns defined on
/// later lines, and may be empty).
pub fn parse_word_problem(text: &str) -> Result<WordProblem> {
    let mut unknowns = Vec::new();
    let mut sides = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((lhs, rhs)) = line.split_once('=') else {
            return Err(Error::Syntax {
                line: lineno + 1,
                column: 1,
                message: format!("expected `name = symbols`, found `{line}`"),
            });
        };
        let name = lhs.trim();
        if !valid_unknown_name(name) {
            return Err(Error::BadIdentifier { kind: "unknown", name: name.to_string() });
        }
        unknowns.push(name.to_string());
        sides.push(rhs.split_whitespace().map(str::to_string).collect());
    }
    resolve_system(unknowns, sides)
}

/// Formats a system in the line format accepted by [`parse_word_problem`].
pub fn format_word_problem(problem: &WordProblem) -> String {
    let mut out = String::new();
    for (name, rhs) in problem.unknowns.iter().zip(&problem.equations) {
        out.push_str(name);
        out.push_str(" =");
        for sym in rhs {
            out.push(' ');
            match sym {
                Symbol::Star => out.push('*'),
                Symbol::Unknown(i) => out.push_str(&problem.unknowns[*i]),
            }
        }
        out.push('\n');
    }
    out
}

/// Translates a binary acceptor into a word problem whose unknowns are the
/// good (trimmed) states: reading an equation left to right, the
/// `0`-successor unknown comes first, then `*` if the state accepts, then
/// the `1`-successor unknown — exactly the in-order decomposition of the
/// language below the state. Returns the system together with the unknown
/// of the start state; an automaton with empty language yields the trivial
/// system `v0 =` (empty order).
pub fn automaton_to_word_problem(dfa: &Dfa) -> Result<(WordProblem, String)> {
    if dfa.alphabet.len() != 2 {
        return Err(Error::Invariant {
            detail: format!(
                "order-type translation needs a binary alphabet, got {} letters",
                dfa.alphabet.len()
            ),
        });
    }
    let trimmed = dfa.trim_good();
    let Some(start) = trimmed.start else {
        let problem = WordProblem::new(vec!["v0".into()], vec![vec![]])?;
        return Ok((problem, "v0".into()));
    };
    let unknowns: Vec<String> = (0..trimmed.states.len()).map(|q| format!("v{q}")).collect();
    let mut equations = Vec::new();
    for state in &trimmed.states {
        let mut rhs = Vec::new();
        if let Some(&low) = state.trans.get(&0) {
            rhs.push(Symbol::Unknown(low));
        }
        if state.accepting {
            rhs.push(Symbol::Star);
        }
        if let Some(&high) = state.trans.get(&1) {
            rhs.push(Symbol::Unknown(high));
        }
        equations.push(rhs);
    }
    let problem = WordProblem::new(unknowns, equations)?;
    let name = problem.unknowns[start].clone();
    Ok((problem, name))
}

/// A node of a finite unfolding of a word problem (see [`expand_tree`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionNode {
    /// A terminal `*` leaf.
    Terminal,
    /// An unknown whose equation has been substituted; the children are the
    /// right-hand side in order.
    Expanded {
        /// Index of the unknown.
        unknown: usize,
        /// One child per right-hand-side symbol.
        children: Vec<ExpansionNode>,
    },
    /// An unknown leaf not yet substituted.
    Unexpanded {
        /// Index of the unknown.
        unknown: usize,
    },
}

/// Unfolds the equation of `unknown` to the given depth: at depth 0 the
/// root's children are its right-hand-side symbols with unknowns left
/// unexpanded; each additional depth level substitutes every unexpanded
/// unknown once more.
pub fn expand_tree(problem: &WordProblem, unknown: &str, depth: usize) -> Result<ExpansionNode> {
    let index = problem.unknown_index(unknown).ok_or(Error::UnknownReference {
        kind: "unknown",
        name: unknown.to_string(),
        context: "expansion".into(),
    })?;
    Ok(expand_node(problem, index, depth))
}

fn expand_node(problem: &WordProblem, unknown: usize, depth: usize) -> ExpansionNode {
    let children = problem.equations[unknown]
        .iter()
        .map(|sym| match sym {
            Symbol::Star => ExpansionNode::Terminal,
            Symbol::Unknown(w) => {
                if depth == 0 {
                    ExpansionNode::Unexpanded { unknown: *w }
                } else {
                    expand_node(problem, *w, depth - 1)
                }
            }
        })
        .collect();
    ExpansionNode::Expanded { unknown, children }
}

/// The frontier of an unfolding: its leaves in left-to-right order, each a
/// `*` or a not-yet-expanded unknown. The terminal positions are the
/// elements of the solution order produced so far.
pub fn frontier(node: &ExpansionNode) -> Vec<Symbol> {
    let mut out = Vec::new();
    collect_frontier(node, &mut out);
    out
}

fn collect_frontier(node: &ExpansionNode, out: &mut Vec<Symbol>) {
    match node {
        ExpansionNode::Terminal => out.push(Symbol::Star),
        ExpansionNode::Unexpanded { unknown } => out.push(Symbol::Unknown(*unknown)),
        ExpansionNode::Expanded { children, .. } => {
            for child in children {
                collect_frontier(child, out);
            }
        }
    }
}

/// Renders a frontier as a space-separated word of `*`s and unknown names.
pub fn format_frontier(problem: &WordProblem, symbols: &[Symbol]) -> String {
    symbols
        .iter()
        .map(|s| match s {
            Symbol::Star => "*".to_string(),
            Symbol::Unknown(i) => problem.unknowns[*i].clone(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders an unfolding as a nested word, e.g. `v1(v1 v2(*))`.
pub fn format_expansion(problem: &WordProblem, node: &ExpansionNode) -> String {
    match node {
        ExpansionNode::Terminal => "*".to_string(),
        ExpansionNode::Unexpanded { unknown } => problem.unknowns[*unknown].clone(),
        ExpansionNode::Expanded { unknown, children } => {
            let inner: Vec<String> =
                children.iter().map(|c| format_expansion(problem, c)).collect();
            format!("{}({})", problem.unknowns[*unknown], inner.join(" "))
        }
    }
}

/// Serializes an unfolding as nested JSON.
pub fn expansion_to_json(problem: &WordProblem, node: &ExpansionNode) -> Value {
    match node {
        ExpansionNode::Terminal => json!("*"),
        ExpansionNode::Unexpanded { unknown } => json!({
            "unknown": problem.unknowns[*unknown],
            "expanded": false,
        }),
        ExpansionNode::Expanded { unknown, children } => json!({
            "unknown": problem.unknowns[*unknown],
            "expanded": true,
            "children": children
                .iter()
                .map(|c| expansion_to_json(problem, c))
                .collect::<Vec<Value>>(),
        }),
    }
}

/// Analysis of a word problem shared by the solver and
/// [`quasi_rational`]: productivity, erased right-hand sides, and the
/// strongly connected components of the dependency graph.
struct Analysis {
    /// Whether each unknown denotes a nonempty order.
    productive: Vec<bool>,
    /// Right-hand sides with unproductive references removed.
    erased: Vec<Vec<Symbol>>,
    /// Strongly connected components over productive unknowns.
    components: Vec<Vec<usize>>,
    /// Component id per unknown (usize::MAX for unproductive ones).
    component_of: Vec<usize>,
}

fn analyze(problem: &WordProblem) -> Analysis {
    let n = problem.unknowns.len();
    // Least-fixpoint productivity: an unknown is productive once its
    // right-hand side contains a terminal or a productive unknown.
    let mut productive = vec![false; n];
    loop {
        let mut changed = false;
        for (u, rhs) in problem.equations.iter().enumerate() {
            if productive[u] {
                continue;
            }
            let now = rhs.iter().any(|s| match s {
                Symbol::Star => true,
                Symbol::Unknown(w) => productive[*w],
            });
            if now {
                productive[u] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // Unproductive unknowns denote the empty order; drop their occurrences.
    let erased: Vec<Vec<Symbol>> = problem
        .equations
        .iter()
        .map(|rhs| {
            rhs.iter()
                .filter(|s| match s {
                    Symbol::Star => true,
                    Symbol::Unknown(w) => productive[*w],
                })
                .copied()
                .collect()
        })
        .collect();
    // Strongly connected components of the dependency graph on productive
    // unknowns (u depends on the unknowns its erased equation mentions).
    let mut graph = petgraph::graph::DiGraph::<usize, ()>::new();
    let mut node_of = vec![None; n];
    for u in 0..n {
        if productive[u] {
            node_of[u] = Some(graph.add_node(u));
        }
    }
    for u in 0..n {
        if !productive[u] {
            continue;
        }
        for sym in &erased[u] {
            if let Symbol::Unknown(w) = sym {
                graph.add_edge(node_of[u].unwrap(), node_of[*w].unwrap(), ());
            }
        }
    }
    let components: Vec<Vec<usize>> = petgraph::algo::kosaraju_scc(&graph)
        .into_iter()
        .map(|c| c.into_iter().map(|ix| graph[ix]).collect())
        .collect();
    let mut component_of = vec![usize::MAX; n];
    for (cid, members) in components.iter().enumerate() {
        for &u in members {
            component_of[u] = cid;
        }
    }
    Analysis { productive, erased, components, component_of }
}

impl Analysis {
    /// Positions of same-component unknowns in the erased equation of `u`.
    fn recursive_positions(&self, u: usize) -> Vec<usize> {
        self.erased[u]
            .iter()
            .enumerate()
            .filter_map(|(pos, sym)| match sym {
                Symbol::Unknown(w) if self.component_of[*w] == self.component_of[u] => Some(pos),
                _ => None,
            })
            .collect()
    }

    /// Whether the component (given by members) recurses with branching:
    /// some member's equation mentions the component at least twice.
    fn branching(&self, members: &[usize]) -> bool {
        members.iter().any(|&u| self.recursive_positions(u).len() >= 2)
    }

    /// Whether the component recurses at all (a singleton without a
    /// self-reference does not).
    fn recursive(&self, members: &[usize]) -> bool {
        members.len() > 1 || !self.recursive_positions(members[0]).is_empty()
    }
}

/// Whether every productive unknown recurses at most singly: no strongly
/// connected component of the dependency graph mentions itself twice in one
/// equation. Such systems — and exactly such — have scattered solutions.
pub fn quasi_rational(problem: &WordProblem) -> bool {
    let analysis = analyze(problem);
    analysis.components.iter().all(|members| !analysis.branching(members))
}

/// Solves the system for every unknown; returns `(name, normalized term)`
/// pairs in declaration order.
pub fn solve_all(problem: &WordProblem) -> Result<Vec<(String, OrderTerm)>> {
    let analysis = analyze(problem);
    let n = problem.unknowns.len();
    let mut solutions: Vec<Option<OrderTerm>> = vec![None; n];
    for u in 0..n {
        if !analysis.productive[u] {
            solutions[u] = Some(OrderTerm::Zero);
        }
    }
    // Process components whose external dependencies are already solved
    // until none are left (the condensation is acyclic, so this finishes).
    let mut done = vec![false; analysis.components.len()];
    loop {
        let mut progressed = false;
        'components: for (cid, members) in analysis.components.iter().enumerate() {
            if done[cid] {
                continue;
            }
            for &u in members {
                for sym in &analysis.erased[u] {
                    if let Symbol::Unknown(w) = sym
                        && analysis.component_of[*w] != cid
                        && solutions[*w].is_none()
                    {
                        continue 'components;
                    }
                }
            }
            solve_component(&analysis, members, &mut solutions)?;
            done[cid] = true;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    if let Some(missing) = done.iter().position(|d| !d) {
        return Err(Error::Invariant {
            detail: format!("dependency resolution stalled on component {missing}"),
        });
    }
    Ok(problem.unknowns.iter().zip(solutions).map(|(name, t)| (name.clone(), t.unwrap())).collect())
}

/// Solves the system for one unknown.
pub fn solve(problem: &WordProblem, unknown: &str) -> Result<OrderTerm> {
    let index = problem.unknown_index(unknown).ok_or(Error::UnknownReference {
        kind: "unknown",
        name: unknown.to_string(),
        context: "solve".into(),
    })?;
    Ok(solve_all(problem)?.swap_remove(index).1)
}

/// Solves every member of one strongly connected component, assuming all
/// external references are solved.
fn solve_component(
    analysis: &Analysis,
    members: &[usize],
    solutions: &mut Vec<Option<OrderTerm>>,
) -> Result<()> {
    // The solved term of a non-recursive rhs symbol.
    let term_of = |sym: &Symbol, solutions: &Vec<Option<OrderTerm>>| -> OrderTerm {
        match sym {
            Symbol::Star => OrderTerm::One,
            Symbol::Unknown(w) => solutions[*w].clone().expect("external reference solved"),
        }
    };
    // Sum of the solved symbols in a position range of an erased equation.
    let segment = |u: usize, range: std::ops::Range<usize>, solutions: &Vec<Option<OrderTerm>>| {
        OrderTerm::Sum(analysis.erased[u][range].iter().map(|s| term_of(s, solutions)).collect())
    };

    if !analysis.recursive(members) {
        let u = members[0];
        let rhs_len = analysis.erased[u].len();
        solutions[u] = Some(normalize(&segment(u, 0..rhs_len, solutions)));
        return Ok(());
    }

    // For each member: positions of same-component occurrences, and the
    // first/last occurrence targets with the solid parts around them.
    let occurrences: std::collections::BTreeMap<usize, Vec<usize>> =
        members.iter().map(|&u| (u, analysis.recursive_positions(u))).collect();
    let target = |u: usize, pos: usize| -> usize {
        match analysis.erased[u][pos] {
            Symbol::Unknown(w) => w,
            Symbol::Star => unreachable!("recursive positions point at unknowns"),
        }
    };

    if !analysis.branching(members) {
        // Single recursion: the component is one cycle u → next(u); the
        // solution of s is P . w + S . w*, with P the solid prefixes read
        // forward around the cycle from s and S the solid suffixes read
        // backward.
        for &s in members {
            let mut prefixes = Vec::new();
            let mut suffixes = Vec::new();
            let mut u = s;
            for _ in 0..members.len() {
                let pos = occurrences[&u][0];
                prefixes.push(segment(u, 0..pos, solutions));
                suffixes.push(segment(u, pos + 1..analysis.erased[u].len(), solutions));
                u = target(u, pos);
            }
            if u != s {
                return Err(Error::Invariant {
                    detail: "single-recursion component is not one cycle".into(),
                });
            }
            suffixes.reverse();
            let term = OrderTerm::Sum(vec![
                OrderTerm::OmegaProd(Box::new(OrderTerm::Sum(prefixes))),
                OrderTerm::OmegaStarProd(Box::new(OrderTerm::Sum(suffixes))),
            ]);
            solutions[s] = Some(normalize(&term));
        }
        return Ok(());
    }

    // Branching recursion. The left spine of the unfolding from s follows
    // first occurrences, accumulating solid prefixes in an eventually
    // periodic ascending sum A(s); the right spine follows last occurrences
    // dually into B(s); and between any two neighboring recursive
    // occurrences the unfolding is dense, producing a shuffle of the
    // segment types.
    let first_pos = |u: usize| occurrences[&u][0];
    let last_pos = |u: usize| *occurrences[&u].last().unwrap();

    // Ascending spine: tail prefixes, then the cycle prefix sum repeated ω
    // times.
    let spine_a = |s: usize, solutions: &Vec<Option<OrderTerm>>| -> OrderTerm {
        let mut orbit = vec![s];
        let mut seen = std::collections::BTreeMap::new();
        seen.insert(s, 0usize);
        let entry;
        loop {
            let u = *orbit.last().unwrap();
            let next = target(u, first_pos(u));
            if let Some(&at) = seen.get(&next) {
                entry = at;
                break;
            }
            seen.insert(next, orbit.len());
            orbit.push(next);
        }
        let mut parts: Vec<OrderTerm> =
            orbit[..entry].iter().map(|&u| segment(u, 0..first_pos(u), solutions)).collect();
        let cycle: Vec<OrderTerm> =
            orbit[entry..].iter().map(|&u| segment(u, 0..first_pos(u), solutions)).collect();
        parts.push(OrderTerm::OmegaProd(Box::new(OrderTerm::Sum(cycle))));
        normalize(&OrderTerm::Sum(parts))
    };
    // Descending spine, mirrored: the cycle suffix sum repeated ω* times,
    // then the tail suffixes read back toward s.
    let spine_b = |s: usize, solutions: &Vec<Option<OrderTerm>>| -> OrderTerm {
        let mut orbit = vec![s];
        let mut seen = std::collections::BTreeMap::new();
        seen.insert(s, 0usize);
        let entry;
        loop {
            let u = *orbit.last().unwrap();
            let next = target(u, last_pos(u));
            if let Some(&at) = seen.get(&next) {
                entry = at;
                break;
            }
            seen.insert(next, orbit.len());
            orbit.push(next);
        }
        let suffix = |u: usize| segment(u, last_pos(u) + 1..analysis.erased[u].len(), solutions);
        let mut cycle: Vec<OrderTerm> = orbit[entry..].iter().map(|&u| suffix(u)).collect();
        cycle.reverse();
        let mut parts = vec![OrderTerm::OmegaStarProd(Box::new(OrderTerm::Sum(cycle)))];
        parts.extend(orbit[..entry].iter().rev().map(|&u| suffix(u)));
        normalize(&OrderTerm::Sum(parts))
    };

    let spines_a: std::collections::BTreeMap<usize, OrderTerm> =
        members.iter().map(|&u| (u, spine_a(u, solutions))).collect();
    let spines_b: std::collections::BTreeMap<usize, OrderTerm> =
        members.iter().map(|&u| (u, spine_b(u, solutions))).collect();

    // Segment types between neighboring recursive occurrences: the right
    // spine of the left occurrence, the solid middle, the left spine of the
    // right occurrence.
    let mut shuffle_members: BTreeSet<OrderTerm> = BTreeSet::new();
    for &x in members {
        let positions = &occurrences[&x];
        for pair in positions.windows(2) {
            let left = target(x, pair[0]);
            let right = target(x, pair[1]);
            let middle = segment(x, pair[0] + 1..pair[1], solutions);
            let seg = normalize(&OrderTerm::Sum(vec![
                spines_b[&left].clone(),
                middle,
                spines_a[&right].clone(),
            ]));
            if seg != OrderTerm::Zero {
                shuffle_members.insert(seg);
            }
        }
    }
    if shuffle_members.is_empty() {
        return Err(Error::Invariant {
            detail: "branching component produced no segment types".into(),
        });
    }
    let shuffle = OrderTerm::Shuffle(shuffle_members.into_iter().collect());
    for &s in members {
        let term =
            OrderTerm::Sum(vec![spines_a[&s].clone(), shuffle.clone(), spines_b[&s].clone()]);
        solutions[s] = Some(normalize(&term));
    }
    Ok(())
}
