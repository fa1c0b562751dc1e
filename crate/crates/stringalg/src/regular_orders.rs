//! A calculator for regular linear orders given as order terms.
//!
//! Terms denote countable linear orders: `0` (empty), `1` (a point), sums
//! (concatenation, left part below right part), the products `t . w`
//! (ω-many ascending copies of `t`) and `t . w*` (ω-many descending copies),
//! and the shuffle `sh(t₁, …, tₙ)` — a dense η-indexed arrangement of copies
//! of the arguments in which every argument appears densely often. The text
//! grammar is
//!
//! ```text
//! t ::= 0 | 1 | n | w | w* | t + t | t . w | t . w* | sh(t, …, t) | (t)
//! ```
//!
//! with `n` a positive integer (sugar for `1 + ⋯ + 1`), `w` for `1 . w`, and
//! `w*` for `1 . w*`.
//!
//! [`predicates`] evaluates emptiness, finiteness (with cardinality),
//! endpoints, existence of a consecutive pair, scatteredness, and density by
//! structural recursion. [`normalize`] applies isomorphism-preserving
//! rewrites to a canonical fixpoint. [`term_to_automaton`] compiles a term
//! to a binary acceptor whose in-order language realizes the denoted order,
//! linking the calculator to [`crate::automaton`] and, through word
//! problems, back to hammocks.

use serde::Serialize;

use crate::automaton::Dfa;
use crate::error::{Error, Result};

/// An order term (see the module docs for the denotation).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderTerm {
    /// The empty order.
    Zero,
    /// A single point.
    One,
    /// Concatenation of the parts, left to right.
    Sum(Vec<OrderTerm>),
    /// ω ascending copies of the operand.
    OmegaProd(Box<OrderTerm>),
    /// ω descending copies of the operand.
    OmegaStarProd(Box<OrderTerm>),
    /// Dense shuffle of the arguments.
    Shuffle(Vec<OrderTerm>),
}

impl OrderTerm {
    /// The order type ω = `1 . w`.
    pub fn omega() -> OrderTerm {
        OrderTerm::OmegaProd(Box::new(OrderTerm::One))
    }

    /// The order type ω* = `1 . w*`.
    pub fn omega_star() -> OrderTerm {
        OrderTerm::OmegaStarProd(Box::new(OrderTerm::One))
    }

    /// The order type ζ = ω* + ω.
    pub fn zeta() -> OrderTerm {
        OrderTerm::Sum(vec![OrderTerm::omega_star(), OrderTerm::omega()])
    }

    /// The order type η = `sh(1)`.
    pub fn eta() -> OrderTerm {
        OrderTerm::Shuffle(vec![OrderTerm::One])
    }

    /// The finite order with `n` points.
    pub fn finite(n: usize) -> OrderTerm {
        match n {
            0 => OrderTerm::Zero,
            1 => OrderTerm::One,
            _ => OrderTerm::Sum(vec![OrderTerm::One; n]),
        }
    }
}

/// Structural facts about the order a term denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderPredicates {
    /// The order has no elements.
    pub empty: bool,
    /// The order has finitely many elements.
    pub finite: bool,
    /// Number of elements when finite.
    pub cardinality: Option<u64>,
    /// A least element exists.
    pub has_least: bool,
    /// A greatest element exists.
    pub has_greatest: bool,
    /// Two elements are consecutive (nothing strictly between them).
    pub has_consecutive_pair: bool,
    /// No suborder is densely ordered.
    pub scattered: bool,
    /// The order is isomorphic to the rationals (dense, no endpoints,
    /// nonempty — Cantor's characterization among countable orders).
    pub is_eta: bool,
}

const EMPTY_PREDICATES: OrderPredicates = OrderPredicates {
    empty: true,
    finite: true,
    cardinality: Some(0),
    has_least: false,
    has_greatest: false,
    has_consecutive_pair: false,
    scattered: true,
    is_eta: false,
};

/// Evaluates the predicates of a term by structural recursion.
pub fn predicates(t: &OrderTerm) -> OrderPredicates {
    let mut p = predicates_inner(t);
    p.is_eta = !p.empty && !p.has_least && !p.has_greatest && !p.has_consecutive_pair;
    p
}

fn predicates_inner(t: &OrderTerm) -> OrderPredicates {
    match t {
        OrderTerm::Zero => EMPTY_PREDICATES,
        OrderTerm::One => OrderPredicates {
            empty: false,
            finite: true,
            cardinality: Some(1),
            has_least: true,
            has_greatest: true,
            has_consecutive_pair: false,
            scattered: true,
            is_eta: false,
        },
        OrderTerm::Sum(parts) => {
            let ps: Vec<OrderPredicates> = parts.iter().map(predicates_inner).collect();
            let nonempty: Vec<&OrderPredicates> = ps.iter().filter(|p| !p.empty).collect();
            if nonempty.is_empty() {
                return EMPTY_PREDICATES;
            }
            let finite = ps.iter().all(|p| p.finite);
            // A consecutive pair arises inside a part or at the junction of
            // adjacent nonempty parts where the left one ends and the right
            // one begins.
            let junction =
                nonempty.windows(2).any(|pair| pair[0].has_greatest && pair[1].has_least);
            OrderPredicates {
                empty: false,
                finite,
                cardinality: finite.then(|| ps.iter().map(|p| p.cardinality.unwrap()).sum()),
                has_least: nonempty[0].has_least,
                has_greatest: nonempty.last().unwrap().has_greatest,
                has_consecutive_pair: ps.iter().any(|p| p.has_consecutive_pair) || junction,
                scattered: ps.iter().all(|p| p.scattered),
                is_eta: false,
            }
        }
        OrderTerm::OmegaProd(p) => {
            let p = predicates_inner(p);
            if p.empty {
                return EMPTY_PREDICATES;
            }
            OrderPredicates {
                empty: false,
                finite: false,
                cardinality: None,
                has_least: p.has_least,
                has_greatest: false,
                has_consecutive_pair: p.has_consecutive_pair || (p.has_greatest && p.has_least),
                scattered: p.scattered,
                is_eta: false,
            }
        }
        OrderTerm::OmegaStarProd(p) => {
            let p = predicates_inner(p);
            if p.empty {
                return EMPTY_PREDICATES;
            }
            OrderPredicates {
                empty: false,
                finite: false,
                cardinality: None,
                has_least: false,
                has_greatest: p.has_greatest,
                has_consecutive_pair: p.has_consecutive_pair || (p.has_greatest && p.has_least),
                scattered: p.scattered,
                is_eta: false,
            }
        }
        OrderTerm::Shuffle(args) => {
            let ps: Vec<OrderPredicates> = args.iter().map(predicates_inner).collect();
            if ps.iter().all(|p| p.empty) {
                return EMPTY_PREDICATES;
            }
            OrderPredicates {
                empty: false,
                finite: false,
                cardinality: None,
                has_least: false,
                has_greatest: false,
                // Blocks are densely arranged, so pairs only arise inside a
                // block.
                has_consecutive_pair: ps.iter().any(|p| p.has_consecutive_pair),
                scattered: false,
                is_eta: false,
            }
        }
    }
}

/// Whether the greatest end of (normalized) `t` absorbs a finite order
/// appended above: `t + k ≅ t` for every finite nonempty `k`.
fn absorbs_finite_above(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::OmegaStarProd(p) => {
            let pp = predicates(p);
            (pp.finite && !pp.empty) || absorbs_finite_above(p)
        }
        OrderTerm::Sum(parts) => {
            parts.iter().rev().find(|p| !predicates(p).empty).is_some_and(absorbs_finite_above)
        }
        _ => false,
    }
}

/// Whether the least end of (normalized) `t` absorbs a finite order
/// prepended below: `k + t ≅ t` for every finite nonempty `k`.
fn absorbs_finite_below(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::OmegaProd(p) => {
            let pp = predicates(p);
            (pp.finite && !pp.empty) || absorbs_finite_below(p)
        }
        OrderTerm::Sum(parts) => {
            parts.iter().find(|p| !predicates(p).empty).is_some_and(absorbs_finite_below)
        }
        _ => false,
    }
}

/// The summand list of a normalized term (`Sum` unfolds, everything else is
/// a single summand).
fn flatten(t: &OrderTerm) -> Vec<OrderTerm> {
    match t {
        OrderTerm::Sum(parts) => parts.clone(),
        other => vec![other.clone()],
    }
}

/// Whether `seg` splits into consecutive blocks, each the flattening of some
/// member of `members`.
fn tiles(seg: &[OrderTerm], members: &[OrderTerm]) -> bool {
    let blocks: Vec<Vec<OrderTerm>> = members.iter().map(flatten).collect();
    let n = seg.len();
    let mut ok = vec![false; n + 1];
    ok[n] = true;
    for pos in (0..n).rev() {
        ok[pos] = blocks.iter().any(|b| {
            !b.is_empty()
                && pos + b.len() <= n
                && seg[pos..pos + b.len()] == b[..]
                && ok[pos + b.len()]
        });
    }
    ok[0]
}

/// One top-down rewriting pass; [`normalize`] iterates it to a fixpoint.
fn normalize_pass(t: &OrderTerm) -> OrderTerm {
    match t {
        OrderTerm::Zero | OrderTerm::One => t.clone(),
        OrderTerm::Sum(parts) => {
            // Children first, then flatten and drop empty summands.
            let mut out: Vec<OrderTerm> = Vec::new();
            for p in parts {
                match normalize_pass(p) {
                    OrderTerm::Zero => {}
                    OrderTerm::Sum(inner) => out.extend(inner),
                    other => out.push(other),
                }
            }
            // A finite summand next to an absorbing end contributes nothing.
            let mut kept: Vec<OrderTerm> = Vec::new();
            for (idx, part) in out.iter().enumerate() {
                let p = predicates(part);
                let finite_nonempty = p.finite && !p.empty;
                let absorbed_left = kept.last().is_some_and(absorbs_finite_above);
                let absorbed_right = idx + 1 < out.len() && absorbs_finite_below(&out[idx + 1]);
                if finite_nonempty && (absorbed_left || absorbed_right) {
                    continue;
                }
                kept.push(part.clone());
            }
            let mut out = kept;
            // Two equal shuffles with only whole blocks between them merge:
            // sh(A) + (blocks of A) + sh(A) ≅ sh(A).
            'merge: loop {
                for i in 0..out.len() {
                    let OrderTerm::Shuffle(members) = &out[i] else { continue };
                    for j in (i + 1..out.len()).rev() {
                        if out[j] == out[i] && tiles(&out[i + 1..j], members) {
                            out.drain(i + 1..=j);
                            continue 'merge;
                        }
                    }
                }
                break;
            }
            match out.len() {
                0 => OrderTerm::Zero,
                1 => out.pop().unwrap(),
                _ => OrderTerm::Sum(out),
            }
        }
        OrderTerm::OmegaProd(p) => {
            let inner = normalize_pass(p);
            let ip = predicates(&inner);
            if ip.empty {
                OrderTerm::Zero
            } else if ip.finite {
                OrderTerm::omega()
            } else {
                OrderTerm::OmegaProd(Box::new(inner))
            }
        }
        OrderTerm::OmegaStarProd(p) => {
            let inner = normalize_pass(p);
            let ip = predicates(&inner);
            if ip.empty {
                OrderTerm::Zero
            } else if ip.finite {
                OrderTerm::omega_star()
            } else {
                OrderTerm::OmegaStarProd(Box::new(inner))
            }
        }
        OrderTerm::Shuffle(args) => {
            let mut out: Vec<OrderTerm> =
                args.iter().map(normalize_pass).filter(|a| *a != OrderTerm::Zero).collect();
            out.sort();
            out.dedup();
            if out.is_empty() { OrderTerm::Zero } else { OrderTerm::Shuffle(out) }
        }
    }
}

/// Rewrites a term to its canonical fixpoint under isomorphism-preserving
/// rules: sums are flattened with empty summands dropped, finite product
/// operands collapse to `1`, finite summands absorbed by a neighboring
/// `. w` / `. w*` end are dropped, shuffle arguments are deduplicated and
/// sorted, and `sh(A) + blocks-of-A + sh(A)` merges into one shuffle.
/// [`predicates`] values are invariant under normalization.
pub fn normalize(t: &OrderTerm) -> OrderTerm {
    let mut cur = t.clone();
    loop {
        let next = normalize_pass(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Formats a term in the grammar accepted by [`parse_term`]: runs of `1` in
/// a sum print as integers, `1 . w` prints as `w`, `1 . w*` as `w*`, and sum
/// operands of a product are parenthesized.
pub fn format_term(t: &OrderTerm) -> String {
    match t {
        OrderTerm::Zero => "0".to_string(),
        OrderTerm::One => "1".to_string(),
        OrderTerm::Sum(parts) => {
            if parts.is_empty() {
                return "0".to_string();
            }
            let mut chunks: Vec<String> = Vec::new();
            let mut ones = 0usize;
            for p in parts {
                if *p == OrderTerm::One {
                    ones += 1;
                } else {
                    if ones > 0 {
                        chunks.push(ones.to_string());
                        ones = 0;
                    }
                    chunks.push(format_term(p));
                }
            }
            if ones > 0 {
                chunks.push(ones.to_string());
            }
            chunks.join(" + ")
        }
        OrderTerm::OmegaProd(p) => match &**p {
            OrderTerm::One => "w".to_string(),
            inner => format!("{} . w", parenthesize_operand(inner)),
        },
        OrderTerm::OmegaStarProd(p) => match &**p {
            OrderTerm::One => "w*".to_string(),
            inner => format!("{} . w*", parenthesize_operand(inner)),
        },
        OrderTerm::Shuffle(args) => {
            let inner: Vec<String> = args.iter().map(format_term).collect();
            format!("sh({})", inner.join(", "))
        }
    }
}

fn parenthesize_operand(t: &OrderTerm) -> String {
    let s = format_term(t);
    if s.contains('+') { format!("({s})") } else { s }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(u64),
    Omega,
    OmegaStar,
    Shuffle,
    Plus,
    Dot,
    LParen,
    RParen,
    Comma,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                tokens.push(Token::Plus);
                pos += 1;
            }
            '.' => {
                tokens.push(Token::Dot);
                pos += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                pos += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                pos += 1;
            }
            ',' => {
                tokens.push(Token::Comma);
                pos += 1;
            }
            'w' => {
                if pos + 1 < bytes.len() && bytes[pos + 1] == b'*' {
                    tokens.push(Token::OmegaStar);
                    pos += 2;
                } else {
                    tokens.push(Token::Omega);
                    pos += 1;
                }
            }
            's' => {
                if text[pos..].starts_with("sh") {
                    tokens.push(Token::Shuffle);
                    pos += 2;
                } else {
                    return Err(Error::Syntax {
                        line: 1,
                        column: pos + 1,
                        message: format!("unexpected character `{c}` in order term"),
                    });
                }
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: u64 = text[start..pos].parse().map_err(|_| Error::Syntax {
                    line: 1,
                    column: start + 1,
                    message: "integer literal too large".into(),
                })?;
                tokens.push(Token::Int(n));
            }
            _ => {
                return Err(Error::Syntax {
                    line: 1,
                    column: pos + 1,
                    message: format!("unexpected character `{c}` in order term"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        match self.bump() {
            Some(t) if t == want => Ok(()),
            other => Err(Error::Syntax {
                line: 1,
                column: self.pos,
                message: format!("expected {what}, found {other:?}"),
            }),
        }
    }

    /// sum := product ('+' product)* — integer summands and nested sums are
    /// spliced into one flat summand list.
    fn sum(&mut self) -> Result<OrderTerm> {
        let mut parts: Vec<OrderTerm> = Vec::new();
        let splice = |t: OrderTerm, parts: &mut Vec<OrderTerm>| match t {
            OrderTerm::Sum(inner) => parts.extend(inner),
            other => parts.push(other),
        };
        splice(self.product()?, &mut parts);
        while self.peek() == Some(&Token::Plus) {
            self.bump();
            splice(self.product()?, &mut parts);
        }
        Ok(match parts.len() {
            0 => OrderTerm::Zero,
            1 => parts.pop().unwrap(),
            _ => OrderTerm::Sum(parts),
        })
    }

    /// product := atom ('.' (w | w*))*
    fn product(&mut self) -> Result<OrderTerm> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Token::Dot) {
            self.bump();
            match self.bump() {
                Some(Token::Omega) => t = OrderTerm::OmegaProd(Box::new(t)),
                Some(Token::OmegaStar) => t = OrderTerm::OmegaStarProd(Box::new(t)),
                other => {
                    return Err(Error::Syntax {
                        line: 1,
                        column: self.pos,
                        message: format!("a product needs w or w* on the right, found {other:?}"),
                    });
                }
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<OrderTerm> {
        match self.bump() {
            Some(Token::Int(n)) => Ok(OrderTerm::finite(n as usize)),
            Some(Token::Omega) => Ok(OrderTerm::omega()),
            Some(Token::OmegaStar) => Ok(OrderTerm::omega_star()),
            Some(Token::LParen) => {
                let t = self.sum()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(t)
            }
            Some(Token::Shuffle) => {
                self.expect(Token::LParen, "`(` after sh")?;
                if self.peek() == Some(&Token::RParen) {
                    return Err(Error::Syntax {
                        line: 1,
                        column: self.pos,
                        message: "sh needs at least one argument".into(),
                    });
                }
                let mut args = vec![self.sum()?];
                while self.peek() == Some(&Token::Comma) {
                    self.bump();
                    args.push(self.sum()?);
                }
                self.expect(Token::RParen, "`)` closing sh")?;
                Ok(OrderTerm::Shuffle(args))
            }
            other => Err(Error::Syntax {
                line: 1,
                column: self.pos,
                message: format!("expected an order term atom, found {other:?}"),
            }),
        }
    }
}

/// Parses the textual grammar (see the module docs); inverse to
/// [`format_term`] up to the splicing of integer literals.
pub fn parse_term(text: &str) -> Result<OrderTerm> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let t = parser.sum()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Syntax {
            line: 1,
            column: parser.pos,
            message: format!("trailing tokens after the term: {:?}", &parser.tokens[parser.pos..]),
        });
    }
    Ok(t)
}

/// Compiles a term to a binary acceptor whose in-order language has the
/// term's order type.
///
/// The construction is by structural recursion with a fresh fragment per
/// occurrence: `0` and `1` become a single (non-)accepting state; a sum
/// branches `0` to the low part and `1` to the high part (longer sums fold
/// to the right); `t . w` is a `1`-loop feeding `t` on `0` (language
/// `1ⁿ0·L_t`, ascending in `n`); `t . w*` mirrors with the loops swapped;
/// and a shuffle routes through a skeleton of non-accepting states in which
/// every argument is reachable again after visiting any argument, making the
/// block arrangement dense.
pub fn term_to_automaton(t: &OrderTerm) -> Dfa {
    let mut dfa = Dfa::new(vec!["0".into(), "1".into()]);
    let start = emit(t, &mut dfa);
    dfa.set_start(start);
    dfa
}

fn emit(t: &OrderTerm, dfa: &mut Dfa) -> usize {
    match t {
        OrderTerm::Zero => dfa.add_state("0", false),
        OrderTerm::One => dfa.add_state("1", true),
        OrderTerm::Sum(parts) => emit_sum(parts, dfa),
        OrderTerm::OmegaProd(p) => {
            let s = dfa.add_state("w", false);
            dfa.add_transition(s, 1, s);
            let inner = emit(p, dfa);
            dfa.add_transition(s, 0, inner);
            s
        }
        OrderTerm::OmegaStarProd(p) => {
            let s = dfa.add_state("w*", false);
            dfa.add_transition(s, 0, s);
            let inner = emit(p, dfa);
            dfa.add_transition(s, 1, inner);
            s
        }
        OrderTerm::Shuffle(args) if args.len() == 2 => {
            let m = dfa.add_state("sh", false);
            let l1 = dfa.add_state("sh", false);
            let l2 = dfa.add_state("sh", false);
            let r1 = dfa.add_state("sh", false);
            let r2 = dfa.add_state("sh", false);
            dfa.add_transition(m, 0, l1);
            dfa.add_transition(m, 1, r1);
            dfa.add_transition(l1, 0, m);
            dfa.add_transition(l1, 1, l2);
            let m0 = emit(&args[0], dfa);
            dfa.add_transition(l2, 0, m0);
            dfa.add_transition(l2, 1, m);
            dfa.add_transition(r1, 0, r2);
            dfa.add_transition(r1, 1, m);
            dfa.add_transition(r2, 0, m);
            let m1 = emit(&args[1], dfa);
            dfa.add_transition(r2, 1, m1);
            m
        }
        OrderTerm::Shuffle(args) => {
            // Right-comb skeleton: internal nodes N₀ … N_{2n−1}; even leaves
            // route back to the root, the i-th odd leaf enters argument i.
            let n = args.len();
            let nodes: Vec<usize> = (0..2 * n).map(|_| dfa.add_state("sh", false)).collect();
            let m = nodes[0];
            for i in 0..2 * n {
                // 0-edge: the leaf under node i.
                if i % 2 == 0 {
                    dfa.add_transition(nodes[i], 0, m);
                } else {
                    let entry = emit(&args[(i - 1) / 2], dfa);
                    dfa.add_transition(nodes[i], 0, entry);
                }
                // 1-edge: the next internal node, or the final (even) leaf.
                if i + 1 < 2 * n {
                    dfa.add_transition(nodes[i], 1, nodes[i + 1]);
                } else {
                    dfa.add_transition(nodes[i], 1, m);
                }
            }
            m
        }
    }
}

fn emit_sum(parts: &[OrderTerm], dfa: &mut Dfa) -> usize {
    match parts {
        [] => emit(&OrderTerm::Zero, dfa),
        [single] => emit(single, dfa),
        [first, rest @ ..] => {
            let root = dfa.add_state("+", false);
            let low = emit(first, dfa);
            let high = emit_sum(rest, dfa);
            dfa.add_transition(root, 0, low);
            dfa.add_transition(root, 1, high);
            root
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::format_bits;

    fn p(text: &str) -> OrderTerm {
        parse_term(text).unwrap()
    }

    #[test]
    fn parse_and_format_roundtrip() {
        for text in [
            "0",
            "1",
            "w",
            "w*",
            "2 + w",
            "w* + w",
            "sh(1)",
            "sh(1, w)",
            "(w* + w) . w",
            "w . w",
            "sh(w* + w) + 3",
            "w + sh(w* + w) + w*",
        ] {
            assert_eq!(format_term(&p(text)), text, "roundtrip of {text}");
        }
    }

    #[test]
    fn integer_literals_splice_into_sums() {
        assert_eq!(p("3"), OrderTerm::Sum(vec![OrderTerm::One; 3]));
        assert_eq!(p("2 + 2"), OrderTerm::Sum(vec![OrderTerm::One; 4]));
        assert_eq!(format_term(&p("2 + 2")), "4");
        assert_eq!(p("0"), OrderTerm::Zero);
    }

    #[test]
    fn shuffle_needs_arguments() {
        assert!(matches!(parse_term("sh()"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_term("w +"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_term("w . 2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_term("q"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn predicates_of_the_basic_orders() {
        let omega = predicates(&p("w"));
        assert!(!omega.empty && !omega.finite && omega.has_least && !omega.has_greatest);
        assert!(omega.has_consecutive_pair && omega.scattered && !omega.is_eta);

        let omega_star = predicates(&p("w*"));
        assert!(!omega_star.has_least && omega_star.has_greatest && omega_star.scattered);

        let zeta = predicates(&p("w* + w"));
        assert!(!zeta.has_least && !zeta.has_greatest && zeta.scattered);
        assert!(zeta.has_consecutive_pair && !zeta.is_eta);

        let eta = predicates(&p("sh(1)"));
        assert!(!eta.empty && !eta.finite && !eta.has_least && !eta.has_greatest);
        assert!(!eta.has_consecutive_pair && !eta.scattered && eta.is_eta);

        let five = predicates(&p("5"));
        assert_eq!(five.cardinality, Some(5));
        assert!(five.finite && five.has_least && five.has_greatest);
        assert!(five.has_consecutive_pair && five.scattered);

        assert_eq!(predicates(&OrderTerm::Zero), EMPTY_PREDICATES);
    }

    #[test]
    fn eta_implies_not_scattered_and_empty_implies_zero_cardinality() {
        for text in ["sh(1)", "sh(w)", "sh(w* + w, 1)", "0", "0 . w", "sh(0)"] {
            let preds = predicates(&p(text));
            assert!(!preds.is_eta || !preds.scattered, "{text}");
            assert!(!preds.empty || preds.cardinality == Some(0), "{text}");
        }
    }

    #[test]
    fn normalization_collapses_finite_product_operands() {
        assert_eq!(format_term(&normalize(&p("3 . w"))), "w");
        assert_eq!(format_term(&normalize(&p("(1 + 1) . w*"))), "w*");
        assert_eq!(format_term(&normalize(&p("0 . w"))), "0");
        assert_eq!(format_term(&normalize(&p("(0 + 1) . w"))), "w");
    }

    #[test]
    fn normalization_drops_absorbed_finite_summands() {
        assert_eq!(format_term(&normalize(&p("w* + 2 + w"))), "w* + w");
        assert_eq!(format_term(&normalize(&p("1 + w"))), "w");
        assert_eq!(format_term(&normalize(&p("w* + 1"))), "w*");
        // The middle 1 merges into the following copy of w (1 + w ≅ w).
        assert_eq!(format_term(&normalize(&p("w + 1 + w"))), "w + w");
        // A descending product of copies of w has no absorbing top end:
        // appending a finite order on top changes the type.
        assert_eq!(format_term(&normalize(&p("w . w* + 5"))), "w . w* + 5");
        // Dually, (1 + w*) . w starts with 1 + w*, whose bottom is a fixed
        // point, not an absorbing ω-run.
        assert_eq!(format_term(&normalize(&p("5 + (1 + w*) . w"))), "5 + (1 + w*) . w");
        // But a product whose operand is itself bottom-absorbing absorbs.
        assert_eq!(format_term(&normalize(&p("5 + (w + w*) . w"))), "(w + w*) . w");
    }

    #[test]
    fn normalization_canonicalizes_shuffles() {
        assert_eq!(format_term(&normalize(&p("sh(w, 1, w)"))), "sh(1, w)");
        assert_eq!(format_term(&normalize(&p("sh(0)"))), "0");
        assert_eq!(format_term(&normalize(&p("sh(1, 0)"))), "sh(1)");
    }

    #[test]
    fn normalization_merges_shuffles_across_whole_blocks() {
        assert_eq!(format_term(&normalize(&p("sh(1) + 1 + sh(1)"))), "sh(1)");
        assert_eq!(format_term(&normalize(&p("sh(1) + sh(1)"))), "sh(1)");
        assert_eq!(format_term(&normalize(&p("sh(w* + w) + w* + w + sh(w* + w)"))), "sh(w* + w)");
        // A partial block between the shuffles blocks the merge.
        assert_eq!(
            format_term(&normalize(&p("sh(w* + w) + w + sh(w* + w)"))),
            "sh(w* + w) + w + sh(w* + w)"
        );
        // Repeated blocks tile too.
        assert_eq!(format_term(&normalize(&p("sh(1) + 3 + sh(1)"))), "sh(1)");
    }

    #[test]
    fn normalization_preserves_predicates() {
        for text in [
            "w* + 2 + w",
            "3 . w",
            "w . w* + 5",
            "5 + (1 + w*) . w",
            "sh(w, 1, w)",
            "sh(1) + 1 + sh(1)",
            "0 + w + 0",
            "(w + 1) . w*",
            "sh(0, w)",
            "1 + 1 + w*",
        ] {
            let t = p(text);
            assert_eq!(predicates(&t), predicates(&normalize(&t)), "{text}");
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        for text in ["w* + 2 + w", "sh(w, 1, w)", "sh(1) + 1 + sh(1)", "3 . w + 0"] {
            let once = normalize(&p(text));
            assert_eq!(normalize(&once), once, "{text}");
        }
    }

    #[test]
    fn omega_automaton_language_is_ascending() {
        let dfa = term_to_automaton(&p("w"));
        let words: Vec<String> = dfa.enumerate_linguage(4).iter().map(|w| format_bits(w)).collect();
        assert_eq!(words, ["0", "10", "110", "1110"]);
        let flags = dfa.linguage_flags();
        assert!(!flags.empty && !flags.finite && flags.scattered);
    }

    #[test]
    fn zero_and_one_automata() {
        assert!(term_to_automaton(&OrderTerm::Zero).linguage_flags().empty);
        let one = term_to_automaton(&OrderTerm::One);
        let words = one.enumerate_linguage(3);
        assert_eq!(words, vec![Vec::<u8>::new()]);
    }

    #[test]
    fn sum_automaton_orders_low_before_high() {
        let dfa = term_to_automaton(&p("1 + 1 + 1"));
        let words: Vec<String> = dfa.enumerate_linguage(4).iter().map(|w| format_bits(w)).collect();
        assert_eq!(words.len(), 3);
        // In-order: the 0-branch (first point) precedes the 1-branch.
        assert!(words[0] < words[1] && words[1] < words[2]);
        let flags = dfa.linguage_flags();
        assert!(flags.finite && !flags.empty);
    }

    #[test]
    fn shuffle_automata_are_dense() {
        for text in ["sh(1)", "sh(1, w)", "sh(1, w, w*)"] {
            let flags = term_to_automaton(&p(text)).linguage_flags();
            assert!(!flags.empty && !flags.finite && !flags.scattered, "{text}");
        }
    }

    #[test]
    fn automaton_flags_match_term_predicates() {
        for text in [
            "0",
            "1",
            "5",
            "w",
            "w*",
            "w* + w",
            "w + 1 + w",
            "sh(1)",
            "sh(w, w*)",
            "(w* + w) . w",
            "w . w*",
            "sh(1) + w",
            "0 . w",
            "sh(0)",
            "2 + w* + 3",
        ] {
            let t = p(text);
            let preds = predicates(&t);
            let flags = term_to_automaton(&t).linguage_flags();
            assert_eq!(flags.empty, preds.empty, "{text} empty");
            assert_eq!(flags.finite, preds.finite, "{text} finite");
            assert_eq!(flags.scattered, preds.scattered, "{text} scattered");
        }
    }

    #[test]
    fn finite_cardinalities_match_enumeration() {
        for text in ["0", "1", "4", "2 + 3"] {
            let t = p(text);
            let card = predicates(&t).cardinality.unwrap();
            let dfa = term_to_automaton(&t);
            // Finite automata languages stabilize well below this bound.
            let words = dfa.enumerate_linguage(16);
            assert_eq!(words.len() as u64, card, "{text}");
        }
    }
}
