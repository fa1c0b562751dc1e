//! Exceptional band points of hammocks and the error term `e`.
//!
//! A band `b` anchored at a vertex `v` determines a point `∞b` in the
//! completion of the left hammock: the limit of the strings `b, bb, bbb, …`.
//! Feeding the sign sequence of `∞b` (syllables rightmost first, repeated
//! periodically) into the hammock automaton eventually runs around a cycle —
//! the band point's *periodic part*. The point is **left exceptional** when
//! along that cycle every state whose `0`-successor can still reach a dense
//! (η̄) region was in fact entered by a direct syllable; right
//! exceptionality is the mirrored condition with `1`-successors and inverse
//! syllables. Exceptional points are the band points adjacent to a
//! scattered stretch of the completed hammock, and their total count `e`
//! enters the error term of the algebra's invariants.
//!
//! [`decide_exceptional`] simulates the definition directly for one band
//! point. [`exceptional_report`] enumerates all candidates by graph
//! surgery: take the hammock transition graph `Q′`, delete the arrows `D`
//! that would violate the condition together with all states that cannot
//! reach a cycle (non-ω̄ states), and read the candidate periods off the
//! strongly connected components of the remainder `Q″` — each of which must
//! be a simple cycle. Every candidate is confirmed against
//! [`decide_exceptional`], which stays the source of truth.

use std::collections::BTreeMap;

use serde_json::{Value, json};

use crate::automaton::StateClass;
use crate::error::{Error, Result};
use crate::hammock::{HammockAutomaton, build_hammock_automaton};
use crate::presentation::StringAlgebra;
use crate::strings::{
    StringWord, Syllable, format_word, inverse, is_band, rotations, sigma, sign_sequence, source,
};

/// Which side of the band point is examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Predecessors of `∞b` in the hammock order.
    Left,
    /// Successors of `∞b` in the hammock order.
    Right,
}

/// Orientation of the excluded-arrow set `D` used by
/// [`exceptional_report`]'s graph surgery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DOrientation {
    /// Couple the dense-side condition to the **target** of the deleted
    /// arrow: delete `q₁ —1→ q₂` when `δ(q₂, 0)` is an η̄-state. This is
    /// the orientation that agrees with [`decide_exceptional`] on every
    /// corpus algebra, and the default.
    #[default]
    TargetCoupled,
    /// Couple the condition to the **source**: delete `q₁ —1→ q₂` when
    /// `δ(q₁, 0)` is an η̄-state. Kept for comparison; on the two-loop
    /// algebra it leaves a two-cycle intact and proposes a candidate that
    /// the direct decider refutes (visible in the report's audit).
    SourceCoupled,
}

/// A band point of a hammock: a rotation of a band lying in `H_l(v)`,
/// together with the cycle its powers drive the hammock automaton around.
#[derive(Debug, Clone)]
pub struct BandPoint {
    /// Vertex anchoring the hammock.
    pub vertex: String,
    /// The rotation of the band lying in the hammock at that vertex.
    pub rotation: StringWord,
    /// The rotation rendered as a word.
    pub word: String,
    /// Eventual cycle of `(state label, sign bit)` pairs: the state reached
    /// after reading a syllable, paired with that syllable's sign.
    pub periodic_part: Vec<(String, u8)>,
    /// No predecessor of the point lies in a dense stretch.
    pub left_exceptional: bool,
    /// No successor of the point lies in a dense stretch.
    pub right_exceptional: bool,
}

/// Audit of one vertex/sign/side analysis in [`exceptional_report`].
#[derive(Debug, Clone)]
pub struct SurgeryAudit {
    /// Vertex of the hammock.
    pub vertex: String,
    /// Sign of the hammock anchor.
    pub sign: i8,
    /// Side analyzed.
    pub side: Side,
    /// States in the hammock transition graph `Q′`.
    pub q_prime_states: usize,
    /// Arrows in `Q′`.
    pub q_prime_arrows: usize,
    /// Deleted arrows `D`.
    pub d_arrows: usize,
    /// States surviving in `Q″`.
    pub q_second_states: usize,
    /// Arrows surviving in `Q″`.
    pub q_second_arrows: usize,
    /// Strongly connected components of `Q″`.
    pub scc_count: usize,
    /// Nontrivial (cyclic) components among them.
    pub cycle_count: usize,
    /// Band-point words proposed by the cycles of `Q″`.
    pub candidates: Vec<String>,
    /// Candidates the direct decider refuted (possible only with
    /// [`DOrientation::SourceCoupled`]).
    pub rejected: Vec<String>,
}

/// All exceptional band points of an algebra, with the error term `e`.
#[derive(Debug, Clone)]
pub struct ExceptionalReport {
    /// Every band point proposed by the graph surgery, with both flags
    /// evaluated by the direct decider.
    pub band_points: Vec<BandPoint>,
    /// Number of `(vertex, band point)` pairs flagged on either side.
    pub e: usize,
    /// Per vertex/sign/side surgery audits.
    pub audits: Vec<SurgeryAudit>,
}

/// The eventual automaton cycle of a band point: the hammock automaton of
/// the rotation's anchor, and the cycle of `(state, bit)` pairs (state
/// reached after reading each syllable, rightmost first, repeated).
fn band_run(
    alg: &StringAlgebra,
    vertex: usize,
    band: &StringWord,
) -> Result<(HammockAutomaton, Vec<(usize, u8)>)> {
    if !is_band(alg, band) {
        return Err(Error::InvalidBand {
            detail: format!("`{}` is not a band", format_word(alg, band)),
        });
    }
    if source(alg, band) != vertex {
        return Err(Error::InvalidBand {
            detail: format!(
                "band rotation `{}` does not lie in the hammocks at vertex `{}`",
                format_word(alg, band),
                alg.presentation().vertex_name(vertex)
            ),
        });
    }
    let anchor = StringWord::trivial(vertex, -sigma(alg, band));
    let hammock = build_hammock_automaton(alg, &anchor)?;
    let bits = sign_sequence(band);
    let period = bits.len();
    let start = hammock.dfa.start.expect("hammock automata have a start state");

    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut trace: Vec<(usize, u8)> = Vec::new();
    let mut state = start;
    let mut step = 0usize;
    loop {
        let phase = step % period;
        if let Some(&first) = seen.get(&(state, phase)) {
            return Ok((hammock, trace[first..].to_vec()));
        }
        seen.insert((state, phase), step);
        let bit = bits[phase];
        let next = hammock.dfa.step(state, bit as usize).ok_or_else(|| Error::Invariant {
            detail: format!(
                "power of band `{}` left the hammock automaton",
                format_word(alg, band)
            ),
        })?;
        trace.push((next, bit));
        state = next;
        step += 1;
    }
}

/// Evaluates the side condition on a periodic part: on the left, every
/// state whose `0`-successor is an η̄-state must have been entered by a
/// direct syllable (bit `0`); on the right, dually with `1` and inverse.
fn side_condition(
    hammock: &HammockAutomaton,
    classes: &[StateClass],
    cycle: &[(usize, u8)],
    side: Side,
) -> bool {
    let dense_letter = match side {
        Side::Left => 0usize,
        Side::Right => 1usize,
    };
    cycle.iter().all(|&(state, bit)| match hammock.dfa.step(state, dense_letter) {
        Some(succ) if classes[succ].eta_bar => bit as usize == dense_letter,
        _ => true,
    })
}

/// Decides whether the band point `∞b` of the given rotation (anchored at
/// `vertex`) is exceptional on the given side, by direct simulation of the
/// defining condition.
pub fn decide_exceptional(
    alg: &StringAlgebra,
    vertex: &str,
    band: &StringWord,
    side: Side,
) -> Result<bool> {
    let v = alg.presentation().vertex_id(vertex).ok_or(Error::UnknownReference {
        kind: "vertex",
        name: vertex.to_string(),
        context: "exceptionality decision".into(),
    })?;
    let (hammock, cycle) = band_run(alg, v, band)?;
    let classes = hammock.dfa.classify_states();
    Ok(side_condition(&hammock, &classes, &cycle, side))
}

/// Builds the full [`BandPoint`] record for one rotation: periodic part plus
/// both side flags.
pub fn band_point(alg: &StringAlgebra, vertex: &str, band: &StringWord) -> Result<BandPoint> {
    let v = alg.presentation().vertex_id(vertex).ok_or(Error::UnknownReference {
        kind: "vertex",
        name: vertex.to_string(),
        context: "band point analysis".into(),
    })?;
    let (hammock, cycle) = band_run(alg, v, band)?;
    let classes = hammock.dfa.classify_states();
    Ok(BandPoint {
        vertex: vertex.to_string(),
        rotation: band.clone(),
        word: format_word(alg, band),
        periodic_part: cycle
            .iter()
            .map(|&(q, bit)| (hammock.dfa.states[q].label.clone(), bit))
            .collect(),
        left_exceptional: side_condition(&hammock, &classes, &cycle, Side::Left),
        right_exceptional: side_condition(&hammock, &classes, &cycle, Side::Right),
    })
}

/// One arrow of a hammock transition graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Arrow {
    from: usize,
    letter: usize,
    to: usize,
}

fn hammock_arrows(hammock: &HammockAutomaton) -> Vec<Arrow> {
    let mut arrows = Vec::new();
    for (from, state) in hammock.dfa.states.iter().enumerate() {
        for (&letter, &to) in &state.trans {
            arrows.push(Arrow { from, letter, to });
        }
    }
    arrows
}

/// Whether the graph surgery deletes this arrow for the given side and
/// orientation.
fn in_deleted_set(
    hammock: &HammockAutomaton,
    classes: &[StateClass],
    arrow: &Arrow,
    side: Side,
    orientation: DOrientation,
) -> bool {
    let (deleted_letter, dense_letter) = match side {
        Side::Left => (1usize, 0usize),
        Side::Right => (0usize, 1usize),
    };
    if arrow.letter != deleted_letter {
        return false;
    }
    let coupled_state = match orientation {
        DOrientation::TargetCoupled => arrow.to,
        DOrientation::SourceCoupled => arrow.from,
    };
    matches!(
        hammock.dfa.step(coupled_state, dense_letter),
        Some(succ) if classes[succ].eta_bar
    )
}

/// The simple cycles of `Q″`, each as its arrow sequence in cycle order.
/// Errors if a nontrivial strongly connected component is not a simple
/// cycle.
fn surgery_cycles(
    kept_states: &[bool],
    kept_arrows: &[Arrow],
) -> Result<(usize, usize, Vec<Vec<Arrow>>)> {
    let mut graph = petgraph::graph::DiGraph::<usize, usize>::new();
    let mut node_of: BTreeMap<usize, petgraph::graph::NodeIndex> = BTreeMap::new();
    for (q, &kept) in kept_states.iter().enumerate() {
        if kept {
            node_of.insert(q, graph.add_node(q));
        }
    }
    for arrow in kept_arrows {
        graph.add_edge(node_of[&arrow.from], node_of[&arrow.to], arrow.letter);
    }
    let components = petgraph::algo::kosaraju_scc(&graph);
    let scc_count = components.len();
    let mut cycles = Vec::new();
    for members in components {
        let member_set: std::collections::BTreeSet<usize> =
            members.iter().map(|&ix| graph[ix]).collect();
        let internal: Vec<&Arrow> = kept_arrows
            .iter()
            .filter(|a| member_set.contains(&a.from) && member_set.contains(&a.to))
            .collect();
        if internal.is_empty() {
            continue; // Trivial component.
        }
        // A nontrivial component must be a simple cycle: one internal arrow
        // out of and into each member.
        for &q in &member_set {
            let out_degree = internal.iter().filter(|a| a.from == q).count();
            let in_degree = internal.iter().filter(|a| a.to == q).count();
            if out_degree != 1 || in_degree != 1 {
                return Err(Error::Invariant {
                    detail: format!(
                        "surgered hammock graph has a non-cycle component \
                         (state {q} has out-degree {out_degree}, in-degree {in_degree})"
                    ),
                });
            }
        }
        let start = *member_set.iter().next().unwrap();
        let mut cycle = Vec::new();
        let mut at = start;
        loop {
            let arrow = **internal.iter().find(|a| a.from == at).unwrap();
            cycle.push(arrow);
            at = arrow.to;
            if at == start {
                break;
            }
        }
        if cycle.len() != member_set.len() {
            return Err(Error::Invariant { detail: "cycle does not cover its component".into() });
        }
        cycles.push(cycle);
    }
    let cycle_count = cycles.len();
    Ok((scc_count, cycle_count, cycles))
}

/// The written period of a cycle: each arrow left-extends by the leftmost
/// syllable of its target's window, read rightmost-first around the cycle,
/// so the written word is the reverse.
fn cycle_period(hammock: &HammockAutomaton, cycle: &[Arrow]) -> Result<Vec<Syllable>> {
    let mut reading = Vec::new();
    for arrow in cycle {
        let word = &hammock.words[arrow.to];
        let syllable = word.syllables().first().copied().ok_or_else(|| Error::Invariant {
            detail: "cycle passes through the trivial state".into(),
        })?;
        let expected_bit = usize::from(syllable.inverse);
        if expected_bit != arrow.letter {
            return Err(Error::Invariant {
                detail: format!(
                    "cycle syllable direction (bit {expected_bit}) disagrees with its \
                     transition letter {}",
                    arrow.letter
                ),
            });
        }
        reading.push(syllable);
    }
    reading.reverse();
    Ok(reading)
}

/// The primitive root of a periodic syllable sequence.
fn primitive_root(period: &[Syllable]) -> Vec<Syllable> {
    let n = period.len();
    for p in 1..=n {
        if n % p == 0 && (0..n).all(|i| period[i] == period[i % p]) {
            return period[..p].to_vec();
        }
    }
    period.to_vec()
}

/// Enumerates all exceptional band points of the algebra and counts the
/// error term `e`. Candidates come from the `Q′`/`D`/`Q″` graph surgery on
/// every hammock automaton; each is confirmed by [`decide_exceptional`].
/// With the default [`DOrientation::TargetCoupled`] a refuted candidate is
/// an internal error; with [`DOrientation::SourceCoupled`] refuted
/// candidates are reported in the audit.
pub fn exceptional_report(
    alg: &StringAlgebra,
    orientation: DOrientation,
) -> Result<ExceptionalReport> {
    let p = alg.presentation();
    let mut points: BTreeMap<(usize, String), BandPoint> = BTreeMap::new();
    let mut audits = Vec::new();

    for v in 0..p.vertices().len() {
        for i in [1i8, -1] {
            let anchor = StringWord::trivial(v, i);
            let hammock = build_hammock_automaton(alg, &anchor)?;
            let classes = hammock.dfa.classify_states();
            let arrows = hammock_arrows(&hammock);
            for side in [Side::Left, Side::Right] {
                let deleted: Vec<bool> = arrows
                    .iter()
                    .map(|a| in_deleted_set(&hammock, &classes, a, side, orientation))
                    .collect();
                let kept_states: Vec<bool> = classes.iter().map(|c| c.omega_bar).collect();
                let kept_arrows: Vec<Arrow> = arrows
                    .iter()
                    .zip(&deleted)
                    .filter(|(a, del)| !**del && kept_states[a.from] && kept_states[a.to])
                    .map(|(a, _)| *a)
                    .collect();
                let (scc_count, cycle_count, cycles) = surgery_cycles(&kept_states, &kept_arrows)?;

                let mut audit = SurgeryAudit {
                    vertex: p.vertex_name(v).to_string(),
                    sign: i,
                    side,
                    q_prime_states: hammock.dfa.states.len(),
                    q_prime_arrows: arrows.len(),
                    d_arrows: deleted.iter().filter(|&&d| d).count(),
                    q_second_states: kept_states.iter().filter(|&&k| k).count(),
                    q_second_arrows: kept_arrows.len(),
                    scc_count,
                    cycle_count,
                    candidates: Vec::new(),
                    rejected: Vec::new(),
                };

                for cycle in cycles {
                    let root = primitive_root(&cycle_period(&hammock, &cycle)?);
                    let candidate = StringWord::from_syllables(root);
                    for rotation in rotations(&candidate) {
                        if source(alg, &rotation) != v || sigma(alg, &rotation) != -i {
                            continue;
                        }
                        let point = band_point(alg, p.vertex_name(v), &rotation)?;
                        let confirmed = match side {
                            Side::Left => point.left_exceptional,
                            Side::Right => point.right_exceptional,
                        };
                        audit.candidates.push(point.word.clone());
                        if !confirmed {
                            if orientation == DOrientation::TargetCoupled {
                                return Err(Error::Invariant {
                                    detail: format!(
                                        "surgery produced candidate `{}` at vertex `{}` that \
                                         the direct decider refutes",
                                        point.word, point.vertex
                                    ),
                                });
                            }
                            audit.rejected.push(point.word.clone());
                        }
                        // A rotation and its inverse describe the same
                        // two-sided band point, seen from the two hammock
                        // signs; key them together.
                        let mirror = format_word(alg, &inverse(&rotation));
                        let key = (v, point.word.clone().min(mirror));
                        points.entry(key).or_insert(point);
                    }
                }
                audits.push(audit);
            }
        }
    }

    let band_points: Vec<BandPoint> = points.into_values().collect();
    let e = band_points.iter().filter(|b| b.left_exceptional || b.right_exceptional).count();
    Ok(ExceptionalReport { band_points, e, audits })
}

impl ExceptionalReport {
    /// Serializes the report (band points, flags, periodic parts, audits,
    /// `e`, and the counting bound when relations are present).
    pub fn to_json(&self, alg: &StringAlgebra) -> Value {
        let p = alg.presentation();
        let bound = (!p.relations().is_empty())
            .then(|| p.vertices().len() as u64 * (2u64.pow(p.r() as u32 + 3) - 2));
        json!({
            "schema_version": 1,
            "e": self.e,
            "bound": bound,
            "band_points": self.band_points.iter().map(|b| json!({
                "vertex": b.vertex,
                "word": b.word,
                "left_exceptional": b.left_exceptional,
                "right_exceptional": b.right_exceptional,
                "periodic_part": b.periodic_part.iter()
                    .map(|(label, bit)| json!([label, bit]))
                    .collect::<Vec<Value>>(),
            })).collect::<Vec<Value>>(),
            "audits": self.audits.iter().map(|a| json!({
                "vertex": a.vertex,
                "sign": a.sign,
                "side": match a.side { Side::Left => "left", Side::Right => "right" },
                "q_prime_states": a.q_prime_states,
                "q_prime_arrows": a.q_prime_arrows,
                "d_arrows": a.d_arrows,
                "q_second_states": a.q_second_states,
                "q_second_arrows": a.q_second_arrows,
                "scc_count": a.scc_count,
                "cycle_count": a.cycle_count,
                "candidates": a.candidates,
                "rejected": a.rejected,
            })).collect::<Vec<Value>>(),
        })
    }
}

/// Renders one vertex/sign/side surgery as DOT: the full hammock graph with
/// surviving `Q″` arrows solid and deleted or disconnected arrows dashed.
pub fn surgery_dot(
    alg: &StringAlgebra,
    vertex: &str,
    sign: i8,
    side: Side,
    orientation: DOrientation,
) -> Result<String> {
    let v = alg.presentation().vertex_id(vertex).ok_or(Error::UnknownReference {
        kind: "vertex",
        name: vertex.to_string(),
        context: "surgery rendering".into(),
    })?;
    let anchor = StringWord::trivial(v, sign);
    let hammock = build_hammock_automaton(alg, &anchor)?;
    let classes = hammock.dfa.classify_states();
    let arrows = hammock_arrows(&hammock);
    let mut out = String::from("digraph surgery {\n  rankdir=LR;\n");
    for (q, state) in hammock.dfa.states.iter().enumerate() {
        let style = if classes[q].omega_bar { "solid" } else { "dashed" };
        out.push_str(&format!(
            "  q{q} [label=\"{}\", shape=ellipse, style={style}];\n",
            state.label
        ));
    }
    for arrow in &arrows {
        let deleted = in_deleted_set(&hammock, &classes, arrow, side, orientation)
            || !classes[arrow.from].omega_bar
            || !classes[arrow.to].omega_bar;
        let style = if deleted { "dashed" } else { "solid" };
        out.push_str(&format!(
            "  q{} -> q{} [label=\"{}\", style={style}];\n",
            arrow.from, arrow.to, arrow.letter
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::tests::{gp23, kronecker, loop_algebra, w};

    #[test]
    fn two_loop_band_points_are_not_exceptional() {
        let alg = gp23();
        for word in ["ab-", "b-a"] {
            let band = w(&alg, word);
            for side in [Side::Left, Side::Right] {
                assert!(
                    !decide_exceptional(&alg, "v", &band, side).unwrap(),
                    "{word} should not be exceptional"
                );
            }
        }
    }

    #[test]
    fn kronecker_band_points_are_exceptional_both_sides() {
        let alg = kronecker();
        let cases = [("1", "b-a"), ("2", "ab-")];
        for (vertex, word) in cases {
            let band = w(&alg, word);
            for side in [Side::Left, Side::Right] {
                assert!(
                    decide_exceptional(&alg, vertex, &band, side).unwrap(),
                    "{word} at {vertex} should be exceptional"
                );
            }
        }
    }

    #[test]
    fn misanchored_or_invalid_bands_are_rejected() {
        let alg = kronecker();
        let band = w(&alg, "b-a");
        // b-a is anchored at vertex 1, not 2.
        assert!(matches!(
            decide_exceptional(&alg, "2", &band, Side::Left),
            Err(Error::InvalidBand { .. })
        ));
        // A direct-only word is not a band.
        let not_band = w(&alg, "a");
        assert!(matches!(
            decide_exceptional(&alg, "1", &not_band, Side::Left),
            Err(Error::InvalidBand { .. })
        ));
        // The one-loop algebra has no bands at all.
        let loop_alg = loop_algebra();
        let a = w(&loop_alg, "a");
        assert!(matches!(
            decide_exceptional(&loop_alg, "v", &a, Side::Left),
            Err(Error::InvalidBand { .. })
        ));
    }

    #[test]
    fn two_loop_report_is_empty() {
        let alg = gp23();
        let report = exceptional_report(&alg, DOrientation::TargetCoupled).unwrap();
        assert_eq!(report.e, 0);
        assert!(report.band_points.is_empty());
        // The target-coupled surgery already removes every candidate cycle.
        for audit in &report.audits {
            assert_eq!(audit.cycle_count, 0, "{:?}", audit);
        }
    }

    #[test]
    fn source_coupled_surgery_proposes_a_refuted_candidate() {
        let alg = gp23();
        let report = exceptional_report(&alg, DOrientation::SourceCoupled).unwrap();
        assert_eq!(report.e, 0);
        // The two-cycle {ab-, b-a} survives the source-coupled deletion and
        // proposes band points that the direct decider refutes.
        let rejected: Vec<&String> = report.audits.iter().flat_map(|a| a.rejected.iter()).collect();
        assert!(!rejected.is_empty());
        assert!(rejected.iter().any(|w| w.as_str() == "ab-" || w.as_str() == "b-a"));
        assert!(report.band_points.iter().all(|b| !b.left_exceptional));
    }

    #[test]
    fn kronecker_report_counts_both_band_points() {
        let alg = kronecker();
        let report = exceptional_report(&alg, DOrientation::TargetCoupled).unwrap();
        assert_eq!(report.e, 2);
        let mut summary: Vec<(String, String, bool, bool)> = report
            .band_points
            .iter()
            .map(|b| (b.vertex.clone(), b.word.clone(), b.left_exceptional, b.right_exceptional))
            .collect();
        summary.sort();
        assert_eq!(
            summary,
            vec![("1".into(), "b-a".into(), true, true), ("2".into(), "ab-".into(), true, true),]
        );
        // Periodic parts are genuine cycles with one entry per syllable.
        for point in &report.band_points {
            assert_eq!(point.periodic_part.len() % point.rotation.len(), 0);
        }
    }

    #[test]
    fn loop_algebra_report_is_empty() {
        let alg = loop_algebra();
        let report = exceptional_report(&alg, DOrientation::TargetCoupled).unwrap();
        assert_eq!(report.e, 0);
        assert!(report.band_points.is_empty());
    }

    #[test]
    fn error_term_respects_the_counting_bound() {
        for alg in [gp23(), loop_algebra()] {
            let p = alg.presentation();
            if p.relations().is_empty() {
                continue;
            }
            let report = exceptional_report(&alg, DOrientation::TargetCoupled).unwrap();
            let bound = p.vertices().len() as u64 * (2u64.pow(p.r() as u32 + 3) - 2);
            assert!((report.e as u64) < bound);
        }
    }

    #[test]
    fn report_json_has_the_headline_fields() {
        let alg = kronecker();
        let report = exceptional_report(&alg, DOrientation::TargetCoupled).unwrap();
        let value = report.to_json(&alg);
        assert_eq!(value["schema_version"], 1);
        assert_eq!(value["e"], 2);
        assert!(value["bound"].is_null()); // Kronecker has no relations.
        assert_eq!(value["band_points"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn surgery_dot_styles_deleted_arrows_dashed() {
        let alg = gp23();
        let dot = surgery_dot(&alg, "v", 1, Side::Left, DOrientation::TargetCoupled).unwrap();
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("style=solid"));
        assert!(dot.starts_with("digraph"));
    }
}
