//! Bound-quiver presentations of string algebras.
//!
//! A presentation consists of a finite quiver `(Q0, Q1, s, t)` together with
//! a set `ρ` of *blocking relations*: composable paths whose product is
//! declared zero. The algebra is a **string algebra** when every vertex has
//! at most two incoming and two outgoing arrows and, for every arrow `b`,
//! at most one arrow `a` with `ab ∉ ρ` and at most one arrow `c` with
//! `bc ∉ ρ`. Paths — like all walks in this crate — are read right to left,
//! but serialized leftmost arrow first.
//!
//! The auxiliary *sign maps* `σ, τ : Q1 → {−1,+1}` orient the two possible
//! continuations at each vertex. They must satisfy
//!
//! 1. `σ(α) = −σ(β)` for distinct arrows with `s(α) = s(β)`,
//! 2. `τ(α) = −τ(β)` for distinct arrows with `t(α) = t(β)`,
//! 3. `σ(α) = −τ(β)` whenever `s(α) = t(β)` and `αβ ∉ ρ`.
//!
//! All constraints are anti-equalities, so valid assignments are exactly the
//! proper 2-colorings of a constraint graph; [`infer_sign_maps`] finds one by
//! propagation with a deterministic seed per connected component, or verifies
//! a user-supplied assignment.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

/// An arrow of the quiver, with source and target given as vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    /// The arrow's name as written in the input document.
    pub name: String,
    /// Index of the source vertex.
    pub source: usize,
    /// Index of the target vertex.
    pub target: usize,
}

/// A parsed bound-quiver presentation `(Q0, Q1, s, t, ρ)`.
///
/// Vertices and arrows are referred to by index in the declaration order of
/// the input document; relations store arrow indices, leftmost arrow first.
#[derive(Debug, Clone)]
pub struct QuiverPresentation {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Vec<usize>>,
    r: usize,
    vertex_index: BTreeMap<String, usize>,
    arrow_index: BTreeMap<String, usize>,
}

impl QuiverPresentation {
    /// Vertex names in declaration order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Arrows in declaration order.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Relations as sequences of arrow indices (leftmost arrow first).
    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    /// Length of the longest relation; `0` when `ρ` is empty.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Looks up a vertex by name.
    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    /// Looks up an arrow by name.
    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    /// Name of vertex `v`.
    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// Name of arrow `a`.
    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }

    /// Whether the written path `[left, right]` (read right to left) is a
    /// member of `ρ`.
    pub fn is_relation_pair(&self, left: usize, right: usize) -> bool {
        self.relations.iter().any(|rel| rel.len() == 2 && rel[0] == left && rel[1] == right)
    }

    /// Arrow indices sorted by arrow name; the order used wherever a
    /// deterministic "lexicographically first arrow" is needed.
    fn arrows_by_name(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.arrows.len()).collect();
        ids.sort_by(|&x, &y| self.arrows[x].name.cmp(&self.arrows[y].name));
        ids
    }
}

/// Sign maps `σ, τ : Q1 → {−1,+1}`, indexed by arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMaps {
    sigma: Vec<i8>,
    tau: Vec<i8>,
}

impl SignMaps {
    /// Builds sign maps from explicit per-arrow vectors (entries `±1`).
    pub fn from_vecs(sigma: Vec<i8>, tau: Vec<i8>) -> Self {
        debug_assert!(sigma.iter().chain(&tau).all(|&s| s == 1 || s == -1));
        SignMaps { sigma, tau }
    }

    /// σ of arrow `a`.
    pub fn sigma(&self, a: usize) -> i8 {
        self.sigma[a]
    }

    /// τ of arrow `a`.
    pub fn tau(&self, a: usize) -> i8 {
        self.tau[a]
    }

    /// The globally negated assignment; valid whenever `self` is.
    pub fn negated(&self) -> SignMaps {
        SignMaps {
            sigma: self.sigma.iter().map(|s| -s).collect(),
            tau: self.tau.iter().map(|s| -s).collect(),
        }
    }

    /// JSON value `{"sigma": {...}, "tau": {...}}` keyed by arrow name.
    pub fn to_json(&self, p: &QuiverPresentation) -> serde_json::Value {
        let mut sigma = BTreeMap::new();
        let mut tau = BTreeMap::new();
        for (a, arrow) in p.arrows().iter().enumerate() {
            sigma.insert(arrow.name.clone(), self.sigma[a]);
            tau.insert(arrow.name.clone(), self.tau[a]);
        }
        serde_json::json!({ "sigma": sigma, "tau": tau })
    }
}

/// A validated presentation bundled with fixed sign maps.
///
/// Every downstream construction (strings, hammocks, exceptional bands)
/// operates on this type, so holding one is proof that the string-algebra
/// conditions hold and that `σ/τ` satisfy their three conditions.
#[derive(Debug, Clone)]
pub struct StringAlgebra {
    presentation: QuiverPresentation,
    signs: SignMaps,
}

impl StringAlgebra {
    /// Validates `p` and infers sign maps.
    pub fn new(p: QuiverPresentation) -> Result<Self> {
        let signs = infer_sign_maps(&p, None)?;
        Ok(StringAlgebra { presentation: p, signs })
    }

    /// Validates `p` and verifies the provided sign maps.
    pub fn with_signs(p: QuiverPresentation, signs: SignMaps) -> Result<Self> {
        let signs = infer_sign_maps(&p, Some(signs))?;
        Ok(StringAlgebra { presentation: p, signs })
    }

    /// Parses a JSON document, validates it, and fixes sign maps (verifying
    /// them when the document provides `sigma`/`tau`, inferring otherwise).
    pub fn from_json(text: &str) -> Result<Self> {
        let (p, provided) = parse_presentation(text)?;
        match provided {
            Some(signs) => StringAlgebra::with_signs(p, signs),
            None => StringAlgebra::new(p),
        }
    }

    /// The underlying presentation.
    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    /// The fixed sign maps.
    pub fn signs(&self) -> &SignMaps {
        &self.signs
    }
}

/// A single violated string-algebra condition, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    /// Stable machine-readable code (e.g. `"relation-not-a-path"`).
    pub code: &'static str,
    /// Human-readable description naming the witnesses.
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.code, self.message)
    }
}

fn valid_arrow_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn valid_vertex_name(name: &str) -> bool {
    valid_arrow_name(name) || (!name.is_empty() && name.chars().all(|c| c.is_ascii_digit()))
}

#[derive(Deserialize)]
struct ArrowDoc {
    name: String,
    source: String,
    target: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    vertices: Vec<String>,
    arrows: Vec<ArrowDoc>,
    #[serde(default)]
    relations: Vec<Vec<String>>,
    #[serde(default)]
    sigma: Option<BTreeMap<String, i8>>,
    #[serde(default)]
    tau: Option<BTreeMap<String, i8>>,
}

/// Parses a presentation document.
///
/// The document is a single JSON object:
///
/// ```json
/// {
///   "vertices": ["v"],
///   "arrows": [{"name": "a", "source": "v", "target": "v"}],
///   "relations": [["a", "a"]],
///   "sigma": {"a": -1},
///   "tau": {"a": 1}
/// }
/// ```
///
/// `relations` lists arrow names left to right in writing order (so a
/// relation is traversed from its last listed arrow to its first), and
/// `sigma`/`tau` are optional; when present they must both be present and
/// assign every arrow. Returns the presentation together with the provided
/// sign maps, if any.
///
/// Structural problems (malformed JSON, duplicate or invalid names, unknown
/// references, empty relations) are errors; the *string-algebra* conditions
/// are deliberately not checked here — see [`validate_string_algebra`].
pub fn parse_presentation(text: &str) -> Result<(QuiverPresentation, Option<SignMaps>)> {
    let doc: PresentationDoc = serde_json::from_str(text).map_err(|e| Error::from_json(&e))?;

    let mut vertex_index = BTreeMap::new();
    for (i, name) in doc.vertices.iter().enumerate() {
        if !valid_vertex_name(name) {
            return Err(Error::BadIdentifier { kind: "vertex", name: name.clone() });
        }
        if vertex_index.insert(name.clone(), i).is_some() {
            return Err(Error::Duplicate { kind: "vertex", name: name.clone() });
        }
    }

    let mut arrows = Vec::with_capacity(doc.arrows.len());
    let mut arrow_index = BTreeMap::new();
    for (i, a) in doc.arrows.iter().enumerate() {
        if !valid_arrow_name(&a.name) {
            return Err(Error::BadIdentifier { kind: "arrow", name: a.name.clone() });
        }
        if arrow_index.insert(a.name.clone(), i).is_some() {
            return Err(Error::Duplicate { kind: "arrow", name: a.name.clone() });
        }
        let source = *vertex_index.get(&a.source).ok_or_else(|| Error::UnknownReference {
            kind: "vertex",
            name: a.source.clone(),
            context: format!("as source of arrow `{}`", a.name),
        })?;
        let target = *vertex_index.get(&a.target).ok_or_else(|| Error::UnknownReference {
            kind: "vertex",
            name: a.target.clone(),
            context: format!("as target of arrow `{}`", a.name),
        })?;
        arrows.push(Arrow { name: a.name.clone(), source, target });
    }

    let mut relations = Vec::with_capacity(doc.relations.len());
    for (i, rel) in doc.relations.iter().enumerate() {
        if rel.is_empty() {
            return Err(Error::Invariant {
                detail: format!("relation #{i} is empty; relations must be nonempty paths"),
            });
        }
        let mut ids = Vec::with_capacity(rel.len());
        for name in rel {
            let id = *arrow_index.get(name).ok_or_else(|| Error::UnknownReference {
                kind: "arrow",
                name: name.clone(),
                context: format!("in relation #{i}"),
            })?;
            ids.push(id);
        }
        relations.push(ids);
    }
    let r = relations.iter().map(Vec::len).max().unwrap_or(0);

    let presentation = QuiverPresentation {
        vertices: doc.vertices,
        arrows,
        relations,
        r,
        vertex_index,
        arrow_index,
    };

    let provided = match (doc.sigma, doc.tau) {
        (None, None) => None,
        (Some(sigma), Some(tau)) => Some(signs_from_maps(&presentation, &sigma, &tau)?),
        (Some(_), None) => {
            return Err(Error::IncompleteSignMaps { detail: "`sigma` given without `tau`".into() });
        }
        (None, Some(_)) => {
            return Err(Error::IncompleteSignMaps { detail: "`tau` given without `sigma`".into() });
        }
    };

    Ok((presentation, provided))
}

fn signs_from_maps(
    p: &QuiverPresentation,
    sigma: &BTreeMap<String, i8>,
    tau: &BTreeMap<String, i8>,
) -> Result<SignMaps> {
    for (label, map) in [("sigma", sigma), ("tau", tau)] {
        for (name, value) in map {
            if p.arrow_id(name).is_none() {
                return Err(Error::UnknownReference {
                    kind: "arrow",
                    name: name.clone(),
                    context: format!("in `{label}`"),
                });
            }
            if *value != 1 && *value != -1 {
                return Err(Error::IncompleteSignMaps {
                    detail: format!("`{label}` value for `{name}` must be -1 or 1, got {value}"),
                });
            }
        }
        let missing: Vec<&str> =
            p.arrows().iter().map(|a| a.name.as_str()).filter(|n| !map.contains_key(*n)).collect();
        if !missing.is_empty() {
            return Err(Error::IncompleteSignMaps {
                detail: format!("`{label}` is missing arrows: {}", missing.join(", ")),
            });
        }
    }
    let sigma_vec = p.arrows().iter().map(|a| sigma[&a.name]).collect();
    let tau_vec = p.arrows().iter().map(|a| tau[&a.name]).collect();
    Ok(SignMaps::from_vecs(sigma_vec, tau_vec))
}

/// Checks the string-algebra conditions, returning one entry per violation
/// (an empty report means the presentation is a string algebra).
///
/// Checked conditions:
///
/// * every relation is a composable path (`s(αᵢ) = t(αᵢ₊₁)` for consecutive
///   entries in writing order);
/// * every vertex has at most two outgoing and at most two incoming arrows;
/// * for every arrow `b`, at most one arrow `a` with `s(a) = t(b)` and
///   `ab ∉ ρ`, and at most one arrow `c` with `s(b) = t(c)` and `bc ∉ ρ`.
pub fn validate_string_algebra(p: &QuiverPresentation) -> Vec<Violation> {
    let mut out = Vec::new();

    for (i, rel) in p.relations().iter().enumerate() {
        for pair in rel.windows(2) {
            let (left, right) = (pair[0], pair[1]);
            if p.arrows()[left].source != p.arrows()[right].target {
                out.push(Violation {
                    code: "relation-not-a-path",
                    message: format!(
                        "relation #{i} ({}) is not composable: s({}) ≠ t({})",
                        rel.iter().map(|&a| p.arrow_name(a)).collect::<Vec<_>>().join(" "),
                        p.arrow_name(left),
                        p.arrow_name(right),
                    ),
                });
                break;
            }
        }
    }

    for (v, name) in p.vertices().iter().enumerate() {
        let outgoing: Vec<&str> =
            p.arrows().iter().filter(|a| a.source == v).map(|a| a.name.as_str()).collect();
        if outgoing.len() > 2 {
            out.push(Violation {
                code: "too-many-outgoing",
                message: format!(
                    "vertex `{name}` has {} outgoing arrows ({}); at most two are allowed",
                    outgoing.len(),
                    outgoing.join(", ")
                ),
            });
        }
        let incoming: Vec<&str> =
            p.arrows().iter().filter(|a| a.target == v).map(|a| a.name.as_str()).collect();
        if incoming.len() > 2 {
            out.push(Violation {
                code: "too-many-incoming",
                message: format!(
                    "vertex `{name}` has {} incoming arrows ({}); at most two are allowed",
                    incoming.len(),
                    incoming.join(", ")
                ),
            });
        }
    }

    // Unique unblocked continuation in each direction.
    for (b, arrow_b) in p.arrows().iter().enumerate() {
        let pre: Vec<&str> = p
            .arrows()
            .iter()
            .enumerate()
            .filter(|(a, arrow_a)| arrow_a.source == arrow_b.target && !p.is_relation_pair(*a, b))
            .map(|(_, arrow_a)| arrow_a.name.as_str())
            .collect();
        if pre.len() > 1 {
            out.push(Violation {
                code: "ambiguous-left-continuation",
                message: format!(
                    "arrows {} can all follow `{}` (composition not blocked by ρ); at most one may",
                    pre.join(", "),
                    arrow_b.name
                ),
            });
        }
        let post: Vec<&str> = p
            .arrows()
            .iter()
            .enumerate()
            .filter(|(c, arrow_c)| arrow_b.source == arrow_c.target && !p.is_relation_pair(b, *c))
            .map(|(_, arrow_c)| arrow_c.name.as_str())
            .collect();
        if post.len() > 1 {
            out.push(Violation {
                code: "ambiguous-right-continuation",
                message: format!(
                    "`{}` can follow all of {} (composition not blocked by ρ); at most one may",
                    arrow_b.name,
                    post.join(", ")
                ),
            });
        }
    }

    out
}

/// Renders a violation report as one line per entry.
pub fn violation_report(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\n")
}

/// One ±1 variable of the sign-constraint graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    Sigma(usize),
    Tau(usize),
}

impl Var {
    fn index(self, n: usize) -> usize {
        match self {
            Var::Sigma(a) => a,
            Var::Tau(a) => n + a,
        }
    }

    fn from_index(i: usize, n: usize) -> Var {
        if i < n { Var::Sigma(i) } else { Var::Tau(i - n) }
    }

    fn describe(self, p: &QuiverPresentation) -> String {
        match self {
            Var::Sigma(a) => format!("sigma({})", p.arrow_name(a)),
            Var::Tau(a) => format!("tau({})", p.arrow_name(a)),
        }
    }
}

/// One anti-equality constraint between two sign variables.
struct Constraint {
    a: Var,
    b: Var,
    condition: u8,
}

fn sign_constraints(p: &QuiverPresentation) -> Vec<Constraint> {
    let mut cs = Vec::new();
    let by_name = p.arrows_by_name();

    // (1) distinct arrows with a common source carry opposite σ.
    for (i, &x) in by_name.iter().enumerate() {
        for &y in &by_name[i + 1..] {
            if p.arrows()[x].source == p.arrows()[y].source {
                cs.push(Constraint { a: Var::Sigma(x), b: Var::Sigma(y), condition: 1 });
            }
        }
    }
    // (2) distinct arrows with a common target carry opposite τ.
    for (i, &x) in by_name.iter().enumerate() {
        for &y in &by_name[i + 1..] {
            if p.arrows()[x].target == p.arrows()[y].target {
                cs.push(Constraint { a: Var::Tau(x), b: Var::Tau(y), condition: 2 });
            }
        }
    }
    // (3) σ(α) = −τ(β) for unblocked compositions αβ.
    for &alpha in &by_name {
        for &beta in &by_name {
            if p.arrows()[alpha].source == p.arrows()[beta].target
                && !p.is_relation_pair(alpha, beta)
            {
                cs.push(Constraint { a: Var::Sigma(alpha), b: Var::Tau(beta), condition: 3 });
            }
        }
    }
    cs
}

/// Infers or verifies sign maps for a valid presentation.
///
/// With `provided` sign maps, all three conditions are checked and the maps
/// are returned unchanged; the first violated condition is reported with its
/// witness pair. Without, a satisfying assignment is found by constraint
/// propagation. The search is deterministic: in each connected component of
/// the constraint graph, the σ-variable of the lexicographically first arrow
/// carrying one is seeded with `−1` (components containing only τ-variables
/// seed the τ-variable of their first arrow with `+1`, matching the signs
/// `σ = −1, τ = +1` of the zero-length string at a positive anchor). An odd
/// constraint cycle makes the system unsatisfiable and is reported verbatim.
pub fn infer_sign_maps(p: &QuiverPresentation, provided: Option<SignMaps>) -> Result<SignMaps> {
    let violations = validate_string_algebra(p);
    if !violations.is_empty() {
        return Err(Error::InvalidPresentation { report: violation_report(&violations) });
    }
    infer_sign_maps_unchecked(p, provided)
}

/// The inference/verification core, without the string-algebra validation
/// gate. Valid presentations always admit sign maps (their constraint graphs
/// are bipartite), so the odd-cycle branch is reachable only from here.
fn infer_sign_maps_unchecked(
    p: &QuiverPresentation,
    provided: Option<SignMaps>,
) -> Result<SignMaps> {
    let constraints = sign_constraints(p);

    if let Some(signs) = provided {
        let n = p.arrows().len();
        if signs.sigma.len() != n || signs.tau.len() != n {
            return Err(Error::IncompleteSignMaps {
                detail: format!(
                    "expected values for {n} arrows, got {} sigma / {} tau",
                    signs.sigma.len(),
                    signs.tau.len()
                ),
            });
        }
        let value = |v: Var| match v {
            Var::Sigma(a) => signs.sigma(a),
            Var::Tau(a) => signs.tau(a),
        };
        for c in &constraints {
            if value(c.a) != -value(c.b) {
                return Err(Error::SignCondition {
                    condition: c.condition,
                    detail: format!(
                        "{} = {} and {} = {} must be opposite",
                        c.a.describe(p),
                        value(c.a),
                        c.b.describe(p),
                        value(c.b)
                    ),
                });
            }
        }
        return Ok(signs);
    }

    let n = p.arrows().len();
    let var_count = 2 * n;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); var_count];
    for (ci, c) in constraints.iter().enumerate() {
        let (ia, ib) = (c.a.index(n), c.b.index(n));
        adj[ia].push((ib, ci));
        adj[ib].push((ia, ci));
    }

    let mut value: Vec<i8> = vec![0; var_count];
    let mut component: Vec<Option<usize>> = vec![None; var_count];
    let by_name = p.arrows_by_name();

    // Discover components first so each can pick its seed before coloring.
    let mut comp_count = 0;
    for start in 0..var_count {
        if component[start].is_some() {
            continue;
        }
        let comp = comp_count;
        comp_count += 1;
        let mut queue = vec![start];
        component[start] = Some(comp);
        while let Some(u) = queue.pop() {
            for &(w, _) in &adj[u] {
                if component[w].is_none() {
                    component[w] = Some(comp);
                    queue.push(w);
                }
            }
        }
    }

    for comp in 0..comp_count {
        let (seed_var, seed_value) = {
            let first_sigma =
                by_name.iter().copied().find(|&a| component[Var::Sigma(a).index(n)] == Some(comp));
            match first_sigma {
                Some(a) => (Var::Sigma(a), -1),
                None => {
                    let a = by_name
                        .iter()
                        .copied()
                        .find(|&a| component[Var::Tau(a).index(n)] == Some(comp))
                        .expect("every component contains at least one variable");
                    (Var::Tau(a), 1)
                }
            }
        };

        // 2-coloring by breadth-first propagation; parents kept so an odd
        // cycle can be reported as an explicit constraint path.
        let seed = seed_var.index(n);
        value[seed] = seed_value;
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; var_count];
        let mut queue = std::collections::VecDeque::from([seed]);
        while let Some(u) = queue.pop_front() {
            for &(w, ci) in &adj[u] {
                if value[w] == 0 {
                    value[w] = -value[u];
                    parent[w] = Some((u, ci));
                    queue.push_back(w);
                } else if value[w] != -value[u] {
                    let cycle = describe_cycle(p, n, &constraints, &parent, u, w, ci);
                    return Err(Error::UnsatisfiableSigns { cycle });
                }
            }
        }
    }

    let sigma = (0..n).map(|a| value[Var::Sigma(a).index(n)]).collect();
    let tau = (0..n).map(|a| value[Var::Tau(a).index(n)]).collect();
    Ok(SignMaps::from_vecs(sigma, tau))
}

/// Renders the closed walk `u → … → root → … → w` plus the edge `u—w` that
/// exposed the parity conflict.
fn describe_cycle(
    p: &QuiverPresentation,
    n: usize,
    constraints: &[Constraint],
    parent: &[Option<(usize, usize)>],
    u: usize,
    w: usize,
    conflict_edge: usize,
) -> String {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while let Some((px, _)) = parent[x] {
            path.push(px);
            x = px;
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Trim the common tail above the lowest common ancestor.
    let mut iu = pu.len();
    let mut iw = pw.len();
    while iu > 0 && iw > 0 && pu[iu - 1] == pw[iw - 1] {
        iu -= 1;
        iw -= 1;
    }
    let mut cycle: Vec<usize> = pu[..=iu.min(pu.len() - 1)].to_vec();
    let mut back: Vec<usize> = pw[..=iw.min(pw.len() - 1)].to_vec();
    back.reverse();
    cycle.extend(back);
    let c = &constraints[conflict_edge];
    let names: Vec<String> = cycle.iter().map(|&x| Var::from_index(x, n).describe(p)).collect();
    format!(
        "{} (closed by condition ({}) between {} and {})",
        names.join(" ~ "),
        c.condition,
        c.a.describe(p),
        c.b.describe(p)
    )
}
