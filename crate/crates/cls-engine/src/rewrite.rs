use std::collections::{BTreeSet, HashMap};

use term_core::Term;

use crate::rules::{CLSDefinition, CLSError};

/// Budgets for breadth-first graph exploration. `max_nodes` bounds the
/// number of distinct terms materialised, `max_steps` the number of
/// one-step rewrites examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplorationLimits {
    pub max_nodes: usize,
    pub max_steps: usize,
}

impl Default for ExplorationLimits {
    fn default() -> Self {
        ExplorationLimits {
            max_nodes: 1_000_000,
            max_steps: 10_000_000,
        }
    }
}

/// Outcome of a bounded reachability search. A failed search reports
/// whether the frontier was fully explored (`NotReached`) or the budget ran
/// out first (`Truncated`), which is only a "not found so far".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reachability {
    Reached,
    NotReached,
    Truncated,
}

/// The one-step rewrite graph explored breadth-first from a start term.
///
/// Node 0 is the start term; nodes are deduplicated by structural
/// equality. A term that rewrites to itself (such as `MM` under the
/// Mockingbird rule) has its loop recorded in `self_loops` always, and as
/// an explicit `(i, i)` arc only when the graph was built with
/// `keep_loops`; Hasse-diagram processing wants loops gone while figure
/// reproduction wants them drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteGraph {
    nodes: Vec<Term>,
    arcs: Vec<(usize, usize)>,
    self_loops: Vec<bool>,
    truncated: bool,
}

impl CLSDefinition {
    /// Contracts the whole term if it is a redex, i.e. exactly `order`
    /// applications stacked on a constant of that order.
    fn contract_root(&self, term: &Term) -> Option<Term> {
        let mut args = Vec::new();
        let mut head = term;
        while let Term::App(left, right) = head {
            args.push(right.as_ref());
            head = left;
        }
        let Term::Con(symbol) = head else {
            return None;
        };
        let rule = self.rule(symbol).ok()?;
        if rule.order() as usize != args.len() {
            return None;
        }
        args.reverse();
        let args: Vec<Term> = args.into_iter().cloned().collect();
        let contracted = rule
            .rhs()
            .compose(&args)
            .expect("rule right-hand sides never exceed their order");
        Some(contracted)
    }

    /// All terms reachable in exactly one rewrite step, closing the rules
    /// under contexts. The result contains `t` itself exactly when some
    /// redex of `t` contracts to itself (for the Mockingbird rule: when
    /// `MM` occurs as a subterm). Constants without a rule are inert.
    pub fn successors(&self, term: &Term) -> BTreeSet<Term> {
        let mut out = BTreeSet::new();
        if let Some(contracted) = self.contract_root(term) {
            out.insert(contracted);
        }
        if let Term::App(left, right) = term {
            for stepped in self.successors(left) {
                out.insert(Term::app(stepped, right.as_ref().clone()));
            }
            for stepped in self.successors(right) {
                out.insert(Term::app(left.as_ref().clone(), stepped));
            }
        }
        out
    }

    /// Explores the rewrite graph breadth-first from `start`, recording
    /// every one-step arc between distinct terms and, when `keep_loops` is
    /// set, explicit `(i, i)` arcs for self-rewriting terms. Budget
    /// exhaustion sets the `truncated` flag instead of failing.
    pub fn rewrite_graph(
        &self,
        start: &Term,
        limits: ExplorationLimits,
        keep_loops: bool,
    ) -> RewriteGraph {
        let mut nodes = vec![start.clone()];
        let mut index: HashMap<Term, usize> = HashMap::from([(start.clone(), 0)]);
        let mut arcs = Vec::new();
        let mut self_loops = vec![false];
        let mut truncated = false;
        let mut steps = 0usize;
        let mut cursor = 0;
        'explore: while cursor < nodes.len() {
            let current = nodes[cursor].clone();
            for next in self.successors(&current) {
                if steps == limits.max_steps {
                    truncated = true;
                    break 'explore;
                }
                steps += 1;
                if next == current {
                    self_loops[cursor] = true;
                    if keep_loops {
                        arcs.push((cursor, cursor));
                    }
                    continue;
                }
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        if nodes.len() == limits.max_nodes {
                            truncated = true;
                            continue;
                        }
                        let j = nodes.len();
                        nodes.push(next.clone());
                        self_loops.push(false);
                        index.insert(next, j);
                        j
                    }
                };
                arcs.push((cursor, j));
            }
            cursor += 1;
        }
        arcs.sort_unstable();
        arcs.dedup();
        RewriteGraph {
            nodes,
            arcs,
            self_loops,
            truncated,
        }
    }

    /// Bounded search for `to` among the terms reachable from `from` under
    /// the reflexive-transitive closure of rewriting. Stops as soon as the
    /// target is found.
    pub fn reachable(&self, from: &Term, to: &Term, limits: ExplorationLimits) -> Reachability {
        if from == to {
            return Reachability::Reached;
        }
        let mut seen: BTreeSet<Term> = BTreeSet::from([from.clone()]);
        let mut frontier = vec![from.clone()];
        let mut steps = 0usize;
        while !frontier.is_empty() {
            let mut next_frontier = Vec::new();
            for term in frontier {
                for next in self.successors(&term) {
                    if steps == limits.max_steps {
                        return Reachability::Truncated;
                    }
                    steps += 1;
                    if next == *to {
                        return Reachability::Reached;
                    }
                    if seen.contains(&next) {
                        continue;
                    }
                    if seen.len() == limits.max_nodes {
                        return Reachability::Truncated;
                    }
                    seen.insert(next.clone());
                    next_frontier.push(next);
                }
            }
            frontier = next_frontier;
        }
        Reachability::NotReached
    }
}

impl RewriteGraph {
    /// The explored terms; index 0 is the start term.
    pub fn nodes(&self) -> &[Term] {
        &self.nodes
    }

    /// One-step arcs as sorted index pairs.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn start(&self) -> &Term {
        &self.nodes[0]
    }

    /// Whether an exploration budget fired before the graph closed.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Whether node `i` rewrites to itself in one step (recorded even when
    /// the graph was built without explicit loop arcs).
    pub fn has_self_loop(&self, i: usize) -> bool {
        self.self_loops[i]
    }

    /// Nodes with no outgoing rewrite step at all; a self-loop counts as
    /// outgoing, so a maximal self-rewriting term is not a normal form.
    /// On a truncated graph the set is only a candidate list, so the
    /// caller must opt in via `allow_truncated`.
    pub fn normal_forms(&self, allow_truncated: bool) -> Result<BTreeSet<Term>, CLSError> {
        if self.truncated && !allow_truncated {
            return Err(CLSError::TruncatedGraph);
        }
        let mut has_step = self.self_loops.clone();
        for &(source, _) in &self.arcs {
            has_step[source] = true;
        }
        Ok(self
            .nodes
            .iter()
            .zip(has_step)
            .filter(|(_, stepped)| !stepped)
            .map(|(node, _)| node.clone())
            .collect())
    }

    /// Renders the graph in Graphviz DOT, nodes in discovery order.
    pub fn to_dot(&self) -> String {
        let mut dot = String::from("digraph rewrite {\n");
        for node in &self.nodes {
            dot.push_str(&format!("    {};\n", quote(&node.to_string())));
        }
        for &(source, target) in &self.arcs {
            dot.push_str(&format!(
                "    {} -> {};\n",
                quote(&self.nodes[source].to_string()),
                quote(&self.nodes[target].to_string())
            ));
        }
        dot.push_str("}\n");
        dot
    }
}

fn quote(label: &str) -> String {
    let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}
