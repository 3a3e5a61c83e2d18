//! Exact search for M-colourings.
//!
//! The search assigns vertices in a fixed order and colours in ascending
//! order. Choosing a colour marks the matched colour at every not yet
//! assigned neighbour as blocked; a neighbour with every colour blocked
//! triggers an immediate backtrack.

use thiserror::Error;

use crate::cover::{Color, Cover, Transversal};
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SolverError {
    /// `required` is the cover count for enumerations and the node count
    /// reached for a single search.
    #[error("budget of {budget} exceeded; the instance needs at least {required}")]
    BudgetExceeded { budget: u64, required: u128 },
    #[error("no k <= {0} makes the graph DP-k-colourable")]
    NotWithinMax(usize),
    #[error("colour count must be at least 1")]
    ZeroColors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Found,
    Exhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub backtracks: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub transversal: Option<Transversal>,
    pub stats: SearchStats,
}

impl SolveResult {
    pub fn is_found(&self) -> bool {
        self.status == SolveStatus::Found
    }
}

/// Cover compiled to list positions. `links[v]` holds, per neighbour, the
/// position map from `v`'s list to the neighbour's list.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    pub(crate) sizes: Vec<usize>,
    pub(crate) links: Vec<Vec<Link>>,
}

#[derive(Debug, Clone)]
pub(crate) struct Link {
    pub(crate) to: Vertex,
    pub(crate) edge: usize,
    /// `map[i]` is the position at `to` matched with position `i`, or `NONE`.
    pub(crate) map: Vec<u32>,
}

pub(crate) const NONE: u32 = u32::MAX;

impl Compiled {
    pub(crate) fn from_cover(c: &Cover) -> Self {
        let g = c.graph();
        let sizes: Vec<usize> = g.vertices().map(|v| c.list(v).len()).collect();
        let position = |v: Vertex, color: Color| {
            c.list(v)
                .iter()
                .position(|&x| x == color)
                .expect("validated") as u32
        };
        let mut links: Vec<Vec<Link>> = vec![Vec::new(); g.vertex_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let mut fwd = vec![NONE; sizes[u]];
            let mut bwd = vec![NONE; sizes[v]];
            for &(a, b) in c.matching(e).pairs() {
                let (i, j) = (position(u, a), position(v, b));
                fwd[i as usize] = j;
                bwd[j as usize] = i;
            }
            links[u].push(Link {
                to: v,
                edge: e,
                map: fwd,
            });
            links[v].push(Link {
                to: u,
                edge: e,
                map: bwd,
            });
        }
        Compiled { sizes, links }
    }
}

/// Reusable backtracking state over a compiled cover.
pub(crate) struct Search<'a> {
    order: &'a [Vertex],
    rank: Vec<usize>,
    /// Per vertex, per position: positions sorted by colour value.
    color_order: &'a [Vec<u32>],
    blocked: Vec<Vec<u32>>,
    choice: Vec<u32>,
    pub(crate) stats: SearchStats,
    limit: u64,
}

pub(crate) enum Outcome {
    Found,
    Exhausted,
    LimitHit,
}

impl<'a> Search<'a> {
    pub(crate) fn new(
        sizes: &[usize],
        order: &'a [Vertex],
        color_order: &'a [Vec<u32>],
        limit: u64,
    ) -> Self {
        let n = sizes.len();
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        Search {
            order,
            rank,
            color_order,
            blocked: sizes.iter().map(|&s| vec![0; s]).collect(),
            choice: vec![NONE; n],
            stats: SearchStats::default(),
            limit,
        }
    }

    /// Runs one search. State is cleared first, so a `Search` can be reused
    /// across covers with the same list sizes.
    pub(crate) fn run(&mut self, cc: &Compiled) -> Outcome {
        for row in &mut self.blocked {
            row.fill(0);
        }
        self.choice.fill(NONE);
        if cc.sizes.contains(&0) {
            return Outcome::Exhausted;
        }
        self.descend(cc, 0)
    }

    pub(crate) fn set_limit(&mut self, limit: u64) {
        self.limit = limit;
    }

    pub(crate) fn positions(&self) -> &[u32] {
        &self.choice
    }

    fn descend(&mut self, cc: &Compiled, depth: usize) -> Outcome {
        if depth == self.order.len() {
            return Outcome::Found;
        }
        let v = self.order[depth];
        for ci in 0..self.color_order[v].len() {
            let i = self.color_order[v][ci];
            if self.blocked[v][i as usize] > 0 {
                continue;
            }
            if self.stats.nodes >= self.limit {
                return Outcome::LimitHit;
            }
            self.stats.nodes += 1;
            self.choice[v] = i;
            let mut wiped = false;
            for link in &cc.links[v] {
                if self.rank[link.to] <= depth {
                    continue;
                }
                let j = link.map[i as usize];
                if j == NONE {
                    continue;
                }
                let row = &mut self.blocked[link.to];
                row[j as usize] += 1;
                if row[j as usize] == 1 && row.iter().all(|&b| b > 0) {
                    wiped = true;
                }
            }
            if !wiped {
                match self.descend(cc, depth + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            for link in &cc.links[v] {
                if self.rank[link.to] <= depth {
                    continue;
                }
                let j = link.map[i as usize];
                if j != NONE {
                    self.blocked[link.to][j as usize] -= 1;
                }
            }
            self.choice[v] = NONE;
            self.stats.backtracks += 1;
        }
        Outcome::Exhausted
    }
}

pub(crate) fn ascending_color_order(c: &Cover) -> Vec<Vec<u32>> {
    c.graph()
        .vertices()
        .map(|v| {
            let list = c.list(v);
            let mut idx: Vec<u32> = (0..list.len() as u32).collect();
            idx.sort_by_key(|&i| list[i as usize]);
            idx
        })
        .collect()
}

fn solve(c: &Cover, limit: u64) -> (Outcome, Option<Transversal>, SearchStats) {
    let cc = Compiled::from_cover(c);
    let order: Vec<Vertex> = c.graph().vertices().collect();
    let colors = ascending_color_order(c);
    let mut search = Search::new(&cc.sizes, &order, &colors, limit);
    let outcome = search.run(&cc);
    let t = matches!(outcome, Outcome::Found).then(|| {
        Transversal(
            search
                .positions()
                .iter()
                .enumerate()
                .map(|(v, &i)| c.list(v)[i as usize])
                .collect(),
        )
    });
    (outcome, t, search.stats)
}

/// Finds the first M-colouring in (ascending vertex, ascending colour) order.
pub fn find_m_coloring(c: &Cover) -> SolveResult {
    find_m_coloring_limited(c, u64::MAX).expect("unbounded search cannot hit its limit")
}

/// As [`find_m_coloring`], giving up after `budget` search nodes.
pub fn find_m_coloring_limited(c: &Cover, budget: u64) -> Result<SolveResult, SolverError> {
    let (outcome, transversal, stats) = solve(c, budget);
    match outcome {
        Outcome::Found => Ok(SolveResult {
            status: SolveStatus::Found,
            transversal,
            stats,
        }),
        Outcome::Exhausted => Ok(SolveResult {
            status: SolveStatus::Exhausted,
            transversal: None,
            stats,
        }),
        Outcome::LimitHit => Err(SolverError::BudgetExceeded {
            budget,
            required: stats.nodes as u128 + 1,
        }),
    }
}

/// Greedy colouring along `order`: each vertex takes its smallest colour not
/// matched to an earlier chosen colour. Succeeds whenever every vertex has
/// fewer earlier neighbours than list entries.
pub fn greedy_m_coloring(c: &Cover, order: &[Vertex]) -> Option<Transversal> {
    let n = c.graph().vertex_count();
    let mut chosen: Vec<Option<Color>> = vec![None; n];
    for &v in order {
        let mut list = c.list(v).to_vec();
        list.sort_unstable();
        let pick = list.into_iter().find(|&a| {
            c.graph().neighbors(v).iter().all(|&w| match chosen[w] {
                Some(b) => !c.is_matched(v, a, w, b),
                None => true,
            })
        })?;
        chosen[v] = Some(pick);
    }
    chosen
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .map(Transversal)
}

pub use crate::cover::verify_transversal;
