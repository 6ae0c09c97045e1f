//! Simulated annealing over circular orderings, minimising the longest
//! monotonic cycle, plus random sampling for lower-bound evidence.
//!
//! Restart `i` draws from `ChaCha8Rng::seed_from_u64(seed ^ i)`, so reports
//! are reproducible regardless of how many threads run the restarts.

use crate::error::{Error, Result};
use crate::graph_core::Graph;
use crate::orderings::{
    longest_monotonic_cycle, verify_monotonic_cycle, AnchorScore, CircularOrdering, CycleEvaluator,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const RNG_NAME: &str = "ChaCha8Rng";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnealConfig {
    pub seed: u64,
    pub restarts: usize,
    pub steps: u64,
    pub initial_temperature: f64,
    /// Per-step geometric cooling factor.
    pub decay: f64,
    /// Probabilities of adjacent transposition, arbitrary swap and segment
    /// reinsertion.
    pub move_mix: [f64; 3],
}

impl AnnealConfig {
    /// Default schedule: temperature 1 cooling to 1/1000 over the run.
    pub fn new(seed: u64, restarts: usize, steps: u64) -> AnnealConfig {
        AnnealConfig {
            seed,
            restarts,
            steps,
            initial_temperature: 1.0,
            decay: 1e-3f64.powf(1.0 / steps.max(1) as f64),
            move_mix: [0.6, 0.3, 0.1],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.into()));
        if self.restarts == 0 || self.steps == 0 {
            return bad("restarts and steps must be positive");
        }
        if !(self.decay > 0.0 && self.decay < 1.0) {
            return bad("decay must lie in (0, 1)");
        }
        if !(self.initial_temperature > 0.0) || !self.initial_temperature.is_finite() {
            return bad("initial temperature must be positive");
        }
        if self.move_mix.iter().any(|&p| !(0.0..=1.0).contains(&p))
            || (self.move_mix.iter().sum::<f64>() - 1.0).abs() > 1e-9
        {
            return bad("move probabilities must sum to 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub best_value: usize,
    pub best_ordering: CircularOrdering,
    pub witness_cycle: Vec<usize>,
    pub evaluations: u64,
    /// Best value seen by each restart at evenly spaced checkpoints.
    pub trajectories: Vec<Vec<usize>>,
    pub restart_best: Vec<usize>,
    pub rng: &'static str,
}

struct Annealer<'a> {
    g: &'a Graph,
    perm: Vec<usize>,
    ev: CycleEvaluator,
    scores: Vec<AnchorScore>,
    scale: f64,
    evaluations: u64,
}

fn combine(scores: &[AnchorScore]) -> AnchorScore {
    let mut out = AnchorScore::default();
    for s in scores {
        if s.best > out.best {
            out = *s;
        } else if s.best == out.best {
            out.count += s.count;
        }
    }
    out
}

impl Annealer<'_> {
    fn energy(&self) -> (u32, f64) {
        let s = combine(&self.scores);
        (s.best, s.best as f64 + s.count as f64 * self.scale)
    }

    fn full(&mut self) {
        self.ev.load(self.g, &self.perm);
        for a in 0..self.perm.len() {
            self.scores[a] = self.ev.anchor(a);
        }
        self.evaluations += 1;
    }
}

enum Move {
    Adjacent(usize, usize),
    Swap(usize, usize),
    Reinsert(usize, usize),
}

fn apply(perm: &mut [usize], m: &Move) {
    match *m {
        Move::Adjacent(p, q) | Move::Swap(p, q) => perm.swap(p, q),
        Move::Reinsert(from, to) if from < to => perm[from..=to].rotate_left(1),
        Move::Reinsert(from, to) => perm[to..=from].rotate_right(1),
    }
}

fn undo(perm: &mut [usize], m: &Move) {
    match *m {
        Move::Adjacent(p, q) | Move::Swap(p, q) => perm.swap(p, q),
        Move::Reinsert(from, to) if from < to => perm[from..=to].rotate_right(1),
        Move::Reinsert(from, to) => perm[to..=from].rotate_left(1),
    }
}

struct RestartResult {
    best: u32,
    ordering: Vec<usize>,
    trajectory: Vec<usize>,
    evaluations: u64,
}

fn run_restart(g: &Graph, cfg: &AnnealConfig, index: usize) -> RestartResult {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ index as u64);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut st = Annealer {
        g,
        perm,
        ev: CycleEvaluator::new(n),
        scores: vec![AnchorScore::default(); n],
        scale: 1.0 / (2 * g.edge_count() + 1) as f64,
        evaluations: 0,
    };
    st.full();
    let (mut best, mut energy) = st.energy();
    let mut best_perm = st.perm.clone();
    let mut temp = cfg.initial_temperature;
    let checkpoint = (cfg.steps / 100).max(1);
    let mut trajectory = vec![best as usize];
    let [p_adj, p_swap, _] = cfg.move_mix;
    for step in 1..=cfg.steps {
        let roll: f64 = rng.random();
        let mv = if roll < p_adj {
            let p = rng.random_range(0..n);
            Move::Adjacent(p, (p + 1) % n)
        } else if roll < p_adj + p_swap {
            let p = rng.random_range(0..n);
            let q = (p + rng.random_range(1..n)) % n;
            Move::Swap(p, q)
        } else {
            let from = rng.random_range(0..n);
            let to = (from + rng.random_range(1..n)) % n;
            Move::Reinsert(from, to)
        };
        let local = match mv {
            Move::Adjacent(p, q) => !g.adjacent(st.perm[p], st.perm[q]),
            _ => false,
        };
        let saved = st.scores.clone();
        apply(&mut st.perm, &mv);
        if let (true, Move::Adjacent(p, q)) = (local, &mv) {
            // Non-adjacent neighbours in the ordering only affect the
            // anchors sitting on them.
            st.ev.swap_positions(*p, *q);
            st.scores[*p] = st.ev.anchor(*p);
            st.scores[*q] = st.ev.anchor(*q);
            st.evaluations += 1;
        } else {
            st.full();
        }
        let (value, e) = st.energy();
        let accept = e <= energy || rng.random::<f64>() < ((energy - e) / temp).exp();
        if accept {
            energy = e;
            if value < best {
                let check = CycleEvaluator::new(n).evaluate(g, &st.perm);
                assert_eq!(
                    check, value,
                    "incremental score diverged from recomputation"
                );
                best = value;
                best_perm.clone_from(&st.perm);
            }
        } else {
            undo(&mut st.perm, &mv);
            st.scores = saved;
            match mv {
                Move::Adjacent(p, q) if local => st.ev.swap_positions(p, q),
                _ => st.ev.load(g, &st.perm),
            }
        }
        temp *= cfg.decay;
        if step % checkpoint == 0 {
            trajectory.push(best as usize);
        }
    }
    RestartResult {
        best,
        ordering: best_perm,
        trajectory,
        evaluations: st.evaluations,
    }
}

/// Best circular ordering found; its value is an upper bound on the
/// circular altitude.
pub fn anneal_min_max_cycle(g: &Graph, cfg: &AnnealConfig) -> Result<SearchReport> {
    cfg.validate()?;
    if g.n() < 3 {
        return Err(Error::Config("annealing needs at least 3 vertices".into()));
    }
    let runs: Vec<RestartResult> = (0..cfg.restarts)
        .into_par_iter()
        .map(|i| run_restart(g, cfg, i))
        .collect();
    let winner = (0..runs.len())
        .min_by_key(|&i| (runs[i].best, i))
        .expect("at least one restart");
    let best_ordering = CircularOrdering::new(runs[winner].ordering.clone())?;
    let w = longest_monotonic_cycle(g, &best_ordering);
    if w.length != runs[winner].best as usize
        || !verify_monotonic_cycle(g, &best_ordering, &w.vertices)
    {
        return Err(Error::TheoremViolation(
            "annealer result failed re-verification".into(),
        ));
    }
    Ok(SearchReport {
        best_value: w.length,
        best_ordering,
        witness_cycle: w.vertices,
        evaluations: runs.iter().map(|r| r.evaluations).sum(),
        restart_best: runs.iter().map(|r| r.best as usize).collect(),
        trajectories: runs.into_iter().map(|r| r.trajectory).collect(),
        rng: RNG_NAME,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampledEvidence {
    /// Every sample had a monotonic cycle of at least `k` vertices.
    pub holds: bool,
    pub k: usize,
    pub samples: usize,
    pub min_value: usize,
    /// First sampled ordering falling below `k`.
    pub refuting: Option<CircularOrdering>,
}

/// Uniformly random circular orderings, all drawn from one seeded stream.
pub fn sampled_lower_evidence(g: &Graph, k: usize, samples: usize, seed: u64) -> SampledEvidence {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ev = CycleEvaluator::new(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut min_value = usize::MAX;
    let mut refuting = None;
    for _ in 0..samples {
        perm.shuffle(&mut rng);
        let v = ev.evaluate(g, &perm) as usize;
        min_value = min_value.min(v);
        if v < k && refuting.is_none() {
            refuting = Some(CircularOrdering::new(perm.clone()).unwrap());
        }
    }
    SampledEvidence {
        holds: refuting.is_none(),
        k,
        samples,
        min_value,
        refuting,
    }
}
