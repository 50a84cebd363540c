//! Self-checking bench harness: runs solver-versus-oracle grids and the
//! reduction round-trips, reporting per-cell agreement and node counts.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate;
use crate::oracle::{
    oracle_contraction_capped, oracle_osdomatic, oracle_osds, oracle_rbds,
};
use crate::recognition::TargetClass;
use crate::reductions;
use crate::solvers::{
    clique_contraction_with_stats, split_contraction_with_stats,
    threshold_contraction_split_with_stats, SolveStats,
};
use crate::{Error, Result};

/// Instance families the bench command knows how to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFamily {
    /// All labeled graphs on up to 5 vertices, split contraction, k ≤ 2.
    LabeledSplit,
    /// Seeded random split graphs on 12 vertices, threshold contraction, k ≤ 3.
    RandomThreshold,
    /// Reduction round-trips on small bipartite grids.
    ReductionRoundtrip,
}

impl BenchFamily {
    pub fn parse(s: &str) -> Option<BenchFamily> {
        match s {
            "labeled-split" => Some(BenchFamily::LabeledSplit),
            "random-threshold" => Some(BenchFamily::RandomThreshold),
            "reduction-roundtrip" => Some(BenchFamily::ReductionRoundtrip),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BenchFamily::LabeledSplit => "labeled-split",
            BenchFamily::RandomThreshold => "random-threshold",
            BenchFamily::ReductionRoundtrip => "reduction-roundtrip",
        }
    }
}

/// Bench configuration.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: BenchFamily,
    pub seed: u64,
    pub cap: u64,
}

/// One grid cell of results.
#[derive(Debug, Clone)]
pub struct BenchCell {
    pub label: String,
    pub instances: u64,
    pub agree: u64,
    pub disagree: u64,
    pub nodes: u64,
}

/// Full bench report; `cells` are emitted in deterministic grid order.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub cells: Vec<BenchCell>,
    pub elapsed_ms: u128,
}

impl BenchReport {
    pub fn total_disagreements(&self) -> u64 {
        self.cells.iter().map(|c| c.disagree).sum()
    }
}

/// Runs the configured family and collects agreement statistics.
pub fn bench_suite(cfg: &BenchConfig) -> Result<BenchReport> {
    let start = Instant::now();
    let cells = match cfg.family {
        BenchFamily::LabeledSplit => labeled_split(cfg)?,
        BenchFamily::RandomThreshold => random_threshold(cfg)?,
        BenchFamily::ReductionRoundtrip => reduction_roundtrip(cfg)?,
    };
    Ok(BenchReport {
        cells,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn labeled_split(cfg: &BenchConfig) -> Result<Vec<BenchCell>> {
    let mut cells = Vec::new();
    for n in 1..=5u32 {
        for k in 0..=2u32 {
            let mut cell = BenchCell {
                label: format!("labeled-split n={n} k={k}"),
                instances: 0,
                agree: 0,
                disagree: 0,
                nodes: 0,
            };
            for g in enumerate::all_graphs(n) {
                let mut stats = SolveStats::default();
                let fast = split_contraction_with_stats(&g, k, cfg.cap, &mut stats)?;
                let (slow, _) =
                    oracle_contraction_capped(&g, k, TargetClass::Split, cfg.cap)?;
                cell.instances += 1;
                cell.nodes += stats.branch_nodes;
                if fast.is_some() == slow.is_some() {
                    cell.agree += 1;
                } else {
                    cell.disagree += 1;
                }
            }
            cells.push(cell);
        }
    }
    Ok(cells)
}

fn random_threshold(cfg: &BenchConfig) -> Result<Vec<BenchCell>> {
    let mut cells = Vec::new();
    for k in 0..=3u32 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
        let mut cell = BenchCell {
            label: format!("random-threshold n=12 k={k}"),
            instances: 0,
            agree: 0,
            disagree: 0,
            nodes: 0,
        };
        for _ in 0..20 {
            let g = enumerate::random_split_graph(12, &mut rng);
            let mut stats = SolveStats::default();
            let fast = threshold_contraction_split_with_stats(&g, k, &mut stats)?;
            let (slow, _) =
                oracle_contraction_capped(&g, k, TargetClass::Threshold, cfg.cap)?;
            cell.instances += 1;
            cell.nodes += stats.branch_nodes;
            if fast.is_some() == slow.is_some() {
                cell.agree += 1;
            } else {
                cell.disagree += 1;
            }
        }
        cells.push(cell);
    }
    Ok(cells)
}

fn reduction_roundtrip(cfg: &BenchConfig) -> Result<Vec<BenchCell>> {
    let mut cells = Vec::new();

    // Clique → split on all connected 4-vertex graphs.
    let mut cell = BenchCell {
        label: "roundtrip clique-to-split n=4 k<=2".into(),
        instances: 0,
        agree: 0,
        disagree: 0,
        nodes: 0,
    };
    for g in enumerate::all_graphs(4) {
        if g.components().len() > 1 {
            continue;
        }
        for k in 0..=2u32 {
            let art = reductions::split_from_clique(&g, k)?;
            let mut stats = SolveStats::default();
            let src = clique_contraction_with_stats(&g, k, &mut stats).is_some();
            let (tgt, _) =
                oracle_contraction_capped(&art.graph, art.budget, TargetClass::Split, cfg.cap)?;
            record(&mut cell, src, tgt.is_some(), stats.branch_nodes);
        }
    }
    cells.push(cell);

    // RBDS → split on |X|,|Y| ≤ 2 (every x gets a neighbor).
    let mut cell = BenchCell {
        label: "roundtrip rbds-to-split |X|,|Y|<=2".into(),
        instances: 0,
        agree: 0,
        disagree: 0,
        nodes: 0,
    };
    for nx in 1..=2u32 {
        for ny in 1..=2u32 {
            for mask in 0u64..1 << (nx * ny) {
                let base = enumerate::bipartite_from_mask(nx, ny, mask, 0);
                if (0..nx).any(|xi| base.x_neighbors(xi) == 0) {
                    continue;
                }
                for t in 1..=nx {
                    let inst = base.with_budget(t);
                    let art = reductions::split_from_rbds(&inst)?;
                    let src = oracle_rbds(&inst);
                    let (tgt, _) = oracle_contraction_capped(
                        &art.graph,
                        art.budget,
                        TargetClass::Split,
                        cfg.cap,
                    )?;
                    record(&mut cell, src.is_some(), tgt.is_some(), 0);
                }
            }
        }
    }
    cells.push(cell);

    // OSDS → osdomatic on |X|,|Y| ≤ 3.
    let mut cell = BenchCell {
        label: "roundtrip osds-to-osdomatic |X|,|Y|<=3".into(),
        instances: 0,
        agree: 0,
        disagree: 0,
        nodes: 0,
    };
    for nx in 1..=3u32 {
        for ny in 1..=3u32 {
            for mask in 0u64..1 << (nx * ny) {
                let base = enumerate::bipartite_from_mask(nx, ny, mask, 0);
                for t in 1..=nx {
                    let inst = base.with_budget(t);
                    let art = reductions::osdomatic_from_osds(&inst)?;
                    let src = oracle_osds(&inst);
                    let tgt = oracle_osdomatic(&art.instance);
                    record(&mut cell, src.is_some(), tgt.is_some(), 0);
                }
            }
        }
    }
    cells.push(cell);

    // Osdomatic → threshold on |X|,|Y| ≤ 2.
    let mut cell = BenchCell {
        label: "roundtrip osdomatic-to-threshold |X|,|Y|<=2".into(),
        instances: 0,
        agree: 0,
        disagree: 0,
        nodes: 0,
    };
    for nx in 1..=2u32 {
        for ny in 1..=2u32 {
            for mask in 0u64..1 << (nx * ny) {
                let base = enumerate::bipartite_from_mask(nx, ny, mask, 0);
                for t in 1..=nx {
                    let inst = base.with_budget(t);
                    let art = reductions::threshold_from_osdomatic(&inst)?;
                    let src = oracle_osdomatic(&inst);
                    let (tgt, _) = oracle_contraction_capped(
                        &art.graph,
                        art.budget,
                        TargetClass::Threshold,
                        cfg.cap,
                    )?;
                    record(&mut cell, src.is_some(), tgt.is_some(), 0);
                }
            }
        }
    }
    cells.push(cell);

    Ok(cells)
}

fn record(cell: &mut BenchCell, src: bool, tgt: bool, nodes: u64) {
    cell.instances += 1;
    cell.nodes += nodes;
    if src == tgt {
        cell.agree += 1;
    } else {
        cell.disagree += 1;
    }
}

/// Renders the deterministic decision section of a bench report.
pub fn render_cells(report: &BenchReport) -> String {
    let mut out = String::new();
    for c in &report.cells {
        out.push_str(&format!(
            "cell {} instances {} agree {} disagree {} nodes {}\n",
            c.label, c.instances, c.agree, c.disagree, c.nodes
        ));
    }
    out.push_str(&format!(
        "total_disagreements {}\n",
        report.total_disagreements()
    ));
    out
}

impl std::str::FromStr for BenchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<BenchFamily> {
        BenchFamily::parse(s).ok_or_else(|| {
            Error::PreconditionViolated(format!(
                "unknown bench family '{s}' (expected labeled-split, random-threshold, or reduction-roundtrip)"
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_roundtrip_bench_agrees() {
        let cfg = BenchConfig {
            family: BenchFamily::ReductionRoundtrip,
            seed: 0,
            cap: crate::oracle::DEFAULT_ENUMERATION_CAP,
        };
        let report = bench_suite(&cfg).unwrap();
        assert_eq!(report.total_disagreements(), 0);
    }
}
