//! Recognizing blow-ups of `P_2+K_1`, `2P_2+K_1`, `P_4+K_1` and `P_5+K_1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{BaseGraph, Graph};
use crate::search::canon::{canonical_labeling_masks, canonical_masks, LABELER_MAX_N};
use crate::spectral::rank_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlowupKind {
    Base(BaseGraph),
    /// A proper blow-up (twins or isolated vertices present) of some other graph.
    Other,
    /// Not a proper blow-up of anything: twin-free with no isolated vertices.
    None,
}

impl fmt::Display for BlowupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlowupKind::Base(b) => f.write_str(b.name()),
            BlowupKind::Other => f.write_str("other"),
            BlowupKind::None => f.write_str("none"),
        }
    }
}

impl Serialize for BlowupKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowupBase {
    pub base: BlowupKind,
    /// For a recognized base: class sizes in base-vertex order, `K_1` class
    /// last (possibly 0). Otherwise: twin class sizes by smallest member,
    /// then the number of isolated vertices.
    pub class_sizes: Vec<usize>,
    pub rank: usize,
    /// Whether the rank agrees with the recognized base: `P_2+K_1` exactly
    /// for rank 2 (or the edgeless graph), the other three exactly for
    /// bipartite graphs of rank 4.
    pub rank_consistent: bool,
}

impl BlowupBase {
    pub fn is_base(&self) -> bool {
        matches!(self.base, BlowupKind::Base(_))
    }
}

fn body_masks(base: BaseGraph) -> Vec<u64> {
    let g = base.graph();
    let body: Vec<usize> = (0..g.order() - 1).collect();
    g.induced_subgraph(&body).row_masks().expect("bases are tiny")
}

/// Twin classes of `g`, contracted, with isolated vertices removed, then
/// compared against `P_2`, `2P_2`, `P_4` and `P_5`.
pub fn recognize_blowup_base(g: &Graph) -> Result<BlowupBase> {
    let rows = g.row_masks().ok_or(Error::TooLarge {
        n: g.order(),
        cap: LABELER_MAX_N,
    })?;
    let isolated = rows.iter().filter(|&&r| r == 0).count();

    // twins share an open neighborhood; such vertices are never adjacent
    let mut by_nbhd: BTreeMap<u64, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; rows.len()];
    for (v, &r) in rows.iter().enumerate() {
        if r == 0 {
            continue;
        }
        let c = *by_nbhd.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(v);
        class_of[v] = c;
    }
    let residue: Vec<u64> = classes
        .iter()
        .map(|members| {
            let mut m = 0u64;
            let mut r = rows[members[0]];
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                m |= 1 << class_of[u];
            }
            m
        })
        .collect();

    let rank = rank_exact(g);
    let bipartite = g.is_bipartite();
    let mut found = None;
    if residue.is_empty() {
        // an edgeless graph is P_2+K_1 blown up with both path classes empty
        found = Some((BaseGraph::P2K1, vec![0, 0, isolated]));
    } else {
        let canon = canonical_masks(&residue);
        for base in BaseGraph::ALL {
            let body = body_masks(base);
            if body.len() != residue.len() || canonical_masks(&body) != canon {
                continue;
            }
            let lab_residue = canonical_labeling_masks(&residue);
            let lab_body = canonical_labeling_masks(&body);
            let mut sizes: Vec<usize> = (0..body.len())
                .map(|b| classes[lab_residue.order[lab_body.labels[b]]].len())
                .collect();
            sizes.push(isolated);
            found = Some((base, sizes));
            break;
        }
    }

    let (base, class_sizes) = match found {
        Some((b, sizes)) => (BlowupKind::Base(b), sizes),
        None => {
            let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
            sizes.push(isolated);
            let proper = isolated > 0 || classes.iter().any(|c| c.len() > 1);
            (if proper { BlowupKind::Other } else { BlowupKind::None }, sizes)
        }
    };
    let rank_consistent = match base {
        BlowupKind::Base(BaseGraph::P2K1) => rank == 2 || g.size() == 0,
        BlowupKind::Base(_) => rank == 4 && bipartite,
        _ => !(rank == 2 || (rank == 4 && bipartite)),
    };
    Ok(BlowupBase {
        base,
        class_sizes,
        rank,
        rank_consistent,
    })
}
