//! Pretzel diagrams: `P(a_1, ..., a_k)` as a PD code built by walking the
//! standard diagram of `k` vertical twist bands closed off cyclically.

use super::pd::PdCode;
use super::presentation::Presentation;
use crate::{Error, Result};

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

fn opposite(port: usize) -> usize {
    match port {
        NW => SE,
        SE => NW,
        NE => SW,
        SW => NE,
        _ => unreachable!(),
    }
}

/// PD code of the pretzel diagram; `a_i > 0` gives right-handed half-twists.
pub fn pretzel_pd(params: &[i64]) -> Result<PdCode> {
    if params.len() < 2 {
        return Err(Error::InvalidPretzel("need at least two bands".into()));
    }
    if params.iter().any(|&a| a == 0) {
        return Err(Error::InvalidPretzel("zero twist parameters unsupported".into()));
    }
    let k = params.len();
    // global crossing ids: band i has |a_i| crossings stacked top to bottom
    let mut band_start = vec![0usize; k];
    let mut total = 0usize;
    for (i, &a) in params.iter().enumerate() {
        band_start[i] = total;
        total += a.unsigned_abs() as usize;
    }
    // partner wiring on (crossing, port) slots
    let slot = |c: usize, p: usize| 4 * c + p;
    let mut partner = vec![usize::MAX; 4 * total];
    let mut link = |s1: usize, s2: usize, partner: &mut Vec<usize>| {
        partner[s1] = s2;
        partner[s2] = s1;
    };
    for (i, &a) in params.iter().enumerate() {
        let n = a.unsigned_abs() as usize;
        let s = band_start[i];
        for j in 0..n.saturating_sub(1) {
            link(slot(s + j, SW), slot(s + j + 1, NW), &mut partner);
            link(slot(s + j, SE), slot(s + j + 1, NE), &mut partner);
        }
        let i_next = (i + 1) % k;
        let s_next = band_start[i_next];
        let n_next = params[i_next].unsigned_abs() as usize;
        // top: NE of band i joins NW of band i+1; bottom: SE joins SW
        link(slot(s, NE), slot(s_next, NW), &mut partner);
        link(
            slot(s + n - 1, SE),
            slot(s_next + n_next - 1, SW),
            &mut partner,
        );
    }
    debug_assert!(partner.iter().all(|&p| p != usize::MAX));

    // walk the knot, numbering edges along the orientation
    let mut edge_at = vec![0u32; 4 * total]; // edge label present at each slot
    let mut incoming = vec![false; 4 * total];
    let start = slot(band_start[0], NW);
    let mut cur = start; // we are about to ENTER this slot
    let mut edge = 1u32;
    let mut passages = 0usize;
    loop {
        edge_at[cur] = edge;
        incoming[cur] = true;
        let c = cur / 4;
        let out = slot(c, opposite(cur % 4));
        passages += 1;
        edge = (edge % (2 * total as u32)) + 1;
        edge_at[out] = edge;
        incoming[out] = false;
        cur = partner[out];
        if cur == start {
            break;
        }
        if passages > 2 * total {
            break;
        }
    }
    if passages != 2 * total {
        return Err(Error::InvalidPretzel(format!(
            "parameters {params:?} give a link, not a knot"
        )));
    }

    // emit PD quadruples: counterclockwise from the under-in port;
    // planar counterclockwise port order is NW, SW, SE, NE
    let ccw = [NW, SW, SE, NE];
    let mut crossings = vec![];
    for (i, &a) in params.iter().enumerate() {
        let n = a.unsigned_abs() as usize;
        for j in 0..n {
            let c = band_start[i] + j;
            // positive parameter: over strand on the NW-SE diagonal
            let over_diag = if a > 0 { [NW, SE] } else { [NE, SW] };
            let under_diag = if a > 0 { [NE, SW] } else { [NW, SE] };
            let under_in = *under_diag
                .iter()
                .find(|&&p| incoming[slot(c, p)])
                .expect("one under port is incoming");
            let _ = over_diag;
            let pos = ccw.iter().position(|&p| p == under_in).unwrap();
            let quad: Vec<u32> = (0..4)
                .map(|t| edge_at[slot(c, ccw[(pos + t) % 4])])
                .collect();
            crossings.push([quad[0], quad[1], quad[2], quad[3]]);
        }
    }
    PdCode::new(crossings)
}

/// Wirtinger presentation of the pretzel diagram.
pub fn pretzel_presentation(params: &[i64]) -> Result<Presentation> {
    pretzel_pd(params)?.wirtinger()
}
