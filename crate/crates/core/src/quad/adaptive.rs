//! Adaptive Gauss-Kronrod (7-15) quadrature for complex-valued integrands,
//! driven by a worst-panel worklist seeded from an arbitrary breakpoint mesh.

use crate::error::{Error, Result};
use crate::types::ComplexScalar;
use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Quadrature output: value, combined error estimate, integrand evaluations.
#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: ComplexScalar,
    pub err_estimate: f64,
    pub evaluations: u64,
}

// QUADPACK dqk15 nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One GK15 application on [a, b]: Kronrod value and |K - G| estimate.
/// Returns the worst aux (secondary error channel) seen at the nodes.
fn gk15<F>(f: &F, a: f64, b: f64) -> (Complex64, f64, f64)
where
    F: Fn(f64) -> (Complex64, f64) + ?Sized + Sync,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut kron = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut aux = 0.0_f64;
    for i in 0..8 {
        if i == 7 {
            let (v, e) = f(mid);
            kron += WGK[7] * v;
            gauss += WG[3] * v;
            aux = aux.max(e);
        } else {
            let (vp, ep) = f(mid + half * XGK[i]);
            let (vm, em) = f(mid - half * XGK[i]);
            let s = vp + vm;
            kron += WGK[i] * s;
            aux = aux.max(ep).max(em);
            if i % 2 == 1 {
                gauss += WG[i / 2] * s;
            }
        }
    }
    kron *= half;
    gauss *= half;
    let mut err = (kron - gauss).norm();
    if !kron.is_finite() || !err.is_finite() {
        err = f64::INFINITY;
    }
    (kron, err, aux)
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    seq: u64,
}

struct Entry {
    err: f64,
    idx: usize,
    seq: u64,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}
impl Eq for Entry {}
impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // max-heap on err, ties by older panel first (deterministic)
        match self.err.partial_cmp(&other.err) {
            Some(Ordering::Equal) | None => other.seq.cmp(&self.seq),
            Some(ord) => ord,
        }
    }
}

pub(crate) struct MeshOutcome {
    pub value: Complex64,
    pub err: f64,
    pub evaluations: u64,
    pub aux: f64,
    pub converged: bool,
}

/// Integrate over the mesh panels, refining the worst panel until the summed
/// error satisfies `max(rel_tol * |value|, abs_floor)` or the budget is hit.
/// The integrand returns (value, aux); aux is max-tracked (inner-error channel).
pub(crate) fn integrate_mesh<F>(
    f: &F,
    mesh: &[f64],
    rel_tol: f64,
    abs_floor: f64,
    max_panels: usize,
) -> MeshOutcome
where
    F: Fn(f64) -> (Complex64, f64) + ?Sized + Sync,
{
    debug_assert!(mesh.len() >= 2);
    let mut panels: Vec<Panel> = Vec::with_capacity(mesh.len() + 64);
    let mut heap = BinaryHeap::new();
    let mut evals = 0u64;
    let mut aux = 0.0f64;
    let mut seq = 0u64;
    let min_width = (mesh[mesh.len() - 1] - mesh[0]).abs() * 2.0_f64.powi(-50);
    let windows: Vec<(f64, f64)> =
        mesh.windows(2).filter(|w| w[1] > w[0]).map(|w| (w[0], w[1])).collect();
    let seeded = crate::par::map_collect(windows, |(a, b)| (a, b, gk15(f, a, b)));
    for (a, b, (v, e, x)) in seeded {
        evals += 15;
        aux = aux.max(x);
        panels.push(Panel { a, b, value: v, err: e, seq });
        heap.push(Entry { err: e, idx: panels.len() - 1, seq });
        seq += 1;
    }
    // running totals; a final resummation sheds the incremental drift
    let mut total: Complex64 = panels.iter().map(|p| p.value).sum();
    let mut total_err: f64 = panels.iter().map(|p| p.err).sum();
    let finish = |panels: &[Panel], evals: u64, aux: f64, converged: bool| {
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        MeshOutcome { value, err, evaluations: evals, aux, converged }
    };
    loop {
        let target = (rel_tol * total.norm()).max(abs_floor);
        if total_err <= target {
            return finish(&panels, evals, aux, true);
        }
        let worst = loop {
            match heap.pop() {
                Some(e) => {
                    // stale entries are skipped
                    if panels[e.idx].err == e.err && panels[e.idx].seq == e.seq {
                        break Some(e.idx);
                    }
                }
                None => break None,
            }
        };
        let Some(idx) = worst else {
            return finish(&panels, evals, aux, false);
        };
        if panels.len() >= max_panels || (panels[idx].b - panels[idx].a) < min_width {
            return finish(&panels, evals, aux, false);
        }
        let (a, b) = (panels[idx].a, panels[idx].b);
        let m = 0.5 * (a + b);
        let (v1, e1, x1) = gk15(f, a, m);
        let (v2, e2, x2) = gk15(f, m, b);
        evals += 30;
        aux = aux.max(x1).max(x2);
        total += v1 + v2 - panels[idx].value;
        total_err += e1 + e2 - panels[idx].err;
        panels[idx] = Panel { a, b: m, value: v1, err: e1, seq };
        heap.push(Entry { err: e1, idx, seq });
        seq += 1;
        panels.push(Panel { a: m, b, value: v2, err: e2, seq });
        heap.push(Entry { err: e2, idx: panels.len() - 1, seq });
        seq += 1;
    }
}

/// Plain adaptive quadrature of a continuous integrand on [a, b].
pub fn adaptive_quad<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexScalar + Sync,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("invalid interval [{a}, {b}]")));
    }
    let wrapped = |x: f64| (f(x), 0.0);
    let out = integrate_mesh(&wrapped, &[a, b], tol, 1e-14, 4096);
    if !out.converged {
        return Err(Error::SubdivisionLimit { err: out.err, tol });
    }
    Ok(QuadResult { value: out.value, err_estimate: out.err, evaluations: out.evaluations })
}
