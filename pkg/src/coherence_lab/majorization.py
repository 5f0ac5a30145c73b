"""Majorization predicate and the monotonicity check for ``c_pdd``.

A pure state with populations ``p`` can be turned into one with populations
``q`` by an incoherent operation iff ``q`` majorizes ``p``. Any valid
coherence measure must then not increase, which is what
:func:`check_monotonicity` and :func:`monotonicity_sweep` test.
"""

from dataclasses import dataclass, field

import numpy as np

from .core import StateVector
from .errors import DimensionMismatch
from .quantifiers import CoherenceValue, _batch_c_pdd, c_pdd

MAJ_TOL = 1e-12


def _sorted_cumsum(p):
    p = np.asarray(p, dtype=float)
    # stable descending sort; ties keep original index order
    order = np.argsort(-p, axis=-1, kind="stable")
    return np.cumsum(np.take_along_axis(p, order, axis=-1), axis=-1)


def majorizes(q, p):
    """True iff ``q`` majorizes ``p`` (every leading partial sum of sorted q dominates p's)."""
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    if q.shape != p.shape or q.ndim != 1:
        raise DimensionMismatch(f"population vectors differ in shape: {q.shape} vs {p.shape}")
    return bool(np.all(_sorted_cumsum(q) >= _sorted_cumsum(p) - MAJ_TOL))


def _majorizes_rows(q, p):
    return np.all(_sorted_cumsum(q) >= _sorted_cumsum(p) - MAJ_TOL, axis=-1)


def is_consistent(transformable, c_source, c_target):
    """Monotonicity condition: a reachable target may not carry more coherence."""
    return np.logical_or(np.logical_not(transformable), c_source >= c_target - MAJ_TOL)


@dataclass(frozen=True)
class MonotonicityVerdict:
    transformable: bool
    c_source: CoherenceValue
    c_target: CoherenceValue
    consistent: bool


def check_monotonicity(psi1, psi2):
    """Verdict for the candidate transformation ``psi1 -> psi2``."""
    if not isinstance(psi1, StateVector):
        psi1 = StateVector(psi1)
    if not isinstance(psi2, StateVector):
        psi2 = StateVector(psi2)
    if psi1.dim != psi2.dim:
        raise DimensionMismatch(f"states have different dimensions: {psi1.dim} vs {psi2.dim}")
    transformable = majorizes(psi2.populations, psi1.populations)
    cs = c_pdd(psi1)
    ct = c_pdd(psi2)
    return MonotonicityVerdict(
        transformable=transformable,
        c_source=cs,
        c_target=ct,
        consistent=bool(is_consistent(transformable, cs.value, ct.value)),
    )


def random_doubly_stochastic(rng, n, n_terms=None):
    """Random convex combination of permutation matrices (Birkhoff)."""
    n_terms = n_terms or n + 1
    w = rng.dirichlet(np.ones(n_terms))
    d = np.zeros((n, n))
    for wk in w:
        d[np.arange(n), rng.permutation(n)] += wk
    return d


def random_majorizing_pair(rng, n):
    """Populations ``(p, q)`` with ``q`` majorizing ``p`` by construction (``p = D q``)."""
    q = rng.dirichlet(np.full(n, rng.choice([0.3, 1.0, 3.0])))
    p = random_doubly_stochastic(rng, n) @ q
    return p / p.sum(), q


@dataclass
class SweepReport:
    n_cases: int = 0
    n_transformable: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples


def monotonicity_sweep(seed, n_cases, dims=range(2, 9)):
    """Check monotonicity on ``n_cases`` random majorization-ordered pairs per dimension.

    Source states get populations ``p`` and target states ``q`` with ``q``
    majorizing ``p``. Phases are irrelevant to ``c_pdd`` and are not drawn.
    Counterexamples are collected in case order as dicts.
    """
    rng = np.random.default_rng(seed)
    report = SweepReport()
    for n in dims:
        if n_cases <= 0:
            continue
        pairs = [random_majorizing_pair(rng, n) for _ in range(n_cases)]
        src = np.array([p for p, _ in pairs])
        tgt = np.array([q for _, q in pairs])
        transformable = _majorizes_rows(tgt, src)
        cs = _batch_c_pdd(src)
        ct = _batch_c_pdd(tgt)
        good = is_consistent(transformable, cs, ct)
        report.n_cases += n_cases
        report.n_transformable += int(np.count_nonzero(transformable))
        for k in np.flatnonzero(~np.asarray(good)):
            report.counterexamples.append(
                {
                    "dim": n,
                    "case": int(k),
                    "source_populations": src[k].tolist(),
                    "target_populations": tgt[k].tolist(),
                    "c_source": float(cs[k]),
                    "c_target": float(ct[k]),
                }
            )
    return report


def closed_form_c_pdd(sorted_pops):
    """Closed forms for N = 2 and N = 3 with populations sorted in decreasing order.

    N = 2: ``1 - |2a - 1|``. N = 3: ``1 - (a1 + (a1 + a2) - 1)``.
    """
    p = np.asarray(sorted_pops, dtype=float)
    if p.size == 2:
        return 1.0 - abs(2.0 * p[0] - 1.0)
    if p.size == 3:
        return 1.0 - (p[0] + (p[0] + p[1]) - 1.0)
    raise DimensionMismatch("closed forms exist for N = 2 and N = 3 only")

