"""Certificates for IE-vectors and abstract tubes.

Every check returns a :class:`Report` whose ``violations`` list is
machine-readable, so the CLI can dump it as JSON.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .core import (
    IEVector,
    InputError,
    SimplicialComplex,
    VennDiagram,
    containment_matrix,
    members,
)
from .tube import Selector

MAX_RANDOM_WEIGHT = 10**6


@dataclass
class Report:
    check: str
    passed: bool
    violations: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "status": "PASS" if self.passed else "FAIL",
            "violations": self.violations,
            "warnings": self.warnings,
        }


def _int_dot(coeffs: list[int], mat: np.ndarray) -> list[int]:
    """Exact ``coeffs @ mat`` for a 0/1 or small-int matrix, falling back to Python ints."""
    if not coeffs:
        return [0] * mat.shape[1]
    bound = max(abs(c) for c in coeffs) * len(coeffs) * max(1, int(np.abs(mat).max(initial=0)))
    if bound < 1 << 62:
        return [int(v) for v in np.array(coeffs, dtype=np.int64) @ mat.astype(np.int64)]
    return [int(v) for v in np.array(coeffs, dtype=object) @ mat.astype(object)]


def region_sums(venn: VennDiagram, x: IEVector) -> list[int]:
    """``s(tau) = sum of x_sigma over support sets sigma contained in tau``, per region."""
    if x.n != venn.n:
        raise InputError(f"vector has n={x.n} but the Venn diagram has n={venn.n}")
    sets = list(x.coeffs)
    cont = containment_matrix(sets, venn.regions, venn.n)
    return _int_dot([x.coeffs[s] for s in sets], cont)


def check_ie_vector(venn: VennDiagram, x: IEVector) -> Report:
    """Exact test of ``A x = 1``: every region must see coefficients summing to one."""
    sums = region_sums(venn, x)
    report = Report("ie_vector", True)
    for tau, s in zip(venn.regions, sums):
        if s != 1:
            report.violations.append({"region": members(tau), "sum": s})
    report.passed = not report.violations
    sets = list(x.coeffs)
    if sets:
        orphan = ~containment_matrix(sets, venn.regions, venn.n).any(axis=1)
        for k in np.flatnonzero(orphan):
            report.warnings.append(
                f"term {members(sets[k])} lies in no region (empty intersection)"
            )
    return report


def _measure_matrix(m: int, trials: int, seed: int) -> np.ndarray:
    """All-ones column followed by ``trials`` random weight columns, shape ``(m, trials+1)``."""
    rng = random.Random(seed)
    cols = [[1] * m]
    for _ in range(trials):
        cols.append([rng.randint(0, MAX_RANDOM_WEIGHT) for _ in range(m)])
    return np.array(cols, dtype=np.int64).T


def measure_oracle_check(venn: VennDiagram, x: IEVector, trials: int = 100, seed: int = 0) -> Report:
    """Compare both sides of the formula on concrete measures.

    Always includes the indicator measure of each region and the all-ones
    measure; then ``trials`` random measures with weights in ``[0, 10^6]``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if x.n != venn.n:
        raise InputError(f"vector has n={x.n} but the Venn diagram has n={venn.n}")
    report = Report("measure_oracle", True)
    sets = list(x.coeffs)
    coeffs = [x.coeffs[s] for s in sets]
    cont = containment_matrix(sets, venn.regions, venn.n)

    # indicator of region j: the formula picks up exactly the terms inside it
    for j, value in enumerate(_int_dot(coeffs, cont)):
        if value != 1:
            report.violations.append(
                {"measure": f"indicator:{j}", "region": members(venn.regions[j]), "formula": value, "union": 1}
            )

    weights = _measure_matrix(venn.m, trials, seed)
    inter = cont.astype(np.int64) @ weights if sets else np.zeros((0, weights.shape[1]), dtype=np.int64)
    formula = _int_dot(coeffs, inter)
    union = [int(v) for v in weights.sum(axis=0, dtype=object)]
    for t, (f, u) in enumerate(zip(formula, union)):
        if f != u:
            name = "ones" if t == 0 else f"random:{t - 1}"
            report.violations.append(
                {"measure": name, "weights": [int(w) for w in weights[:, t]], "formula": f, "union": u}
            )
    report.passed = not report.violations
    return report


def check_abstract_tube(venn: VennDiagram, k: SimplicialComplex, sel: Selector | None = None) -> Report:
    """Audit ``(F, K)`` region by region.

    Requires ``K`` hereditary, every induced subcomplex ``K[tau]`` nonempty
    with Euler characteristic 1, and, when a selector is given, ``K[tau]`` a
    cone with apex ``sel.select(tau)``.  Euler characteristic 1 is necessary
    for contractibility; a cone is sufficient.
    """
    report = Report("abstract_tube", True)
    missing = k.missing_facets()
    if missing:
        report.passed = False
        report.violations = [
            {"kind": "not_hereditary", "face": members(f), "missing": members(s)} for f, s in missing
        ]
        return report

    faces = sorted(k.faces)
    cont = containment_matrix(faces, venn.regions, venn.n)
    signs = [1 if f.bit_count() % 2 else -1 for f in faces]
    euler = _int_dot(signs, cont) if faces else [0] * venn.m
    for j, tau in enumerate(venn.regions):
        if not faces or not cont[:, j].any():
            report.violations.append({"kind": "empty", "region": members(tau)})
        elif euler[j] != 1:
            report.violations.append({"kind": "euler", "region": members(tau), "euler": euler[j]})

    if sel is not None:
        if sel.n != venn.n:
            raise InputError("selector and Venn diagram disagree on n")
        by_apex: dict[int, list[int]] = defaultdict(list)
        for j, tau in enumerate(venn.regions):
            by_apex[sel.select(tau)].append(j)
        for a, js in by_apex.items():
            abit = 1 << (a - 1)
            if abit not in k.faces:
                failing = js
            else:
                sub = cont[:, js]
                rows = np.flatnonzero(sub.any(axis=1))
                bad = [r for r in rows if (faces[r] | abit) not in k.faces]
                failing = [js[c] for c in np.flatnonzero(sub[bad].any(axis=0))] if bad else []
            for j in failing:
                report.violations.append({"kind": "cone", "region": members(venn.regions[j]), "apex": a})
    report.passed = not report.violations
    return report


def bonferroni_check(venn: VennDiagram, ie: IEVector, trials: int = 100, seed: int = 0) -> Report:
    """Alternating bounds of the truncated formula.

    Keeping terms of size ``<= r`` must over-estimate the union for odd
    ``r`` and under-estimate it for even ``r``.  Measures: every region
    indicator, all-ones, then ``trials`` random ones.  Stops at the first
    violation and reports it with its witness.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if ie.n != venn.n:
        raise InputError(f"vector has n={ie.n} but the Venn diagram has n={venn.n}")
    report = Report("bonferroni", True)
    sets = list(ie.coeffs)
    if not sets:
        return report
    top = max(s.bit_count() for s in sets)
    cont = containment_matrix(sets, venn.regions, venn.n)
    sizes = np.array([s.bit_count() for s in sets])
    coeffs = [ie.coeffs[s] for s in sets]
    # partial[r-1][j]: truncated formula evaluated on the indicator of region j
    partial = [_int_dot(coeffs, cont & (sizes <= r)[:, None]) for r in range(1, top + 1)]

    def ok(r: int, value: int, union: int) -> bool:
        return value >= union if r % 2 else value <= union

    for r in range(1, top + 1):
        for j, value in enumerate(partial[r - 1]):
            if not ok(r, value, 1):
                report.passed = False
                report.violations.append(
                    {"r": r, "measure": f"indicator:{j}", "region": members(venn.regions[j]),
                     "formula": value, "union": 1}
                )
                return report

    weights = _measure_matrix(venn.m, trials, seed)
    union = [int(v) for v in weights.sum(axis=0, dtype=object)]
    for r in range(1, top + 1):
        values = _int_dot(partial[r - 1], weights)
        for t, (value, u) in enumerate(zip(values, union)):
            if not ok(r, value, u):
                report.passed = False
                report.violations.append(
                    {"r": r, "measure": "ones" if t == 0 else f"random:{t - 1}",
                     "weights": [int(w) for w in weights[:, t]], "formula": value, "union": u}
                )
                return report
    return report
