"""Executable checks of the duality, counting and c-vector theorems.

Every suite returns a :class:`SuiteReport`.  Failure entries carry the full
inputs of the failing case (parameters plus vertex lists) so a single case
can be replayed in isolation.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import linalg
from .k0 import (
    K0Vector,
    SignClass,
    c_matrix,
    c_matrix_by_inversion,
    c_vector,
    duality_backward,
    duality_forward,
    g_matrix,
    index_of,
    sign_coherence,
    staircase_candidates,
)
from .model import (
    ModelParams,
    enumerate_indecs,
    factors_through,
    hom_dim,
    quotient_hom_dim,
    shift,
)
from .tilting import (
    ClusterTilting,
    containing_vertex,
    enumerate_tiltings,
    exchange_report,
    find_mutations,
    is_maximal,
    validate_tilting,
)

DEFAULT_GRID = ((1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (2, 3), (3, 3))

SKIPPED_NO_EXCHANGE_PAIRS = "SkippedNoExchangePairs"
SKIPPED_EVEN_D = "SkippedEvenD"


@dataclass
class SuiteReport:
    suite: str
    params: Optional[ModelParams]
    cases_run: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    skipped: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case: dict, expected, actual) -> None:
        self.failures.append({"case": case, "expected": expected, "actual": actual})

    def finish(self, started: float) -> "SuiteReport":
        self.elapsed = time.perf_counter() - started
        self.failures.sort(key=lambda f: json.dumps(f["case"], sort_keys=True))
        return self

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params.as_dict() if self.params else None,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "passed": self.passed,
        }
        if self.skipped:
            out["skipped"] = self.skipped
        if self.details:
            out["details"] = self.details
        return out


def _obj(x) -> list:
    return list(x)


def _case(params: ModelParams, **parts) -> dict:
    case = {"n": params.n, "d": params.d}
    for key, value in parts.items():
        if isinstance(value, ClusterTilting):
            case[key] = value.to_json()
        elif isinstance(value, tuple):
            case[key] = _obj(value)
        else:
            case[key] = value
    return case


def _pairs(params: ModelParams, tilting_pairs) -> list:
    tiltings = enumerate_tiltings(params)
    if tilting_pairs == "all":
        return [(t, u) for t in tiltings for u in tiltings]
    if tilting_pairs == "sample":
        first = tiltings[0]
        return [(first, u) for u in tiltings] + [(u, first) for u in tiltings[1:]]
    return list(tilting_pairs)


def suite_duality(params: ModelParams, tilting_pairs="all") -> SuiteReport:
    """Both composites of the duality maps are the identity on generators."""
    started = time.perf_counter()
    report = SuiteReport("duality", params)
    for tt, uu in _pairs(params, tilting_pairs):
        for basis, other, first, second in (
            (tt, uu, duality_forward, duality_backward),
            (uu, tt, duality_backward, duality_forward),
        ):
            for t in basis:
                report.cases_run += 1
                v = K0Vector.unit(basis, t)
                there = first(v, other, params)
                back = second(there, basis, params)
                if back != v:
                    report.fail(
                        _case(params, T=tt, U=uu, generator=t, direction=first.__name__),
                        v.to_json(),
                        back.to_json(),
                    )
    return report.finish(started)


def suite_counts(params: ModelParams) -> SuiteReport:
    """Every cluster tilting object has C(n+d-1, d) summands."""
    started = time.perf_counter()
    report = SuiteReport("counts", params)
    expected = params.tilting_size
    tiltings = enumerate_tiltings(params)
    report.details["tiltings"] = len(tiltings)
    report.details["summands"] = expected
    for tilting in tiltings:
        report.cases_run += 1
        if len(tilting) != expected:
            report.fail(_case(params, T=tilting), expected, len(tilting))
            continue
        validate_tilting(tilting.summands, params)
        if not is_maximal(tilting):
            report.fail(_case(params, T=tilting), "maximal", "extendable")
    return report.finish(started)


def suite_basis(params: ModelParams, tilting_pairs="all") -> SuiteReport:
    """g-matrices are unimodular; c-vectors are the rows of their inverse transpose."""
    started = time.perf_counter()
    report = SuiteReport("basis", params)
    for tt, uu in _pairs(params, tilting_pairs):
        report.cases_run += 1
        g = g_matrix(tt, uu, params)
        det = linalg.determinant(g)
        if det not in (1, -1):
            report.fail(_case(params, T=tt, U=uu, check="det"), "+-1", det)
            continue
        by_formula = c_matrix(tt, uu, params)
        by_inverse = c_matrix_by_inversion(tt, uu, params)
        if by_formula != by_inverse:
            report.fail(_case(params, T=tt, U=uu, check="c-vectors"), by_inverse, by_formula)
    return report.finish(started)


def suite_index(params: ModelParams) -> SuiteReport:
    """All angle-based resolutions agree with each other and with the resolution route."""
    started = time.perf_counter()
    report = SuiteReport("index", params)
    staircase_hits = 0
    for tilting in enumerate_tiltings(params):
        for x in enumerate_indecs(params):
            report.cases_run += 1
            reference = index_of(x, tilting, params, method="resolution")
            if x in tilting:
                if reference != K0Vector.unit(tilting, x):
                    report.fail(_case(params, T=tilting, x=x, check="unit"),
                                {",".join(map(str, x)): 1}, reference.to_json())
                continue
            for angle in staircase_candidates(x, tilting, params):
                staircase_hits += 1
                value = K0Vector(tilting, angle.alternating_sum())
                if value != reference:
                    report.fail(
                        _case(params, T=tilting, x=x, via=angle.first),
                        reference.to_json(),
                        value.to_json(),
                    )
    report.details["staircase_angles"] = staircase_hits
    return report.finish(started)


@lru_cache(maxsize=None)
def _c_values(u, tilting_u: ClusterTilting) -> dict:
    """``c_T(u, U)(t)`` for every indecomposable t; it does not depend on T."""
    params = tilting_u.params
    sign = -1 if params.d % 2 else 1
    return {
        t: sign * index_of(shift(t, params, 1), tilting_u, params)[u]
        for t in enumerate_indecs(params)
    }


@lru_cache(maxsize=None)
def _exchange(tilting_u: ClusterTilting, u):
    return exchange_report(tilting_u, u, tilting_u.params)


def suite_sign_coherence(params: ModelParams) -> SuiteReport:
    """No exchange-pair summand (odd d) has a mixed-sign c-vector.

    For d = 1 every mixed c-vector is a failure.  Mixed cases at non-exchange
    summands are tallied in ``details``.
    """
    started = time.perf_counter()
    report = SuiteReport("sign-coherence", params)
    tiltings = enumerate_tiltings(params)
    tally = {"mixed": 0, "mixed_not_mutable": 0, "mixed_mutable_not_exchange": 0,
             "mixed_exchange": 0}
    for uu in tiltings:
        for u in uu:
            ex = _exchange(uu, u)
            values = _c_values(u, uu)
            for tt in tiltings:
                report.cases_run += 1
                cls = sign_coherence([values[t] for t in tt])
                if cls is not SignClass.MIXED:
                    continue
                tally["mixed"] += 1
                if ex.is_exchange_pair:
                    tally["mixed_exchange"] += 1
                elif ex.is_mutable:
                    tally["mixed_mutable_not_exchange"] += 1
                else:
                    tally["mixed_not_mutable"] += 1
                if params.d == 1 or (params.d % 2 == 1 and ex.is_exchange_pair):
                    report.fail(
                        _case(params, T=tt, U=uu, u=u, exchange_pair=ex.is_exchange_pair),
                        "sign coherent",
                        [values[t] for t in tt],
                    )
    report.details.update(tally)
    return report.finish(started)


def suite_exchange_formulas(params: ModelParams) -> SuiteReport:
    """Quotient-Hom and image-dimension formulas for c-vectors of exchange pairs."""
    started = time.perf_counter()
    report = SuiteReport("exchange", params)
    if params.d % 2 == 0:
        report.skipped = SKIPPED_EVEN_D
        return report.finish(started)
    m = params.m
    objects = enumerate_indecs(params)
    tiltings = enumerate_tiltings(params)
    pairs_found = 0
    for uu in tiltings:
        for u in uu:
            ex = _exchange(uu, u)
            if not ex.is_exchange_pair:
                continue
            pairs_found += 1
            u_star = ex.u_star
            s_u = shift(u, params, 1)
            s_ustar = shift(u_star, params, 1)
            denom = [shift(v, params, 1) for v in uu]
            case = _case(params, U=uu, u=u, u_star=u_star)

            # a single summand of U maps to Sigma^d u*, namely u
            report.cases_run += 1
            hitting = [v for v in uu if hom_dim(v, s_ustar, params)]
            if hitting != [u]:
                report.fail(dict(case, check="simple"), [_obj(u)], [_obj(v) for v in hitting])

            values = _c_values(u, uu)
            q_into = {t: quotient_hom_dim(shift(t, params, 1), s_ustar, denom, params)
                      for t in objects}
            q_out = {t: quotient_hom_dim(s_ustar, shift(t, params, 2), denom, params)
                     for t in objects}
            image_pos = {
                t: int(hom_dim(t, u, params) == 1 and hom_dim(t, s_ustar, params) == 1
                       and factors_through(t, s_ustar, u, params))
                for t in objects
            }
            image_neg = {
                t: int(hom_dim(t, u_star, params) == 1 and hom_dim(t, s_u, params) == 1
                       and factors_through(t, s_u, u_star, params))
                for t in objects
            }
            # the disjunction for every shift power and every pair t, t'
            into_by_shift = []
            out_by_shift = []
            for k in range(m):
                into_by_shift.append({t for t in objects
                                      if quotient_hom_dim(shift(t, params, k), s_ustar, denom, params)})
                out_by_shift.append({t for t in objects
                                     if quotient_hom_dim(s_ustar, shift(t, params, k + 1), denom, params)})

            for tt in tiltings:
                members = set(tt)
                for k in range(m):
                    report.cases_run += 1
                    a = members & into_by_shift[k]
                    b = members & out_by_shift[k]
                    if a and b:
                        report.fail(
                            dict(case, T=tt.to_json(), shift=k, check="disjunction"),
                            "one side zero",
                            {"into": sorted(map(_obj, a)), "out": sorted(map(_obj, b))},
                        )
                cls = sign_coherence([values[t] for t in tt])
                for t in tt:
                    report.cases_run += 1
                    c = values[t]
                    where = dict(case, T=tt.to_json(), t=_obj(t))
                    if q_into[t] and q_out[t]:
                        report.fail(dict(where, check="disjunction"), "one side zero",
                                    [q_into[t], q_out[t]])
                    sign = -1 if params.d % 2 else 1
                    formula = sign * (q_into[t] + sign * q_out[t])
                    if formula != c:
                        report.fail(dict(where, check="quotient-formula"), c, formula)
                    if cls in (SignClass.NON_NEGATIVE, SignClass.ZERO) and image_pos[t] != c:
                        report.fail(dict(where, check="image-formula-i"), c, image_pos[t])
                    if cls in (SignClass.NON_POSITIVE, SignClass.ZERO) and -image_neg[t] != c:
                        report.fail(dict(where, check="image-formula-ii"), c, -image_neg[t])
                    if cls is SignClass.MIXED:
                        report.fail(dict(where, check="sign"), "sign coherent", cls.value)
    report.details["exchange_pairs"] = pairs_found
    if pairs_found == 0:
        report.skipped = SKIPPED_NO_EXCHANGE_PAIRS
    return report.finish(started)


COUNTEREXAMPLE_PARAMS = ModelParams(3, 3)
COUNTEREXAMPLE_U = (3, 5, 8, 10)
COUNTEREXAMPLE_INDEX = {(3, 5, 7, 9): -1, (3, 5, 7, 10): 1, (3, 5, 8, 10): -1, (3, 6, 8, 10): 1}


def reproduce_counterexample() -> SuiteReport:
    """Mixed-sign c-vector at a non-mutable summand for (n, d) = (3, 3)."""
    started = time.perf_counter()
    params = COUNTEREXAMPLE_PARAMS
    report = SuiteReport("counterexample", params)
    tt = containing_vertex(params, 1)
    uu = containing_vertex(params, 3)
    u = COUNTEREXAMPLE_U
    cv = c_vector(u, uu, tt, params)
    checks = [
        ("c(1,4,6,9)", -1, cv[(1, 4, 6, 9)]),
        ("c(1,5,7,9)", 1, cv[(1, 5, 7, 9)]),
        ("classification", SignClass.MIXED.value, sign_coherence(cv).value),
        ("mutations", [], [list(x) for x in find_mutations(uu, u, params)]),
        ("index(4,6,8,10)",
         {",".join(map(str, k)): v for k, v in COUNTEREXAMPLE_INDEX.items()},
         index_of((4, 6, 8, 10), uu, params).to_json()),
    ]
    for name, expected, actual in checks:
        report.cases_run += 1
        if expected != actual:
            report.fail(_case(params, T=tt, U=uu, u=u, check=name), expected, actual)
    report.details["c_vector"] = cv.to_json()
    return report.finish(started)


SUITES: dict = {
    "duality": suite_duality,
    "counts": suite_counts,
    "basis": suite_basis,
    "index": suite_index,
    "sign-coherence": suite_sign_coherence,
    "exchange": suite_exchange_formulas,
}


def run_suites(names, grid=DEFAULT_GRID, progress: Optional[Callable] = None) -> list:
    """Run the named grid suites over ``grid``; ``"counterexample"`` runs once."""
    reports = []
    for name in names:
        if name == "counterexample":
            reports.append(reproduce_counterexample())
            if progress:
                progress(reports[-1])
            continue
        suite = SUITES[name]
        for n, d in grid:
            reports.append(suite(ModelParams(n, d)))
            if progress:
                progress(reports[-1])
    return reports


ALL_SUITES = tuple(SUITES) + ("counterexample",)
