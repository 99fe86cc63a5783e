"""Deciding whether the Cartier algebra of a Stanley-Reisner ring is
principally or infinitely generated.

Two independent routes are implemented and cross-checked: an ideal
identity on Frobenius-power colon ideals, and a free-face scan on the
core of the complex.  A disagreement is a hard internal error.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Optional

from . import monomials as mono
from .complexes import (
    FreeFacePair,
    SimplicialComplex,
    core,
    face_key,
    free_faces,
    from_masks,
    is_free_face_pair,
    mask_vertices,
    minimal_nonfaces,
    support_vertices,
    vertex_mask,
)
from .monomials import Monomial, MonomialIdeal


class Verdict(Enum):
    PRINCIPALLY_GENERATED = "pg"
    INFINITELY_GENERATED = "infgen"


class InconsistencyError(RuntimeError):
    """The two classification criteria disagreed (a bug, not an input error)."""


def ideal_of_complex(cx: SimplicialComplex) -> MonomialIdeal:
    """The Stanley-Reisner ideal: squarefree generators from minimal non-faces."""
    gens = []
    for nf in minimal_nonfaces(cx):
        gens.append(tuple(1 if nf >> i & 1 else 0 for i in range(cx.n)))
    return MonomialIdeal(cx.n, frozenset(gens))


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Inverse Stanley-Reisner correspondence for squarefree ideals."""
    for g in ideal.gens:
        if not mono.is_squarefree(g):
            raise ValueError(f"generator {mono.format_monomial(g)} is not squarefree")
    if ideal.is_unit():
        return SimplicialComplex(ideal.n, frozenset({0}))
    supports = [sum(1 << i for i, e in enumerate(g) if e) for g in ideal.gens]
    faces = [m for m in range(1 << ideal.n)
             if not any(s & ~m == 0 for s in supports)]
    return from_masks(faces, ideal.n)


@dataclass(frozen=True)
class IdealTest:
    verdict: Verdict
    ideal: MonomialIdeal
    lhs: Optional[MonomialIdeal]    # I^[q] : I
    rhs: Optional[MonomialIdeal]    # I^[q] + ((prod_V x_i)^{q-1})
    offending: Optional[Monomial]   # a generator of lhs outside rhs


def ideal_test(cx: SimplicialComplex, q: int = 2) -> IdealTest:
    """The colon-ideal criterion with the support-vertex product on the right."""
    if q < 2:
        raise ValueError(f"q={q} must be >= 2")
    ideal = ideal_of_complex(cx)
    if ideal.is_zero():
        # Full simplex: the ring is regular, short-circuit.
        return IdealTest(Verdict.PRINCIPALLY_GENERATED, ideal, None, None, None)
    frob = mono.frobenius_power(ideal, q)
    lhs = mono.colon(frob, ideal)
    xv = tuple(q - 1 if support_vertices(cx) >> i & 1 else 0 for i in range(cx.n))
    rhs = mono.add(frob, mono.principal(xv))
    if lhs == rhs:
        return IdealTest(Verdict.PRINCIPALLY_GENERATED, ideal, lhs, rhs, None)
    offending = next(g for g in lhs.sorted_gens() if not mono.contains(rhs, g))
    return IdealTest(Verdict.INFINITELY_GENERATED, ideal, lhs, rhs, offending)


def witness_monomial(cx: SimplicialComplex, pair: FreeFacePair) -> Monomial:
    """The separating monomial built from a free-face pair, for V = [n].

    Squares the variables of the free face, skips the added facet vertex,
    and takes every other variable once; the result lies in I^[2]:I but
    not in I^[2] + (x_1 ... x_n).
    """
    full = (1 << cx.n) - 1
    if support_vertices(cx) != full:
        raise ValueError("witness monomial requires a complex equal to its core")
    if not is_free_face_pair(cx, pair):
        raise ValueError(f"{pair} is not a free-face pair of the complex")
    skip = pair.facet & ~pair.free_face
    return tuple(
        2 if pair.free_face >> i & 1 else (0 if skip >> i & 1 else 1)
        for i in range(cx.n)
    )


@dataclass(frozen=True)
class ClassificationReport:
    verdict: Verdict
    method: str                     # "ideal" | "free_face" | "both"
    n: int
    support_v: tuple[int, ...]
    core_used: bool
    core_facets: tuple[tuple[int, ...], ...]   # original vertex labels
    q: int = 2
    free_face_witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    monomial_witness: Optional[str] = None     # core coordinates
    colon_lhs: tuple[str, ...] = ()
    colon_rhs: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        ff = self.free_face_witness
        return {
            "verdict": self.verdict.value,
            "n": self.n,
            "V": list(self.support_v),
            "core_facets": [list(f) for f in self.core_facets],
            "free_face": list(ff[0]) if ff else None,
            "facet": list(ff[1]) if ff else None,
            "witness_monomial": self.monomial_witness,
            "colon_lhs": list(self.colon_lhs),
            "colon_rhs": list(self.colon_rhs),
        }


def _core_facets_original(cx: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    keep = support_vertices(cx)
    facets = {f & keep for f in cx.facets}
    return tuple(mask_vertices(f) for f in sorted(facets, key=face_key))


def _relabel(mask: int, vmap: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(vmap[i] for i in range(len(vmap)) if mask >> i & 1)


def classify_via_ideal(cx: SimplicialComplex, q: int = 2) -> ClassificationReport:
    """Verdict from the colon-ideal identity on Δ itself (no core reduction)."""
    test = ideal_test(cx, q)
    return ClassificationReport(
        verdict=test.verdict,
        method="ideal",
        n=cx.n,
        support_v=mask_vertices(support_vertices(cx)),
        core_used=False,
        core_facets=_core_facets_original(cx),
        q=q,
        monomial_witness=mono.format_monomial(test.offending) if test.offending else None,
        colon_lhs=tuple(test.lhs.gens_strings()) if test.lhs else (),
        colon_rhs=tuple(test.rhs.gens_strings()) if test.rhs else (),
    )


def classify_via_free_face(cx: SimplicialComplex) -> ClassificationReport:
    """Verdict from the free-face scan, applied to the core of Δ."""
    core_cx, vmap = core(cx)
    pairs = free_faces(core_cx)
    witness = None
    monomial = None
    if pairs:
        first = pairs[0]
        witness = (_relabel(first.free_face, vmap), _relabel(first.facet, vmap))
        monomial = mono.format_monomial(witness_monomial(core_cx, first))
    return ClassificationReport(
        verdict=Verdict.INFINITELY_GENERATED if pairs else Verdict.PRINCIPALLY_GENERATED,
        method="free_face",
        n=cx.n,
        support_v=mask_vertices(support_vertices(cx)),
        core_used=len(vmap) != cx.n,
        core_facets=_core_facets_original(cx),
        free_face_witness=witness,
        monomial_witness=monomial,
    )


def classify(cx: SimplicialComplex, mode: str = "both", q: int = 2) -> ClassificationReport:
    """Run one or both criteria; in mode "both" they must agree."""
    if mode == "ideal":
        return classify_via_ideal(cx, q)
    if mode == "free_face":
        return classify_via_free_face(cx)
    if mode != "both":
        raise ValueError(f"unknown mode {mode!r}")
    ri = classify_via_ideal(cx, q)
    rf = classify_via_free_face(cx)
    if ri.verdict != rf.verdict:
        raise InconsistencyError(
            f"criteria disagree on {cx!r}: ideal={ri.verdict.value}, "
            f"free_face={rf.verdict.value}"
        )
    return ClassificationReport(
        verdict=ri.verdict,
        method="both",
        n=cx.n,
        support_v=ri.support_v,
        core_used=rf.core_used,
        core_facets=ri.core_facets,
        q=q,
        free_face_witness=rf.free_face_witness,
        monomial_witness=rf.monomial_witness,
        colon_lhs=ri.colon_lhs,
        colon_rhs=ri.colon_rhs,
    )


def random_complex(n: int, expected_density: float, seed: int) -> SimplicialComplex:
    """Deterministic random complex: size-biased facet candidates, then maximal."""
    if not 1 <= n <= 20:
        raise ValueError("random_complex supports 1 <= n <= 20")
    if not 0 < expected_density < 1:
        raise ValueError("density must lie strictly between 0 and 1")
    rng = random.Random(seed)
    cands = []
    for k in range(1, n + 1):
        threshold = expected_density * 2 ** (-(k - 1) / 2)
        for combo in combinations(range(1, n + 1), k):
            if rng.random() < threshold:
                cands.append(vertex_mask(combo, n))
    return from_masks(cands, n)


def enumerate_complexes(n: int, limit: int = 6) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on [n]: all antichains of nonempty subsets,
    plus {∅}.  Exhaustive use is intended for small n only."""
    if n > limit:
        raise ValueError(f"exhaustive enumeration capped at n={limit}")
    yield SimplicialComplex(n, frozenset({0}))
    subs = sorted(range(1, 1 << n), key=face_key)

    def rec(start: int, chosen: tuple[int, ...]) -> Iterator[SimplicialComplex]:
        for i in range(start, len(subs)):
            s = subs[i]
            if any(s & ~c == 0 or c & ~s == 0 for c in chosen):
                continue
            nxt = chosen + (s,)
            yield SimplicialComplex(n, frozenset(nxt))
            yield from rec(i + 1, nxt)

    yield from rec(0, ())


def count_complexes_oracle(n: int) -> int:
    """Independent count of complexes on [n] via downset enumeration.

    Downsets of the Boolean lattice 2^[k] are enumerated by brute force
    over families (bitmask over 2^k subsets) for k <= 4; for n = 5 the
    splitting on the last vertex counts pairs of nested downsets of 2^[4].
    Complexes are the nonvoid downsets: the total minus one.
    """
    if n > 5:
        raise ValueError("oracle implemented for n <= 5")

    def downsets(k: int) -> list[int]:
        nsub = 1 << k
        out = []
        for fam in range(1 << nsub):
            ok = True
            for s in range(nsub):
                if fam >> s & 1:
                    t = s
                    while ok and t:
                        t = (t - 1) & s
                        if not fam >> t & 1:
                            ok = False
                else:
                    continue
                if not ok:
                    break
            if ok:
                out.append(fam)
        return out

    if n <= 4:
        return len(downsets(n)) - 1
    ds4 = downsets(4)
    total = sum(1 for d0 in ds4 for d1 in ds4 if d1 & ~d0 == 0)
    return total - 1


def _witness_contract_holds(cx: SimplicialComplex) -> bool:
    """Check m ∈ I^[2]:I and m ∉ I^[2]+(x^1) on the core, for the first pair."""
    core_cx, _ = core(cx)
    pairs = free_faces(core_cx)
    if not pairs:
        return False
    m = witness_monomial(core_cx, pairs[0])
    ideal = ideal_of_complex(core_cx)
    frob = mono.frobenius_power(ideal, 2)
    lhs = mono.colon(frob, ideal)
    rhs = mono.add(frob, mono.principal((1,) * core_cx.n))
    return mono.contains(lhs, m) and not mono.contains(rhs, m)


@dataclass
class CrossValidationReport:
    total: int = 0
    pg: int = 0
    infgen: int = 0
    mismatches: list = field(default_factory=list)
    witness_checked: int = 0
    witness_violations: list = field(default_factory=list)
    q_sweep_checked: int = 0
    q_sweep_mismatches: list = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.witness_violations or self.q_sweep_mismatches)

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "pg": self.pg,
            "infgen": self.infgen,
            "mismatches": self.mismatches,
            "witness_checked": self.witness_checked,
            "witness_violations": self.witness_violations,
            "q_sweep_checked": self.q_sweep_checked,
            "q_sweep_mismatches": self.q_sweep_mismatches,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


_DENSITIES = (0.15, 0.3, 0.5, 0.7, 0.85)


def trial_seed(seed: int, n: int, index: int) -> int:
    """Splittable per-trial seed: base seed xored with a trial tag."""
    return (seed ^ (n << 48) ^ index) & 0xFFFFFFFFFFFFFFFF


def _check_one(cx: SimplicialComplex, report: CrossValidationReport,
               label: str, q_sweep: tuple[int, ...] | None):
    vi = ideal_test(cx, 2).verdict
    vf = classify_via_free_face(cx).verdict
    report.total += 1
    if vi != vf:
        report.mismatches.append(
            {"complex": label, "ideal": vi.value, "free_face": vf.value})
        return
    if vi is Verdict.PRINCIPALLY_GENERATED:
        report.pg += 1
    else:
        report.infgen += 1
        report.witness_checked += 1
        if not _witness_contract_holds(cx):
            report.witness_violations.append({"complex": label})
    if q_sweep:
        report.q_sweep_checked += 1
        for q in q_sweep:
            if ideal_test(cx, q).verdict != vi:
                report.q_sweep_mismatches.append({"complex": label, "q": q})


def cross_validate(
    exhaustive_ns: tuple[int, ...] = (1, 2, 3, 4, 5),
    random_ns: tuple[int, ...] = (6, 7, 8),
    trials_per_n: int = 10000,
    seed: int = 42,
    q_sweep: tuple[int, ...] | None = None,
) -> CrossValidationReport:
    """Agreement harness for the two criteria, with witness contracts."""
    report = CrossValidationReport()
    start = time.perf_counter()
    for n in exhaustive_ns:
        for cx in enumerate_complexes(n):
            _check_one(cx, report, repr(cx), q_sweep)
    for n in random_ns:
        for t in range(trials_per_n):
            density = _DENSITIES[t % len(_DENSITIES)]
            cx = random_complex(n, density, trial_seed(seed, n, t))
            _check_one(cx, report, f"n={n} trial={t} seed={seed}", q_sweep)
    report.elapsed_seconds = time.perf_counter() - start
    return report
