"""Exact simplicial homology over prime fields GF(p).

Chain complexes are built from face bitmasks with the ascending-vertex
orientation; relative homology of a pair (Δ, Γ) uses the quotient basis
of faces of Δ outside Γ.  All ranks are computed by exact Gaussian
elimination (bitmask rows over GF(2), modular arithmetic otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .complexes import (
    SimplicialComplex,
    cone_vertices,
    contrastar,
    deletion,
    dimension,
    face_key,
    free_faces,
    FreeFacePair,
    is_face,
    is_pure,
    is_subcomplex,
    link,
    mask_vertices,
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2**31 and is_prime(self.p)):
            raise ValueError(f"{self.p} is not a prime in [2, 2^31)")


def _rank_gf2(rows: list[int]) -> int:
    rank = 0
    pivots: list[int] = []
    for r in rows:
        for piv in pivots:
            low = piv & -piv
            if r & low:
                r ^= piv
        if r:
            pivots.append(r)
            rank += 1
    return rank


def _rank_gfp(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    pivots: list[tuple[int, list[int]]] = []
    for r in rows:
        for col, piv in pivots:
            c = r[col] % p
            if c:
                r[:] = [(x - c * y) % p for x, y in zip(r, piv)]
        lead = next((i for i, x in enumerate(r) if x % p), None)
        if lead is not None:
            inv = pow(r[lead], p - 2, p)
            piv = [(x * inv) % p for x in r]
            pivots.append((lead, piv))
            rank += 1
    return rank


class _Matrix:
    """Dense matrix over GF(p) assembled from sparse (row, col, coeff)."""

    def __init__(self, nrows: int, ncols: int, p: int):
        self.nrows = nrows
        self.ncols = ncols
        self.p = p
        self.entries: dict[tuple[int, int], int] = {}

    def add(self, i: int, j: int, c: int):
        key = (i, j)
        self.entries[key] = (self.entries.get(key, 0) + c) % self.p

    def rows(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out

    def rows_gf2(self) -> list[int]:
        out = [0] * self.nrows
        for (i, j), c in self.entries.items():
            if c % 2:
                out[i] |= 1 << j
        return out

    def rank(self) -> int:
        if self.p == 2:
            return _rank_gf2(self.rows_gf2())
        return _rank_gfp(self.rows(), self.p)


class ChainComplexOverField(NamedTuple):
    """Quotient chain complex on a set of faces of some complex."""

    p: int
    basis: dict[int, list[int]]          # degree -> ordered face masks
    boundaries: dict[int, _Matrix]       # degree k -> matrix C_k -> C_{k-1}

    def homology_dims(self) -> dict[int, int]:
        degrees = sorted(self.basis)
        ranks = {k: self.boundaries[k].rank() for k in degrees}
        out = {}
        for k in degrees:
            out[k] = len(self.basis[k]) - ranks[k] - ranks.get(k + 1, 0)
        return out


def _boundary_terms(face: int):
    """Signed codimension-one subfaces of a face, ascending-vertex signs."""
    terms = []
    pos = 0
    rest = face
    while rest:
        low = rest & -rest
        terms.append((face & ~low, -1 if pos % 2 else 1))
        pos += 1
        rest &= rest - 1
    return terms


def build_chain_complex(face_basis: set[int], p: int) -> ChainComplexOverField:
    """Chain complex on the given faces; coefficients to absent faces drop."""
    basis: dict[int, list[int]] = {}
    for f in face_basis:
        basis.setdefault(f.bit_count() - 1, []).append(f)
    for k in basis:
        basis[k].sort(key=face_key)
    index = {f: i for k in basis for i, f in enumerate(basis[k])}
    boundaries: dict[int, _Matrix] = {}
    for k in sorted(basis):
        mat = _Matrix(len(basis[k]), len(basis.get(k - 1, [])), p)
        for i, f in enumerate(basis[k]):
            for sub, sign in _boundary_terms(f):
                if sub in face_basis:
                    mat.add(i, index[sub], sign)
        boundaries[k] = mat
    _check_boundary_squared(basis, boundaries, p)
    return ChainComplexOverField(p, basis, boundaries)


def _check_boundary_squared(basis, boundaries, p):
    for k in sorted(basis):
        if k - 1 not in basis:
            continue
        upper_rows: dict[int, list[tuple[int, int]]] = {}
        for (i, j), c in boundaries[k].entries.items():
            upper_rows.setdefault(i, []).append((j, c))
        lower_rows: dict[int, list[tuple[int, int]]] = {}
        for (i, j), c in boundaries[k - 1].entries.items():
            lower_rows.setdefault(i, []).append((j, c))
        for i in range(len(basis[k])):
            acc: dict[int, int] = {}
            for j, c in upper_rows.get(i, []):
                for j2, c2 in lower_rows.get(j, []):
                    acc[j2] = (acc.get(j2, 0) + c * c2) % p
            if any(acc.values()):
                raise AssertionError("boundary squared is nonzero")


@lru_cache(maxsize=1 << 17)
def _reduced_betti_cached(facets: frozenset[int], p: int) -> tuple[tuple[int, int], ...]:
    cx = SimplicialComplex(max(f.bit_length() for f in facets) if facets != {0} else 0, facets)
    cc = build_chain_complex(cx.faces(), p)
    dims = cc.homology_dims()
    d = dimension(cx)
    return tuple((k, dims.get(k, 0)) for k in range(-1, d + 1))


def reduced_betti(cx: SimplicialComplex, p: int = 2) -> dict[int, int]:
    """Reduced Betti numbers over GF(p); {∅} has a single unit in degree -1."""
    return dict(_reduced_betti_cached(cx.facets, p))


def euler_characteristic_reduced(cx: SimplicialComplex) -> int:
    """Alternating face count, empty face included (so {∅} gives -1)."""
    return sum(-1 if (f.bit_count() - 1) % 2 else 1 for f in cx.faces())


def relative_betti(cx: SimplicialComplex, sub: SimplicialComplex, p: int = 2) -> dict[int, int]:
    """Homology of the pair (Δ, Γ) over GF(p), degrees 0..dim Δ."""
    if not is_subcomplex(sub, cx):
        raise ValueError("second argument is not a subcomplex of the first")
    basis = cx.faces() - sub.faces()
    d = dimension(cx)
    if not basis:
        return {k: 0 for k in range(0, d + 1)}
    dims = build_chain_complex(basis, p).homology_dims()
    return {k: dims.get(k, 0) for k in range(0, d + 1)}


class RankCertificate(NamedTuple):
    surjective: bool
    rank: int
    target_dim: int


def _left_nullspace(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {x : x . M = 0} for M given by rows."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    # Augment with identity and eliminate; rows reducing to zero give the basis.
    aug = [[rows[i][j] % p for j in range(ncols)] + [1 if k == i else 0 for k in range(m)]
           for i in range(m)]
    pivots: list[tuple[int, list[int]]] = []
    null: list[list[int]] = []
    for r in aug:
        for col, piv in pivots:
            c = r[col] % p
            if c:
                r[:] = [(x - c * y) % p for x, y in zip(r, piv)]
        lead = next((i for i in range(ncols) if r[i] % p), None)
        if lead is None:
            null.append(r[ncols:])
        else:
            inv = pow(r[lead], p - 2, p)
            pivots.append((lead, [(x * inv) % p for x in r]))
    return null


def relative_map_is_surjective(
    cx: SimplicialComplex, small: int, big: int, degree: int, p: int = 2
) -> RankCertificate:
    """Surjectivity of H_d(Δ, cost F) -> H_d(Δ, cost G) for F ⊆ G.

    The map is induced by the chain projection that quotients by the
    larger contrastar.  Returns (surjective, rank of the induced map,
    dimension of the target homology).
    """
    if small & ~big:
        raise ValueError("first face must be contained in the second")
    if not is_face(cx, big):
        raise ValueError("second argument is not a face")
    faces = cx.faces()
    src = {f for f in faces if small & ~f == 0}
    tgt = {f for f in faces if big & ~f == 0}
    cc_s = build_chain_complex(src, p)
    cc_t = build_chain_complex(tgt, p)
    basis_s = cc_s.basis.get(degree, [])
    basis_t = cc_t.basis.get(degree, [])
    tgt_index = {f: i for i, f in enumerate(basis_t)}
    nt = len(basis_t)

    rank_dt = cc_t.boundaries[degree].rank() if degree in cc_t.boundaries else 0
    bt_rows = cc_t.boundaries[degree + 1].rows() if degree + 1 in cc_t.boundaries else []
    rank_bt = _rank_gfp(bt_rows, p) if bt_rows else 0
    target_dim = nt - rank_dt - rank_bt if nt else 0

    if target_dim == 0:
        return RankCertificate(True, 0, 0)

    if degree in cc_s.boundaries and basis_s:
        cycle_basis = _left_nullspace(cc_s.boundaries[degree].rows(), p)
    else:
        cycle_basis = []
    projected = []
    for z in cycle_basis:
        vec = [0] * nt
        for coeff, f in zip(z, basis_s):
            if coeff and f in tgt_index:
                vec[tgt_index[f]] = coeff % p
        projected.append(vec)
    stacked = projected + bt_rows
    rank_map = _rank_gfp(stacked, p) - rank_bt
    return RankCertificate(rank_map == target_dim, rank_map, target_dim)


def is_cohen_macaulay(cx: SimplicialComplex, p: int = 2) -> bool:
    """Reisner's criterion: links have no reduced homology below their dim."""
    if not is_pure(cx):
        return False
    for face in cx.faces():
        lk = link(cx, face)
        d = dimension(lk)
        betti = reduced_betti(lk, p)
        if any(betti.get(i, 0) for i in range(-1, d)):
            return False
    return True


def is_doubly_cohen_macaulay(cx: SimplicialComplex, p: int = 2) -> bool:
    """CM, and deleting any vertex stays CM of the same dimension."""
    if not is_cohen_macaulay(cx, p):
        return False
    d = dimension(cx)
    verts = 0
    for f in cx.facets:
        verts |= f
    for v in mask_vertices(verts):
        dl = deletion(cx, v)
        if dimension(dl) != d or not is_cohen_macaulay(dl, p):
            return False
    return True


def is_gorenstein_star(cx: SimplicialComplex, p: int = 2) -> bool:
    """Every link is a homology sphere over GF(p) (vanishing below the top,
    one-dimensional on top)."""
    if not is_pure(cx):
        return False
    for face in cx.faces():
        lk = link(cx, face)
        d = dimension(lk)
        betti = reduced_betti(lk, p)
        if any(betti.get(i, 0) for i in range(-1, d)):
            return False
        if betti.get(d, 0) != 1:
            return False
    return True


def is_gorenstein(cx: SimplicialComplex, p: int = 2) -> bool:
    from .complexes import core

    return is_gorenstein_star(core(cx).complex, p)


class BuchsbaumStarRefutation(NamedTuple):
    kind: str                         # "cone" or "free_face"
    vertex: Optional[int]
    pair: Optional[FreeFacePair]
    rank: Optional[int]
    target_dim: Optional[int]


def buchsbaum_star_refutation(cx: SimplicialComplex, p: int = 2) -> Optional[BuchsbaumStarRefutation]:
    """A certificate that Δ is not Buchsbaum*, when one is found.

    Either Δ is a cone over a vertex, or it has a free-face pair whose
    induced map on top relative homology fails to be surjective.  Absence
    of a certificate proves nothing.
    """
    cone = cone_vertices(cx)
    if cone:
        return BuchsbaumStarRefutation("cone", mask_vertices(cone)[0], None, None, None)
    d = dimension(cx)
    for pair in free_faces(cx):
        cert = relative_map_is_surjective(cx, pair.free_face, pair.facet, d, p)
        if not cert.surjective:
            return BuchsbaumStarRefutation("free_face", None, pair, cert.rank, cert.target_dim)
    return None


def contrastar_profile(cx: SimplicialComplex, face: int, p: int = 2) -> dict[int, int]:
    """H_*(Δ, cost F); for F = ∅ this is the reduced homology of Δ."""
    if face == 0:
        return reduced_betti(cx, p)
    return relative_betti(cx, contrastar(cx, face), p)
