"""Automorphism groups, isomorphism decisions and the census.

Everything here is decided by integer divisibility criteria on hat
parameters; witnesses and cross-checks come from the exact oracle, and the
two routes must agree on every call (a disagreement is a defect, surfaced
as an assertion failure).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .dyadic import solve_congruence
from .errors import InvalidBounds, InvalidHat
from .geometry import AffineMap, Triangle, boundary_type
from .hats import (
    EncodingTriple,
    Hat,
    all_encoding_triples,
    normalize,
    pointed_canonical,
)
from .oracle import (
    CASES,
    CORRESPONDENCES,
    oracle_isomorphic,
    perm_label,
    solve_correspondence,
)

GROUP_ORDER = {"Trivial": 1, "C2": 2, "C3": 3, "S3": 6}

GROUP_TAGS = tuple(GROUP_ORDER)


def _require_representative(h: Hat) -> None:
    if h.i % 2 == 0:
        raise InvalidHat(f"criteria require a representative hat (odd i), got i={h.i}")


def aut_fix_B(h: Hat) -> bool:
    """Automorphism fixing the apex and swapping the base vertices: j | 2i - m."""
    _require_representative(h)
    return (2 * h.i - h.m) % h.j == 0


def aut_fix_A(h: Hat) -> bool:
    """Automorphism fixing the origin: m | i, m | j and mj | m*m - i*i."""
    _require_representative(h)
    i, j, m = h.i, h.j, h.m
    return i % m == 0 and j % m == 0 and (m * m - i * i) % (m * j) == 0

def aut_fix_C(h: Hat) -> bool:
    """Automorphism fixing (m, 0); needs m | i, m | j and k'^2 = 1 (mod l')
    for k' = (m - i + j)/m, l' = j/m."""
    _require_representative(h)
    i, j, m = h.i, h.j, h.m
    if i % m or j % m:
        return False
    k = (m - i + j) // m
    l = j // m
    return (k * k - 1) % l == 0


def aut_cycle(h: Hat) -> bool:
    """Order-3 automorphism; needs boundary (m, m, m) and l | k*k - k + 1
    for k = i/m, l = j/m."""
    _require_representative(h)
    i, j, m = h.i, h.j, h.m
    if boundary_type(h.triangle()) != (m, m, m):
        return False
    k = i // m
    l = j // m
    return (k * k - k + 1) % l == 0


#: Self-correspondence realized by each criterion (images of A, B, C).
_FIX_A_PERM = (0, 2, 1)
_FIX_B_PERM = (2, 1, 0)
_FIX_C_PERM = (1, 0, 2)
_CYCLE_PERMS = ((1, 2, 0), (2, 0, 1))
_IDENTITY_PERM = (0, 1, 2)


@dataclass(frozen=True)
class AutGroup:
    """Group tag plus one oracle witness per group element."""

    tag: str
    witnesses: tuple[tuple[str, AffineMap], ...]

    @property
    def order(self) -> int:
        return GROUP_ORDER[self.tag]


def automorphism_group(h: Hat) -> AutGroup:
    """Assemble the automorphism group of a representative hat.

    The tag comes from the divisibility criteria; the witnesses come from
    the oracle's self-correspondence solver.  The two must agree
    permutation by permutation.
    """
    fix_a = aut_fix_A(h)
    fix_b = aut_fix_B(h)
    fix_c = aut_fix_C(h)
    cycle = aut_cycle(h)

    transpositions = fix_a + fix_b + fix_c
    assert transpositions != 2, f"two transpositions cannot coexist: {h}"
    if transpositions == 3:
        assert cycle, f"three transpositions force a 3-cycle: {h}"
    if transpositions == 1:
        assert not cycle, f"a single transposition excludes a 3-cycle: {h}"

    if transpositions == 3:
        tag = "S3"
    elif transpositions == 1:
        tag = "C2"
    elif cycle:
        tag = "C3"
    else:
        tag = "Trivial"

    expected = {_IDENTITY_PERM}
    if fix_a:
        expected.add(_FIX_A_PERM)
    if fix_b:
        expected.add(_FIX_B_PERM)
    if fix_c:
        expected.add(_FIX_C_PERM)
    if cycle:
        expected.update(_CYCLE_PERMS)

    tri = h.triangle()
    witnesses = []
    found = set()
    for corr in CORRESPONDENCES:
        solved = solve_correspondence(tri, tri, corr.perm)
        if solved is not None:
            witnesses.append((perm_label(corr.perm), solved))
            found.add(corr.perm)
    assert found == expected, (
        f"criteria and oracle disagree on {h}: criteria {sorted(expected)}, "
        f"oracle {sorted(found)}"
    )
    return AutGroup(tag, tuple(witnesses))


def iso_case(h1: Hat, h2: Hat, case: str) -> bool:
    """Test one of the six hat-to-hat correspondence criteria.

    h1 = (i, j, m) and h2 = (k, l, n) may be almost representative (even i
    or k allowed).  Cases "a"/"b" keep the base and apex; the other four
    exchange roles, forcing n = gcd(side, j) and l = mj/n, with k confined
    to a residue class mod l determined by a linear congruence.
    """
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}")
    i, j, m = h1.i, h1.j, h1.m
    k, l, n = h2.i, h2.j, h2.m

    if case == "a":
        return l == j and n == m and (k - i) % j == 0
    if case == "b":
        return l == j and n == m and (k - (m - i)) % j == 0

    side = i if case in ("c", "e") else m - i
    g = math.gcd(side, j)
    if n != g or l * n != m * j:
        return False
    # gcd(side, j) = n divides n, so the congruence is always solvable
    a = solve_congruence(side, n, j)
    anchor = a.value * m if case in ("c", "d") else n - a.value * m
    return (k - anchor) % l == 0


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    case: str | None
    witness: AffineMap | None


def _decide(t1: Triangle, t2: Triangle, h1: Hat, h2: Hat) -> IsoResult:
    triples1 = all_encoding_triples(t1)
    triples2 = all_encoding_triples(t2)
    by_canonical = min(triples1) == min(triples2)
    by_overlap = bool(triples1 & triples2)
    case = next((c for c in CASES if iso_case(h1, h2, c)), None)
    assert by_canonical == by_overlap == (case is not None), (
        f"isomorphism routes disagree: canonical {by_canonical}, "
        f"overlap {by_overlap}, case {case}"
    )
    if not by_canonical:
        return IsoResult(False, None, None)
    found = oracle_isomorphic(t1, t2)
    assert found is not None, "oracle failed to confirm a criteria isomorphism"
    return IsoResult(True, case, found[1])


def isomorphic(t1: Triangle, t2: Triangle) -> IsoResult:
    """Decide whether two triangles are isomorphic over the dyadics.

    Three independent criteria routes (canonical triples, triple overlap,
    hat case analysis) must agree; the witness map comes from the oracle.
    """
    return _decide(t1, t2, normalize(t1).hat, normalize(t2).hat)


def isomorphic_hats(h1: Hat, h2: Hat) -> IsoResult:
    """Same decision for two (almost representative) hats, given directly."""
    return _decide(h1.triangle(), h2.triangle(), h1, h2)


@dataclass(frozen=True)
class CensusRow:
    j: int
    m: int
    pointed_classes: int
    isomorphism_classes: int
    aut_counts: dict[str, int]
    orbit_ok: bool

    @property
    def ok(self) -> bool:
        return self.pointed_classes == self.j and self.orbit_ok


@dataclass(frozen=True)
class CensusReport:
    j_max: int
    m_max: int
    rows: tuple[CensusRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def _census_cell(cell: tuple[int, int]) -> CensusRow:
    """One (j, m) work unit: every hat with i odd in 1..2j-1."""
    j, m = cell
    pointed: set[EncodingTriple] = set()
    canonical: set[EncodingTriple] = set()
    counts = dict.fromkeys(GROUP_TAGS, 0)
    orbit_ok = True
    for i in range(1, 2 * j, 2):
        h = Hat(i, j, m)
        tri = h.triangle()
        # run the full pipeline rather than trusting i to be canonical
        pointed.add(pointed_canonical(normalize(tri).hat))
        group = automorphism_group(h)
        counts[group.tag] += 1
        triples = all_encoding_triples(tri)
        canonical.add(min(triples))
        if len(triples) * group.order != 6:
            orbit_ok = False
    return CensusRow(j, m, len(pointed), len(canonical), counts, orbit_ok)


def census(j_max: int, m_max: int, workers: int = 1) -> CensusReport:
    """Sweep all representative hats with j <= j_max, m <= m_max.

    Work units are independent (j, m) cells; with workers > 1 they run in a
    process pool and are merged in a fixed order, so the report does not
    depend on scheduling.
    """
    for name, bound in (("j_max", j_max), ("m_max", m_max)):
        if bound <= 0 or bound % 2 == 0:
            raise InvalidBounds(f"{name} must be an odd positive integer, got {bound}")
    if workers < 1:
        raise InvalidBounds(f"workers must be at least 1, got {workers}")

    cells = [
        (j, m)
        for j in range(1, j_max + 1, 2)
        for m in range(1, m_max + 1, 2)
    ]
    if workers == 1:
        rows = tuple(_census_cell(cell) for cell in cells)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(_census_cell, cells))
    return CensusReport(j_max, m_max, rows)
