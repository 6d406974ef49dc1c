"""Stars: finite circle subsets lying in one fiber of the times-d map.

A degree-d star is a set of at least two angles whose pairwise distances are
all multiples of 1/d, i.e. a subset of a single fiber of theta -> d*theta.
This module provides the structural predicates on families of stars
(disjointness, cycles, maximality), an independent brute-force maximality
oracle, and the arc-quotient construction that rescales the stars inside an
arc of a star onto a smaller circle.

Internally every predicate works on an integer lattice (points scaled by a
common denominator), which keeps the exhaustive degree-by-degree sweeps fast
while staying exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

from .circle import Angle


class DegenerateArcError(ValueError):
    """Raised when a quotient arc has length 1/d: no room for any star."""


class Star:
    """A validated d-star: cyclically sorted angles, pairwise j/d apart."""

    __slots__ = ("degree", "points", "_den", "_ticks", "_point_set")

    def __init__(self, degree: int, points) -> None:
        if degree < 2:
            raise ValueError(f"star degree must be >= 2, got {degree}")
        pts = sorted({p if isinstance(p, Angle) else Angle(p) for p in points})
        if len(pts) < 2:
            raise ValueError("a star needs at least two distinct points")
        base = Fraction(pts[0])
        for p in pts[1:]:
            if ((Fraction(p) - base) * degree).denominator != 1:
                raise ValueError(
                    f"{p} - {pts[0]} is not a multiple of 1/{degree}; not a {degree}-star"
                )
        self.degree = degree
        self.points = tuple(pts)
        self._den = lcm(*(p.denominator for p in pts))
        self._ticks = tuple(p.numerator * (self._den // p.denominator) for p in pts)
        self._point_set = frozenset(pts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Star)
            and self.degree == other.degree
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.points))

    def __repr__(self) -> str:
        return f"Star(d={self.degree}, {{{', '.join(map(str, self.points))}}})"

    def to_dict(self) -> dict:
        return {"d": self.degree, "points": [str(p) for p in self.points]}

    @classmethod
    def from_dict(cls, data: dict) -> "Star":
        return cls(data["d"], [Angle(Fraction(p)) for p in data["points"]])


def multiplicity(star: Star) -> int:
    """Number of points minus one."""
    return len(star.points) - 1


class StarSet:
    """A family of stars of one common degree (structure is checked lazily).

    Duplicates are collapsed and the stars kept in a canonical order, so
    equal families compare equal regardless of input order.
    """

    __slots__ = ("degree", "stars")

    def __init__(self, degree: int, stars=()) -> None:
        if degree < 2:
            raise ValueError(f"degree must be >= 2, got {degree}")
        stars = tuple(sorted(set(stars), key=lambda s: s.points))
        for s in stars:
            if s.degree != degree:
                raise ValueError(f"star {s!r} has degree {s.degree}, expected {degree}")
        self.degree = degree
        self.stars = stars

    def __len__(self) -> int:
        return len(self.stars)

    def __iter__(self):
        return iter(self.stars)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StarSet)
            and self.degree == other.degree
            and self.stars == other.stars
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.stars))

    def __repr__(self) -> str:
        return f"StarSet(d={self.degree}, {list(self.stars)!r})"

    def to_list(self) -> list[dict]:
        return [s.to_dict() for s in self.stars]

    @classmethod
    def from_list(cls, degree: int, data: list[dict]) -> "StarSet":
        return cls(degree, [Star.from_dict(d) for d in data])


# -- integer-lattice primitives ----------------------------------------------

def _common_lattice(a: Star, b: Star) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    L = lcm(a._den, b._den)
    fa = L // a._den
    fb = L // b._den
    return L, tuple(t * fa for t in a._ticks), tuple(t * fb for t in b._ticks)


def _contained_in_one_arc(t1: tuple[int, ...], t2: tuple[int, ...], L: int) -> bool:
    # True iff all of t2 lies in one closed arc between consecutive points of t1.
    n = len(t1)
    for i in range(n):
        a = t1[i]
        w = (t1[(i + 1) % n] - a) % L
        if all((y - a) % L <= w for y in t2):
            return True
    return False


def disjoint(e1: Star, e2: Star) -> bool:
    """True iff e2 lies in the closure of one complementary arc of e1.

    Shared points are allowed; interleaved stars are not.  Symmetric in its
    arguments (a consequence of the definition, exercised by the tests).
    """
    if e1.degree != e2.degree:
        raise ValueError(f"degree mismatch: {e1.degree} vs {e2.degree}")
    L, t1, t2 = _common_lattice(e1, e2)
    return _contained_in_one_arc(t1, t2, L)


def _pairwise_disjoint(stars) -> bool:
    return all(disjoint(a, b) for a, b in combinations(stars, 2))


def _find_cycle(stars, through: int | None = None) -> bool:
    # Cycle = closed chain of >= 2 distinct stars joined by pairwise distinct
    # shared points.  If `through` is given, only cycles containing that star
    # are searched (enough when it is the only new member of a known-acyclic
    # family).
    n = len(stars)
    adj: dict[int, list[tuple[int, frozenset]]] = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            shared = stars[i]._point_set & stars[j]._point_set
            if shared:
                adj[i].append((j, shared))
                adj[j].append((i, shared))

    def dfs(start: int, cur: int, visited: frozenset, used: frozenset, length: int) -> bool:
        for nxt, shared in adj[cur]:
            for p in shared:
                if p in used:
                    continue
                if nxt == start and length >= 2:
                    return True
                if nxt in visited or (through is None and nxt < start):
                    continue
                if dfs(start, nxt, visited | {nxt}, used | {p}, length + 1):
                    return True
        return False

    starts = range(n) if through is None else (through,)
    return any(dfs(s, s, frozenset({s}), frozenset(), 1) for s in starts)


def has_cycle(star_set: StarSet) -> bool:
    """True iff the family contains a cycle of stars.

    A cycle is a closed chain of at least two stars with pairwise distinct
    connection points; in particular two stars sharing two points form one,
    while a single shared point never does.  Requires the stars to be
    pairwise disjoint.
    """
    if not _pairwise_disjoint(star_set.stars):
        raise ValueError("has_cycle requires pairwise disjoint stars")
    return _find_cycle(star_set.stars)


def sum_multiplicities(star_set: StarSet) -> int:
    return sum(multiplicity(s) for s in star_set.stars)


def is_maximal(star_set: StarSet) -> bool:
    """Pairwise disjoint, cycle-free, and total multiplicity exactly d-1.

    The multiplicity count is the cheap characterization of "no further star
    can be added"; check_maximal_bruteforce is the independent search-based
    oracle for the same property.
    """
    if not _pairwise_disjoint(star_set.stars):
        return False
    if _find_cycle(star_set.stars):
        return False
    return sum_multiplicities(star_set) == star_set.degree - 1


@lru_cache(maxsize=None)
def _candidate_pairs(d: int, grid_refinement: int) -> tuple[Star, ...]:
    grid = d * grid_refinement
    pairs: dict[frozenset, Star] = {}
    for k in range(grid):
        a = Angle(k, grid)
        for j in range(1, d):
            b = Angle(Fraction(k, grid) + Fraction(j, d))
            key = frozenset((a, b))
            if key not in pairs:
                pairs[key] = Star(d, key)
    return tuple(pairs.values())


def check_maximal_bruteforce(star_set: StarSet, grid_refinement: int = 2) -> bool:
    """Maximality by direct search: is any grid two-point star addable?

    Tries every candidate {a, a + j/d} with both endpoints on the grid
    {k/(d*grid_refinement)} and reports True iff none can be added while
    keeping the family pairwise disjoint and cycle-free.  Two-point
    candidates suffice: any addable star contains an addable pair.
    """
    if grid_refinement < 1:
        raise ValueError("grid_refinement must be >= 1")
    if not _pairwise_disjoint(star_set.stars):
        raise ValueError("brute-force oracle requires pairwise disjoint stars")
    if _find_cycle(star_set.stars):
        raise ValueError("brute-force oracle requires an acyclic star family")

    existing = {s._point_set for s in star_set.stars}
    family = list(star_set.stars)
    for candidate in _candidate_pairs(star_set.degree, grid_refinement):
        if candidate._point_set in existing:
            continue
        if not all(disjoint(candidate, s) for s in family):
            continue
        if _find_cycle(family + [candidate], through=len(family)):
            continue
        return False  # found an extension: not maximal
    return True


def quotient(
    star_set: StarSet, star: Star, arc_start: Angle, arc_end: Angle
) -> tuple[int, StarSet]:
    """Collapse the arc of `star` from arc_start to arc_end onto a new circle.

    arc_start and arc_end must be consecutive points of `star`; the arc has
    length l/d for an integer l, and the stars of the family lying (entirely)
    inside the closed arc are rescaled by d/l into valid l-stars on a circle
    of length 1 with the arc endpoints identified.  Returns (l, rescaled
    family).
    """
    d = star_set.degree
    if star.degree != d:
        raise ValueError("star degree does not match the family degree")
    if arc_start not in star._point_set or arc_end not in star._point_set:
        raise ValueError("arc endpoints must be points of the star")
    if arc_start == arc_end:
        raise ValueError("arc endpoints must be distinct")
    arc_len = (Fraction(arc_end) - Fraction(arc_start)) % 1
    for p in star.points:
        off = (Fraction(p) - Fraction(arc_start)) % 1
        if 0 < off < arc_len:
            raise ValueError("arc endpoints are not consecutive in the star")
    ell_frac = arc_len * d
    assert ell_frac.denominator == 1  # guaranteed by the star invariant
    ell = int(ell_frac)
    if ell < 2:
        raise DegenerateArcError(
            f"arc of length {arc_len} gives quotient degree {ell} < 2"
        )

    inside: list[Star] = []
    for other in star_set.stars:
        if other == star:
            continue
        offsets = [(Fraction(p) - Fraction(arc_start)) % 1 for p in other.points]
        strictly_in = [o for o in offsets if 0 < o < arc_len]
        all_in = all(o <= arc_len for o in offsets)
        if strictly_in and not all_in:
            raise ValueError(f"star {other!r} straddles the arc boundary")
        if all_in:
            inside.append(other)

    images = []
    for other in inside:
        image_pts = {
            Angle(((Fraction(p) - Fraction(arc_start)) % 1) * d, ell)
            for p in other.points
        }
        if len(image_pts) < 2:
            raise ValueError(
                f"star {other!r} collapses onto the identified arc endpoints"
            )
        images.append(Star(ell, image_pts))
    return ell, StarSet(ell, images)


# -- canonical degree-4 demo configurations and exhaustive enumeration --------

def named_example_stars() -> dict[str, Star]:
    """The five two-point stars on the quarter grid used throughout the docs.

    E1={0,1/4}, E2={1/4,1/2}, E3={1/2,3/4}, E4={0,1/2}, E5={3/4,0}:
    {E1,E2,E3} is maximal, {E1,E2,E3,E5} is a cycle, {E3,E4} is disjoint but
    not maximal.
    """
    q = Fraction(1, 4)
    return {
        "E1": Star(4, (Angle(0), Angle(q))),
        "E2": Star(4, (Angle(q), Angle(2 * q))),
        "E3": Star(4, (Angle(2 * q), Angle(3 * q))),
        "E4": Star(4, (Angle(0), Angle(2 * q))),
        "E5": Star(4, (Angle(3 * q), Angle(0))),
    }


def enumerate_grid_star_sets(degree: int) -> list[StarSet]:
    """Every pairwise disjoint, cycle-free family of stars on the grid {k/d}.

    Includes the empty family.  Exhaustive and fast for small degrees (the
    families are tiny because total multiplicity can never exceed d-1); used
    by the verification sweeps that compare is_maximal against the
    brute-force oracle on every possible input.
    """
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    d = degree

    def int_disjoint(t1: tuple[int, ...], t2: tuple[int, ...]) -> bool:
        n = len(t1)
        for i in range(n):
            a = t1[i]
            w = (t1[(i + 1) % n] - a) % d
            if all((y - a) % d <= w for y in t2):
                return True
        return False

    def int_cycle(fam: list[tuple[int, ...]], through: int) -> bool:
        n = len(fam)
        adj: dict[int, list[tuple[int, frozenset]]] = {i: [] for i in range(n)}
        for i in range(n):
            for j in range(i + 1, n):
                shared = frozenset(fam[i]) & frozenset(fam[j])
                if shared:
                    adj[i].append((j, shared))
                    adj[j].append((i, shared))

        def dfs(cur: int, visited: frozenset, used: frozenset, length: int) -> bool:
            for nxt, shared in adj[cur]:
                for p in shared:
                    if p in used:
                        continue
                    if nxt == through and length >= 2:
                        return True
                    if nxt in visited:
                        continue
                    if dfs(nxt, visited | {nxt}, used | {p}, length + 1):
                        return True
            return False

        return dfs(through, frozenset({through}), frozenset(), 1)

    all_stars = [
        comb for size in range(2, d + 1) for comb in combinations(range(d), size)
    ]
    star_objects = [Star(d, [Angle(k, d) for k in comb]) for comb in all_stars]

    families: list[tuple[int, ...]] = []

    def extend(start: int, fam_idx: list[int], fam: list[tuple[int, ...]]) -> None:
        families.append(tuple(fam_idx))
        for i in range(start, len(all_stars)):
            cand = all_stars[i]
            if all(int_disjoint(cand, e) and int_disjoint(e, cand) for e in fam):
                fam.append(cand)
                fam_idx.append(i)
                if not int_cycle(fam, len(fam) - 1):
                    extend(i + 1, fam_idx, fam)
                fam_idx.pop()
                fam.pop()

    extend(0, [], [])
    return [StarSet(d, [star_objects[i] for i in idx]) for idx in families]
