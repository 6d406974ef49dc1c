"""Periodic points from inverse-branch itineraries, at controlled precision.

For f(z) = z^d + c with an invariant disk that avoids the critical value
(see dynamics.verify_disk_hypothesis), the d inverse branches of f are the
d-th roots of z - c, indexed by the argument sector of the root.  Composing
the branches of a periodic symbol word and iterating contracts to the unique
periodic point realizing that word, and running over all d^k words of length
k produces all d^k fixed points of f^k.

Everything runs in mpmath arbitrary precision: the residual |f^k(z) - z| of
a double-precision point is amplified by |(f^k)'| (about 6^12 ~ 2e9 for the
degree-2, c=-6 family at k=12), so float64 cannot certify small residuals at
useful word lengths.  A float64 pass is still used to seed the iteration.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpc, mpf, workdps

from .dynamics import UnicriticalMap, verify_disk_hypothesis


class NonConvergenceError(RuntimeError):
    """An itinerary iteration failed to settle within the cycle budget."""


@dataclass
class ItineraryConfig:
    dps: int = 40                 # working precision, decimal digits
    residual_tol: float = 1e-12   # bound certified on |f^k(z) - z|
    max_cycles: int = 400
    dedup_tol: float = 1e-10      # below any true separation of periodic points

    def __post_init__(self):
        if self.dps < 15:
            raise ValueError("dps below double precision is pointless")
        if self.residual_tol <= 0 or self.dedup_tol <= 0:
            raise ValueError("tolerances must be positive")

    @property
    def displacement_tol(self) -> mpf:
        return mpf(10) ** (-(self.dps - 8))

    @property
    def snap_tol(self) -> mpf:
        # Arguments this close to the positive real axis are ties at the
        # sector boundary and are resolved toward the lower sector by
        # treating them as exactly real.
        return mpf(10) ** (-(self.dps - 10))


@dataclass
class ItineraryResult:
    word: tuple[int, ...]
    point: mpc
    residual: float               # |f^k(point) - point|, evaluated at full precision
    converged: bool
    cycles: int

    def to_dict(self) -> dict:
        return {
            "word": list(self.word),
            "point": [float(self.point.real), float(self.point.imag)],
            "residual": self.residual,
            "converged": self.converged,
            "cycles": self.cycles,
        }


def branch_root(u: mpc, d: int, i: int, snap_tol: mpf) -> mpc:
    """The i-th inverse-branch root of u: argument in [2*pi*(i-1)/d, 2*pi*i/d).

    Near-real u is snapped onto the positive real axis first (tie at the
    sector boundary, resolved toward the lower sector); without the snap,
    rounding noise across the branch cut flips the sector for real orbits.
    """
    if not 1 <= i <= d:
        raise ValueError(f"branch index {i} outside 1..{d}")
    u = mpc(u)
    if abs(u.imag) <= snap_tol * abs(u):
        u = mpc(u.real, 0)
    r = abs(u)
    if r == 0:
        return mpc(0)
    a = mp.arg(u)
    if a < 0:
        a += 2 * mp.pi
    return r ** (mpf(1) / d) * mp.expjpi((a / mp.pi + 2 * (i - 1)) / d)


def _branch_root_f64(u: complex, d: int, i: int) -> complex:
    if abs(u.imag) <= 1e-13 * abs(u):
        u = complex(u.real, 0.0)
    r = abs(u)
    if r == 0.0:
        return 0.0j
    a = cmath.phase(u)
    if a < 0:
        a += 2 * math.pi
    return r ** (1.0 / d) * cmath.exp(1j * (a + 2 * math.pi * (i - 1)) / d)


def _validate(m: UnicriticalMap, word, radius: float) -> tuple[int, ...]:
    word = tuple(int(a) for a in word)
    if not word:
        raise ValueError("itinerary word must be non-empty")
    if any(not 1 <= a <= m.d for a in word):
        raise ValueError(f"word symbols must lie in 1..{m.d}: {word}")
    report = verify_disk_hypothesis(m, radius)
    if not report.ok:
        raise ValueError(
            "invariant-disk hypothesis fails for "
            f"radius {radius}: margins {report.critical_value_margin:.4g}, "
            f"{report.pullback_margin:.4g}"
        )
    return word


def itinerary_point(
    m: UnicriticalMap,
    word,
    *,
    radius: float,
    config: ItineraryConfig | None = None,
) -> ItineraryResult:
    """The periodic point whose orbit follows the cyclic branch word.

    Iterates the composed inverse branches g_{a1} o ... o g_{ak} from the
    disk center until a full cycle moves less than the displacement
    tolerance; the point then satisfies f^k(z) = z with the word as the
    sector itinerary of its orbit.
    """
    cfg = config or ItineraryConfig()
    word = _validate(m, word, radius)
    k = len(word)
    with workdps(cfg.dps):
        c = mpc(m.c)
        snap = cfg.snap_tol
        disp_tol = cfg.displacement_tol

        z64 = 0.0j
        c64 = complex(m.c)
        for _ in range(cfg.max_cycles):
            prev = z64
            for sym in reversed(word):
                z64 = _branch_root_f64(z64 - c64, m.d, sym)
            if abs(z64 - prev) < 1e-13:
                break

        z = mpc(z64)
        cycles = 0
        converged = False
        for cycles in range(1, cfg.max_cycles + 1):
            prev = z
            for sym in reversed(word):
                z = branch_root(z - c, m.d, sym, snap)
            if abs(z - prev) < disp_tol:
                converged = True
                break

        w = z
        for _ in range(k):
            w = w**m.d + c
        residual = float(abs(w - z))
        converged = converged and residual <= cfg.residual_tol
        return ItineraryResult(
            word=word, point=z, residual=residual, converged=converged, cycles=cycles
        )


@dataclass
class PeriodicPointCount:
    k: int
    count: int
    points: list[mpc]
    max_residual: float

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "count": self.count,
            "points": [[float(z.real), float(z.imag)] for z in self.points],
            "max_residual": self.max_residual,
        }


def count_periodic(
    m: UnicriticalMap,
    k: int,
    *,
    radius: float,
    config: ItineraryConfig | None = None,
) -> PeriodicPointCount:
    """Count fixed points of f^k by sweeping all d^k itinerary words.

    Points closer than the deduplication tolerance are merged (a safety net:
    under the disk hypothesis distinct words give distinct points), so the
    returned count is d^k exactly whenever the engine resolves every word.
    Raises NonConvergenceError if any word fails to converge.
    """
    if k < 1:
        raise ValueError(f"word length must be >= 1, got {k}")
    cfg = config or ItineraryConfig()
    results = []
    for word in itertools.product(range(1, m.d + 1), repeat=k):
        res = itinerary_point(m, word, radius=radius, config=cfg)
        if not res.converged:
            raise NonConvergenceError(
                f"itinerary {word} did not converge within {cfg.max_cycles} cycles "
                f"(residual {res.residual:.3g})"
            )
        results.append(res)

    pts = np.array([complex(r.point) for r in results])
    taken = np.zeros(len(pts), dtype=bool)
    representatives: list[mpc] = []
    for i in np.lexsort((pts.imag, pts.real)):
        if taken[i]:
            continue
        group = np.abs(pts - pts[i]) <= cfg.dedup_tol
        taken |= group
        representatives.append(results[int(i)].point)

    return PeriodicPointCount(
        k=k,
        count=len(representatives),
        points=representatives,
        max_residual=max(r.residual for r in results),
    )
