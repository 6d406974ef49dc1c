"""External-ray tracing and landing classification for z -> z^d + c.

Rays are traced by inward pullback: the whole forward orbit of an angle (a
finite set, since angles are rational) is followed simultaneously level by
level, the sample of angle a at potential R^(1/d^(k+1)) being the preimage of
the angle d*a sample one level up, taken along the branch that continues the
ray.  Near a repelling landing point the pullback contracts, so the terminal
samples cluster at the landing point; the cluster diameter is the reported
convergence residual.

Periodic angles whose rays land at the same boundary point form one landing
class; classes are recovered by tolerance grouping of the landed endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .circle import Angle, multiply, orbit, periodic_angles
from .dynamics import UnicriticalMap, escape_radius

TWO_PI = 2.0 * math.pi


@dataclass
class RayConfig:
    """Tracing and grouping knobs; the defaults suit strongly repelling
    landing points (nearly parabolic ones need far more depth)."""

    depth: int = 48
    substeps: int = 8
    landing_tol: float = 1e-9
    newton_tol: float = 1e-12
    max_newton: int = 64
    deriv_tol: float = 1e-6
    grouping_tol: float = 1e-6
    unresolved_frac: float = 0.1
    cluster_size: int = 5

    def __post_init__(self):
        for name in ("landing_tol", "newton_tol", "deriv_tol", "grouping_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.depth < 1 or self.substeps < 1:
            raise ValueError("depth and substeps must be >= 1")


@dataclass
class RayTrace:
    angle: Angle
    points: list[complex]          # one sample per level, escape circle inward
    landing: complex | None
    converged: bool
    residual: float                # terminal cluster diameter
    step_residuals: list[float]    # max pullback residual per level
    hit_critical_pullback: bool = False

    def to_dict(self) -> dict:
        return {
            "angle": str(self.angle),
            "points": [[z.real, z.imag] for z in self.points],
            "landing": None if self.landing is None else [self.landing.real, self.landing.imag],
            "converged": self.converged,
            "residual": self.residual,
            "hit_critical_pullback": self.hit_critical_pullback,
        }


def chebyshev_oracle(theta: Angle | Fraction) -> float:
    """Exact landing point of the theta-ray for z^2 - 2: two times cos(2*pi*theta).

    The map w -> w^2 outside the unit disk is carried to z -> z^2 - 2 outside
    [-2, 2] by z = w + 1/w, which sends e^(2*pi*i*theta) to 2*cos(2*pi*theta);
    this is an independent analytic check for the tracer.
    """
    return 2.0 * math.cos(TWO_PI * float(theta))


def _trace_family(
    m: UnicriticalMap, angles: list[Angle], config: RayConfig
) -> dict[Angle, RayTrace]:
    """Trace all rays of a multiplication-closed family of angles at once."""
    d, c = m.d, complex(m.c)
    index = {a: i for i, a in enumerate(angles)}
    try:
        perm = np.array([index[multiply(a, d)] for a in angles])
    except KeyError as exc:
        raise ValueError(f"angle family not closed under multiplication: {exc}") from None

    n = len(angles)
    s = config.substeps
    depth = config.depth
    logR = math.log(escape_radius(m))
    phase = np.exp(2j * math.pi * np.array([float(a) for a in angles]))
    branch_phases = np.exp(2j * math.pi * np.arange(d) / d)

    # rings[i] holds sublevel i - s, at potential R^(d^((s-i)/s)); sublevels
    # -s..0 sit on or above the escape circle, where the ray is (to first
    # order) the straight angular ray itself.
    rings: list[np.ndarray] = [
        math.exp(logR * d ** ((s - i) / s)) * phase for i in range(s + 1)
    ]

    samples = np.empty((depth + 1, n), dtype=complex)
    samples[0] = rings[-1]
    step_res = np.zeros((depth + 1, n))
    critical_hit = np.zeros(n, dtype=bool)
    level_res = np.zeros(n)

    for j in range(1, depth * s + 1):
        w = rings[j][perm]              # sublevel j - s, one level up the ray
        seeds = rings[-1]               # sublevel j - 1
        u = w - c
        r = np.abs(u) ** (1.0 / d)
        ang = np.angle(u)
        ang = np.where(ang < 0.0, ang + TWO_PI, ang)
        cand = (r * np.exp(1j * ang / d))[:, None] * branch_phases[None, :]
        pick = np.argmin(np.abs(cand - seeds[:, None]), axis=1)
        z = cand[np.arange(n), pick]

        fz = z**d + c - w
        for _ in range(config.max_newton):
            bad = np.abs(fz) > config.newton_tol
            if not bad.any():
                break
            dfz = d * z ** (d - 1)
            safe = np.where(dfz != 0, dfz, 1.0)
            z = z - np.where(bad & (dfz != 0), fz / safe, 0.0)
            fz = z**d + c - w

        critical_hit |= d * np.abs(z) ** (d - 1) < config.deriv_tol
        level_res = np.maximum(level_res, np.abs(fz))
        rings.append(z)
        if j % s == 0:
            level = j // s
            samples[level] = z
            step_res[level] = level_res
            level_res = np.zeros(n)

    traces: dict[Angle, RayTrace] = {}
    tail = min(config.cluster_size, depth + 1)
    cluster = samples[depth + 1 - tail:]
    for i, a in enumerate(angles):
        col = cluster[:, i]
        finite = bool(np.all(np.isfinite(samples[:, i])))
        diam = float(np.max(np.abs(col[:, None] - col[None, :]))) if finite else math.inf
        ok = (
            finite
            and diam <= config.landing_tol
            and float(step_res[:, i].max()) <= config.newton_tol
        )
        traces[a] = RayTrace(
            angle=a,
            points=[complex(v) for v in samples[:, i]],
            landing=complex(samples[depth, i]) if ok else None,
            converged=ok,
            residual=diam,
            step_residuals=[float(v) for v in step_res[:, i]],
            hit_critical_pullback=bool(critical_hit[i]),
        )
    return traces


def trace_ray(
    m: UnicriticalMap,
    theta: Angle | Fraction | str,
    depth: int | None = None,
    config: RayConfig | None = None,
) -> RayTrace:
    """Trace the external ray at a rational angle and report its landing.

    The forward orbit of theta is traced along the way (it feeds the
    pullback), so preperiodic angles work as well as periodic ones.
    """
    theta = theta if isinstance(theta, Angle) else Angle(Fraction(theta))
    cfg = config or RayConfig()
    if depth is not None:
        cfg = replace(cfg, depth=depth)
    return _trace_family(m, orbit(theta, m.d), cfg)[theta]


@dataclass
class LandingClassification:
    """Landing classes of the period-nu angles: angles grouped by endpoint."""

    map: UnicriticalMap
    nu: int
    classes: list[list[Angle]]
    representatives: list[complex]
    unresolved: list[Angle]
    unreliable: bool
    max_class_diameter: float
    traces: dict[Angle, RayTrace] = field(repr=False, default_factory=dict)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "d": self.map.d,
            "c": [self.map.c.real, self.map.c.imag],
            "nu": self.nu,
            "classes": [[str(a) for a in cls] for cls in self.classes],
            "representatives": [[z.real, z.imag] for z in self.representatives],
            "unresolved": [str(a) for a in self.unresolved],
            "unreliable": self.unreliable,
            "max_class_diameter": self.max_class_diameter,
        }


def classify_landing(
    m: UnicriticalMap,
    nu: int,
    depth: int | None = None,
    config: RayConfig | None = None,
) -> LandingClassification:
    """Group the angles of period dividing nu by the landing point of their rays.

    Unconverged rays are reported in `unresolved`, never silently dropped;
    the classification is flagged unreliable when too large a fraction fails.
    The class count is a computable lower bound for the number of fixed
    points of the nu-th iterate on the boundary.
    """
    cfg = config or RayConfig()
    if depth is not None:
        cfg = replace(cfg, depth=depth)
    angles = periodic_angles(m.d, nu)
    traces = _trace_family(m, angles, cfg)

    landed = [a for a in angles if traces[a].converged]
    unresolved = [a for a in angles if not traces[a].converged]
    points = np.array([traces[a].landing for a in landed], dtype=complex)

    parent = list(range(len(landed)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if len(landed) > 1:
        close = np.abs(points[:, None] - points[None, :]) <= cfg.grouping_tol
        for i, j in zip(*np.nonzero(np.triu(close, k=1))):
            ri, rj = find(int(i)), find(int(j))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[int]] = {}
    for i in range(len(landed)):
        groups.setdefault(find(i), []).append(i)

    classes = sorted(
        (sorted(landed[i] for i in members) for members in groups.values()),
        key=lambda cls: cls[0],
    )
    representatives = [traces[cls[0]].landing for cls in classes]
    max_diam = 0.0
    for members in groups.values():
        if len(members) > 1:
            pts = points[members]
            max_diam = max(max_diam, float(np.max(np.abs(pts[:, None] - pts[None, :]))))

    return LandingClassification(
        map=m,
        nu=nu,
        classes=classes,
        representatives=representatives,
        unresolved=unresolved,
        unreliable=len(unresolved) > cfg.unresolved_frac * len(angles),
        max_class_diameter=max_diam,
        traces=traces,
    )


def classes_noncrossing(classes: list[list[Angle]]) -> bool:
    """True iff no two classes interleave around the circle.

    On the circle, class B avoids interleaving class A exactly when B fits
    strictly inside a single arc between consecutive points of A, so the
    one-sided containment test decides the symmetric relation.
    """
    fracs = [[Fraction(x) for x in cls] for cls in classes]
    for i, anchor in enumerate(fracs):
        if len(anchor) < 2:
            continue
        anchor = sorted(anchor)
        for j, other in enumerate(fracs):
            if i != j and not _fits_one_gap(anchor, other):
                return False
    return True


def _fits_one_gap(anchor: list[Fraction], other: list[Fraction]) -> bool:
    n = len(anchor)
    for k in range(n):
        start = anchor[k]
        width = (anchor[(k + 1) % n] - start) % 1
        if all(0 < (y - start) % 1 < width for y in other):
            return True
    return False
