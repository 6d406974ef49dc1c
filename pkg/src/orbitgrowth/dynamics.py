"""The unicritical family z -> z^d + c and its escape/containment geometry."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class UnicriticalMap:
    """f(z) = z^d + c with d >= 2; the only finite critical point is 0."""

    d: int
    c: complex

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"degree must be >= 2, got {self.d}")

    def __call__(self, z):
        return z**self.d + self.c


def escape_radius(m: UnicriticalMap) -> float:
    """R with |z| >= R implying |f(z)| >= 2|z|: R = max(2, (2+|c|)^(1/(d-1)))."""
    return max(2.0, (2.0 + abs(m.c)) ** (1.0 / (m.d - 1)))


@dataclass(frozen=True)
class DiskHypothesisReport:
    """Outcome of the invariant-disk check for U = disk(0, radius).

    ok requires the critical value to lie outside the closed disk
    (critical_value_margin = |c| - R > 0) and the closure of f^{-1}(U) to lie
    inside it (pullback_margin = R - (R+|c|)^(1/d) > 0).  Both bounds are
    exact for this family.
    """

    ok: bool
    radius: float
    critical_value_margin: float
    pullback_margin: float

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "radius": self.radius,
            "critical_value_margin": self.critical_value_margin,
            "pullback_margin": self.pullback_margin,
        }


def verify_disk_hypothesis(m: UnicriticalMap, radius: float) -> DiskHypothesisReport:
    """Check that U = disk(0, radius) avoids the critical value and pulls back
    compactly into itself, the setting in which every periodic symbol sequence
    is realized by a periodic point.

    >>> verify_disk_hypothesis(UnicriticalMap(2, -6), 4.0).ok
    True
    """
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    cv_margin = abs(m.c) - radius
    pb_margin = radius - (radius + abs(m.c)) ** (1.0 / m.d)
    return DiskHypothesisReport(
        ok=cv_margin > 0 and pb_margin > 0,
        radius=radius,
        critical_value_margin=cv_margin,
        pullback_margin=pb_margin,
    )
