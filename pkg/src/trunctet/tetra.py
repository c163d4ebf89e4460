"""The Tetrahedron record (coherent angle/length pair with cached volume),
the regular one-parameter family, and rejection samplers over the angle
polytope.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from . import convert, domain, volume
from .errors import AccuracyError, DomainError, InvalidArgumentError, SamplingError

ROUND_TRIP_TOL = 1e-9


@dataclass(frozen=True)
class Tetrahedron:
    """Marked isometry class: dihedral angles, edge lengths and volume.

    Instances are immutable values; construct them through ``from_angles`` /
    ``from_lengths`` so that the three fields stay coherent.
    """

    angles: tuple
    lengths: tuple
    volume: float

    @classmethod
    def from_angles(cls, angles):
        a = domain.as_vector(angles, "angles")
        if not domain.in_O(a, strict=True):
            raise DomainError(f"angles {a!r} not interior to the angle polytope")
        lengths = convert.angles_to_lengths(a)
        return cls(tuple(a), tuple(lengths), volume.ushijima_volume(a))

    @classmethod
    def from_lengths(cls, lengths):
        l = domain.as_vector(lengths, "lengths")
        angles = convert.lengths_to_angles(l)
        if not domain.in_O(angles, strict=True):
            raise DomainError(f"lengths {l!r} lie on the boundary of the length chart")
        return cls(tuple(angles), tuple(l), volume.ushijima_volume(angles))

    @property
    def min_length(self):
        return min(self.lengths)

    @property
    def max_length(self):
        return max(self.lengths)

    def is_regular(self, tol=1e-9):
        return self.max_length - self.min_length < tol

    def maximal_edge_count(self, tie_tol=1e-9):
        """Number of edges whose length ties with the maximum."""
        return sum(1 for l in self.lengths if l >= self.max_length - tie_tol)

    def permuted(self, sigma):
        return Tetrahedron.from_angles(domain.permute(sigma, self.angles))

    def to_json_dict(self):
        return {
            "angles": [float(f"{x:.17g}") for x in self.angles],
            "lengths": [float(f"{x:.17g}") for x in self.lengths],
            "volume": float(f"{self.volume:.17g}"),
        }

    @classmethod
    def from_json_dict(cls, record):
        return cls(
            tuple(float(x) for x in record["angles"]),
            tuple(float(x) for x in record["lengths"]),
            float(record["volume"]),
        )


THETA_MAX = math.pi / 3.0


def regular_length_of_angle(theta):
    """Common edge length of the regular tetrahedron with angle theta."""
    if not 0.0 < theta < THETA_MAX:
        raise DomainError(f"regular angle must lie in (0, pi/3), got {theta!r}")
    return float(convert.angles_to_lengths([theta] * 6)[0])


def regular_from_angle(theta):
    theta = float(theta)
    if not 0.0 < theta < THETA_MAX:
        raise DomainError(f"regular angle must lie in (0, pi/3), got {theta!r}")
    return Tetrahedron.from_angles([theta] * 6)


def regular_from_length(ell, xtol=1e-12):
    """Regular tetrahedron of edge length ell, by bisection on the strictly
    increasing map theta -> common length."""
    ell = float(ell)
    if ell <= 0.0 or not math.isfinite(ell):
        raise DomainError(f"regular length must be positive, got {ell!r}")
    lo, hi = 1e-9, THETA_MAX - 1e-9
    if regular_length_of_angle(lo) >= ell:
        raise DomainError(f"length {ell!r} below the resolvable range")
    if regular_length_of_angle(hi) <= ell:
        raise AccuracyError(f"length {ell!r} too close to the divergent flat limit")
    theta = bisect(lambda t: regular_length_of_angle(t) - ell, lo, hi, xtol=xtol)
    return regular_from_angle(theta)


# --- samplers -----------------------------------------------------------

INTERIOR = "interior"
ACUTE = "acute"
VOLUME_FLOOR = "volume_floor"

_BATCH = 4096


def _propose(rng, constraint):
    high = math.pi if constraint == INTERIOR else math.pi / 2.0
    return rng.uniform(0.0, high, size=(_BATCH, 6))


def sample_O_batch(rng, n, constraint=INTERIOR, floor=None, budget=1_000_000):
    """n angle rows satisfying the constraint, by rejection sampling.

    Deterministic for a given Generator state. ``floor`` is the volume floor
    for the ``volume_floor`` constraint, whose proposals are drawn from the
    acute region (a necessary condition for volume above vol at l0).
    """
    if constraint not in (INTERIOR, ACUTE, VOLUME_FLOOR):
        raise InvalidArgumentError(f"unknown constraint {constraint!r}")
    if constraint == VOLUME_FLOOR and floor is None:
        raise InvalidArgumentError("volume_floor constraint requires a floor value")
    rows = []
    draws = 0
    while len(rows) < n:
        if draws >= budget:
            raise SamplingError(
                f"rejection budget {budget} exhausted after {len(rows)}/{n} accepted"
            )
        batch = _propose(rng, INTERIOR if constraint == INTERIOR else ACUTE)
        draws += _BATCH
        if constraint == INTERIOR:
            mask = domain.in_O_mask(batch)
        else:
            mask = domain.acute_mask(batch)
        accepted = batch[mask]
        if constraint == VOLUME_FLOOR:
            accepted = [a for a in accepted if volume.ushijima_volume(a) >= floor]
        rows.extend(np.asarray(a) for a in accepted)
    return [np.asarray(r) for r in rows[:n]]


def sample_O(rng, constraint=INTERIOR, floor=None, budget=1_000_000):
    """One point of the angle polytope satisfying the requested constraint."""
    return sample_O_batch(rng, 1, constraint, floor, budget)[0]
