"""Extremal machinery: the edge-shrinking deformation flow, sampling
campaigns for the volume-maximization theorem and its relatives, the regular
family scan, flat degenerations, and exploratory tests for the open
conjectures.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import convert, domain, volume
from .errors import (
    DomainError,
    InconsistencyError,
    InvalidArgumentError,
    SamplingError,
)
from .tetra import (
    Tetrahedron,
    regular_from_angle,
    regular_from_length,
)

TIE_TOL = 1e-9
DEFAULT_DT = 1e-3
MARGIN_TOL = 1e-9
INDETERMINATE_BAND = 1e-6

TERMINATED_REGULAR = "regular"
TERMINATED_BOUNDARY = "boundary"
TERMINATED_BUDGET = "budget"
TERMINATED_MERGED = "merged"

CSV_HEADER = "t,l12,l13,l14,l34,l24,l23,volume"


@dataclass(frozen=True)
class Trajectory:
    """Sampled deformation path: (t, tetrahedron) pairs with metadata."""

    points: tuple
    ell_floor: float
    dt: float
    reason: str

    @property
    def volumes(self):
        return [tet.volume for _, tet in self.points]

    def to_csv(self):
        lines = [CSV_HEADER]
        for t, tet in self.points:
            cells = [f"{t:.17g}"] + [f"{l:.17g}" for l in tet.lengths]
            cells.append(f"{tet.volume:.17g}")
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


@dataclass
class VerificationReport:
    """Outcome of a sampling campaign."""

    campaign: str
    seed: int
    params: dict
    samples: int = 0
    passes: int = 0
    worst_margin: float = math.inf
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    max_witnesses: int = 5

    @property
    def failures(self):
        return self.samples - self.passes

    def record(self, tet, margin, passed):
        self.samples += 1
        if passed:
            self.passes += 1
        if margin < self.worst_margin:
            self.worst_margin = margin
        self.witnesses.append((margin, tet))
        self.witnesses.sort(key=lambda item: item[0])
        del self.witnesses[self.max_witnesses:]

    def to_json_dict(self):
        return {
            "campaign": self.campaign,
            "seed": self.seed,
            "params": self.params,
            "samples": self.samples,
            "passes": self.passes,
            "failures": self.failures,
            "worst_margin": None if math.isinf(self.worst_margin) else self.worst_margin,
            "witnesses": [
                {"margin": m, "tetrahedron": tet.to_json_dict()}
                for m, tet in self.witnesses
            ],
            "notes": list(self.notes),
        }


# --- sampling T_ell ------------------------------------------------------

_BATCH = 4096


def sample_T_ell(rng, ell, n, budget=None, require_volume_floor=None):
    """n tetrahedra with all edge lengths >= ell.

    Proposals are drawn uniformly over the full angle polytope (the set of
    length vectors above the floor meets every angle-sum regime, so acute
    restriction would miss most of it). Optionally also enforces a volume
    floor, in which case proposals come from the acute region, which is a
    necessary condition for the floor at vol(l0) and above.
    """
    if budget is None:
        budget = max(1_000_000, 20_000 * n)
    out = []
    draws = 0
    acute = require_volume_floor is not None
    high = math.pi / 2.0 if acute else math.pi
    while len(out) < n:
        if draws >= budget:
            raise SamplingError(
                f"T_ell sampler: budget {budget} exhausted after {len(out)}/{n}; "
                "consider a wider proposal distribution"
            )
        batch = rng.uniform(0.0, high, size=(_BATCH, 6))
        draws += _BATCH
        mask = domain.acute_mask(batch) if acute else domain.in_O_mask(batch)
        angles = batch[mask]
        if angles.size == 0:
            continue
        lengths = convert.angles_to_lengths_batch(angles)
        ok = np.all(np.isfinite(lengths), axis=1) & (np.nanmin(lengths, axis=1) >= ell)
        for a, l in zip(angles[ok], lengths[ok]):
            vol = volume.ushijima_volume(a)
            if require_volume_floor is not None and vol < require_volume_floor:
                continue
            out.append(Tetrahedron(tuple(a), tuple(l), vol))
            if len(out) == n:
                break
    return out


# --- deformation flow ----------------------------------------------------

def _tetra_from_lengths_checked(lengths, tol=1e-9):
    # in-chart validation plus construction without duplicate conversions
    try:
        angles = convert.lengths_to_angles(lengths)
        if not domain.in_O(angles, strict=True):
            return None
        back = convert.angles_to_lengths(angles)
        if np.max(np.abs(back - lengths)) >= tol:
            return None
        return Tetrahedron(tuple(angles), tuple(lengths), volume.ushijima_volume(angles))
    except (DomainError, InvalidArgumentError, InconsistencyError):
        return None


def deformation_flow(start, ell_floor, dt=DEFAULT_DT, max_steps=200_000):
    """Shrink the maximal-length edges in lockstep until the tetrahedron is
    regular, recording one tetrahedron per step.

    Each segment lowers the tied set of longest edges until it merges with
    the second-largest value; the tied set then grows and the process
    repeats. Termination reasons: ``regular`` (all six lengths merged),
    ``boundary`` (the path left the length chart, which the theorem rules
    out when the starting volume is at least vol of the regular tetrahedron
    of the floor length), or ``budget``.
    """
    if dt <= 0:
        raise InvalidArgumentError("dt must be positive")
    if start.min_length < ell_floor - 1e-9:
        raise DomainError(
            f"start tetrahedron has min length {start.min_length:.6g} below "
            f"the floor {ell_floor:.6g}"
        )
    points = [(0.0, start)]
    current = np.asarray(start.lengths, dtype=float)
    t_global = 0.0
    reason = TERMINATED_BUDGET
    steps = 0
    while steps < max_steps:
        lmax = float(current.max())
        lmin = float(current.min())
        if lmax - lmin < TIE_TOL:
            reason = TERMINATED_REGULAR
            break
        tied = current >= lmax - TIE_TOL
        second = float(current[~tied].max())
        seg_len = lmax - second
        if seg_len <= TIE_TOL:
            current[tied] = second
            continue
        n_sub = max(1, math.ceil(seg_len / dt))
        boundary_hit = False
        for sub in range(1, n_sub + 1):
            shift = min(sub * dt, seg_len)
            cand = current.copy()
            cand[tied] = second if sub == n_sub else lmax - shift
            tet = _tetra_from_lengths_checked(cand)
            steps += 1
            if tet is None:
                reason = TERMINATED_BOUNDARY
                boundary_hit = True
                break
            t_global = t_global + (shift - min((sub - 1) * dt, seg_len))
            points.append((t_global, tet))
            if steps >= max_steps:
                break
        if boundary_hit:
            break
        current[tied] = second
    else:
        reason = TERMINATED_BUDGET
    return Trajectory(tuple(points), float(ell_floor), float(dt), reason)


# --- campaigns -----------------------------------------------------------

def verify_theorem(ell, n, seed, tol=MARGIN_TOL):
    """Sample n tetrahedra of T_ell and check vol <= vol of the regular
    tetrahedron of edge length ell (plus tol). For ell > l0 the theorem is
    only conjectured; the report is flagged accordingly."""
    ell = float(ell)
    if ell <= 0:
        raise DomainError(f"ell must be positive, got {ell!r}")
    reference = regular_from_length(ell).volume
    report = VerificationReport(
        campaign="theorem",
        seed=seed,
        params={"ell": ell, "n": n, "tol": tol, "reference_volume": reference},
    )
    if ell > volume.L0 + 1e-12:
        report.notes.append(
            "conjecture regime: ell exceeds l0, outcome recorded, not asserted"
        )
    rng = np.random.default_rng(seed)
    for tet in sample_T_ell(rng, ell, n):
        margin = reference - tet.volume
        report.record(tet, margin, margin >= -tol)
    return report


def verify_fixed_angle_sum(theta_sum, n, seed, tol=MARGIN_TOL):
    """Sample n angle tuples with the prescribed total angle sum and check
    vol <= vol of the regular tetrahedron with angles theta_sum / 6."""
    theta_sum = float(theta_sum)
    if not 0.0 < theta_sum < 2.0 * math.pi:
        raise DomainError(
            f"theta_sum must lie in (0, 2*pi) so the regular comparison "
            f"tetrahedron exists, got {theta_sum!r}"
        )
    reference = regular_from_angle(theta_sum / 6.0).volume
    report = VerificationReport(
        campaign="fixed_angle_sum",
        seed=seed,
        params={"theta_sum": theta_sum, "n": n, "tol": tol, "reference_volume": reference},
    )
    rng = np.random.default_rng(seed)
    accepted = 0
    budget = max(1_000_000, 10_000 * max(n, 1))
    draws = 0
    while accepted < n:
        if draws >= budget:
            raise SamplingError("fixed-angle-sum sampler exhausted its budget")
        batch = rng.dirichlet(np.ones(6), size=_BATCH) * theta_sum
        draws += _BATCH
        mask = domain.in_O_mask(batch)
        for angles in batch[mask]:
            tet = Tetrahedron.from_angles(angles)
            margin = reference - tet.volume
            report.record(tet, margin, margin >= -tol)
            accepted += 1
            if accepted == n:
                break
    return report


def regular_volume_scan(ell_grid):
    """Volumes of the regular family along a grid of edge lengths."""
    return [(float(ell), regular_from_length(ell).volume) for ell in ell_grid]


def degeneration_path(steps, eps0=0.2, delta_ratio=2.5):
    """Walk the flattening family (eps, eps, pi - delta, eps, eps, pi - delta)
    down to the flat octagon limit (0, 0, pi, 0, 0, pi), evaluating the
    continuously extended volume. ``delta_ratio`` >= 2 keeps the path inside
    the closure of the angle polytope."""
    if steps < 2:
        raise InvalidArgumentError("degeneration_path needs at least 2 steps")
    if delta_ratio < 2.0:
        raise InvalidArgumentError("delta_ratio below 2 leaves the polytope closure")
    out = []
    for k in range(steps):
        eps = eps0 * (1.0 - k / (steps - 1))
        delta = delta_ratio * eps
        angles = (eps, eps, math.pi - delta, eps, eps, math.pi - delta)
        out.append((angles, volume.ushijima_volume(angles)))
    return out


# --- conjectures (exploratory; outputs are evidence, not gates) ----------

def conjecture_prima_test(tet, ell, tol=MARGIN_TOL):
    """Average-angle regularization test: holds when the regular tetrahedron
    with the mean dihedral angle keeps its edge length above ell."""
    theta_mean = sum(tet.angles) / 6.0
    if theta_mean >= math.pi / 3.0:
        raise DomainError(
            f"mean angle {theta_mean:.6g} has no regular tetrahedron"
        )
    regular = regular_from_angle(theta_mean)
    margin = regular.lengths[0] - float(ell)
    return margin >= -tol, margin


def conjecture_prima2_test(tet, ell, probes, seed, tol=MARGIN_TOL):
    """Search the convex hull of the 24 symmetric images of ``tet`` (vertices
    excluded) for another point of T_ell.

    Returns (nonempty, witness); a False result after the probe budget is
    inconclusive, not a refutation.
    """
    if tet.is_regular():
        raise DomainError("conjecture requires a non-regular tetrahedron")
    ell = float(ell)
    orbit = np.array(
        [domain.permute(sigma, tet.angles) for sigma in domain.ALL_PERMUTATIONS]
    )

    def try_point(angles):
        if min(np.max(np.abs(orbit - angles), axis=1)) < 1e-9:
            return None  # coincides with an orbit vertex
        candidate = Tetrahedron.from_angles(angles)
        if candidate.min_length >= ell - tol:
            return candidate
        return None

    # the orbit barycenter has all angles equal to the mean: test it first
    witness = try_point(orbit.mean(axis=0))
    if witness is not None:
        return True, witness
    rng = np.random.default_rng(seed)
    for _ in range(int(probes)):
        weights = rng.dirichlet(np.ones(len(orbit)))
        witness = try_point(weights @ orbit)
        if witness is not None:
            return True, witness
    return False, None
