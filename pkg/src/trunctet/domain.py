"""The dihedral-angle polytope, acute-angle constraints and the vertex
permutation action.

An angle configuration is admissible when all six entries are positive and
the three angles at each of the four vertices sum below pi; the set of such
6-tuples is an open convex polytope. Closure points (zero entries, vertex
sums equal to pi) are handled by the same predicates with ``strict=False``.
"""

import itertools
import math

import numpy as np

from .errors import InvalidArgumentError
from .indexing import EDGE_PAIRS, VERTEX_EDGES, edge_position

ACUTE_PAIR_BOUND = 7.0 * math.pi / 12.0

#: all 24 vertex permutations, as tuples (sigma(1), ..., sigma(4))
ALL_PERMUTATIONS = tuple(itertools.permutations((1, 2, 3, 4)))

IDENTITY_PERMUTATION = (1, 2, 3, 4)


def as_vector(values, name="vector"):
    """Validate and return a 6-vector as a float ndarray."""
    arr = np.asarray(values, dtype=float)
    if arr.shape != (6,):
        raise InvalidArgumentError(f"{name}: expected 6 entries, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError(f"{name}: non-finite entries in {arr!r}")
    return arr


def vertex_sums(angles):
    """The four sums of angles around each vertex, as a length-4 array."""
    a = as_vector(angles, "angles")
    return np.array([a[list(edges)].sum() for edges in VERTEX_EDGES])


def in_O(angles, strict=True, tol=0.0):
    """Membership in the angle polytope (its closure when strict=False).

    ``tol`` loosens every inequality by the given amount; it is used by
    callers that must absorb round-trip noise near the boundary.
    """
    a = as_vector(angles, "angles")
    sums = vertex_sums(a)
    if strict:
        return bool(np.all(a > -tol) and np.all(sums < math.pi + tol))
    return bool(np.all(a >= -tol) and np.all(sums <= math.pi + tol))


def acute_constraints_hold(angles):
    """Necessary angle constraints for volume at least that of the regular
    tetrahedron of edge length l0: total angle sum at most pi, every angle
    acute, and angles of any two edges sharing a vertex summing below 7pi/12.
    """
    a = as_vector(angles, "angles")
    if a.sum() > math.pi:
        return False
    if np.any(a >= math.pi / 2):
        return False
    for edges in VERTEX_EDGES:
        x, y, z = (a[p] for p in edges)
        if x + y >= ACUTE_PAIR_BOUND or x + z >= ACUTE_PAIR_BOUND or y + z >= ACUTE_PAIR_BOUND:
            return False
    return True


def _validate_permutation(sigma):
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != [1, 2, 3, 4]:
        raise InvalidArgumentError(f"not a permutation of 1..4: {sigma!r}")
    return sigma


def permute(sigma, angles):
    """Relabel vertices: entry at edge {i,j} becomes the entry at
    {sigma(i), sigma(j)} of the input."""
    sigma = _validate_permutation(sigma)
    a = as_vector(angles, "angles")
    out = np.empty(6)
    for pos, (i, j) in enumerate(EDGE_PAIRS):
        out[pos] = a[edge_position(sigma[i - 1], sigma[j - 1])]
    return out


def compose(sigma, tau):
    """Composition sigma o tau acting on vertex labels."""
    sigma = _validate_permutation(sigma)
    tau = _validate_permutation(tau)
    return tuple(sigma[tau[i] - 1] for i in range(4))


def permutation_moving_edge_to_front(pos):
    """A vertex permutation sending edge position ``pos`` to position 0."""
    i, j = EDGE_PAIRS[pos]
    rest = [v for v in (1, 2, 3, 4) if v not in (i, j)]
    # order (i, j, rest...) as images of (1, 2, 3, 4)
    return (i, j, rest[0], rest[1])


# --- vectorized helpers for the samplers -------------------------------

def in_O_mask(batch):
    """Strict polytope membership for an (m, 6) batch of angle rows."""
    A = np.asarray(batch, dtype=float)
    ok = np.all(A > 0.0, axis=1)
    for edges in VERTEX_EDGES:
        ok &= A[:, list(edges)].sum(axis=1) < math.pi
    return ok


def acute_mask(batch):
    """Acute-region membership for an (m, 6) batch of angle rows."""
    A = np.asarray(batch, dtype=float)
    ok = A.sum(axis=1) <= math.pi
    ok &= np.all(A < math.pi / 2, axis=1)
    for edges in VERTEX_EDGES:
        x, y, z = (A[:, p] for p in edges)
        ok &= (x + y < ACUTE_PAIR_BOUND) & (x + z < ACUTE_PAIR_BOUND) & (y + z < ACUTE_PAIR_BOUND)
    return ok
