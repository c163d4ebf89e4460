"""Closed-form conversion between dihedral angles and edge lengths, and the
operational membership test for the length chart.

With {i,j,k,l} = {1,2,3,4} the conversions are

    cosh l_ij = c_ij / sqrt(d_i d_j)        (angles -> lengths)
    cos theta_ij = w_ij / sqrt(z_k z_l)     (lengths -> angles)

where d_i, c_ij are polynomial in the cosines of the angles and z_i, w_ij
mirror them in the hyperbolic cosines of the lengths.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import domain
from .errors import InconsistencyError, NotATetrahedronError, NotInClosureError
from .indexing import (
    EDGE_PAIRS,
    OPPOSITE,
    OPPOSITE_FACE_EDGES,
    VERTEX_EDGES,
    edge_position,
)
from .specfun import EPS_CLAMP


def _d_coeffs(cos_angles):
    out = np.empty(4)
    for vertex in range(4):
        x, y, z = (cos_angles[p] for p in VERTEX_EDGES[vertex])
        out[vertex] = 2.0 * x * y * z + x * x + y * y + z * z - 1.0
    return out


def _z_coeffs(cosh_lengths):
    out = np.empty(4)
    for vertex in range(4):
        x, y, z = (cosh_lengths[p] for p in OPPOSITE_FACE_EDGES[vertex])
        out[vertex] = 2.0 * x * y * z + x * x + y * y + z * z - 1.0
    return out


def _c_coeffs(cos_angles):
    c = np.empty(6)
    for pos, (i, j) in enumerate(EDGE_PAIRS):
        k, l = EDGE_PAIRS[OPPOSITE[pos]]
        cij = cos_angles[pos]
        cik = cos_angles[edge_position(i, k)]
        cil = cos_angles[edge_position(i, l)]
        cjk = cos_angles[edge_position(j, k)]
        cjl = cos_angles[edge_position(j, l)]
        ckl = cos_angles[OPPOSITE[pos]]
        c[pos] = (
            cij * (cil * cjk + cik * cjl)
            + cil * cjl
            + cik * cjk
            + ckl * (1.0 - cij * cij)
        )
    return c


def _w_coeffs(cosh_lengths):
    w = np.empty(6)
    for pos, (i, j) in enumerate(EDGE_PAIRS):
        k, l = EDGE_PAIRS[OPPOSITE[pos]]
        hij = cosh_lengths[pos]
        hik = cosh_lengths[edge_position(i, k)]
        hil = cosh_lengths[edge_position(i, l)]
        hjk = cosh_lengths[edge_position(j, k)]
        hjl = cosh_lengths[edge_position(j, l)]
        hkl = cosh_lengths[OPPOSITE[pos]]
        w[pos] = (
            hij * (hil * hjk + hik * hjl)
            + hik * hil
            + hjk * hjl
            - (hij * hij - 1.0) * hkl
        )
    return w


@dataclass(frozen=True)
class ConversionCoefficients:
    """The intermediate quantities of both conversion directions for one
    coherent (angles, lengths) pair."""

    d: np.ndarray
    c: np.ndarray
    z: np.ndarray
    w: np.ndarray

    @classmethod
    def from_pair(cls, angles, lengths):
        d, c = coefficients_from_angles(angles)
        lengths = domain.as_vector(lengths, "lengths")
        ch = np.cosh(lengths)
        return cls(d=d, c=c, z=_z_coeffs(ch), w=_w_coeffs(ch))


def coefficients_from_angles(angles):
    """The vertex coefficients d_1..d_4 and edge coefficients c_ij."""
    a = domain.as_vector(angles, "angles")
    cos_angles = np.cos(a)
    return _d_coeffs(cos_angles), _c_coeffs(cos_angles)


def angles_to_lengths(angles, eps_clamp=EPS_CLAMP):
    """Edge lengths of the tetrahedron with the given dihedral angles."""
    a = domain.as_vector(angles, "angles")
    d, c = coefficients_from_angles(a)
    if np.any(d <= 0.0):
        vertex = int(np.argmin(d)) + 1
        raise NotATetrahedronError(
            f"vertex coefficient d_{vertex} = {d[vertex - 1]:.6g} is not positive",
            index=vertex,
            value=d[vertex - 1],
        )
    lengths = np.empty(6)
    for pos, (i, j) in enumerate(EDGE_PAIRS):
        arg = c[pos] / math.sqrt(d[i - 1] * d[j - 1])
        if arg < 1.0 - eps_clamp:
            raise NotATetrahedronError(
                f"cosh argument {arg:.6g} < 1 at edge {{{i},{j}}}",
                index=(i, j),
                value=arg,
            )
        lengths[pos] = math.acosh(max(arg, 1.0))
    return lengths


def lengths_to_angles(lengths, eps_clamp=EPS_CLAMP, closure_tol=1e-9):
    """Dihedral angles of the tetrahedron with the given edge lengths.

    On interior points of the length chart the result lies strictly inside
    the angle polytope; closure points (e.g. flattening families) land on
    its boundary and are accepted within ``closure_tol``.
    """
    l = domain.as_vector(lengths, "lengths")
    ch = np.cosh(l)
    z = _z_coeffs(ch)
    if np.any(z <= 0.0):
        vertex = int(np.argmin(z)) + 1
        raise NotInClosureError(
            f"vertex coefficient z_{vertex} = {z[vertex - 1]:.6g} is not positive",
            value=z[vertex - 1],
        )
    w = _w_coeffs(ch)
    angles = np.empty(6)
    for pos, (i, j) in enumerate(EDGE_PAIRS):
        k, l_ = EDGE_PAIRS[OPPOSITE[pos]]
        arg = w[pos] / math.sqrt(z[k - 1] * z[l_ - 1])
        if abs(arg) > 1.0 + eps_clamp:
            raise NotInClosureError(
                f"cosine argument {arg:.6g} exceeds 1 at edge {{{i},{j}}}",
                value=arg,
            )
        angles[pos] = math.acos(min(1.0, max(-1.0, arg)))
    if not domain.in_O(angles, strict=False, tol=closure_tol):
        raise InconsistencyError(
            f"angles {angles!r} computed from lengths lie outside the closure "
            "of the angle polytope"
        )
    return angles


def in_L(lengths, tol=1e-9):
    """Operational membership in the length chart: the angle conversion must
    succeed, land strictly inside the angle polytope, and convert back to the
    input within ``tol``."""
    try:
        l = domain.as_vector(lengths, "lengths")
        if np.any(l <= 0.0):
            return False
        angles = lengths_to_angles(l)
        if not domain.in_O(angles, strict=True):
            return False
        back = angles_to_lengths(angles)
    except (NotInClosureError, NotATetrahedronError, InconsistencyError):
        return False
    return bool(np.max(np.abs(back - l)) < tol)


# --- vectorized batch conversion for the samplers -----------------------

def angles_to_lengths_batch(batch):
    """Vectorized angles -> lengths for an (m, 6) batch.

    Rows that fail the positivity guards come back as NaN instead of
    raising; campaign samplers treat those rows as rejected.
    """
    A = np.asarray(batch, dtype=float)
    cos_angles = np.cos(A)
    m = A.shape[0]
    d = np.empty((m, 4))
    for vertex in range(4):
        x, y, z = (cos_angles[:, p] for p in VERTEX_EDGES[vertex])
        d[:, vertex] = 2.0 * x * y * z + x * x + y * y + z * z - 1.0
    lengths = np.full((m, 6), np.nan)
    valid = np.all(d > 0.0, axis=1)
    for pos, (i, j) in enumerate(EDGE_PAIRS):
        k, l = EDGE_PAIRS[OPPOSITE[pos]]
        cij = cos_angles[:, pos]
        cik = cos_angles[:, edge_position(i, k)]
        cil = cos_angles[:, edge_position(i, l)]
        cjk = cos_angles[:, edge_position(j, k)]
        cjl = cos_angles[:, edge_position(j, l)]
        ckl = cos_angles[:, OPPOSITE[pos]]
        c = cij * (cil * cjk + cik * cjl) + cil * cjl + cik * cjk + ckl * (1.0 - cij * cij)
        with np.errstate(invalid="ignore", divide="ignore"):
            arg = np.where(valid, c / np.sqrt(d[:, i - 1] * d[:, j - 1]), np.nan)
        row_ok = valid & (arg >= 1.0 - EPS_CLAMP)
        lengths[row_ok, pos] = np.arccosh(np.maximum(arg[row_ok], 1.0))
    lengths[~np.all(np.isfinite(lengths), axis=1)] = np.nan
    return lengths
