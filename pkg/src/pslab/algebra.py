"""Linear algebra over pseudo-Euclidean spaces E^n_t.

Everything downstream works in E^5_2 with metric diag(-1,-1,+1,+1,+1) --
the two timelike coordinates always come first.  Data given in other
orderings is permuted when it is ingested, never at computation time.
"""
from __future__ import annotations

import dataclasses
import math

import numpy as np

from .errors import GeometryError, SignatureMismatchError


@dataclasses.dataclass(frozen=True)
class Signature:
    """Signature of E^n_t: dimension ``n`` and index ``t``.

    The metric is diag(-1, ..., -1, +1, ..., +1) with exactly ``index``
    leading -1 entries.
    """

    dim: int
    index: int

    def __post_init__(self):
        if self.dim <= 0 or not 0 <= self.index <= self.dim:
            raise ValueError(f"invalid signature (dim={self.dim}, index={self.index})")

    @property
    def signs(self) -> np.ndarray:
        s = np.ones(self.dim)
        s[: self.index] = -1.0
        return s


#: The ambient signature used by the whole package.
E52 = Signature(5, 2)

#: Default tolerance for causal classification of computed values.
CAUSAL_TOL = 1e-10

#: Expected Gram matrix of a pseudo-orthonormal (null) frame {f1,f2,f3,f4}:
#: <f1,f2> = <f3,f4> = -1, all other pairs 0.
GRAM_NULL = np.array(
    [
        [0.0, -1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)

#: Expected Gram matrix of an orthonormal tangent/normal frame {e1,e2,e3,e4}
#: with e1, e4 timelike and e2, e3 spacelike.
GRAM_ORTHONORMAL = np.diag([-1.0, 1.0, 1.0, -1.0])


class PseudoVector:
    """A point or vector of E^n_t: components plus the attached signature."""

    __slots__ = ("components", "signature")

    def __init__(self, components, signature: Signature = E52):
        arr = np.array(components, dtype=float)
        if arr.shape != (signature.dim,):
            raise ValueError(
                f"expected {signature.dim} components, got shape {arr.shape}"
            )
        self.components = arr
        self.signature = signature

    def __add__(self, other: "PseudoVector") -> "PseudoVector":
        _check_signature(self, other)
        return PseudoVector(self.components + other.components, self.signature)

    def __sub__(self, other: "PseudoVector") -> "PseudoVector":
        _check_signature(self, other)
        return PseudoVector(self.components - other.components, self.signature)

    def __mul__(self, scalar: float) -> "PseudoVector":
        return PseudoVector(self.components * float(scalar), self.signature)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "PseudoVector":
        return PseudoVector(self.components / float(scalar), self.signature)

    def __neg__(self) -> "PseudoVector":
        return PseudoVector(-self.components, self.signature)

    def __repr__(self) -> str:
        body = ", ".join(repr(c) for c in self.components)
        return f"PseudoVector([{body}])"


@dataclasses.dataclass(frozen=True)
class CausalCharacter:
    """Causal class of a vector: spacelike, timelike or null."""

    kind: str
    tol: float


def _check_signature(u: PseudoVector, v: PseudoVector) -> None:
    if u.signature != v.signature:
        raise SignatureMismatchError(
            f"signature mismatch: {u.signature} vs {v.signature}"
        )


def inner(u: PseudoVector, v: PseudoVector) -> float:
    """Indefinite inner product -sum_{i<=t} u_i v_i + sum_{i>t} u_i v_i."""
    _check_signature(u, v)
    return float(np.dot(u.components * u.signature.signs, v.components))


def inner_scale(u: PseudoVector, v: PseudoVector) -> float:
    """Magnitude scale sum_i |u_i v_i| of the inner product.

    The floating-point error of ``inner(u, v)`` is bounded by a small
    multiple of this scale times machine epsilon, so residuals of
    constraint equations are meaningfully compared against
    ``max(1, inner_scale(...)) * tol`` rather than ``tol`` alone when the
    components are large (e.g. near coordinate poles).
    """
    _check_signature(u, v)
    return float(np.dot(np.abs(u.components), np.abs(v.components)))


def causal_character(v: PseudoVector, tol: float = CAUSAL_TOL) -> CausalCharacter:
    """Classify ``v`` as spacelike (<v,v> > tol), timelike (< -tol) or null."""
    if tol < 0:
        raise ValueError("tol must be non-negative")
    n2 = inner(v, v)
    if n2 > tol:
        kind = "spacelike"
    elif n2 < -tol:
        kind = "timelike"
    else:
        kind = "null"
    return CausalCharacter(kind, tol)


def sphere_membership(v: PseudoVector, r2: float = 1.0) -> float:
    """Residual |<v,v> - 1/r2| of membership in the pseudo-sphere S^{n-1}_t."""
    if r2 <= 0:
        raise ValueError("r2 must be positive")
    return abs(inner(v, v) - 1.0 / r2)


def gram_residual(frame, expected) -> float:
    """Max over pairs (A,B) of |<f_A, f_B> - expected[A][B]|."""
    expected = np.asarray(expected, dtype=float)
    n = len(frame)
    worst = 0.0
    for a in range(n):
        for b in range(n):
            worst = max(worst, abs(inner(frame[a], frame[b]) - expected[a, b]))
    return float(worst)


def sign_fixed(v, tol: float = 1e-12):
    """Flip ``v`` so its first component exceeding ``tol`` in magnitude is > 0.

    Works on any vector type supporting ``.components`` and unary minus;
    returns ``v`` unchanged when every component is below the threshold.
    """
    for c in np.asarray(v.components, dtype=float):
        if abs(c) > tol:
            return v if c > 0 else -v
    return v


def orthonormal_tangent_normal_frame(
    x: PseudoVector,
    xs: PseudoVector,
    xt: PseudoVector,
    pivot_tol: float = 1e-11,
):
    """Orthonormal frame {e1,e2,e3,e4} adapted to a spherical surface point.

    ``x`` must be unit spacelike (the position vector of a point on the
    unit pseudo-sphere) and span{xs, xt} a Lorentzian tangent plane.  Returns
    e1 (unit timelike tangent), e2 (unit spacelike tangent), e3 (unit
    spacelike normal), e4 (unit timelike normal), all orthogonal to ``x``,
    with Gram matrix diag(-1, 1, 1, -1).  Signs are fixed deterministically
    (first component above 1e-12 in magnitude made positive).
    """
    if abs(inner(x, x) - 1.0) > 1e-6:
        raise GeometryError(f"position vector is not unit spacelike: <x,x>={inner(x, x)!r}")

    g = np.array(
        [[inner(xs, xs), inner(xs, xt)], [inner(xt, xs), inner(xt, xt)]]
    )
    det = g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
    if abs(det) < 1e-12:
        raise GeometryError(f"degenerate tangent plane (det g = {det!r})")
    evals, evecs = np.linalg.eigh(g)
    if not (evals[0] < 0.0 < evals[1]):
        raise GeometryError(f"tangent plane is not Lorentzian (eigenvalues {evals!r})")

    w1 = evecs[0, 0] * xs + evecs[1, 0] * xt
    w2 = evecs[0, 1] * xs + evecs[1, 1] * xt
    e1 = sign_fixed(w1 / math.sqrt(-evals[0]))
    e2 = sign_fixed(w2 / math.sqrt(evals[1]))

    # Normal space: solve <n,x> = <n,xs> = <n,xt> = 0 by a rank-revealing SVD.
    signs = x.signature.signs
    a = np.vstack(
        [x.components * signs, xs.components * signs, xt.components * signs]
    )
    _, sv, vt = np.linalg.svd(a)
    if sv[2] < pivot_tol:
        raise GeometryError(f"normal space is ill-defined (singular values {sv!r})")
    seeds = [
        PseudoVector(vt[3], x.signature),
        PseudoVector(vt[4], x.signature),
    ]
    e3, e4 = _normal_pair(seeds)
    return [e1, e2, e3, e4]


def seed_candidates(n1, n2):
    """The combination candidates tried when orthonormalizing seeds.

    Works on plain vectors and jet-valued vectors alike, so a smooth
    construction can replay the discrete choice made at a base point.
    """
    return [n1, n2, n1 + n2, n1 - n2]


def normal_pair_choices(seeds):
    """Discrete data of the normal-pair orthonormalization at a point.

    Returns (first_index, second_index, eps1) where the indices select
    from ``seed_candidates`` and eps1 is the causal sign of the first
    orthonormalized vector.  Split out from ``_normal_pair`` so that
    frame *fields* can freeze these choices and rebuild the frame with
    smooth (jet) arithmetic.
    """
    cands = seed_candidates(*seeds)
    norms = [inner(c, c) for c in cands]
    i = int(np.argmax(np.abs(norms)))
    if abs(norms[i]) < 1e-10:
        raise GeometryError("normal space is totally degenerate")
    b1 = cands[i] / math.sqrt(abs(norms[i]))
    eps1 = 1.0 if norms[i] > 0 else -1.0

    best = None
    for j, c in enumerate(cands):
        if j == i:
            continue
        d = c - (inner(c, b1) / eps1) * b1
        n2d = inner(d, d)
        if best is None or abs(n2d) > abs(best[2]):
            best = (j, d, n2d)
    j, d, n2d = best
    if abs(n2d) < 1e-10:
        raise GeometryError("normal space is totally degenerate")
    eps2 = 1.0 if n2d > 0 else -1.0
    if eps1 * eps2 > 0:
        raise GeometryError("normal space does not have signature (-,+)")
    return i, j, eps1


def _normal_pair(seeds):
    """Orthonormalize a 2-dim normal space of signature (-,+).

    Uses a candidate-maximization rule so the construction is stable even
    when the seed vectors are nearly null: among n1, n2, n1+n2, n1-n2 pick
    the candidate of largest |<v,v>| first.
    """
    i, j, eps1 = normal_pair_choices(seeds)
    cands = seed_candidates(*seeds)
    c1 = cands[i]
    b1 = sign_fixed(c1 / math.sqrt(abs(inner(c1, c1))))
    d = cands[j] - (inner(cands[j], b1) / eps1) * b1
    b2 = sign_fixed(d / math.sqrt(abs(inner(d, d))))
    if eps1 > 0:
        return b1, b2  # b1 spacelike -> e3, b2 timelike -> e4
    return b2, b1


def null_frame_from_orthonormal(e1, e2, e3, e4):
    """Convert an orthonormal frame (e1, e4 timelike) to a null frame.

    f1 = (e1+e2)/sqrt2, f2 = (e1-e2)/sqrt2, f3 = (e4+e3)/sqrt2,
    f4 = (e4-e3)/sqrt2, giving <f1,f2> = <f3,f4> = -1 and all other pairs 0.
    The conversion preserves the tangent and normal orientations up to one
    overall sign each, chosen so the normal-curvature sign survives the
    round trip to the orthonormal frame.  Works on plain vectors and on
    jet-valued vectors alike.
    """
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    f1 = (e1 + e2) * inv_sqrt2
    f2 = (e1 - e2) * inv_sqrt2
    f3 = (e4 + e3) * inv_sqrt2
    f4 = (e4 - e3) * inv_sqrt2
    return f1, f2, f3, f4
