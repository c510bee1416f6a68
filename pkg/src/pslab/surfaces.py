"""Differential geometry of Lorentzian surface patches in the pseudo-sphere.

A patch is a map x(s, t) into E^5_2 landing on the unit pseudo-sphere
(<x, x> = 1) whose induced metric is Lorentzian (det g < 0).  Everything
here is computed from bi-jets of x -- the induced metric, Christoffel
symbols, curvature tensor, second fundamental forms, connection forms,
and the Gauss/Codazzi/Ricci residuals are all exact jet arithmetic with
no finite differencing.

Two deliberately independent routes exist for the key invariants and are
never collapsed:

* Gaussian curvature is computed intrinsically (metric -> curvature
  tensor) and extrinsically (second fundamental form via the
  sphere Gauss equation); reports carry the difference.
* Jet derivatives are cross-checked elsewhere against finite differences.

Frames: tangent/normal frames at a point come from
:func:`pslab.algebra.orthonormal_tangent_normal_frame`; smooth frame
*fields* (needed by connection forms) rebuild the same frame with jet
arithmetic after freezing its discrete choices (eigenvector split,
seed combination, signs) at the base point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .algebra import (
    GRAM_NULL,
    PseudoVector,
    gram_residual,
    inner,
    normal_pair_choices,
    null_frame_from_orthonormal,
    orthonormal_tangent_normal_frame,
    seed_candidates,
    sphere_membership,
)
from .errors import GeometryError, SingularPointError
from .jets import Jet2, JetVector, sqrt as jet_sqrt

#: Below this |det g| a point is treated as singular and excluded.
DEGENERATE_DET_TOL = 1e-12

#: A frame field maps (s0, t0, order) to four jet-valued frame vectors.
FrameField = Callable[[float, float, int], Sequence[JetVector]]


@dataclass(frozen=True)
class SurfacePatch:
    """A surface patch given by a bi-jet evaluator.

    ``evaluator(s0, t0, order)`` must return the position as a
    :class:`JetVector` of bi-jets of the given total order.  The sphere
    and Lorentzian conditions are verified by the operations, never
    assumed.

    ``preferred_frame``, when set, supplies the pseudo-orthonormal null
    frame field used for frame-dependent quantities (signed normal
    curvature, connection forms); without it a frame is constructed from
    scratch at each point, which fixes signs only up to the deterministic
    tie-breaking rule (so the *signed* normal curvature may flip between
    grids, while |K^D| is stable).

    ``metric_oracle``, when set, returns the expected (g_ss, g_st, g_tt)
    at a point; reports then carry a metric normal-form residual.
    """

    evaluator: Callable[[float, float, int], JetVector]
    s_domain: tuple[float, float]
    t_domain: tuple[float, float]
    label: str = ""
    preferred_frame: Optional[FrameField] = None
    metric_oracle: Optional[Callable[[float, float], tuple[float, float, float]]] = None

    def jet(self, s0: float, t0: float, order: int) -> JetVector:
        """Bi-jet of the position at an interior point."""
        if not (self.s_domain[0] <= s0 <= self.s_domain[1]):
            raise GeometryError(
                f"s={s0!r} outside domain {self.s_domain!r} of patch"
                f" {self.label or '<unlabeled>'}"
            )
        if not (self.t_domain[0] <= t0 <= self.t_domain[1]):
            raise GeometryError(
                f"t={t0!r} outside domain {self.t_domain!r} of patch"
                f" {self.label or '<unlabeled>'}"
            )
        return self.evaluator(float(s0), float(t0), int(order))

    def grid(self, ns: int, nt: int) -> list[tuple[float, float]]:
        """Lexicographically ordered (s, t) sample grid, endpoints included."""
        if ns < 2 or nt < 2:
            raise ValueError("grid needs at least 2 samples per axis")
        ss = np.linspace(self.s_domain[0], self.s_domain[1], ns)
        ts = np.linspace(self.t_domain[0], self.t_domain[1], nt)
        return [(float(s), float(t)) for s in ss for t in ts]


@dataclass(frozen=True)
class FirstFundamentalForm:
    """Induced metric components at a point (coordinates s, t)."""

    g_ss: float
    g_st: float
    g_tt: float

    @property
    def det(self) -> float:
        return self.g_ss * self.g_tt - self.g_st**2

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.g_ss, self.g_st], [self.g_st, self.g_tt]])


@dataclass(frozen=True)
class SecondFundamentalForm:
    """Spherical second fundamental form on a pseudo-orthonormal frame.

    The scalar fields store coefficients in the normal frame expansion
    hhat(f_i, f_j) = h3_ij f3 + h4_ij f4, extracted by dual pairing
    (h3 = -<hhat, f4>, h4 = -<hhat, f3>, since <f3, f4> = -1).  The
    full vectors are kept as well for componentwise assertions.
    """

    h3_11: float
    h3_22: float
    h4_11: float
    h4_22: float
    h11: PseudoVector
    h12: PseudoVector
    h22: PseudoVector


@dataclass(frozen=True)
class ConnectionForms:
    """Connection forms omega_A^B(f_i) of a null frame field.

    ``omega[i-1, A-1, B-1]`` is omega_A^B evaluated on the i-th tangent
    frame vector.  ``phi`` and ``psi`` are the diagonal tangential and
    normal forms (omega_1^1(f_i), omega_3^3(f_i)).  ``relation_residual``
    is the worst violation of the antisymmetry relations implied by
    constancy of the frame Gram matrix; ``decomposition_residual`` is the
    worst leftover after expanding a frame derivative in the frame (both
    should be at rounding level for a genuine frame field).
    """

    omega: np.ndarray
    phi: tuple[float, float]
    psi: tuple[float, float]
    relation_residual: float
    decomposition_residual: float

    def value(self, a: int, b: int, i: int) -> float:
        """omega_a^b(f_i) with 1-based indices a, b in 1..4, i in 1..2."""
        return float(self.omega[i - 1, a - 1, b - 1])


@dataclass(frozen=True)
class CurvatureReport:
    """Pointwise invariants and consistency residuals of a patch.

    ``K_normal`` is the signed normal curvature in the frame used (the
    patch's preferred frame if any); its absolute value is the
    orientation-free invariant.  ``mean_curvature_norm`` is
    sqrt(|<H, H>|) -- in an indefinite metric a nonzero vector can have
    zero norm, so minimality checks must use
    ``mean_curvature_max_component`` instead.
    """

    point: tuple[float, float]
    K: float
    K_normal: float
    K_normal_abs: float
    mean_curvature_norm: float
    mean_curvature_max_component: float
    residuals: dict[str, float]


# --------------------------------------------------------------------------
# Point data: everything derivable from one bi-jet evaluation.
# --------------------------------------------------------------------------

class _PointData:
    """Metric, Christoffel, and second-derivative data at one point.

    Built from a single bi-jet of x of the requested order; all public
    operations funnel through this to avoid re-deriving shared pieces.
    """

    def __init__(self, patch: SurfacePatch, p: tuple[float, float], order: int):
        if order < 2:
            raise GeometryError("point data needs bi-jets of order >= 2")
        self.patch = patch
        self.p = (float(p[0]), float(p[1]))
        self.order = order
        self.xjet = patch.jet(self.p[0], self.p[1], order)
        self.x = self.xjet.value()
        self.Xs = self.xjet.deriv_s()
        self.Xt = self.xjet.deriv_t()
        self.xs = self.Xs.value()
        self.xt = self.Xt.value()
        # Metric as jets (order - 1) and values.
        self.Gss = self.Xs.dot(self.Xs)
        self.Gst = self.Xs.dot(self.Xt)
        self.Gtt = self.Xt.dot(self.Xt)
        self.g = np.array(
            [[self.Gss.value, self.Gst.value], [self.Gst.value, self.Gtt.value]]
        )
        self.det = float(self.g[0, 0] * self.g[1, 1] - self.g[0, 1] ** 2)
        membership = sphere_membership(self.x)
        if membership > 1e-6:
            raise GeometryError(
                f"patch point (s,t)={self.p!r} is not on the unit pseudo-sphere"
                f" (|<x,x>-1| = {membership!r})"
            )
        if abs(self.det) < DEGENERATE_DET_TOL:
            raise SingularPointError(
                f"degenerate induced metric at (s,t)={self.p!r}"
                f" (det g = {self.det!r})"
            )
        if self.det > 0.0:
            raise GeometryError(
                f"induced metric at (s,t)={self.p!r} is not Lorentzian"
                f" (det g = {self.det!r} > 0)"
            )

    # -- metric derivatives ------------------------------------------------

    def metric_jet(self, j: int, k: int) -> Jet2:
        return (self.Gss, self.Gst, self.Gtt)[j + k]

    def dg(self) -> np.ndarray:
        """dg[k, a, b] = d g_ab / d coordinate k (0 = s, 1 = t)."""
        out = np.empty((2, 2, 2))
        for a in range(2):
            for b in range(2):
                gj = self.metric_jet(a, b)
                out[0, a, b] = gj.partial(1, 0)
                out[1, a, b] = gj.partial(0, 1)
        return out

    def ddg(self) -> np.ndarray:
        """ddg[i, j, a, b] = d^2 g_ab / dx^i dx^j."""
        out = np.empty((2, 2, 2, 2))
        for a in range(2):
            for b in range(2):
                gj = self.metric_jet(a, b)
                out[0, 0, a, b] = gj.partial(2, 0)
                out[0, 1, a, b] = out[1, 0, a, b] = gj.partial(1, 1)
                out[1, 1, a, b] = gj.partial(0, 2)
        return out

    def christoffels(self) -> tuple[np.ndarray, np.ndarray]:
        """(lower, upper): Gamma_{p,jk} and Gamma^m_{jk} at the point."""
        dg = self.dg()
        lower = np.empty((2, 2, 2))
        for p_ in range(2):
            for j in range(2):
                for k in range(2):
                    lower[p_, j, k] = 0.5 * (
                        dg[j, p_, k] + dg[k, p_, j] - dg[p_, j, k]
                    )
        ginv = np.linalg.inv(self.g)
        upper = np.einsum("mp,pjk->mjk", ginv, lower)
        return lower, upper

    def riemann(self) -> np.ndarray:
        """Covariant curvature tensor R_{ijkl} of the induced metric.

        Convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
        - nabla_[X,Y] Z and R_{ijkl} = <R(d_i, d_j) d_k, d_l>, assembled
        directly from second derivatives of the metric plus a
        Christoffel-squared correction (no derivatives of Christoffel
        symbols, which keeps the jet depth minimal).
        """
        ddg = self.ddg()
        lower, upper = self.christoffels()
        R = np.empty((2, 2, 2, 2))
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        term = 0.5 * (
                            ddg[i, k, j, l]
                            + ddg[j, l, i, k]
                            - ddg[i, l, j, k]
                            - ddg[j, k, i, l]
                        )
                        corr = np.dot(upper[:, i, k], lower[:, j, l]) - np.dot(
                            upper[:, j, k], lower[:, i, l]
                        )
                        R[i, j, k, l] = term + corr
        return R

    # -- second fundamental form --------------------------------------------

    def ambient_sff_values(self) -> tuple[PseudoVector, PseudoVector, PseudoVector]:
        """h_E(d_i, d_j) = x_ij - Gamma^m_ij x_m as vectors at the point."""
        _, upper = self.christoffels()
        xm = (self.xs, self.xt)
        out = []
        for (i, j), (di, dj) in (((0, 0), (2, 0)), ((0, 1), (1, 1)), ((1, 1), (0, 2))):
            xij = self.xjet.partial(di, dj)
            v = xij - upper[0, i, j] * xm[0] - upper[1, i, j] * xm[1]
            out.append(v)
        return tuple(out)

    def spherical_sff_values(self) -> tuple[PseudoVector, PseudoVector, PseudoVector]:
        """hhat(d_i, d_j) = h_E(d_i, d_j) + g_ij x (second form in the sphere)."""
        hss, hst, htt = self.ambient_sff_values()
        return (
            hss + self.g[0, 0] * self.x,
            hst + self.g[0, 1] * self.x,
            htt + self.g[1, 1] * self.x,
        )

    def tangent_coordinates(self, v: PseudoVector) -> tuple[float, float]:
        """Coefficients (a, b) with v = a x_s + b x_t for a tangent vector."""
        rhs = np.array([inner(v, self.xs), inner(v, self.xt)])
        a, b = np.linalg.solve(self.g, rhs)
        return float(a), float(b)

    def normal_projection(self, v: PseudoVector) -> PseudoVector:
        """Component of v normal to the tangent plane (ambient sense)."""
        a, b = self.tangent_coordinates(v)
        return v - a * self.xs - b * self.xt


def _point_data(patch: SurfacePatch, p, order: int = 2) -> _PointData:
    return _PointData(patch, p, order)


# --------------------------------------------------------------------------
# Public operations: metric and curvatures
# --------------------------------------------------------------------------

def induced_metric(patch: SurfacePatch, p) -> FirstFundamentalForm:
    """First fundamental form at a point, from first-order bi-jets."""
    xjet = patch.jet(p[0], p[1], 1)
    xs = xjet.partial(1, 0)
    xt = xjet.partial(0, 1)
    return FirstFundamentalForm(
        g_ss=inner(xs, xs), g_st=inner(xs, xt), g_tt=inner(xt, xt)
    )


def sphere_residual(patch: SurfacePatch, p) -> float:
    """|<x, x> - 1| at a point."""
    xjet = patch.jet(p[0], p[1], 0)
    return sphere_membership(xjet.value())


def gaussian_curvature_pair(patch: SurfacePatch, p) -> tuple[float, float]:
    """Gaussian curvature by two independent routes: (intrinsic, extrinsic).

    Intrinsic: curvature tensor of the induced metric,
    K = R_{0110} / det g.  Extrinsic: the sphere Gauss equation,
    K = 1 + (<hhat_ss, hhat_tt> - <hhat_st, hhat_st>) / det g.
    The two agreeing is a strong consistency check on the whole stack;
    callers report |a - b| as a residual.
    """
    data = _point_data(patch, p, order=3)
    R = data.riemann()
    k_int = float(R[0, 1, 1, 0] / data.det)
    hss, hst, htt = data.spherical_sff_values()
    k_ext = 1.0 + (inner(hss, htt) - inner(hst, hst)) / data.det
    return k_int, float(k_ext)


def gaussian_curvature(patch: SurfacePatch, p) -> float:
    """Gaussian curvature (intrinsic route)."""
    return gaussian_curvature_pair(patch, p)[0]


# --------------------------------------------------------------------------
# Frames
# --------------------------------------------------------------------------

def constructed_frame(patch: SurfacePatch, p) -> tuple[PseudoVector, ...]:
    """Pseudo-orthonormal null frame {f1, f2, f3, f4} at a point.

    Uses the patch's preferred frame field if declared; otherwise
    constructs one from the tangent/normal splitting with deterministic
    sign fixing.
    """
    if patch.preferred_frame is not None:
        field = patch.preferred_frame(p[0], p[1], 1)
        return tuple(f.value() for f in field)
    data = _point_data(patch, p, order=2)
    e1, e2, e3, e4 = orthonormal_tangent_normal_frame(data.x, data.xs, data.xt)
    return null_frame_from_orthonormal(e1, e2, e3, e4)


def _align_sign(field: JetVector, target: PseudoVector) -> JetVector:
    dot = float(np.dot(field.value().components, target.components))
    return field if dot >= 0.0 else -field


def constructed_frame_field(patch: SurfacePatch, p, order: int):
    """Smooth null frame field around p matching constructed_frame at p.

    The discrete choices of the pointwise construction (eigenvector
    split of the coordinate metric, seed candidate selection, sign
    fixes) are frozen at p; everything else is jet arithmetic, so the
    field is differentiable and can feed connection forms.
    """
    data = _point_data(patch, p, order=order + 1)
    x, xs, xt = data.x, data.xs, data.xt

    # Frozen discrete choices at the base point.
    evals, evecs = np.linalg.eigh(data.g)
    if not (evals[0] < 0.0 < evals[1]):
        raise GeometryError(f"tangent plane is not Lorentzian (eigenvalues {evals!r})")
    signs = x.signature.signs
    a = np.vstack([x.components * signs, xs.components * signs, xt.components * signs])
    _, sv, vt = np.linalg.svd(a)
    if sv[2] < 1e-11:
        raise GeometryError(f"normal space is ill-defined (singular values {sv!r})")
    seed_pts = [PseudoVector(vt[3], x.signature), PseudoVector(vt[4], x.signature)]
    i1, i2, eps1 = normal_pair_choices(seed_pts)
    point_frame = orthonormal_tangent_normal_frame(x, xs, xt)

    # Smooth tangent frame: frozen eigenvector combination, then
    # signature-aware Gram-Schmidt in jets.
    pos = data.xjet.truncated(order)
    Xs = data.Xs.truncated(order)
    Xt = data.Xt.truncated(order)
    u1 = Xs * float(evecs[0, 0]) + Xt * float(evecs[1, 0])
    u2 = Xs * float(evecs[0, 1]) + Xt * float(evecs[1, 1])
    e1 = u1 * (1.0 / jet_sqrt(-u1.dot(u1)))
    w = u2 + e1 * u2.dot(e1)
    e2 = w * (1.0 / jet_sqrt(w.dot(w)))

    # Smooth normal seeds: constants projected off x, e1, e2.
    def project(seed: PseudoVector) -> JetVector:
        C = JetVector(
            [Jet2.constant(float(c), order) for c in seed.components], x.signature
        )
        C = C + e1 * C.dot(e1)  # remove timelike tangent component
        C = C - e2 * C.dot(e2)
        C = C - pos * C.dot(pos)  # remove position component (<x,x>=1)
        return C

    n1, n2 = project(seed_pts[0]), project(seed_pts[1])
    cands = seed_candidates(n1, n2)
    c1 = cands[i1]
    b1 = c1 * (1.0 / jet_sqrt(c1.dot(c1) * eps1))
    d = cands[i2] - b1 * (cands[i2].dot(b1) * (1.0 / eps1))
    b2 = d * (1.0 / jet_sqrt(d.dot(d) * (-eps1)))
    e3, e4 = (b1, b2) if eps1 > 0 else (b2, b1)

    # Align all signs with the pointwise construction, then pass to the
    # null combination.
    e1 = _align_sign(e1, point_frame[0])
    e2 = _align_sign(e2, point_frame[1])
    e3 = _align_sign(e3, point_frame[2])
    e4 = _align_sign(e4, point_frame[3])
    return null_frame_from_orthonormal(e1, e2, e3, e4)


def frame_field(patch: SurfacePatch, p, order: int):
    """The patch's preferred frame field, or a constructed one."""
    if patch.preferred_frame is not None:
        return tuple(patch.preferred_frame(p[0], p[1], order))
    return tuple(constructed_frame_field(patch, p, order))


def _validate_frame(data: _PointData, frame, tol: float = 1e-8) -> None:
    res = gram_residual(frame, GRAM_NULL)
    if res > tol:
        raise GeometryError(
            f"frame is not pseudo-orthonormal (Gram residual {res!r})"
        )
    for idx, f in enumerate(frame, start=1):
        if abs(inner(f, data.x)) > tol:
            raise GeometryError(
                f"frame vector f{idx} is not orthogonal to the position"
            )
    for idx in (2, 3):
        f = frame[idx]
        if max(abs(inner(f, data.xs)), abs(inner(f, data.xt))) > tol:
            raise GeometryError(f"frame vector f{idx + 1} is not normal")
    for idx in (0, 1):
        a, b = data.tangent_coordinates(frame[idx])
        resid = frame[idx] - a * data.xs - b * data.xt
        if max(abs(c) for c in resid.components) > tol:
            raise GeometryError(f"frame vector f{idx + 1} is not tangent")


# --------------------------------------------------------------------------
# Second fundamental form, mean curvature, normal curvature
# --------------------------------------------------------------------------

def spherical_sff(patch: SurfacePatch, p, frame=None) -> SecondFundamentalForm:
    """Spherical second fundamental form on a null frame at a point.

    ``frame`` must be pseudo-orthonormal with f1, f2 tangent and f3, f4
    normal (checked; error carries the Gram residual).  Defaults to the
    patch's frame at p.
    """
    data = _point_data(patch, p, order=2)
    if frame is None:
        frame = constructed_frame(patch, p)
    _validate_frame(data, frame)
    f1, f2, f3, f4 = frame

    hss, hst, htt = data.spherical_sff_values()
    a1, b1 = data.tangent_coordinates(f1)
    a2, b2 = data.tangent_coordinates(f2)

    def bilinear(aa, ba, ab, bb) -> PseudoVector:
        return (
            (aa * ab) * hss + (aa * bb + ba * ab) * hst + (ba * bb) * htt
        )

    h11 = bilinear(a1, b1, a1, b1)
    h12 = bilinear(a1, b1, a2, b2)
    h22 = bilinear(a2, b2, a2, b2)
    return SecondFundamentalForm(
        h3_11=-inner(h11, f4),
        h3_22=-inner(h22, f4),
        h4_11=-inner(h11, f3),
        h4_22=-inner(h22, f3),
        h11=h11,
        h12=h12,
        h22=h22,
    )


def mean_curvature(patch: SurfacePatch, p, frame=None) -> PseudoVector:
    """Mean curvature vector H = -hhat(f1, f2) in a null frame.

    Frame independence (and agreement with the coordinate trace formula
    of :func:`mean_curvature_trace`) is a tested property, not an
    assumption.
    """
    sff = spherical_sff(patch, p, frame)
    return -1.0 * sff.h12


def mean_curvature_trace(patch: SurfacePatch, p) -> PseudoVector:
    """Mean curvature via the coordinate trace H = (1/2) g^{ij} hhat_ij.

    Independent of any frame; used to cross-check mean_curvature.
    """
    data = _point_data(patch, p, order=2)
    hss, hst, htt = data.spherical_sff_values()
    ginv = np.linalg.inv(data.g)
    return 0.5 * (
        ginv[0, 0] * hss + 2.0 * ginv[0, 1] * hst + ginv[1, 1] * htt
    )


def normal_curvature(patch: SurfacePatch, p, frame=None) -> float:
    """Signed normal curvature K^D = -<[A_3, A_4] f1, f2> in the frame.

    Built from the shape operators of the two normal frame directions;
    the sign depends on the frame orientation (flip f3 <-> f4 and the
    sign flips), so |K^D| is the orientation-free invariant.
    """
    if frame is None:
        frame = constructed_frame(patch, p)
    sff = spherical_sff(patch, p, frame)
    f3, f4 = frame[2], frame[3]

    def shape_matrix(xi: PseudoVector) -> np.ndarray:
        p11 = inner(sff.h11, xi)
        p12 = inner(sff.h12, xi)
        p22 = inner(sff.h22, xi)
        # A_xi f_j = sum_i M[i, j] f_i with <A_xi X, Y> = <hhat(X, Y), xi>
        # and the null tangent Gram <f1,f2> = -1.
        return -np.array([[p12, p22], [p11, p12]])

    m3 = shape_matrix(f3)
    m4 = shape_matrix(f4)
    comm = m3 @ m4 - m4 @ m3
    # K^D = -<[A3, A4] f1, f2> and <f1, f2> = -1 picks out the f1 row.
    return float(comm[0, 0])


# --------------------------------------------------------------------------
# Connection forms
# --------------------------------------------------------------------------

_ANTISYMMETRY_PAIRS = (
    ((1, 3), (4, 2)),  # omega_1^3 = -omega_4^2
    ((2, 3), (4, 1)),
    ((1, 4), (3, 2)),
    ((2, 4), (3, 1)),
    ((1, 1), (2, 2)),
    ((3, 3), (4, 4)),
)
_ZERO_FORMS = ((1, 2), (2, 1), (3, 4), (4, 3))


def connection_forms(patch: SurfacePatch, p, frame_field_fn: FrameField | None = None) -> ConnectionForms:
    """Connection forms of a null frame field at a point.

    Each frame vector field f_A is differentiated along the tangent
    frame directions f_1, f_2 (chain rule through the coordinate jets),
    the sphere term +<X, f_A> x is added back, and the result is
    expanded in the frame by dual pairing:

        nabla~_X f_A = sum_B omega_A^B(X) f_B - <X, f_A> x.
    """
    data = _point_data(patch, p, order=2)
    if frame_field_fn is None:
        fields = frame_field(patch, p, 1)
    else:
        fields = tuple(frame_field_fn(p[0], p[1], 1))
    frame = tuple(f.value() for f in fields)
    _validate_frame(data, frame)
    f1, f2, f3, f4 = frame

    # Coordinate components of the tangent directions.
    coords = [data.tangent_coordinates(f1), data.tangent_coordinates(f2)]
    ds_fields = [f.deriv_s().value() for f in fields]
    dt_fields = [f.deriv_t().value() for f in fields]

    omega = np.empty((2, 4, 4))
    decomposition_residual = 0.0
    for i, (a_c, b_c) in enumerate(coords):
        X = frame[i]
        for A in range(4):
            # Flat ambient directional derivative of f_A along X.
            V = a_c * ds_fields[A] + b_c * dt_fields[A]
            V = V + inner(X, frame[A]) * data.x
            c1 = -inner(V, f2)
            c2 = -inner(V, f1)
            c3 = -inner(V, f4)
            c4 = -inner(V, f3)
            omega[i, A, :] = (c1, c2, c3, c4)
            recon = c1 * f1 + c2 * f2 + c3 * f3 + c4 * f4
            resid = V - recon
            decomposition_residual = max(
                decomposition_residual, max(abs(c) for c in resid.components)
            )

    relation_residual = 0.0
    for i in range(2):
        for (a1_, b1_), (a2_, b2_) in _ANTISYMMETRY_PAIRS:
            relation_residual = max(
                relation_residual,
                abs(omega[i, a1_ - 1, b1_ - 1] + omega[i, a2_ - 1, b2_ - 1]),
            )
        for (a_, b_) in _ZERO_FORMS:
            relation_residual = max(relation_residual, abs(omega[i, a_ - 1, b_ - 1]))

    return ConnectionForms(
        omega=omega,
        phi=(float(omega[0, 0, 0]), float(omega[1, 0, 0])),
        psi=(float(omega[0, 2, 2]), float(omega[1, 2, 2])),
        relation_residual=float(relation_residual),
        decomposition_residual=float(decomposition_residual),
    )


# --------------------------------------------------------------------------
# Jet-field tables: metric, Christoffel symbols and second fundamental
# form as bi-jet fields (everything differentiable, nothing pointwise).
# --------------------------------------------------------------------------

class _JetFieldTables:
    """Derived jet fields of a position bi-jet.

    Where :class:`_PointData` holds point values, this holds *fields*:
    each table entry is a bi-jet, so covariant derivatives of derived
    quantities (second fundamental form, normal fields, frames) can be
    taken exactly.  Orders drop as quantities are derived: for a
    position jet of order n the metric has order n-1 and the
    Christoffel symbols and second fundamental form order n-2.
    """

    def __init__(self, xjet: JetVector):
        self.X = xjet
        self.Xs = xjet.deriv_s()
        self.Xt = xjet.deriv_t()
        Gss = self.Xs.dot(self.Xs)
        Gst = self.Xs.dot(self.Xt)
        Gtt = self.Xt.dot(self.Xt)
        self.G = [[Gss, Gst], [Gst, Gtt]]
        self.det = Gss * Gtt - Gst * Gst
        self.ginv = [
            [Gtt / self.det, -1.0 * Gst / self.det],
            [-1.0 * Gst / self.det, Gss / self.det],
        ]
        dG = [[[None] * 2 for _ in range(2)] for _ in range(2)]
        for a in range(2):
            for b in range(2):
                dG[0][a][b] = self.G[a][b].deriv_s()
                dG[1][a][b] = self.G[a][b].deriv_t()
        lower = [[[None] * 2 for _ in range(2)] for _ in range(2)]
        for p_ in range(2):
            for j in range(2):
                for k in range(2):
                    lower[p_][j][k] = 0.5 * (
                        dG[j][p_][k] + dG[k][p_][j] - dG[p_][j][k]
                    )
        self.upper = [[[None] * 2 for _ in range(2)] for _ in range(2)]
        for m in range(2):
            for j in range(2):
                for k in range(2):
                    self.upper[m][j][k] = (
                        self.ginv[m][0] * lower[0][j][k]
                        + self.ginv[m][1] * lower[1][j][k]
                    )
        self._xdd = {
            (0, 0): self.Xs.deriv_s(),
            (0, 1): self.Xs.deriv_t(),
            (1, 0): self.Xt.deriv_s(),
            (1, 1): self.Xt.deriv_t(),
        }

    def h_field(self, j: int, k: int) -> JetVector:
        """Ambient second fundamental form h_E(d_j, d_k) as a jet field."""
        return (
            self._xdd[(j, k)]
            - self.Xs * self.upper[0][j][k]
            - self.Xt * self.upper[1][j][k]
        )

    def hhat_field(self, j: int, k: int) -> JetVector:
        """Spherical second fundamental form hhat(d_j, d_k) as a jet field."""
        return self.h_field(j, k) + self.X * self.G[j][k]

    def tangent_coeff_fields(self, V: JetVector):
        """Jet coefficients (a, b) with V = a Xs + b Xt + normal part."""
        r0 = V.dot(self.Xs)
        r1 = V.dot(self.Xt)
        a = self.ginv[0][0] * r0 + self.ginv[0][1] * r1
        b = self.ginv[1][0] * r0 + self.ginv[1][1] * r1
        return a, b

    def normal_proj_field(self, V: JetVector) -> JetVector:
        """Componentwise projection of a jet field onto the normal bundle."""
        a, b = self.tangent_coeff_fields(V)
        return V - self.Xs * a - self.Xt * b


# --------------------------------------------------------------------------
# Fundamental equations (Gauss / Codazzi / Ricci)
# --------------------------------------------------------------------------

def fundamental_residuals(patch: SurfacePatch, p) -> dict[str, float]:
    """Max residuals of the Gauss, Codazzi, and Ricci equations at a point.

    All three are evaluated for the surface as a submanifold of flat
    E^5_2 (normal bundle of rank 3, including the position direction),
    which is equivalent to the sphere formulation and avoids privileging
    any frame:

    * Gauss: R_{ijkl} = <h(d_j, d_k), h(d_i, d_l)> - <h(d_i, d_k), h(d_j, d_l)>
      over all 16 index combinations.
    * Codazzi: D_s h(d_t, d_k) - D_t h(d_s, d_k) -
      Gamma^m_{sk} h_{tm} + Gamma^m_{tk} h_{sm} = 0 componentwise.
    * Ricci: <R^D(d_s, d_t) xi, eta> = <[A_xi, A_eta] d_s, d_t> for
      normal fields xi, eta spanning the normal bundle.
    """
    data = _point_data(patch, p, order=3)
    lower, upper = data.christoffels()

    # ---- Gauss ----
    R = data.riemann()
    hE = {}
    hss, hst, htt = data.ambient_sff_values()
    hE[(0, 0)], hE[(0, 1)], hE[(1, 0)], hE[(1, 1)] = hss, hst, hst, htt
    gauss = 0.0
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    rhs = inner(hE[(j, k)], hE[(i, l)]) - inner(
                        hE[(i, k)], hE[(j, l)]
                    )
                    gauss = max(gauss, abs(R[i, j, k, l] - rhs))

    # ---- jet fields shared by Codazzi and Ricci ----
    tables = _JetFieldTables(data.xjet)

    def normal_proj_point(v: PseudoVector) -> PseudoVector:
        return data.normal_projection(v)

    # ---- Codazzi ----
    codazzi = 0.0
    hf = {(j_, k_): tables.h_field(j_, k_) for j_ in range(2) for k_ in range(2)}
    for k_ in range(2):
        d_s = normal_proj_point(hf[(1, k_)].deriv_s().value())
        d_t = normal_proj_point(hf[(0, k_)].deriv_t().value())
        resid = d_s - d_t
        for m_ in range(2):
            resid = resid - upper[m_, 0, k_] * hf[(1, m_)].value()
            resid = resid + upper[m_, 1, k_] * hf[(0, m_)].value()
        codazzi = max(codazzi, max(abs(c) for c in resid.components))

    # ---- Ricci ----
    # Normal fields: constant seeds projected onto the (ambient) normal
    # bundle, plus the position field itself.
    e_frame = orthonormal_tangent_normal_frame(data.x, data.xs, data.xt)
    seeds = [e_frame[2], e_frame[3]]

    def const_field(v: PseudoVector) -> JetVector:
        return JetVector(
            [Jet2.constant(float(c), data.order - 1) for c in v.components],
            v.signature,
        )

    normal_fields = [tables.normal_proj_field(const_field(s)) for s in seeds]
    normal_fields.append(data.xjet.truncated(data.order - 1))

    def D_field(V: JetVector, direction: int) -> JetVector:
        W = V.deriv_s() if direction == 0 else V.deriv_t()
        return tables.normal_proj_field(W)

    def shape_matrix(xi: PseudoVector) -> np.ndarray:
        P = np.array(
            [
                [inner(hE[(0, 0)], xi), inner(hE[(0, 1)], xi)],
                [inner(hE[(1, 0)], xi), inner(hE[(1, 1)], xi)],
            ]
        )
        return np.linalg.solve(data.g, P)

    ricci = 0.0
    n_fields = len(normal_fields)
    for ia in range(n_fields):
        for ib in range(ia + 1, n_fields):
            xi_f, eta_f = normal_fields[ia], normal_fields[ib]
            xi0, eta0 = xi_f.value(), eta_f.value()
            lhs_vec = (
                D_field(D_field(xi_f, 1), 0).value()
                - D_field(D_field(xi_f, 0), 1).value()
            )
            lhs = inner(normal_proj_point(lhs_vec), eta0)
            A_xi = shape_matrix(xi0)
            A_eta = shape_matrix(eta0)
            comm = A_xi @ A_eta - A_eta @ A_xi
            rhs = float((data.g @ comm)[1, 0])
            ricci = max(ricci, abs(lhs - rhs))

    return {"gauss": float(gauss), "codazzi": float(codazzi), "ricci": float(ricci)}


# --------------------------------------------------------------------------
# Pointwise report
# --------------------------------------------------------------------------

def curvature_report(patch: SurfacePatch, p) -> CurvatureReport:
    """All pointwise invariants and residuals used by grid certificates."""
    k_int, k_ext = gaussian_curvature_pair(patch, p)
    frame = constructed_frame(patch, p)
    kd = normal_curvature(patch, p, frame)
    H = mean_curvature(patch, p, frame)
    h_norm = math.sqrt(abs(inner(H, H)))
    h_max = max(abs(c) for c in H.components)
    fr = fundamental_residuals(patch, p)
    residuals = {
        "sphere": sphere_residual(patch, p),
        "metric-form": 0.0,
        "gauss-eq": fr["gauss"],
        "codazzi-eq": fr["codazzi"],
        "ricci-eq": fr["ricci"],
        "k-dual-route": abs(k_int - k_ext),
    }
    if patch.metric_oracle is not None:
        g = induced_metric(patch, p)
        exp_ss, exp_st, exp_tt = patch.metric_oracle(p[0], p[1])
        residuals["metric-form"] = max(
            abs(g.g_ss - exp_ss), abs(g.g_st - exp_st), abs(g.g_tt - exp_tt)
        )
    return CurvatureReport(
        point=(float(p[0]), float(p[1])),
        K=k_int,
        K_normal=kd,
        K_normal_abs=abs(kd),
        mean_curvature_norm=h_norm,
        mean_curvature_max_component=h_max,
        residuals=residuals,
    )
