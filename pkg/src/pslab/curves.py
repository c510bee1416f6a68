"""Null generating curves: parsing, jet evaluation, and validation.

A generating curve is a closed-form map alpha: (t_min, t_max) -> E^5_2
given componentwise by expressions in t.  The surface construction
requires alpha to run in the light cone with null tangent and
normalized acceleration:

    <alpha, alpha> = 0,   <alpha', alpha'> = 0,   <alpha'', alpha''> = 4/9.

``validate_theorem_curve`` checks these pointwise on an interior grid and
also reports the differentiated consequences (orthogonality identities
among the first four derivatives), which double as a self-check of the
jet engine.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import E52, PseudoVector, Signature, inner, inner_scale
from .errors import CurveDomainError, CurveError, ParseError
from .expr import Expr, eval_expression, parse_expression, pretty
from .jets import Jet1, JetVector

#: Largest jet order the curve evaluator will produce.  Orders beyond this
#: are never needed (the deepest consumer takes surface order + 4) and the
#: dense recurrences get slow.
MAX_CURVE_ORDER = 16

#: Squared norm of the acceleration required of a generating curve.
ACCEL_NORM_SQ = 4.0 / 9.0


@dataclass(frozen=True)
class NullCurve:
    """A candidate generating curve: five component expressions in t.

    The domain is an *open* interval; evaluation at or beyond the ends is
    refused (the builtin curves have poles there).
    """

    components: tuple[Expr, Expr, Expr, Expr, Expr]
    domain: tuple[float, float]
    label: str = ""
    signature: Signature = E52

    def __post_init__(self):
        if len(self.components) != self.signature.dim:
            raise CurveError(
                f"curve needs {self.signature.dim} components, got {len(self.components)}"
            )
        t_min, t_max = self.domain
        if not (t_min < t_max):
            raise CurveError(f"empty curve domain ({t_min!r}, {t_max!r})")

    def require_interior(self, t0: float) -> None:
        t_min, t_max = self.domain
        if not (t_min < t0 < t_max):
            raise CurveDomainError(
                f"t0={t0!r} is outside the open domain ({t_min!r}, {t_max!r})"
                f" of curve {self.label or '<unlabeled>'}"
            )

    def restricted(self, t_min: float, t_max: float) -> "NullCurve":
        """The same curve on a narrower open sub-interval."""
        if not (self.domain[0] <= t_min < t_max <= self.domain[1]):
            raise CurveError(
                f"({t_min!r}, {t_max!r}) is not a sub-interval of {self.domain!r}"
            )
        return NullCurve(self.components, (t_min, t_max), self.label, self.signature)

    def interior_grid(self, n: int, margin: float = 0.01) -> np.ndarray:
        """n uniform samples excluding a margin fraction at each end."""
        if n < 2:
            raise ValueError("need at least 2 samples")
        t_min, t_max = self.domain
        pad = margin * (t_max - t_min)
        return np.linspace(t_min + pad, t_max - pad, n)

    def point(self, t0: float) -> PseudoVector:
        """Plain evaluation of alpha(t0)."""
        self.require_interior(t0)
        values = []
        for idx, expr in enumerate(self.components):
            try:
                values.append(eval_expression(expr, float(t0)))
            except (CurveError, ParseError):
                raise
            except Exception as exc:  # domain errors from elementary functions
                raise CurveError(
                    f"component c{idx + 1} of {self.label or '<unlabeled>'}"
                    f" failed at t={t0!r}: {exc}"
                ) from exc
        return PseudoVector(values, self.signature)


def eval_curve_jet(curve: NullCurve, t0: float, order: int) -> JetVector:
    """Jet of alpha at t0: each component carries derivatives 0..order.

    Evaluation is exact automatic differentiation -- no truncation error
    beyond double-precision rounding.
    """
    if not (0 <= order <= MAX_CURVE_ORDER):
        raise CurveError(f"jet order must be in 0..{MAX_CURVE_ORDER}, got {order}")
    curve.require_interior(t0)
    tvar = Jet1.variable(float(t0), order)
    jets = []
    for idx, expr in enumerate(curve.components):
        try:
            jets.append(eval_expression(expr, tvar))
        except (CurveError, ParseError):
            raise
        except Exception as exc:
            raise CurveError(
                f"component c{idx + 1} of {curve.label or '<unlabeled>'}"
                f" failed at t={t0!r}: {exc}"
            ) from exc
    return JetVector(jets, curve.signature)


# --------------------------------------------------------------------------
# Derived invariants
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveInvariants:
    """The derivative invariants entering the canonical frame.

    eta = <alpha''', alpha'''>, eta_prime = its t-derivative
    (= 2 <alpha'''', alpha'''>), xi = <alpha'''', alpha''''>.
    """

    eta: float
    eta_prime: float
    xi: float


def curve_invariants(curve: NullCurve, t0: float) -> CurveInvariants:
    jet = eval_curve_jet(curve, t0, 4)
    d3 = jet.derivative(3)
    d4 = jet.derivative(4)
    return CurveInvariants(
        eta=inner(d3, d3),
        eta_prime=2.0 * inner(d4, d3),
        xi=inner(d4, d4),
    )


# --------------------------------------------------------------------------
# Validation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstraintCheck:
    """Worst-case residual of one pointwise constraint over a grid.

    ``max_residual`` is the absolute residual divided by
    ``max(1, inner_scale)`` at each point -- near poles the raw inner
    product suffers catastrophic cancellation, and the scaled residual is
    the one that reflects actual constraint violation rather than
    floating-point noise.  ``max_absolute`` keeps the raw value.
    """

    name: str
    max_residual: float
    max_absolute: float
    worst_t: float


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_theorem_curve.

    ``primary`` holds the three defining constraints (pass/fail);
    ``implied`` holds the differentiated identities, reported for
    diagnosis but not gating.
    """

    label: str
    samples: int
    margin: float
    tol: float
    primary: tuple[ConstraintCheck, ...]
    implied: tuple[ConstraintCheck, ...]
    passed: bool

    def failures(self) -> list[ConstraintCheck]:
        return [c for c in self.primary if c.max_residual >= self.tol]


# (name, index pair (j, k) into the derivative list, target value)
_PRIMARY_CONSTRAINTS = (
    ("curve-on-light-cone", (0, 0), 0.0),
    ("tangent-null", (1, 1), 0.0),
    ("acceleration-norm", (2, 2), ACCEL_NORM_SQ),
)
_IMPLIED_CONSTRAINTS = (
    ("orth-curve-tangent", (0, 1), 0.0),
    ("orth-curve-accel", (0, 2), 0.0),
    ("orth-tangent-accel", (1, 2), 0.0),
    ("orth-curve-jerk", (0, 3), 0.0),
    ("pair-tangent-jerk", (1, 3), -ACCEL_NORM_SQ),
    ("pair-curve-snap", (0, 4), ACCEL_NORM_SQ),
)


def validate_theorem_curve(
    curve: NullCurve,
    samples: int = 101,
    tol: float = 1e-9,
    margin: float = 0.01,
) -> ValidationReport:
    """Check the generating-curve constraints on a uniform interior grid.

    Passing requires the three primary residuals (light-cone membership,
    null tangent, acceleration norm 4/9) to stay below ``tol`` in the
    scale-normalized sense at every sample.  The six identities obtained
    by differentiating the constraints are evaluated alongside as a
    consistency check on the jet engine.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if tol <= 0:
        raise ValueError("tol must be positive")

    grids = {name: [0.0, 0.0, curve.domain[0]] for name, _, _ in
             _PRIMARY_CONSTRAINTS + _IMPLIED_CONSTRAINTS}
    for t0 in curve.interior_grid(samples, margin):
        jet = eval_curve_jet(curve, float(t0), 4)
        derivs = [jet.derivative(k) for k in range(5)]
        for name, (j, k), target in _PRIMARY_CONSTRAINTS + _IMPLIED_CONSTRAINTS:
            raw = abs(inner(derivs[j], derivs[k]) - target)
            scaled = raw / max(1.0, inner_scale(derivs[j], derivs[k]))
            rec = grids[name]
            if scaled > rec[0]:
                rec[0], rec[1], rec[2] = scaled, raw, float(t0)
            else:
                rec[1] = max(rec[1], raw)

    def pack(spec):
        return tuple(
            ConstraintCheck(name, grids[name][0], grids[name][1], grids[name][2])
            for name, _, _ in spec
        )

    primary = pack(_PRIMARY_CONSTRAINTS)
    implied = pack(_IMPLIED_CONSTRAINTS)
    return ValidationReport(
        label=curve.label,
        samples=samples,
        margin=margin,
        tol=tol,
        primary=primary,
        implied=implied,
        passed=all(c.max_residual < tol for c in primary),
    )


# --------------------------------------------------------------------------
# Curve spec files
# --------------------------------------------------------------------------

_COMPONENT_KEYS = ("c1", "c2", "c3", "c4", "c5")


def parse_curve_file(text: str, label: str = "") -> NullCurve:
    """Parse the five-component curve spec format.

    Lines are ``c1: <expr>`` .. ``c5: <expr>``, ``domain: <t_min> <t_max>``,
    and optionally ``label: <text>``; ``#`` starts a comment.
    """
    fields: dict[str, object] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if not sep or not key:
            raise CurveError(f"line {lineno}: expected 'key: value', got {raw_line!r}")
        if key in fields:
            raise CurveError(f"line {lineno}: duplicate key {key!r}")
        if key in _COMPONENT_KEYS:
            try:
                fields[key] = parse_expression(value)
            except ParseError as exc:
                raise CurveError(f"line {lineno} ({key}): {exc}") from exc
        elif key == "domain":
            parts = value.split()
            if len(parts) != 2:
                raise CurveError(
                    f"line {lineno}: domain needs two numbers, got {value!r}"
                )
            try:
                fields[key] = (float(parts[0]), float(parts[1]))
            except ValueError as exc:
                raise CurveError(f"line {lineno}: bad domain number: {exc}") from exc
        elif key == "label":
            fields[key] = value
        else:
            raise CurveError(f"line {lineno}: unknown key {key!r}")

    missing = [k for k in (*_COMPONENT_KEYS, "domain") if k not in fields]
    if missing:
        raise CurveError(f"curve spec is missing {', '.join(missing)}")
    return NullCurve(
        components=tuple(fields[k] for k in _COMPONENT_KEYS),
        domain=fields["domain"],
        label=str(fields.get("label", label)),
    )


def load_curve(path) -> NullCurve:
    """Read and parse a curve spec file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CurveError(f"cannot read curve file {path!r}: {exc}") from exc
    return parse_curve_file(text)


def format_curve(curve: NullCurve) -> str:
    """Render a curve back into the spec-file format (round-trips)."""
    lines = []
    if curve.label:
        lines.append(f"label: {curve.label}")
    for key, expr in zip(_COMPONENT_KEYS, curve.components):
        lines.append(f"{key}: {pretty(expr)}")
    lines.append(f"domain: {curve.domain[0]!r} {curve.domain[1]!r}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Builtin curves
# --------------------------------------------------------------------------

_VERONESE_GENERATOR_SPEC = """\
# Circle-type generating curve: trigonometric components on two frequencies.
# Its surface is congruent to the Lorentzian Veronese surface.
label: veronese-generator
c1: 2*cos(t)/(3*sqrt3)
c2: 2*sin(t)/(3*sqrt3)
c3: cos(2*t)/(3*sqrt3)
c4: sin(2*t)/(3*sqrt3)
c5: 1/3
domain: -3.141592653589793 3.141592653589793
"""

_ALPHA0_SPEC = """\
# Generating curve with cotangent poles at both domain ends; its surface
# is minimal with K = 1/3 and |K^D| = 2/3 but NOT Veronese-congruent.
label: alpha0
c1: cos(2*t)*cot(t)/(3*sqrt3)
c2: 2*cos(t)^2/(3*sqrt3)
c3: cos(t)*cot(t)*cos(sqrt3*ln(tan(t)+sec(t)))/(3*sqrt3)
c4: cos(t)*cot(t)*sin(sqrt3*ln(tan(t)+sec(t)))/(3*sqrt3)
c5: cos(t)/(3*sqrt3)
domain: 0.0 1.5707963267948966
"""

BUILTIN_CURVE_SPECS = {
    "veronese-generator": _VERONESE_GENERATOR_SPEC,
    "alpha0": _ALPHA0_SPEC,
}


def builtin_curve(name: str) -> NullCurve:
    """One of the bundled generating curves, by name."""
    try:
        spec = BUILTIN_CURVE_SPECS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_CURVE_SPECS))
        raise CurveError(f"unknown builtin curve {name!r} (available: {known})")
    return parse_curve_file(spec)
