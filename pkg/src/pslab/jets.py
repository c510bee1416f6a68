"""Truncated Taylor-series (jet) arithmetic in one and two variables.

``Jet1`` carries the Taylor coefficients of a scalar function of one
variable at an expansion point; ``Jet2`` does the same for two variables
(s, t) up to a total degree.  All derivatives used by the geometry are
extracted from jets -- there is no symbolic differentiation and no finite
differencing anywhere in the main code path (finite differences exist only
as the independent cross-check oracle ``fd_derivative``).

Elementary functions (``sin``, ``ln``, ...) are module-level and dispatch
on the argument type, so the same closed-form expression can be evaluated
on floats, jets in t, or bi-jets in (s, t).
"""
from __future__ import annotations

import math
from functools import singledispatch

import numpy as np

from .algebra import PseudoVector, Signature, E52
from .errors import JetDomainError, JetError


class Jet1:
    """Jet of one variable: coefficients a_0..a_N, k-th derivative = k! a_k."""

    __slots__ = ("coef",)

    def __init__(self, coef):
        self.coef = np.array(coef, dtype=float)
        if self.coef.ndim != 1 or self.coef.size == 0:
            raise JetError("Jet1 needs a non-empty 1-d coefficient array")

    @classmethod
    def variable(cls, value: float, order: int) -> "Jet1":
        c = np.zeros(order + 1)
        c[0] = value
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def constant(cls, value: float, order: int) -> "Jet1":
        c = np.zeros(order + 1)
        c[0] = value
        return cls(c)

    @property
    def order(self) -> int:
        return self.coef.size - 1

    @property
    def value(self) -> float:
        return float(self.coef[0])

    def derivative(self, k: int) -> float:
        """k-th derivative at the expansion point, i.e. k! * a_k."""
        if k < 0 or k > self.order:
            raise JetError(f"derivative order {k} exceeds jet order {self.order}")
        return float(math.factorial(k) * self.coef[k])

    def truncated(self, order: int) -> "Jet1":
        if order > self.order:
            raise JetError(f"cannot extend jet of order {self.order} to {order}")
        return Jet1(self.coef[: order + 1])

    def shifted(self) -> "Jet1":
        """Jet of the derivative function: order drops by one."""
        if self.order == 0:
            raise JetError("cannot differentiate an order-0 jet")
        k = np.arange(1, self.order + 1)
        return Jet1(self.coef[1:] * k)

    def _coerce(self, other):
        if isinstance(other, Jet1):
            n = min(self.order, other.order)
            return self.truncated(n), other.truncated(n)
        if isinstance(other, (int, float)):
            return self, Jet1.constant(float(other), self.order)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet1(a.coef + b.coef)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet1(a.coef - b.coef)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet1(b.coef - a.coef)

    def __neg__(self):
        return Jet1(-self.coef)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Jet1(self.coef * float(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n = a.order
        return Jet1(np.convolve(a.coef, b.coef)[: n + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Jet1(self.coef / float(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return _div1(a, b)

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return _div1(Jet1.constant(float(other), self.order), self)
        return NotImplemented

    def __pow__(self, n):
        return _int_pow(self, n)

    def __repr__(self):
        return f"Jet1({self.coef.tolist()!r})"


def _div1(a: Jet1, b: Jet1) -> Jet1:
    if b.coef[0] == 0.0:
        raise JetDomainError("jet division by a jet with zero constant term")
    n = a.order
    q = np.zeros(n + 1)
    for k in range(n + 1):
        acc = a.coef[k] - np.dot(q[:k], b.coef[k:0:-1])
        q[k] = acc / b.coef[0]
    return Jet1(q)


class Jet2:
    """Bi-jet in (s, t): coefficients a_ij for i+j <= N, stored densely.

    Mixed partial d^{i+j}/ds^i dt^j at the expansion point is i! j! a_ij.
    Entries with i+j > N are kept identically zero.
    """

    __slots__ = ("coef",)

    def __init__(self, coef):
        self.coef = np.array(coef, dtype=float)
        if self.coef.ndim != 2 or self.coef.shape[0] != self.coef.shape[1]:
            raise JetError("Jet2 needs a square coefficient array")

    @classmethod
    def constant(cls, value: float, order: int) -> "Jet2":
        c = np.zeros((order + 1, order + 1))
        c[0, 0] = value
        return cls(c)

    @classmethod
    def variables(cls, s0: float, t0: float, order: int):
        """The coordinate jets (s, t) expanded at (s0, t0)."""
        s = np.zeros((order + 1, order + 1))
        t = np.zeros((order + 1, order + 1))
        s[0, 0] = s0
        t[0, 0] = t0
        if order >= 1:
            s[1, 0] = 1.0
            t[0, 1] = 1.0
        return cls(s), cls(t)

    @classmethod
    def from_jet1_t(cls, jet: Jet1, order: int) -> "Jet2":
        """Embed a jet in t as a bi-jet that is constant in s."""
        if jet.order < order:
            raise JetError(f"need a t-jet of order >= {order}, got {jet.order}")
        c = np.zeros((order + 1, order + 1))
        c[0, : order + 1] = jet.coef[: order + 1]
        return cls(c)

    @property
    def order(self) -> int:
        return self.coef.shape[0] - 1

    @property
    def value(self) -> float:
        return float(self.coef[0, 0])

    def partial(self, i: int, j: int) -> float:
        """Mixed partial d^{i+j}/ds^i dt^j at the expansion point."""
        if i < 0 or j < 0 or i + j > self.order:
            raise JetError(f"partial ({i},{j}) exceeds jet order {self.order}")
        return float(math.factorial(i) * math.factorial(j) * self.coef[i, j])

    def deriv_s(self) -> "Jet2":
        """Jet of the partial derivative in s; order drops by one."""
        if self.order == 0:
            raise JetError("cannot differentiate an order-0 jet")
        n = self.order
        mult = np.arange(1, n + 1)[:, None]
        return Jet2(self.coef[1:, :n] * mult)

    def deriv_t(self) -> "Jet2":
        """Jet of the partial derivative in t; order drops by one."""
        if self.order == 0:
            raise JetError("cannot differentiate an order-0 jet")
        n = self.order
        mult = np.arange(1, n + 1)[None, :]
        return Jet2(self.coef[:n, 1:] * mult)

    def truncated(self, order: int) -> "Jet2":
        if order > self.order:
            raise JetError(f"cannot extend jet of order {self.order} to {order}")
        return Jet2(self.coef[: order + 1, : order + 1])

    def _coerce(self, other):
        if isinstance(other, Jet2):
            n = min(self.order, other.order)
            return self.truncated(n), other.truncated(n)
        if isinstance(other, (int, float)):
            return self, Jet2.constant(float(other), self.order)
        return None, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet2(a.coef + b.coef)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet2(a.coef - b.coef)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Jet2(b.coef - a.coef)

    def __neg__(self):
        return Jet2(-self.coef)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Jet2(self.coef * float(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n = a.order
        out = np.zeros((n + 1, n + 1))
        for i in range(n + 1):
            for j in range(n + 1 - i):
                out[i, j] = np.sum(a.coef[: i + 1, : j + 1] * b.coef[i::-1, j::-1])
        return Jet2(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Jet2(self.coef / float(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return _div2(a, b)

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return _div2(Jet2.constant(float(other), self.order), self)
        return NotImplemented

    def __pow__(self, n):
        return _int_pow(self, n)

    def __repr__(self):
        return f"Jet2(order={self.order}, value={self.value!r})"


def _div2(a: Jet2, b: Jet2) -> Jet2:
    if b.coef[0, 0] == 0.0:
        raise JetDomainError("jet division by a jet with zero constant term")
    n = a.order
    q = np.zeros((n + 1, n + 1))
    for d in range(n + 1):
        for i in range(d + 1):
            j = d - i
            conv = np.sum(b.coef[: i + 1, : j + 1] * q[i::-1, j::-1])
            q[i, j] = (a.coef[i, j] - conv) / b.coef[0, 0]
    return Jet2(q)


def _int_pow(base, n):
    if not isinstance(n, int):
        raise JetError(f"jet powers take integer exponents, got {n!r}")
    if n < 0:
        return 1.0 / _int_pow(base, -n)
    result = base * 0 + 1.0
    acc = base
    k = n
    while k > 0:
        if k & 1:
            result = result * acc
        k >>= 1
        if k:
            acc = acc * acc
    return result


# --------------------------------------------------------------------------
# Elementary functions: recurrences on Jet1, Horner composition on Jet2,
# plain math on floats.  All dispatch on the argument type.
# --------------------------------------------------------------------------

def _sincos1(u: Jet1, hyperbolic: bool):
    n = u.order
    s = np.zeros(n + 1)
    c = np.zeros(n + 1)
    if hyperbolic:
        s[0], c[0] = math.sinh(u.coef[0]), math.cosh(u.coef[0])
        sgn = 1.0
    else:
        s[0], c[0] = math.sin(u.coef[0]), math.cos(u.coef[0])
        sgn = -1.0
    du = np.arange(1, n + 1) * u.coef[1:] if n else np.zeros(0)
    for k in range(1, n + 1):
        s[k] = np.dot(du[:k], c[k - 1 :: -1][:k]) / k
        c[k] = sgn * np.dot(du[:k], s[k - 1 :: -1][:k]) / k
    return Jet1(s), Jet1(c)


def _exp1(u: Jet1) -> Jet1:
    n = u.order
    v = np.zeros(n + 1)
    v[0] = math.exp(u.coef[0])
    du = np.arange(1, n + 1) * u.coef[1:] if n else np.zeros(0)
    for k in range(1, n + 1):
        v[k] = np.dot(du[:k], v[k - 1 :: -1][:k]) / k
    return Jet1(v)


def _ln1(u: Jet1) -> Jet1:
    if u.coef[0] <= 0.0:
        raise JetDomainError(f"ln: argument {u.coef[0]!r} is not positive")
    n = u.order
    v = np.zeros(n + 1)
    v[0] = math.log(u.coef[0])
    for k in range(1, n + 1):
        acc = np.dot(np.arange(1, k) * v[1:k], u.coef[k - 1 : 0 : -1])
        v[k] = (u.coef[k] - acc / k) / u.coef[0]
    return Jet1(v)


def _sqrt1(u: Jet1) -> Jet1:
    if u.coef[0] <= 0.0:
        raise JetDomainError(f"sqrt: argument {u.coef[0]!r} is not positive")
    n = u.order
    v = np.zeros(n + 1)
    v[0] = math.sqrt(u.coef[0])
    for k in range(1, n + 1):
        acc = np.dot(v[1:k], v[k - 1 : 0 : -1])
        v[k] = (u.coef[k] - acc) / (2.0 * v[0])
    return Jet1(v)


def _compose2(fn1, u: Jet2) -> Jet2:
    """Elementary function of a bi-jet via Horner on the scalar series."""
    n = u.order
    series = fn1(Jet1.variable(u.coef[0, 0], n)).coef
    uhat = Jet2(np.array(u.coef))
    uhat.coef[0, 0] = 0.0
    result = Jet2.constant(series[n], n)
    for k in range(n - 1, -1, -1):
        result = result * uhat + series[k]
    return result


def _make_elementary(name: str, float_fn, jet1_fn):
    @singledispatch
    def fn(x):
        return float_fn(x)

    @fn.register
    def _(x: Jet1):
        return jet1_fn(x)

    @fn.register
    def _(x: Jet2):
        return _compose2(jet1_fn, x)

    fn.__name__ = name
    fn.__qualname__ = name
    return fn


def _float_sec(x):
    return 1.0 / math.cos(x)


def _float_csc(x):
    return 1.0 / math.sin(x)


def _float_cot(x):
    return math.cos(x) / math.sin(x)


def _float_ln(x):
    if x <= 0.0:
        raise JetDomainError(f"ln: argument {x!r} is not positive")
    return math.log(x)


def _float_sqrt(x):
    if x <= 0.0:
        raise JetDomainError(f"sqrt: argument {x!r} is not positive")
    return math.sqrt(x)


sin = _make_elementary("sin", math.sin, lambda u: _sincos1(u, False)[0])
cos = _make_elementary("cos", math.cos, lambda u: _sincos1(u, False)[1])
sinh = _make_elementary("sinh", math.sinh, lambda u: _sincos1(u, True)[0])
cosh = _make_elementary("cosh", math.cosh, lambda u: _sincos1(u, True)[1])
exp = _make_elementary("exp", math.exp, _exp1)
ln = _make_elementary("ln", _float_ln, _ln1)
sqrt = _make_elementary("sqrt", _float_sqrt, _sqrt1)
tan = _make_elementary(
    "tan", math.tan, lambda u: _div1(*(_sincos1(u, False)))
)
sec = _make_elementary(
    "sec", _float_sec, lambda u: _div1(Jet1.constant(1.0, u.order), _sincos1(u, False)[1])
)
csc = _make_elementary(
    "csc", _float_csc, lambda u: _div1(Jet1.constant(1.0, u.order), _sincos1(u, False)[0])
)
cot = _make_elementary(
    "cot", _float_cot, lambda u: _div1(_sincos1(u, False)[1], _sincos1(u, False)[0])
)

#: Elementary functions by DSL name.
FUNCTIONS = {
    "sin": sin,
    "cos": cos,
    "sinh": sinh,
    "cosh": cosh,
    "tan": tan,
    "sec": sec,
    "csc": csc,
    "cot": cot,
    "exp": exp,
    "ln": ln,
    "sqrt": sqrt,
}


def derivative(a: Jet1, k: int) -> float:
    """k-th derivative carried by a one-variable jet (k! times coefficient)."""
    return a.derivative(k)


# --------------------------------------------------------------------------
# Finite-difference oracle (independent of the jet code path).
# --------------------------------------------------------------------------

_FD_STENCILS = {
    1: ([1, -1], [1.0, -1.0], 2.0),
    2: ([1, 0, -1], [1.0, -2.0, 1.0], 1.0),
    3: ([2, 1, -1, -2], [1.0, -2.0, 2.0, -1.0], 2.0),
    4: ([2, 1, 0, -1, -2], [1.0, -4.0, 6.0, -4.0, 1.0], 1.0),
}


def fd_derivative(f, t0: float, k: int, h: float | None = None) -> float:
    """Central-difference k-th derivative with one Richardson step.

    The plain central stencil has error O(h^2); combining D(h) and D(h/2)
    as (4 D(h/2) - D(h)) / 3 removes the leading term.  Default step is
    1e-4 * max(1, |t0|).
    """
    if k not in _FD_STENCILS:
        raise ValueError(f"finite differences support orders 1..4, got {k}")
    if h is None:
        h = 1e-4 * max(1.0, abs(t0))

    def stencil(step):
        offsets, weights, denom = _FD_STENCILS[k]
        acc = 0.0
        for o, w in zip(offsets, weights):
            acc += w * f(t0 + o * step)
        return acc / (denom * step**k)

    return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0


def fd_crosscheck(f, t0: float, k: int, h: float | None = None) -> float:
    """Relative discrepancy between the jet derivative of ``f`` and the
    finite-difference oracle.

    ``f`` must accept both a float and a ``Jet1`` argument (any expression
    built from the dispatching elementary functions does).
    """
    jet_val = f(Jet1.variable(t0, k)).derivative(k)
    fd_val = fd_derivative(f, t0, k, h)
    return abs(jet_val - fd_val) / max(1.0, abs(jet_val), abs(fd_val))


# --------------------------------------------------------------------------
# Jet-valued vectors of E^5_2.
# --------------------------------------------------------------------------

class JetVector:
    """Five jets (or floats) forming a vector-valued function of E^n_t."""

    __slots__ = ("components", "signature")

    def __init__(self, components, signature: Signature = E52):
        comps = tuple(components)
        if len(comps) != signature.dim:
            raise ValueError(f"expected {signature.dim} components, got {len(comps)}")
        self.components = comps
        self.signature = signature

    def dot(self, other: "JetVector"):
        """Indefinite inner product; the result is a jet (or float)."""
        if self.signature != other.signature:
            raise JetError("signature mismatch in jet inner product")
        signs = self.signature.signs
        acc = signs[0] * (self.components[0] * other.components[0])
        for sg, a, b in zip(signs[1:], self.components[1:], other.components[1:]):
            acc = acc + sg * (a * b)
        return acc

    def map(self, fn) -> "JetVector":
        return JetVector([fn(c) for c in self.components], self.signature)

    def __add__(self, other: "JetVector") -> "JetVector":
        return JetVector(
            [a + b for a, b in zip(self.components, other.components)],
            self.signature,
        )

    def __sub__(self, other: "JetVector") -> "JetVector":
        return JetVector(
            [a - b for a, b in zip(self.components, other.components)],
            self.signature,
        )

    def __mul__(self, scalar) -> "JetVector":
        return JetVector([c * scalar for c in self.components], self.signature)

    __rmul__ = __mul__

    def __neg__(self) -> "JetVector":
        return JetVector([-c for c in self.components], self.signature)

    def value(self) -> PseudoVector:
        return PseudoVector(
            [c.value if hasattr(c, "value") else float(c) for c in self.components],
            self.signature,
        )

    def derivative(self, k: int) -> PseudoVector:
        """Componentwise k-th derivative (one-variable jets only)."""
        return PseudoVector(
            [c.derivative(k) for c in self.components], self.signature
        )

    def partial(self, i: int, j: int) -> PseudoVector:
        """Componentwise mixed partial (bi-jets only)."""
        return PseudoVector(
            [c.partial(i, j) for c in self.components], self.signature
        )

    def shifted(self) -> "JetVector":
        """Componentwise derivative jet (one-variable jets only)."""
        return JetVector([c.shifted() for c in self.components], self.signature)

    def deriv_s(self) -> "JetVector":
        return JetVector([c.deriv_s() for c in self.components], self.signature)

    def deriv_t(self) -> "JetVector":
        return JetVector([c.deriv_t() for c in self.components], self.signature)

    def truncated(self, order: int) -> "JetVector":
        return JetVector([c.truncated(order) for c in self.components], self.signature)
