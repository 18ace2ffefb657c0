"""Dense complex polynomial and truncated-series arithmetic.

Everything here works in complex double precision.  Two polynomial types are
provided: :class:`BiPoly` (sparse, in ``z`` and ``w``) for the components of a
germ and :class:`UniPoly` (dense, in one variable ``u``) for restrictions to a
blow-up chart.  On top of these sit a root finder that reports multiplicities
and two independent residue routines.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, Mapping

import numpy as np

from .errors import (
    ContourEvaluationError,
    IllConditionedError,
    NotHomogeneousError,
    RootFindingError,
)

Chart = Literal["U", "V"]

ZERO_RTOL = 1e-10


def zero_tol(coeffs: Iterable[complex]) -> float:
    """Scale-aware threshold below which a coefficient counts as zero."""
    arr = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs)
    scale = float(np.max(np.abs(arr))) if arr.size else 0.0
    return ZERO_RTOL * (1.0 + scale)


# ---------------------------------------------------------------------------
# Bivariate polynomials
# ---------------------------------------------------------------------------


class BiPoly:
    """Sparse polynomial in ``(z, w)`` with complex coefficients.

    Coefficients are keyed by exponent pairs ``(i, j)`` meaning ``z**i * w**j``.
    Exact zeros are never stored.  Instances are immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], complex] | None = None):
        c: dict[tuple[int, int], complex] = {}
        for (i, j), v in (coeffs or {}).items():
            i, j = int(i), int(j)
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            v = complex(v)
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError("non-finite coefficient")
            v = c.get((i, j), 0j) + v
            c[(i, j)] = v
        self._c = {key: c[key] for key in sorted(c) if c[key] != 0}

    @classmethod
    def variables(cls) -> tuple["BiPoly", "BiPoly"]:
        return cls({(1, 0): 1}), cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: complex) -> "BiPoly":
        return cls({(0, 0): c})

    @property
    def coeffs(self) -> Mapping[tuple[int, int], complex]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def coeff(self, i: int, j: int) -> complex:
        return self._c.get((i, j), 0j)

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._c), default=0)

    @property
    def is_zero(self) -> bool:
        return not self._c

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self._c}) <= 1

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly({e: v for e, v in self._c.items() if e[0] + e[1] == d})

    def truncate(self, max_degree: int) -> "BiPoly":
        return BiPoly({e: v for e, v in self._c.items() if e[0] + e[1] <= max_degree})

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return BiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0j) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return BiPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], complex] = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0j) + v1 * v2
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return self * (1.0 / other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "BiPoly(0)"
        terms = []
        for (i, j), v in self._c.items():
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("z" if i == 1 else f"z^{i}"),
                    "" if j == 0 else ("w" if j == 1 else f"w^{j}"),
                ) if s
            )
            terms.append(f"({v:g})" + (f"*{mono}" if mono else ""))
        return "BiPoly(" + " + ".join(terms) + ")"

    # evaluation / composition -------------------------------------------
    def __call__(self, z, w):
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        out = np.zeros(np.broadcast(z, w).shape, dtype=complex)
        for (i, j), v in self._c.items():
            out = out + v * z**i * w**j
        return out if out.ndim else complex(out)

    def compose(self, p: "BiPoly", q: "BiPoly", max_degree: int | None = None) -> "BiPoly":
        """Substitute ``z -> p``, ``w -> q``, optionally truncating total degree."""
        if not self._c:
            return BiPoly()
        top_i = max(i for i, _ in self._c)
        top_j = max(j for _, j in self._c)

        def trunc(x: BiPoly) -> BiPoly:
            return x if max_degree is None else x.truncate(max_degree)

        pz = [BiPoly.constant(1)]
        for _ in range(top_i):
            pz.append(trunc(pz[-1] * p))
        qw = [BiPoly.constant(1)]
        for _ in range(top_j):
            qw.append(trunc(qw[-1] * q))
        out = BiPoly()
        for (i, j), v in self._c.items():
            out = out + trunc(pz[i] * qw[j]) * v
        return out

    def swap(self) -> "BiPoly":
        """The polynomial with ``z`` and ``w`` exchanged."""
        return BiPoly({(j, i): v for (i, j), v in self._c.items()})


def homogeneous_parts(P: BiPoly) -> list[tuple[int, BiPoly]]:
    """Split ``P`` into its nonzero homogeneous parts, ordered by degree."""
    degrees = sorted({i + j for i, j in P.coeffs})
    return [(d, P.homogeneous_part(d)) for d in degrees]


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense polynomial in one complex variable, coefficients low degree first.

    Trailing exact zeros are stripped so the leading coefficient is nonzero
    unless the polynomial is zero.
    """

    __slots__ = ("_a",)

    def __init__(self, coeffs: Iterable[complex] = ()):
        a = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=complex).ravel()
        if a.size and not np.all(np.isfinite(a)):
            raise ValueError("non-finite coefficient")
        nz = np.flatnonzero(a)
        a = a[: nz[-1] + 1] if nz.size else a[:0]
        a.setflags(write=False)
        self._a = a

    @property
    def coeffs(self) -> np.ndarray:
        return self._a

    @property
    def degree(self) -> int:
        return max(len(self._a) - 1, 0)

    @property
    def is_zero(self) -> bool:
        return len(self._a) == 0

    def coeff(self, i: int) -> complex:
        return complex(self._a[i]) if 0 <= i < len(self._a) else 0j

    def zero_tol(self) -> float:
        return zero_tol(self._a)

    def is_negligible(self) -> bool:
        """True when every coefficient is below the scale-aware tolerance."""
        return bool(np.all(np.abs(self._a) <= ZERO_RTOL)) if len(self._a) else True

    def trimmed(self) -> "UniPoly":
        """Drop leading (high-degree) coefficients below the zero tolerance."""
        tol = self.zero_tol()
        a = self._a
        keep = np.flatnonzero(np.abs(a) > tol)
        return UniPoly(a[: keep[-1] + 1] if keep.size else ())

    def cleaned(self) -> "UniPoly":
        """Set every coefficient below the zero tolerance to exactly zero."""
        a = self._a.copy()
        a[np.abs(a) <= self.zero_tol()] = 0
        return UniPoly(a)

    def order_at_zero(self) -> float:
        """Order of vanishing at ``u = 0`` (``math.inf`` for the zero polynomial)."""
        tol = self.zero_tol()
        big = np.flatnonzero(np.abs(self._a) > tol)
        return int(big[0]) if big.size else math.inf

    def __call__(self, u):
        if not len(self._a):
            return np.zeros_like(np.asarray(u, dtype=complex)) if np.ndim(u) else 0j
        out = np.polyval(self._a[::-1], np.asarray(u, dtype=complex))
        return out if np.ndim(out) else complex(out)

    def deriv(self, order: int = 1) -> "UniPoly":
        a = self._a
        for _ in range(order):
            if len(a) <= 1:
                return UniPoly()
            a = a[1:] * np.arange(1, len(a))
        return UniPoly(a)

    def shift(self, u0: complex) -> "UniPoly":
        """Return ``q(u) = p(u + u0)`` by repeated synthetic division."""
        a = list(self._a[::-1])  # high degree first
        n = len(a)
        out = []
        for _ in range(n):
            acc = 0j
            quotient = []
            for c in a:
                acc = acc * u0 + c
                quotient.append(acc)
            out.append(quotient[-1])
            a = quotient[:-1]
        return UniPoly(out)

    def __add__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self._a), len(other._a))
        a = np.zeros(n, dtype=complex)
        a[: len(self._a)] += self._a
        a[: len(other._a)] += other._a
        return UniPoly(a)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-self._a)

    def __sub__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return UniPoly(self._a * other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly()
        return UniPoly(np.convolve(self._a, other._a))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash(self._a.tobytes())

    def allclose(self, other: "UniPoly", atol: float = 1e-12) -> bool:
        n = max(len(self._a), len(other._a))
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: len(self._a)] = self._a
        b[: len(other._a)] = other._a
        return bool(np.all(np.abs(a - b) <= atol))

    def __repr__(self):
        return f"UniPoly({np.array2string(self._a, precision=6)})"


U_VAR = UniPoly([0, 1])


def restrict_chart(h: BiPoly, chart: Chart = "U") -> UniPoly:
    """Restrict a homogeneous ``h`` to ``h(1, u)`` (chart U) or ``h(u, 1)`` (chart V)."""
    if not h.is_homogeneous():
        raise NotHomogeneousError("restrict_chart needs a homogeneous polynomial")
    if chart not in ("U", "V"):
        raise ValueError(f"unknown chart {chart!r}")
    if h.is_zero:
        return UniPoly()
    a = np.zeros(h.degree + 1, dtype=complex)
    for (i, j), v in h.items():
        a[j if chart == "U" else i] += v
    return UniPoly(a)


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    """Power series known through ``u**truncation_order``."""

    coeffs: tuple[complex, ...]
    truncation_order: int

    def __post_init__(self):
        if len(self.coeffs) != self.truncation_order + 1:
            raise ValueError("length must equal truncation_order + 1")

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "TruncSeries":
        return cls(tuple(p.coeff(i) for i in range(order + 1)), order)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.truncation_order, other.truncation_order)
        c = np.convolve(np.array(self.coeffs[: n + 1]), np.array(other.coeffs[: n + 1]))
        return TruncSeries(tuple(complex(x) for x in c[: n + 1]), n)

    def inverse(self) -> "TruncSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / a[0]]
        for t in range(1, self.truncation_order + 1):
            acc = sum(a[s] * inv[t - s] for s in range(1, t + 1))
            inv.append(-acc / a[0])
        return TruncSeries(tuple(inv), self.truncation_order)


# ---------------------------------------------------------------------------
# Roots with multiplicity
# ---------------------------------------------------------------------------


def _taylor_at(a: np.ndarray, c: complex) -> tuple[np.ndarray, np.ndarray]:
    """Taylor coefficients of ``sum a_i u^i`` at ``c`` and their rounding scales."""
    t = UniPoly(a).shift(c).coeffs
    t = np.concatenate([t, np.zeros(len(a) - len(t), dtype=complex)])
    absa = np.abs(a)
    ac = abs(c)
    scale = np.array([
        sum(absa[i] * math.comb(i, j) * ac ** (i - j) for i in range(j, len(a)))
        for j in range(len(a))
    ])
    return t, scale


def _durand_kerner(a: np.ndarray, max_iter: int) -> np.ndarray:
    """Weierstrass/Durand-Kerner simultaneous iteration on the monic normalization."""
    d = len(a) - 1
    monic = a / a[-1]
    if d == 1:
        return np.array([-monic[0]])
    # Fujiwara-type bound for the initial circle
    radius = 2 * max(abs(monic[d - i]) ** (1 / i) for i in range(1, d + 1))
    radius = max(radius, 1e-3)
    z = radius * (0.4 + 0.9j) ** np.arange(d) / abs(0.4 + 0.9j) ** np.arange(d)
    z = z * 0.5
    coeffs_hi = monic[::-1]
    best = math.inf
    stall = 0
    for _ in range(max_iter):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        denom = np.prod(diff, axis=1)
        denom[denom == 0] = 1e-300
        step = np.polyval(coeffs_hi, z) / denom
        z = z - step
        if not np.all(np.isfinite(z)):
            raise RootFindingError("simultaneous iteration diverged")
        size = float(np.max(np.abs(step) / (1 + np.abs(z))))
        if size < 1e-15:
            break
        if size < best * 0.999:
            best = size
            stall = 0
        else:
            stall += 1
            if stall > 50:
                break
    return z


def roots_with_multiplicity(p: UniPoly, tol: float = 1e-8,
                            max_iter: int = 2000) -> list[tuple[complex, int]]:
    """Roots of ``p`` with multiplicities, sorted by (real, imag).

    Roots within relative distance ``tol`` are merged.  Wider clusters are
    merged only when the Taylor coefficients of ``p`` at the cluster centroid
    vanish to the cluster size, relative to their rounding scale, which is how
    a perturbed multiple root announces itself.  Every reported root is
    polished by Newton's method on the derivative of order ``mult - 1``.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no finite root set")
    a = p.coeffs
    ztol = zero_tol(a)
    s0 = 0
    while s0 < len(a) - 1 and abs(a[s0]) <= ztol:
        s0 += 1
    rest = a[s0:]
    found: list[tuple[complex, int]] = []
    if s0:
        found.append((0j, s0))
    if len(rest) > 1:
        approx = _durand_kerner(rest, max_iter)
        for c, mult in _cluster(rest, approx, tol):
            found.append((_polish(rest, c, mult) if mult == 1 else c, mult))
    found = [(complex(r), m) for r, m in found]
    found.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    return found


TAYLOR_RTOL = 1e-12


def _cluster(a: np.ndarray, approx: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    clusters = [[complex(x)] for x in approx]
    candidate = max(tol ** 0.25, tol)

    def centre(cl) -> complex:
        c = sum(cl) / len(cl)
        return _polish(a, c, len(cl)) if len(cl) > 1 else c

    def vanishes(c: complex, s: int, rtol: float) -> bool:
        t, scale = _taylor_at(a, c)
        return bool(np.all(np.abs(t[: s - 1]) <= rtol * scale[: s - 1]))

    changed = True
    while changed and len(clusters) > 1:
        changed = False
        pairs = []
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                ci = sum(clusters[i]) / len(clusters[i])
                cj = sum(clusters[j]) / len(clusters[j])
                ref = 1 + max(abs(ci), abs(cj))
                rel = abs(ci - cj) / ref
                if rel <= candidate:
                    pairs.append((rel, i, j))
        pairs.sort()
        for rel, i, j in pairs:
            merged = clusters[i] + clusters[j]
            if rel <= tol or vanishes(centre(merged), len(merged), TAYLOR_RTOL):
                clusters = [cl for t, cl in enumerate(clusters) if t not in (i, j)]
                clusters.append(merged)
                changed = True
                break

    out = []
    for cl in clusters:
        c = centre(cl)
        if len(cl) > 1 and not vanishes(c, len(cl), 1e-6):
            raise RootFindingError(f"cluster of size {len(cl)} near {c} did not settle")
        out.append((c, len(cl)))
    return out


def _polish(a: np.ndarray, c: complex, mult: int, steps: int = 8) -> complex:
    p = UniPoly(a).deriv(mult - 1)
    dp = p.deriv()
    best, best_val = c, abs(p(c))
    x = c
    for _ in range(steps):
        d = dp(x)
        if d == 0:
            break
        x = x - p(x) / d
        val = abs(p(x))
        if not math.isfinite(val):
            break
        if val < best_val and abs(x - c) <= 1e-3 * (1 + abs(c)):
            best, best_val = x, val
    return best


# ---------------------------------------------------------------------------
# Residues
# ---------------------------------------------------------------------------


def series_residue(numer: UniPoly, denom: UniPoly, u0: complex) -> complex:
    """Residue of ``numer/denom`` at ``u0`` by truncated-series division.

    ``denom`` is shifted to ``u0`` and factored as ``u**n * s(u)``; ``s`` is
    inverted as a series to order ``n - 1`` and the residue read off as the
    ``u**(n-1)`` coefficient of ``numer * s**-1``.
    """
    if denom.is_zero:
        raise IllConditionedError("denominator is identically zero")
    d_sh = denom.shift(u0)
    n = d_sh.order_at_zero()
    if n == math.inf:
        raise IllConditionedError("denominator negligible after shifting")
    if n == 0:
        return 0j
    s = UniPoly(d_sh.coeffs[n:])
    if abs(s.coeff(0)) <= zero_tol(d_sh.coeffs):
        raise IllConditionedError("leading series coefficient below tolerance")
    num_sh = numer.shift(u0).cleaned()
    inv = TruncSeries.from_poly(s, n - 1).inverse()
    prod = TruncSeries.from_poly(num_sh, n - 1) * inv
    return complex(prod.coeffs[n - 1])


def contour_residue(f: Callable, center: complex, radius: float, nodes: int = 128) -> complex:
    """Trapezoidal approximation of ``(1/2 pi i) \\oint f`` on a circle."""
    theta = 2 * np.pi * np.arange(nodes) / nodes
    e = np.exp(1j * theta)
    pts = center + radius * e
    try:
        vals = np.asarray(f(pts), dtype=complex)
        if vals.shape != pts.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([complex(f(p)) for p in pts])
    if not np.all(np.isfinite(vals)):
        raise ContourEvaluationError("non-finite value on the contour")
    return complex(radius * np.mean(vals * e))
