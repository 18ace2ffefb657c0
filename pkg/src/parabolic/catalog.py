"""Small named germs with known direction data, used by the demos and tests."""
from __future__ import annotations

from .algebra import BiPoly
from .germ import Germ

_z, _w = BiPoly.variables()


def diagonal_quadratic() -> Germ:
    """``(z - z^2, w - w^2)``: three nondegenerate directions, Hakim indices -1, 1, -1."""
    return Germ(_z - _z * _z, _w - _w * _w)


def irregular(c: complex = 1.0) -> Germ:
    """``(z + z^2, w + zw + c w^2)``: ``[1:0]`` irregular with ``(m, n) = (0, 2)``."""
    return Germ(_z + _z * _z, _w + _z * _w + _w * _w * c)


def irregular_normalized() -> Germ:
    """``(z - z^2, w - zw - w^2)``: irregular ``[1:0]`` with ``a_0 = c_2 = -1``."""
    return Germ(_z - _z * _z, _w - _z * _w - _w * _w)


def irregular_degenerate() -> Germ:
    """``(z - zw + w^2, w - w^2)``: ``[1:0]`` with ``(m, n) = (1, 3)``, already normalised."""
    return Germ(_z - _z * _w + _w * _w, _w - _w * _w)


def degenerate_fuchsian(rho: complex = 0.0) -> Germ:
    """``(z + zw, w + (4/3) w^2 + rho z^3)``: ``[1:0]`` with ``(m, n) = (1, 2)`` and index 3."""
    g2 = _w + _w * _w * (4 / 3)
    if rho != 0:
        g2 = g2 + _z ** 3 * rho
    return Germ(_z + _z * _w, g2)


def apparent() -> Germ:
    """``(z + zw, w + 2zw)``: ``[1:0]`` with ``(m, n) = (1, 1)``."""
    return Germ(_z + _z * _w, _w + _z * _w * 2)


def cube_roots() -> Germ:
    """``(z + w^2, w + (z + w^2)^2)``: directions at the cube roots of unity, index -3."""
    return Germ(_z + _w * _w, _w + (_z + _w * _w) ** 2)


def dicritical() -> Germ:
    """``(z + z^2, w + zw)``: every direction is characteristic."""
    return Germ(_z + _z * _z, _w + _z * _w)


NAMED = {
    "diagonal_quadratic": diagonal_quadratic,
    "irregular": irregular,
    "irregular_normalized": irregular_normalized,
    "irregular_degenerate": irregular_degenerate,
    "degenerate_fuchsian": degenerate_fuchsian,
    "apparent": apparent,
    "cube_roots": cube_roots,
    "dicritical": dicritical,
}
