"""Germ files and deterministic JSON reports."""
from __future__ import annotations

import json
import math
import os
from pathlib import Path
from typing import Any

from .algebra import BiPoly
from .criteria import verdict
from .directions import CharDirection, characteristic_directions
from .germ import Germ
from .indices import index_report

DEFAULT_SEED = 42


def default_seed() -> int:
    """Sampling seed: ``PARABOLIC_SEED`` if set, else 42."""
    raw = os.environ.get("PARABOLIC_SEED")
    if raw is None or raw.strip() == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"PARABOLIC_SEED must be an integer, got {raw!r}") from exc


class GermFileError(ValueError):
    """Malformed germ document."""


def parse_germ(doc: Any) -> Germ:
    """Build a germ from ``{"components": [[monomial, ...], [monomial, ...]]}``."""
    if not isinstance(doc, dict) or "components" not in doc:
        raise GermFileError('expected an object with a "components" key')
    comps = doc["components"]
    if not isinstance(comps, list) or len(comps) != 2:
        raise GermFileError('"components" must be a list of two monomial lists')
    polys = []
    for idx, comp in enumerate(comps):
        if not isinstance(comp, list):
            raise GermFileError(f"component {idx} is not a list")
        terms: dict[tuple[int, int], complex] = {}
        for mono in comp:
            if not isinstance(mono, dict):
                raise GermFileError(f"component {idx}: monomial must be an object")
            try:
                i, j = mono["i"], mono["j"]
                re = mono.get("re", 0.0)
                im = mono.get("im", 0.0)
            except KeyError as exc:
                raise GermFileError(f"component {idx}: monomial missing {exc}") from None
            if not (isinstance(i, int) and isinstance(j, int)) or isinstance(i, bool) \
                    or isinstance(j, bool) or i < 0 or j < 0:
                raise GermFileError(f"component {idx}: exponents must be nonnegative integers")
            if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (re, im)):
                raise GermFileError(f"component {idx}: re/im must be numbers")
            if not (math.isfinite(re) and math.isfinite(im)):
                raise GermFileError(f"component {idx}: non-finite coefficient")
            terms[(i, j)] = terms.get((i, j), 0j) + complex(re, im)
        polys.append(BiPoly(terms))
    return Germ(polys[0], polys[1])


def germ_to_doc(F: Germ) -> dict:
    return {"components": [
        [{"re": v.real, "im": v.imag, "i": i, "j": j} for (i, j), v in f.items()]
        for f in (F.f1, F.f2)
    ]}


def load_germ(path: str | Path) -> Germ:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GermFileError(f"invalid JSON: {exc}") from None
    return parse_germ(doc)


def save_germ(F: Germ, path: str | Path) -> None:
    Path(path).write_text(dumps(germ_to_doc(F)) + "\n", encoding="utf-8")


# -- deterministic serialisation -----------------------------------------------


def _num(x: float) -> str:
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    if x == 0:
        return "0"  # folds -0.0
    return format(x, ".17g")


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with 17 significant digits per float and stable key order."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, complex):
        return dumps({"re": obj.real, "im": obj.imag}, indent, _level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item(), indent, _level)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _clean(c: complex) -> complex:
    """Round away last-bit noise so reports do not depend on summation order."""
    c = complex(c)
    return complex(float(f"{c.real:.15g}"), float(f"{c.imag:.15g}"))


def direction_record(F: Germ, d: CharDirection) -> dict:
    idx = index_report(F, d)
    v = verdict(F, d)
    if d.chart == "V" and d.u0 == 0:
        where: Any = "infinity"
    else:
        where = {"chart": d.chart, "u0": _clean(d.u0)}
    m = d.m if d.m != math.inf else math.inf
    return {
        "direction": where,
        "label": d.label,
        "multiplicity": d.multiplicity,
        "degenerate": d.degenerate,
        "m": m if m == math.inf else int(m),
        "n": d.n,
        "class": d.kind,
        "lambda": _clean(d.lam),
        "hakim": None if idx.hakim is None else _clean(idx.hakim),
        "abate": _clean(idx.abate),
        "rho": None if idx.rho is None else _clean(idx.rho),
        "regular": idx.regular,
        "verdict": {
            "conclusion": v.conclusion,
            "justification": v.justification,
            "tested_value": None if v.tested_value is None else _clean(v.tested_value),
        },
    }


def analysis_report(F: Germ) -> dict:
    rep = characteristic_directions(F)
    return {
        "order": rep.k,
        "dicritical": rep.dicritical,
        "directions": [direction_record(F, d) for d in rep.directions],
    }
