"""Interval routing schemes for circular-arc graphs.

Arc models and routing schemes are plain dicts with the same layout as the
JSON files read and written by the ``carc`` command line tool.
"""

from __future__ import annotations

import json
from typing import Any, Union

from . import _carc
from ._carc import CarcError

__all__ = [
    "CarcError",
    "build",
    "clique_cycle",
    "edges",
    "gen",
    "is_real",
    "oracle1",
    "route",
    "verify",
]

Model = Union[dict, str]
Scheme = Union[dict, str]


def _text(obj: Any) -> str:
    return obj if isinstance(obj, str) else json.dumps(obj)


def gen(family: str, n: int, seed: int = 0) -> dict:
    """Generate a model: family is ring, wheel, complete or random."""
    return json.loads(_carc.gen(family, n, seed))


def is_real(model: Model) -> bool:
    return _carc.is_real(_text(model))


def edges(model: Model) -> list[tuple[int, int]]:
    """Edges (u, v), u < v, of the intersection graph."""
    return [tuple(e) for e in _carc.edges(_text(model))]


def build(model: Model) -> tuple[dict, dict]:
    """Build a shortest-path routing scheme. Returns (scheme, interval stats)."""
    scheme, stats = _carc.build(_text(model))
    return json.loads(scheme), stats


def verify(model: Model, scheme: Scheme, threads: int = 1) -> dict:
    return json.loads(_carc.verify(_text(model), _text(scheme), threads))


def route(model: Model, scheme: Scheme, src: int, dst: int) -> list[int]:
    return _carc.route(_text(model), _text(scheme), src, dst)


def oracle1(model: Model, limit: int = 9, strict: bool = False) -> dict:
    """Exhaustive search for a shortest-path scheme with one interval per arc."""
    out = _carc.oracle1(_text(model), limit, strict)
    if out["witness"] is not None:
        out["witness"] = json.loads(out["witness"])
    return out


def clique_cycle(model: Model) -> str:
    return _carc.clique_cycle(_text(model))
