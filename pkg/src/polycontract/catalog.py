"""Built-in spaces and the three counterexample operators.

Names: ``linf1``..``linf4``, ``l1_1``..``l1_4`` (``l12`` style also
accepted), ``hexagon``, ``octagon``, ``affine_hexagon`` and ``xp8``.
Operators: ``ex1`` (hexagon to linf3), ``ex2`` (hexagon to l1_3) and
``ex3`` (octagon to linf2), each built from the images of ``x_1, x_2``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownName
from .operator import Operator, from_images
from .space import PolygonalSpace

__all__ = [
    "CatalogEntry",
    "OPERATORS",
    "SPACES",
    "get_operator",
    "get_space",
    "l1",
    "linf",
    "list_names",
]

MAX_M = 4


def linf(m: int) -> PolygonalSpace:
    """``l_inf^m``: generators are the sign vectors with a leading ``+1``."""
    gens = [(1,) + s for s in itertools.product((1, -1), repeat=m - 1)]
    return PolygonalSpace(gens, name=f"linf{m}")


def l1(m: int) -> PolygonalSpace:
    """``l_1^m``: generators are the unit vectors."""
    gens = [[1 if k == j else 0 for k in range(m)] for j in range(m)]
    return PolygonalSpace(gens, name=f"l1_{m}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    provenance: str
    kind: str  # "space" or "operator"


_FIXED_SPACES = {
    "hexagon": (
        [["1", "0"], ["1/2", "1/2*sqrt(3)"], ["-1/2", "1/2*sqrt(3)"]],
        "regular hexagon x1=(1,0), x2=(1/2,sqrt3/2), x3=(-1/2,sqrt3/2); x3 = x2 - x1",
    ),
    "octagon": (
        [["1", "0"], ["1/2*sqrt(2)", "1/2*sqrt(2)"], ["0", "1"], ["-1/2*sqrt(2)", "1/2*sqrt(2)"]],
        "regular octagon x1=(1,0), x2=(1,1)/sqrt2, x3=(0,1), x4=(-1,1)/sqrt2",
    ),
    "affine_hexagon": (
        [["1", "0"], ["1", "1"], ["0", "1"]],
        "rational hexagon with x3 = x2 - x1, a linear image of the regular hexagon",
    ),
    "xp8": (
        [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"]],
        "conv(+-e1, +-e2, +-e3, +-(1,1,1)): three dimensions, 2n+2 = 8 extreme points",
    ),
}

SPACES: dict[str, CatalogEntry] = {}
for _m in range(1, MAX_M + 1):
    SPACES[f"linf{_m}"] = CatalogEntry(f"linf{_m}", f"l_inf^{_m}, extreme points all sign vectors", "space")
    SPACES[f"l1_{_m}"] = CatalogEntry(f"l1_{_m}", f"l_1^{_m}, extreme points +-e_j", "space")
for _name, (_, _prov) in _FIXED_SPACES.items():
    SPACES[_name] = CatalogEntry(_name, _prov, "space")

_FIXED_OPERATORS = {
    "ex1": ("hexagon", "linf3", [["1", "-1", "0"], ["1", "0", "1"]],
            "extreme contraction hexagon -> l_inf^3 with T(x1)=(1,-1,0), T(x2)=(1,0,1); no extreme image"),
    "ex2": ("hexagon", "l1_3", [["1/2", "1/2", "0"], ["0", "1/2", "1/2"]],
            "extreme contraction hexagon -> l_1^3 with T(x1)=(1/2,1/2,0), T(x2)=(0,1/2,1/2); no extreme image"),
    "ex3": ("octagon", "linf2", [["1", "-1+sqrt(2)"], ["-1+sqrt(2)", "1"]],
            "extreme contraction octagon -> l_inf^2 with T(x1)=(1,sqrt2-1), T(x2)=(sqrt2-1,1); no extreme image"),
}

OPERATORS: dict[str, CatalogEntry] = {
    name: CatalogEntry(name, entry[3], "operator") for name, entry in _FIXED_OPERATORS.items()
}

_ALIAS = re.compile(r"^(linf|l1)_?(\d+)$")


def _canonical_name(name: str) -> str:
    m = _ALIAS.match(name)
    if m:
        return f"linf{m.group(2)}" if m.group(1) == "linf" else f"l1_{m.group(2)}"
    return name


def list_names() -> dict[str, list[str]]:
    return {"spaces": sorted(SPACES), "operators": sorted(OPERATORS)}


@lru_cache(maxsize=None)
def get_space(name: str) -> PolygonalSpace:
    key = _canonical_name(name)
    if key not in SPACES:
        raise UnknownName(f"no catalog space named {name!r}")
    if key in _FIXED_SPACES:
        return PolygonalSpace(_FIXED_SPACES[key][0], name=key)
    m = int(key[4:]) if key.startswith("linf") else int(key[3:])
    return linf(m) if key.startswith("linf") else l1(m)


@lru_cache(maxsize=None)
def get_operator(name: str) -> Operator:
    if name not in _FIXED_OPERATORS:
        raise UnknownName(f"no catalog operator named {name!r}")
    dom, cod, images, _ = _FIXED_OPERATORS[name]
    return from_images(get_space(dom), get_space(cod), images)
