"""Built-in presentations: one per braiding regime, plus a negative control."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import LiePresentation
from .deffile import parse_definition


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    presentation: LiePresentation
    confluent: bool
    jacobi_zero: bool


def _trivial(names, brackets):
    table = {f"{a},{b}": [] for a in names for b in names}
    for key, terms in brackets.items():
        table[key] = [{"letter": k, "coeff": c} for k, c in terms]
    return table


def _doc(letters, brackets, group=(0, ()), chi=(), parameters=(), zeta_order=None):
    names = [nm for nm, _ in letters]
    return {
        "group": {"free_rank": group[0], "torsion": list(group[1])},
        "parameters": list(parameters),
        "zeta_order": zeta_order,
        "chi": [list(row) for row in chi],
        "letters": [{"name": nm, "degree": list(deg)} for nm, deg in letters],
        "brackets": _trivial(names, brackets),
    }


_DEFINITIONS = {
    "trivial_abelian": (
        _doc([("a", ()), ("b", ()), ("c", ())], {}),
        True, True,
    ),
    "heisenberg": (
        _doc([("x", ()), ("y", ()), ("z", ())], {"x,y": [("z", "1")], "y,x": [("z", "-1")]}),
        True, True,
    ),
    "sl2": (
        _doc(
            [("e", ()), ("h", ()), ("f", ())],
            {
                "e,f": [("h", "1")], "f,e": [("h", "-1")],
                "h,e": [("e", "2")], "e,h": [("e", "-2")],
                "h,f": [("f", "-2")], "f,h": [("f", "2")],
            },
        ),
        True, True,
    ),
    "super_heisenberg": (
        _doc(
            [("x", (1,)), ("y", (1,)), ("h", (0,))],
            {"x,y": [("h", "1")], "y,x": [("h", "1")]},
            group=(0, (2,)), chi=[["-1"]],
        ),
        True, True,
    ),
    "quantum_plane": (
        _doc(
            [("x", (1, 0)), ("y", (0, 1))], {},
            group=(2, ()), chi=[["1", "q"], ["1", "1"]], parameters=["q"],
        ),
        True, True,
    ),
    # Each two-letter span is closed under the bracket, but
    # [[xy]z] - [x[yz]] + [y[xz]] = z, so this table is not a Lie algebra.
    "broken_jacobi": (
        _doc(
            [("x", ()), ("y", ()), ("z", ())],
            {
                "x,y": [("y", "1")], "y,x": [("y", "-1")],
                "y,z": [("z", "1")], "z,y": [("z", "-1")],
            },
        ),
        False, False,
    ),
}

BUILTIN_NAMES = tuple(_DEFINITIONS)
SHIPPING_NAMES = tuple(n for n, (_, ok, _) in _DEFINITIONS.items() if ok)


def builtin_definition(name: str) -> dict:
    try:
        doc, _, _ = _DEFINITIONS[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return doc


def load_builtin(name: str) -> CatalogEntry:
    doc = builtin_definition(name)
    _, confluent, jacobi_zero = _DEFINITIONS[name]
    return CatalogEntry(name, parse_definition(doc, name=name), confluent, jacobi_zero)
