"""JSON definition files for presentations.

Example::

    {
      "group": {"free_rank": 2, "torsion": []},
      "parameters": ["q"],
      "zeta_order": null,
      "chi": [["1", "q"], ["1", "1"]],
      "letters": [{"name": "x", "degree": [1, 0]}, {"name": "y", "degree": [0, 1]}],
      "brackets": {"x,y": [], "y,x": [], "x,x": [], "y,y": []}
    }

Letter order is array order.  Bracket values list ``{"letter", "coeff"}``
pairs with coefficients in the scalar grammar.  Pairs absent from
``brackets`` are not a load error; :meth:`LiePresentation.validate` reports them.
"""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .algebra import LiePresentation
from .errors import DefinitionError, ParseError
from .grading import Bicharacter, GradedGroup
from .scalar import ScalarContext, parse_scalar

SCHEMA = {
    "type": "object",
    "required": ["group", "chi", "letters", "brackets"],
    "additionalProperties": False,
    "properties": {
        "group": {
            "type": "object",
            "required": ["free_rank", "torsion"],
            "additionalProperties": False,
            "properties": {
                "free_rank": {"type": "integer", "minimum": 0},
                "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
            },
        },
        "parameters": {"type": "array", "items": {"type": "string"}},
        "zeta_order": {"type": ["integer", "null"], "minimum": 1},
        "chi": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "letters": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "degree"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "degree": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
        "brackets": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["letter", "coeff"],
                    "additionalProperties": False,
                    "properties": {"letter": {"type": "string"}, "coeff": {"type": "string"}},
                },
            },
        },
    },
}


def parse_definition(doc, name: str = "") -> LiePresentation:
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DefinitionError(f"schema error at {where}: {exc.message}") from None
    try:
        ctx = ScalarContext(tuple(doc.get("parameters", [])), doc.get("zeta_order"))
        group = GradedGroup(doc["group"]["free_rank"], tuple(doc["group"]["torsion"]))
    except ValueError as exc:
        raise DefinitionError(str(exc)) from None

    def scalar(text, where):
        try:
            return parse_scalar(text, ctx)
        except ParseError as exc:
            raise DefinitionError(f"{where}: {exc}") from None

    rank = group.rank
    if len(doc["chi"]) != rank or any(len(row) != rank for row in doc["chi"]):
        raise DefinitionError(f"chi must be a {rank}x{rank} matrix")
    matrix = [[scalar(x, f"chi[{i}][{j}]") for j, x in enumerate(row)] for i, row in enumerate(doc["chi"])]
    letters = []
    for let in doc["letters"]:
        if len(let["degree"]) != rank:
            raise DefinitionError(f"letter {let['name']!r}: degree needs {rank} coordinates")
        letters.append((let["name"], let["degree"]))
    ids = {nm: i for i, (nm, _) in enumerate(letters)}
    if len(ids) != len(letters):
        raise DefinitionError("duplicate letter names")
    brackets = {}
    for key, terms in doc["brackets"].items():
        pair = [s.strip() for s in key.split(",")]
        if len(pair) != 2 or any(s not in ids for s in pair):
            raise DefinitionError(f"bracket key {key!r} is not a pair of known letters")
        i, j = ids[pair[0]], ids[pair[1]]
        if (i, j) in brackets:
            raise DefinitionError(f"bracket pair {key!r} given twice")
        val: dict = {}
        for t in terms:
            if t["letter"] not in ids:
                raise DefinitionError(f"bracket {key!r} refers to unknown letter {t['letter']!r}")
            k = ids[t["letter"]]
            c = scalar(t["coeff"], f"bracket {key!r}")
            val[k] = val[k] + c if k in val else c
        brackets[(i, j)] = val
    return LiePresentation(group, Bicharacter(group, matrix, ctx), letters, brackets, name=name)


def load_definition(path) -> LiePresentation:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DefinitionError(f"{path}: malformed JSON: {exc}") from None
    return parse_definition(doc, name=path.stem)


def to_definition(P: LiePresentation) -> dict:
    """The definition-file document for ``P`` (brackets listed for every pair present)."""
    names = [let.name for let in P.letters]
    brackets = {}
    for i in range(P.size):
        for j in range(P.size):
            if (i, j) in P.brackets:
                brackets[f"{names[i]},{names[j]}"] = [
                    {"letter": names[k], "coeff": str(c)} for k, c in P.brackets[(i, j)].items()
                ]
    return {
        "group": {"free_rank": P.group.free_rank, "torsion": list(P.group.torsion)},
        "parameters": list(P.ctx.params),
        "zeta_order": P.ctx.zeta_order,
        "chi": [[str(x) for x in row] for row in P.chi.matrix],
        "letters": [{"name": let.name, "degree": list(let.degree)} for let in P.letters],
        "brackets": brackets,
    }


def dumps_definition(P: LiePresentation) -> str:
    return json.dumps(to_definition(P), indent=2) + "\n"
