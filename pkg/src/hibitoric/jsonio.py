"""JSON input and output.

Lattices are read either as explicit ``{"elements": [...], "covers": [[upper,
lower], ...]}`` documents or as named shortcuts such as ``{"type": "idn",
"d": 2, "n": 5}``.  Reports carry ``"schema": 1`` and are serialized with
sorted keys, so identical runs produce identical bytes.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import BadParameters
from .grassmann import counterexample_lattice, idn, tilde_i2
from .hilbert import SqFreeIdeal
from .lattice import DistributiveLattice, boolean_lattice, chain, diamond, ideal_lattice
from .poset import Poset

SCHEMA = 1


def read_json(source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except OSError as exc:
        raise BadParameters(f"cannot read {source}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise BadParameters(f"{source} is not valid JSON: {exc}") from exc


def poset_from_json(obj: dict) -> Poset:
    try:
        return Poset(obj["elements"], obj.get("covers", []))
    except KeyError as exc:
        raise BadParameters("poset JSON needs an 'elements' list") from exc
    except TypeError as exc:
        raise BadParameters(f"malformed poset JSON: {exc}") from exc


def _int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int):
        raise BadParameters(f"'{key}' must be an integer")
    return v


def load_lattice(source) -> DistributiveLattice:
    obj = read_json(source)
    kind = obj.get("type")
    if kind is None:
        return DistributiveLattice(poset_from_json(obj))
    if kind == "idn":
        return idn(_int(obj, "d"), _int(obj, "n"))
    if kind == "counterexample":
        return counterexample_lattice()
    if kind == "chain":
        return chain(_int(obj, "k"))
    if kind == "boolean":
        return boolean_lattice(_int(obj, "k"))
    if kind == "diamond":
        return diamond()
    if kind == "tilde":
        return tilde_i2(_int(obj, "r"))
    if kind == "ideals":
        return ideal_lattice(poset_from_json(obj.get("poset", {})))
    raise BadParameters(f"unknown lattice type {kind!r}")


def load_ideal(source) -> SqFreeIdeal:
    obj = read_json(source)
    try:
        return SqFreeIdeal(obj["n_vars"], obj["generators"])
    except KeyError as exc:
        raise BadParameters("square-free ideal JSON needs 'n_vars' and 'generators'") from exc


def is_ideal_document(obj: dict) -> bool:
    return "n_vars" in obj


def report(command: str, body: dict) -> dict:
    return {"schema": SCHEMA, "command": command, **body}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_markdown(doc: dict, title: str | None = None) -> str:
    """Render a report document; the content is exactly the JSON content."""
    lines = [f"# {title or doc.get('command', 'report')}", ""]

    def scalar(v) -> str:
        return json.dumps(v) if not isinstance(v, str) else v

    def walk(obj, depth: int) -> None:
        pad = "  " * depth
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if (isinstance(v, dict) and v) or (
                    isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v)
                ):
                    lines.append(f"{pad}- **{k}**:")
                    walk(v, depth + 1)
                else:
                    lines.append(f"{pad}- **{k}**: {scalar(v)}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, dict):
                    lines.append(f"{pad}-")
                    walk(item, depth + 1)
                else:
                    lines.append(f"{pad}- {scalar(item)}")
        else:
            lines.append(f"{pad}{scalar(obj)}")

    walk(doc, 0)
    return "\n".join(lines) + "\n"
