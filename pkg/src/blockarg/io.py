"""JSON encoding of framework documents, labellings and bundled fixtures.

A framework document looks like::

    {"definitions": {"a": {"atom": "a"},
                     "F": {"block": {"args": ["a", "b"], "attacks": [["a", "b"]], "supports": []}}},
     "root": "F",
     "meta": {...}}

``meta`` is optional and carries provenance and reference results.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .dsl import parse_dsl
from .errors import ParseError, ValidationError
from .labelling import Labelling
from .model import AtomDef, BlockDef, Definition, FrameworkDoc

FIXTURE_PACKAGE = "blockarg.fixtures"


def _pairs(raw: Any, where: str) -> tuple[tuple[str, str], ...]:
    if raw is None:
        return ()
    if not isinstance(raw, list):
        raise ValidationError(f"{where}: expected a list of pairs")
    out = []
    for item in raw:
        if not (isinstance(item, (list, tuple)) and len(item) == 2):
            raise ValidationError(f"{where}: {item!r} is not a pair")
        out.append((str(item[0]), str(item[1])))
    return tuple(out)


def definition_from_json(name: str, raw: Any) -> Definition:
    if not isinstance(raw, dict):
        raise ValidationError(f"{name}: definition must be an object")
    if "atom" in raw:
        return AtomDef(str(raw["atom"]))
    if "block" in raw and isinstance(raw["block"], dict):
        raw = raw["block"]
        args = raw.get("args", [])
        if not isinstance(args, list):
            raise ValidationError(f"{name}: args must be a list")
        return BlockDef(
            tuple(str(a) for a in args),
            _pairs(raw.get("attacks"), f"{name}.attacks"),
            _pairs(raw.get("supports"), f"{name}.supports"),
        )
    raise ValidationError(f"{name}: definition needs 'atom' or 'block'")


def definition_to_json(d: Definition) -> dict:
    if isinstance(d, AtomDef):
        return {"atom": d.content}
    return {
        "block": {
            "args": list(d.args),
            "attacks": [list(p) for p in d.attacks],
            "supports": [list(p) for p in d.supports],
        }
    }


def doc_from_json(data: Any) -> FrameworkDoc:
    """Build a document from decoded JSON; structure is checked, semantics are not."""
    if not isinstance(data, dict) or "root" not in data or "definitions" not in data:
        raise ValidationError("a framework needs 'definitions' and 'root'")
    args = data["definitions"]
    if not isinstance(args, dict):
        raise ValidationError("'definitions' must be an object")
    defs = {str(k): definition_from_json(str(k), v) for k, v in args.items()}
    return FrameworkDoc(defs, str(data["root"]), dict(data.get("meta") or {}))


def doc_to_json(doc: FrameworkDoc, *, with_meta: bool = True) -> dict:
    out: dict[str, Any] = {
        "definitions": {k: definition_to_json(v) for k, v in doc.definitions.items()},
        "root": doc.root,
    }
    if with_meta and doc.meta:
        out["meta"] = dict(doc.meta)
    return out


def loads(text: str) -> FrameworkDoc:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return doc_from_json(data)


def dumps(doc: FrameworkDoc, *, with_meta: bool = True) -> str:
    return json.dumps(doc_to_json(doc, with_meta=with_meta), indent=2)


def load_path(path: str | Path) -> FrameworkDoc:
    """Load a ``.json`` document or a ``.bba`` text description."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".bba":
        return parse_dsl(text)
    return loads(text)


def fixture_names() -> list[str]:
    root = resources.files(FIXTURE_PACKAGE)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str, *, dsl: bool = False) -> FrameworkDoc:
    """Load a bundled fixture by name, from its JSON or its DSL file."""
    suffix = ".bba" if dsl else ".json"
    res = resources.files(FIXTURE_PACKAGE) / f"{name}{suffix}"
    if not res.is_file():
        raise FileNotFoundError(f"no fixture named {name!r}")
    text = res.read_text(encoding="utf-8")
    if dsl:
        return parse_dsl(text)
    return loads(text)


def labelling_to_json(labelling: Labelling) -> list[dict]:
    return labelling.to_json()


def labelling_from_json(data: list[dict]) -> Labelling:
    return Labelling.from_json(data)
