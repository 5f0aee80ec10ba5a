"""JSON files for dessins and the bundled fixtures."""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path

from .dessin import Dessin
from .errors import DessinError


_FLAT_LIST = re.compile(r"\[\s*([-+0-9.eE,\s]+?)\s*\]")


def dumps(obj) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    text = json.dumps(obj, indent=2, sort_keys=True)
    # keep flat lists of numbers (cycles, matrix rows) on one line
    return _FLAT_LIST.sub(lambda m: "[" + ", ".join(t.strip() for t in m.group(1).split(",")) + "]", text) + "\n"


def parse_dessin(text: str, source: str = "<string>") -> Dessin:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DessinError(f"{source}: invalid JSON ({exc})", code="parse") from None
    return Dessin.from_dict(data)


def load_dessin(path) -> Dessin:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise DessinError(f"cannot read {p}: {exc.strerror}", code="io") from None
    return parse_dessin(text, str(p))


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def fixture_names() -> list[str]:
    root = resources.files("fillingcurves") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str):
    path = resources.files("fillingcurves") / "data" / f"{name}.json"
    if not path.is_file():
        raise DessinError(f"no fixture {name!r}; available: {fixture_names()}", code="no_fixture")
    return path


def load_fixture(name: str) -> Dessin:
    return parse_dessin(fixture_path(name).read_text(encoding="utf-8"), name)
