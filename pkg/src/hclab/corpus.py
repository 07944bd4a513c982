"""Loading of group and BN-datum JSON files, including the bundled corpus.

Group JSON:      {"degree": n, "generators": ["(1 2 3)(4 5)", ...],
                  "subgroups": {"name": [gen strings]}, ...}
Semidirect JSON: {"semidirect": {"normal": <group>, "acting": {"orders": [...]},
                  "action": [[gen-image strings per normal generator], ...]}}
BN datum extras: "parabolics": [{"name", "P", "L", "U", optional "weyl"}, ...]
                 and optional "identity_component": [gen strings].
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import InputError
from .perm import AbelianGroup, PermGroup, SemidirectGroup, parse_perm

BUNDLED = (
    "s3", "s4", "s5", "a4", "d8", "q8", "c6",
    "s3_wr_c2", "gl2_3", "gl2_5", "gl3_2", "sl2_3_c2",
)


class GroupFile:
    """A parsed group JSON: the group plus named subgroups and BN data."""

    def __init__(self, raw: dict, name: str = "<input>"):
        self.name = name
        self.raw = raw
        if "semidirect" in raw:
            spec = raw["semidirect"]
            normal = _group_from(spec["normal"])
            acting = AbelianGroup(spec["acting"]["orders"])
            degree = normal.degree
            action = [
                [parse_perm(s, degree) for s in images]
                for images in spec["action"]
            ]
            self.semidirect = SemidirectGroup(normal, acting, action)
            self.group, self.embed = self.semidirect.permutation_group()
        else:
            self.semidirect = None
            self.embed = None
            self.group = _group_from(raw)
        self.subgroups: dict[str, PermGroup] = {}
        for sub_name, gens in raw.get("subgroups", {}).items():
            self.subgroups[sub_name] = self.group.subgroup(
                [parse_perm(s, self.group.degree) for s in gens]
            )

    def subgroup(self, name: str) -> PermGroup:
        if name not in self.subgroups:
            raise InputError(
                f"no subgroup named {name!r} in {self.name}"
                f" (have: {sorted(self.subgroups)})"
            )
        return self.subgroups[name]

    def bn_datum(self):
        from .hcseries import BNDatum, ParabolicRecord

        records = []
        for rec in self.raw.get("parabolics", []):
            deg = self.group.degree
            P = self.group.subgroup([parse_perm(s, deg) for s in rec["P"]])
            L = self.group.subgroup([parse_perm(s, deg) for s in rec["L"]])
            U = self.group.subgroup([parse_perm(s, deg) for s in rec["U"]])
            weyl = None
            if "weyl" in rec:
                weyl = self.group.subgroup(
                    [parse_perm(s, deg) for s in rec["weyl"]]
                )
            records.append(ParabolicRecord(
                rec["name"], P, L, U, weyl,
                in_partition=rec.get("partition", True),
            ))
        identity_component = None
        if "identity_component" in self.raw:
            identity_component = self.group.subgroup(
                [parse_perm(s, self.group.degree)
                 for s in self.raw["identity_component"]]
            )
        return BNDatum(self.group, records, identity_component)


def _group_from(spec: dict) -> PermGroup:
    try:
        degree = int(spec["degree"])
        gens = [parse_perm(s, degree) for s in spec["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed group JSON: {exc}") from exc
    return PermGroup(degree, gens)


def load_path(path) -> GroupFile:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return GroupFile(raw, name=str(path))


@lru_cache(maxsize=None)
def load_bundled(name: str) -> GroupFile:
    if name not in BUNDLED:
        raise InputError(f"unknown corpus entry {name!r} (have: {BUNDLED})")
    text = resources.files("hclab.data").joinpath(f"{name}.json").read_text()
    return GroupFile(json.loads(text), name=name)


def load(name_or_path) -> GroupFile:
    """Accept a bundled corpus name or a filesystem path."""
    name = str(name_or_path)
    if name in BUNDLED:
        return load_bundled(name)
    return load_path(name_or_path)
