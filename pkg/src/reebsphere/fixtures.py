"""The fixture gallery: named graphs, their recipes and expected invariants.

The manifest ``data/fixtures.json`` lists for every fixture its recipe,
dimension, expected Euler characteristic, Betti numbers and recognition
verdicts, and the canonical digest of the graph the recipe produces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .canon import canonical_form
from .graph import Graph
from .io import _from_json_vertex
from .recipe import evaluate

CHECK_KINDS = ("contractible", "sphere", "dgraph", "dgraph-boundary", "ball")


@dataclass(frozen=True)
class Fixture:
    """One manifest entry.

    ``checks`` maps a recognition kind to the expected answer (``yes`` or
    ``no``) at dimension ``dim``.  ``subset`` is an optional vertex list
    used by scenarios such as the sublevel ball of a contractible ``K``.
    ``wu`` is the measured Wu characteristic.
    """

    name: str
    recipe: str
    dim: int
    description: str
    euler: int
    betti: tuple
    checks: dict
    wu: int
    digest: str
    subset: tuple = ()
    tags: tuple = field(default_factory=tuple)

    def graph(self) -> Graph:
        return fixture_graph(self.name)

    def expects(self, kind: str) -> str | None:
        return self.checks.get(kind)


def _load():
    text = resources.files("reebsphere").joinpath("data/fixtures.json").read_text(encoding="utf-8")
    out = {}
    for entry in json.loads(text)["fixtures"]:
        out[entry["name"]] = Fixture(
            name=entry["name"],
            recipe=entry["recipe"],
            dim=entry["dim"],
            description=entry["description"],
            euler=entry["euler"],
            betti=tuple(entry["betti"]),
            checks=dict(entry["checks"]),
            wu=entry["wu"],
            digest=entry["digest"],
            subset=tuple(_from_json_vertex(v) for v in entry.get("subset", [])),
            tags=tuple(entry.get("tags", [])),
        )
    return out


@lru_cache(maxsize=1)
def manifest() -> dict:
    """Name -> :class:`Fixture`, in manifest order."""
    return _load()


def fixture_names(tag: str | None = None) -> list:
    return [n for n, fx in manifest().items() if tag is None or tag in fx.tags]


def fixtures(tag: str | None = None) -> list:
    return [manifest()[n] for n in fixture_names(tag)]


def get_fixture(name: str) -> Fixture:
    try:
        return manifest()[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}") from None


@lru_cache(maxsize=None)
def fixture_graph(name: str) -> Graph:
    """Build a fixture from its recipe."""
    return evaluate(get_fixture(name).recipe)


def recipe_names() -> dict:
    """Fixture names usable inside recipes, mapped to their recipes."""
    return {n: fx.recipe for n, fx in manifest().items()}


def digest_matches(name: str) -> bool:
    """Does regenerating ``name`` reproduce the stored canonical digest?"""
    return canonical_form(fixture_graph(name)).hexdigest() == get_fixture(name).digest
