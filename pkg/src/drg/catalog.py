"""Named-array catalog: the embedded valency-3/4 table plus extras.

Entries are self-verifying: loading recomputes the vertex count and the
ratio from the stored array and refuses to serve data that disagrees
with the stored rendering.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .arrays import IntersectionArray, derive, parse_array
from .fmt import decimal_places, decimal_str
from .potentials import compute_profile
from .tables import BIGGS_SMITH_NAME, EXTRA_TABLE, VALENCY_34_TABLE

ENV_SUPPLEMENTARY = "DRG_CATALOG"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    slug: str
    vertices: int
    array: IntersectionArray
    paper_ratio: str | None  # ratio rendering at its original precision
    constructible: str | None  # registry key, e.g. "hypercube:3"
    supplementary: bool
    ratio: Fraction  # recomputed exact value

    @property
    def extremal(self) -> bool:
        return self.name == BIGGS_SMITH_NAME

    def ratio_matches_stored(self) -> bool:
        if self.paper_ratio is None:
            return True
        places = decimal_places(self.paper_ratio)
        return decimal_str(self.ratio, places) == self.paper_ratio


def slugify(name: str) -> str:
    """CLI lookup key: lowercase, hyphenated, trailing 'graph' dropped."""
    text = name.lower().replace("'", "")
    text = re.sub(r"[^a-z0-9]+", "-", text).strip("-")
    if text.endswith("-graph"):
        text = text[: -len("-graph")]
    return text


def _build_entry(
    name: str,
    vertices: int | None,
    array_text: str,
    ratio_text: str | None,
    constructible: str | None,
    supplementary: bool,
) -> CatalogEntry:
    arr = parse_array(array_text)
    params = derive(arr)
    profile = compute_profile(params)
    if vertices is not None and params.n != vertices:
        raise ValueError(
            f"catalog entry {name!r}: stored vertex count {vertices} "
            f"but the array gives n = {params.n}"
        )
    entry = CatalogEntry(
        name=name,
        slug=slugify(name),
        vertices=params.n,
        array=arr,
        paper_ratio=ratio_text,
        constructible=constructible,
        supplementary=supplementary,
        ratio=profile.ratio,
    )
    if not entry.ratio_matches_stored():
        raise ValueError(
            f"catalog entry {name!r}: stored ratio {ratio_text} disagrees "
            f"with the recomputed value {profile.ratio}"
        )
    return entry


def _supplementary_from_env() -> list[CatalogEntry]:
    path = os.environ.get(ENV_SUPPLEMENTARY)
    if not path:
        return []
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "|" in line:
            name, array_text = (part.strip() for part in line.split("|", 1))
        else:
            name, array_text = line, line
        try:
            out.append(_build_entry(name, None, array_text, None, None, True))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return out


def catalog_list(include_env: bool = True) -> tuple[CatalogEntry, ...]:
    """All embedded rows, the extras flagged supplementary, plus env entries."""
    entries = [
        _build_entry(name, n, arr, ratio, constructible, False)
        for name, n, arr, ratio, constructible in VALENCY_34_TABLE
    ]
    entries += [
        _build_entry(name, n, arr, ratio, constructible, True)
        for name, n, arr, ratio, constructible in EXTRA_TABLE
    ]
    if include_env:
        entries += _supplementary_from_env()
    return tuple(entries)


def lookup(name: str, include_env: bool = True) -> CatalogEntry | None:
    """Find an entry by slug or (case-insensitive) display name."""
    want = name.strip().lower()
    for entry in catalog_list(include_env=include_env):
        if entry.slug == slugify(name) or entry.name.lower() == want:
            return entry
    return None
