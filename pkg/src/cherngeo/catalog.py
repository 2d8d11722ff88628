"""Named building-block families and JSON catalog persistence.

Three families cover the worked examples: elliptic surfaces E(m) with
their torus fibrations, the ruled surface S^2 x S^2 viewed as a sphere
fibration without singular fibers, and knot-surgered elliptic surfaces
E(k)_K whose fibration has fiber genus 2g + k - 1 for a fibered knot of
genus g.  A generic family admits arbitrary user-supplied invariants.
"""

from __future__ import annotations

import json
from pathlib import Path

from .invariants import (
    LefschetzBlock,
    block_from_json,
    block_to_json,
    complete_invariants,
    euler_from_fibration,
)

FAMILIES = ("elliptic", "ruled-spheres", "knot-surgered-elliptic", "generic")


def elliptic_surface(m: int) -> LefschetzBlock:
    """E(m): chi_h = m, c1^2 = 0, torus fibers, 12m singular fibers."""
    if m < 1:
        raise ValueError(f"elliptic surface parameter m must be >= 1, got {m}")
    return LefschetzBlock(
        name=f"E({m})",
        invariants=complete_invariants(m, 0),
        fiber_genus=1,
        singular_fibers=12 * m,
        simply_connected=True,
    )


def ruled_spheres() -> LefschetzBlock:
    """S^2 x S^2 as a sphere fibration with no singular fibers."""
    return LefschetzBlock(
        name="S2xS2",
        invariants=complete_invariants(1, 8),
        fiber_genus=0,
        singular_fibers=0,
        simply_connected=True,
    )


def knot_surgered_elliptic(k: int, knot_genus: int) -> LefschetzBlock:
    """E(k)_K for a fibered knot K of genus g: fiber genus 2g + k - 1.

    chi_h and c1^2 agree with E(k) (the surgered manifold is homeomorphic
    to it); the singular-fiber count is derived from the Euler identity,
    not quoted from the literature.
    """
    if k < 1:
        raise ValueError(f"elliptic parameter k must be >= 1, got {k}")
    if knot_genus < 0:
        raise ValueError(f"knot genus must be non-negative, got {knot_genus}")
    fiber_genus = 2 * knot_genus + k - 1
    euler = 12 * k
    n = euler - 2 * (2 - 2 * fiber_genus)
    return LefschetzBlock(
        name=f"E({k})_K(g={knot_genus})",
        invariants=complete_invariants(k, 0),
        fiber_genus=fiber_genus,
        singular_fibers=n,
        simply_connected=True,
    )


def generic_block(
    chi_h: int,
    c1_sq: int,
    fiber_genus: int,
    singular_fibers: int,
    simply_connected: bool,
    name: str | None = None,
) -> LefschetzBlock:
    """User-supplied block; identity violations are left to validate_block."""
    if name is None:
        name = f"generic(chi_h={chi_h},c1_sq={c1_sq},g={fiber_genus},n={singular_fibers})"
    return LefschetzBlock(
        name=name,
        invariants=complete_invariants(chi_h, c1_sq),
        fiber_genus=fiber_genus,
        singular_fibers=singular_fibers,
        simply_connected=simply_connected,
    )


def block_from_family(record: dict) -> LefschetzBlock:
    """Instantiate one catalog record, e.g. {"family": "elliptic", "m": 2}."""
    family = record.get("family")
    if family == "elliptic":
        return elliptic_surface(int(record["m"]))
    if family == "ruled-spheres":
        return ruled_spheres()
    if family == "knot-surgered-elliptic":
        return knot_surgered_elliptic(int(record["k"]), int(record["knot_genus"]))
    if family == "generic":
        return block_from_json(record)
    raise ValueError(f"unknown block family {family!r}")


def default_catalog() -> list[LefschetzBlock]:
    """Built-in catalog used when no catalog file is given."""
    blocks = [elliptic_surface(m) for m in range(1, 4)]
    blocks.append(ruled_spheres())
    blocks.append(knot_surgered_elliptic(2, 0))
    return blocks


def load_catalog(path: str | Path) -> list[LefschetzBlock]:
    """Read a JSON array of family records or explicit generic blocks."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError("catalog file must contain a JSON array")
    blocks = []
    for record in data:
        if "family" in record:
            blocks.append(block_from_family(record))
        else:
            blocks.append(block_from_json(record))
    return blocks


def save_catalog(blocks: list[LefschetzBlock], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([block_to_json(b) for b in blocks], fh, indent=2, sort_keys=True)
        fh.write("\n")
