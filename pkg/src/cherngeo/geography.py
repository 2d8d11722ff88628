"""Divisibility checks, realization search, and the geography-plane classifier.

The divisibility conditions (c3 and c1^3 even, c1c2 divisible by 24) are
necessary for any symplectic 6-manifold; the fiber-sum construction adds
the stronger obstruction that c1^3 be divisible by 6.  The search inverts
the closed-form construction over bounded family parameters.  The plane
classifier reproduces the standard region picture of 4-manifold geography
in the (chi_h, c1^2) plane; region boundaries are closed on both sides,
so boundary points carry every adjacent label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import elliptic_surface, knot_surgered_elliptic, ruled_spheres
from .fibersum import halic_construction, halic_construction_via_oracle
from .invariants import ChernTriple, LefschetzBlock, complete_invariants

REGION_LABELS = (
    "negative-c1sq-unknown",
    "many-basic-classes",
    "one-basic-class",
    "general-type",
    "above-BMY-unknown",
)


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of the necessary divisibility conditions on a Chern triple."""

    c3_even: bool
    c1cubed_even: bool
    c1c2_mod24: bool

    @property
    def all_pass(self) -> bool:
        return self.c3_even and self.c1cubed_even and self.c1c2_mod24


def halic_divisibility_check(t: ChernTriple) -> DivisibilityReport:
    return DivisibilityReport(
        c3_even=t.c3 % 2 == 0,
        c1cubed_even=t.c1_cubed % 2 == 0,
        c1c2_mod24=t.c1c2 % 24 == 0,
    )


def construction_obstruction(t: ChernTriple) -> list[str]:
    """Necessary conditions for realizability by this construction.

    Returns a list of failed conditions; empty means no obstruction found
    (which is not a realizability proof).
    """
    out = []
    report = halic_divisibility_check(t)
    if not report.c3_even:
        out.append(f"c3 = {t.c3} is not even")
    if not report.c1cubed_even:
        out.append(f"c1^3 = {t.c1_cubed} is not even")
    if not report.c1c2_mod24:
        out.append(f"c1c2 = {t.c1c2} is not divisible by 24")
    if t.c1_cubed % 6 != 0:
        out.append(f"c1^3 = {t.c1_cubed} is not divisible by 6")
    return out


@dataclass(frozen=True)
class GenericGrid:
    """Inclusive ranges for brute-force generic blocks in the search."""

    chi_h: tuple[int, int]
    c1_sq: tuple[int, int]
    genus: tuple[int, int]


@dataclass(frozen=True)
class SearchBounds:
    families: tuple[str, ...] = ("elliptic", "ruled-spheres", "knot-surgered-elliptic")
    max_m: int = 5
    max_k: int = 5
    max_knot_genus: int = 4
    generic: GenericGrid | None = None

    @classmethod
    def from_json(cls, data: dict) -> "SearchBounds":
        generic = None
        if "generic" in data and data["generic"] is not None:
            g = data["generic"]
            generic = GenericGrid(
                chi_h=tuple(g["chi_h"]),
                c1_sq=tuple(g["c1_sq"]),
                genus=tuple(g["genus"]),
            )
        return cls(
            families=tuple(data.get("families", cls.families)),
            max_m=int(data.get("max_m", cls.max_m)),
            max_k=int(data.get("max_k", cls.max_k)),
            max_knot_genus=int(data.get("max_knot_genus", cls.max_knot_genus)),
            generic=generic,
        )


@dataclass(frozen=True)
class Realization:
    """A block pair whose fiber sum hits the target triple."""

    block1: LefschetzBlock
    block2: LefschetzBlock
    triple: ChernTriple


def candidate_blocks(bounds: SearchBounds) -> list[LefschetzBlock]:
    """All blocks within bounds, in canonical (family, parameter) order."""
    blocks: list[LefschetzBlock] = []
    if "elliptic" in bounds.families:
        blocks.extend(elliptic_surface(m) for m in range(1, bounds.max_m + 1))
    if "ruled-spheres" in bounds.families:
        blocks.append(ruled_spheres())
    if "knot-surgered-elliptic" in bounds.families:
        for k in range(1, bounds.max_k + 1):
            for g in range(bounds.max_knot_genus + 1):
                blocks.append(knot_surgered_elliptic(k, g))
    if bounds.generic is not None:
        grid = bounds.generic
        for chi in range(grid.chi_h[0], grid.chi_h[1] + 1):
            for c1sq in range(grid.c1_sq[0], grid.c1_sq[1] + 1):
                for genus in range(max(0, grid.genus[0]), grid.genus[1] + 1):
                    n = (12 * chi - c1sq) - 2 * (2 - 2 * genus)
                    if n < 0:
                        continue  # no fibration with this genus hits that Euler number
                    blocks.append(
                        LefschetzBlock(
                            name=f"generic(chi_h={chi},c1_sq={c1sq},g={genus},n={n})",
                            invariants=complete_invariants(chi, c1sq),
                            fiber_genus=genus,
                            singular_fibers=n,
                            simply_connected=n > 2 * genus,
                        )
                    )
    return blocks


def search_realizations(target: ChernTriple, bounds: SearchBounds) -> list[Realization]:
    """All unordered block pairs within bounds realizing the target exactly.

    Symmetric pairs are deduplicated by canonical ordering of the
    candidate list.  Every hit is recomputed through the independent
    symbolic path before emission.
    """
    if construction_obstruction(target):
        return []
    blocks = candidate_blocks(bounds)
    results: list[Realization] = []
    for i, b1 in enumerate(blocks):
        for b2 in blocks[i:]:
            triple = halic_construction(b1, b2)
            if triple != target:
                continue
            verified = halic_construction_via_oracle(b1, b2)
            if verified != triple:  # pragma: no cover - would be a formula bug
                raise AssertionError(
                    f"closed form and symbolic path disagree on ({b1.name}, {b2.name})"
                )
            results.append(Realization(b1, b2, triple))
    return results


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class GeographyClassification:
    """Region labels and flags for one integer point of the (chi_h, c1^2) plane."""

    chi_h: int
    c1_sq: int
    labels: tuple[str, ...]
    basic_class_count: int | None
    on_elliptic_axis: bool
    signature_sign: int


def classify_geography_point(chi_h: int, c1_sq: int) -> GeographyClassification:
    """All regions whose defining inequalities the point satisfies.

    Boundaries are closed, so points on a dividing line get both labels.
    The basic-class count chi_h - c1_sq - 2 is reported verbatim whenever
    the many-basic-classes strip matches, even when it is non-positive.
    """
    labels = []
    basic_count = None
    if c1_sq < 0:
        labels.append("negative-c1sq-unknown")
    if 0 <= c1_sq <= chi_h - 3:
        labels.append("many-basic-classes")
        basic_count = chi_h - c1_sq - 2
    if chi_h - 3 <= c1_sq <= 2 * chi_h - 6:
        labels.append("one-basic-class")
    if 2 * chi_h - 6 <= c1_sq <= 9 * chi_h:
        labels.append("general-type")
    if c1_sq > 9 * chi_h:
        labels.append("above-BMY-unknown")
    return GeographyClassification(
        chi_h=chi_h,
        c1_sq=c1_sq,
        labels=tuple(labels),
        basic_class_count=basic_count,
        on_elliptic_axis=(c1_sq == 0 and chi_h >= 1),
        signature_sign=_sign(c1_sq - 8 * chi_h),
    )
