"""Command-line front end.

Subcommands: block, product, fibersum, search, classify, plot, catalog.
Block specifications on the command line are family names followed by
their parameter flags, e.g.::

    cherngeo fibersum elliptic --m 3 ruled-spheres
    cherngeo fibersum elliptic --m 2 knot-elliptic --k 2 --knot-genus 0

Exit codes: 0 success (including an empty search), 1 domain/validation
error, 2 usage error.  Output is deterministic: JSON keys are sorted and
lists are canonically ordered.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from . import plot as plot_mod
from .fibersum import halic_construction, halic_construction_via_oracle
from .geography import (
    GenericGrid,
    SearchBounds,
    classify_geography_point,
    construction_obstruction,
    search_realizations,
)
from .invariants import (
    BlockValidationError,
    ChernTriple,
    LefschetzBlock,
    SurfaceInvariants,
    block_to_json,
    validate_block,
)
from .algebra import chern_numbers_of_product


class UsageError(Exception):
    pass


_FAMILY_ALIASES = {
    "elliptic": "elliptic",
    "ruled-spheres": "ruled-spheres",
    "knot-elliptic": "knot-surgered-elliptic",
    "knot-surgered-elliptic": "knot-surgered-elliptic",
    "generic": "generic",
}


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"expected an integer for {what}, got {token!r}")


def _build_block(family: str, params: dict) -> LefschetzBlock:
    try:
        if family == "elliptic":
            if "m" not in params:
                raise UsageError("elliptic requires --m")
            return catalog_mod.elliptic_surface(params["m"])
        if family == "ruled-spheres":
            return catalog_mod.ruled_spheres()
        if family == "knot-surgered-elliptic":
            if "k" not in params or "knot_genus" not in params:
                raise UsageError("knot-elliptic requires --k and --knot-genus")
            return catalog_mod.knot_surgered_elliptic(params["k"], params["knot_genus"])
        if family == "generic":
            for key in ("chi", "c1sq", "genus", "n"):
                if key not in params:
                    raise UsageError("generic requires --chi --c1sq --genus --n")
            return catalog_mod.generic_block(
                params["chi"],
                params["c1sq"],
                params["genus"],
                params["n"],
                params.get("simply_connected", True),
            )
    except ValueError as exc:  # bad parameter values from the constructors
        raise UsageError(str(exc))
    raise UsageError(f"unknown family {family!r}")


def parse_block_specs(tokens: list[str]) -> list[LefschetzBlock]:
    """Parse a flat token list into blocks: FAMILY [--param value]..."""
    blocks: list[LefschetzBlock] = []
    family = None
    params: dict = {}
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in _FAMILY_ALIASES:
            if family is not None:
                blocks.append(_build_block(family, params))
            family, params = _FAMILY_ALIASES[tok], {}
            i += 1
        elif tok.startswith("--"):
            if family is None:
                raise UsageError(f"option {tok} given before any block family")
            key = tok[2:].replace("-", "_")
            if key == "not_simply_connected":
                params["simply_connected"] = False
                i += 1
            else:
                if i + 1 >= len(tokens):
                    raise UsageError(f"option {tok} needs a value")
                params[key] = _parse_int(tokens[i + 1], tok)
                i += 2
        else:
            raise UsageError(f"unexpected token {tok!r} in block specification")
    if family is not None:
        blocks.append(_build_block(family, params))
    return blocks


def _extract_flag(tokens: list[str], name: str, takes_value: bool):
    """Remove one occurrence of a flag from a token list; returns its value."""
    if name not in tokens:
        return (None, tokens) if takes_value else (False, tokens)
    idx = tokens.index(name)
    if takes_value:
        if idx + 1 >= len(tokens):
            raise UsageError(f"option {name} needs a value")
        value = tokens[idx + 1]
        return value, tokens[:idx] + tokens[idx + 2 :]
    return True, tokens[:idx] + tokens[idx + 1 :]


def _parse_range(text: str) -> tuple[int, int]:
    if ".." not in text:
        raise UsageError(f"range must look like a..b, got {text!r}")
    lo, hi = text.split("..", 1)
    return _parse_int(lo, "range start"), _parse_int(hi, "range end")


# -- rendering ---------------------------------------------------------------


def _block_record(block: LefschetzBlock) -> dict:
    record = block_to_json(block)
    record.update(
        sigma=block.invariants.sigma,
        euler=block.invariants.euler,
        c2=block.invariants.c2,
    )
    return record


def _print_block(block: LefschetzBlock, fmt: str) -> None:
    record = _block_record(block)
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        order = [
            "name", "chi_h", "c1_sq", "sigma", "euler", "c2",
            "fiber_genus", "singular_fibers", "simply_connected",
        ]
        for key in order:
            print(f"{key:<17} {record[key]}")


def _print_triple(triple: ChernTriple, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(triple.to_json(), sort_keys=True))
    else:
        print(f"c3    = {triple.c3}")
        print(f"c1^3  = {triple.c1_cubed}")
        print(f"c1c2  = {triple.c1c2}")


def _check_format(fmt, allowed, default):
    fmt = fmt or default
    if fmt not in allowed:
        raise UsageError(f"--format must be one of {'/'.join(allowed)}, got {fmt!r}")
    return fmt


# -- subcommands -------------------------------------------------------------


def _cmd_block(tokens: list[str]) -> int:
    fmt, tokens = _extract_flag(tokens, "--format", True)
    fmt = _check_format(fmt, ("human", "json"), "human")
    blocks = parse_block_specs(tokens)
    if len(blocks) != 1:
        raise UsageError("block expects exactly one block specification")
    block = blocks[0]
    violations = validate_block(block)
    _print_block(block, fmt)
    if violations:
        for v in violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    return 0


def _cmd_product(tokens: list[str]) -> int:
    fmt, tokens = _extract_flag(tokens, "--format", True)
    fmt = _check_format(fmt, ("human", "json"), "human")
    genus, tokens = _extract_flag(tokens, "--surface-genus", True)
    if genus is None:
        raise UsageError("product requires --surface-genus")
    blocks = parse_block_specs(tokens)
    if len(blocks) != 1:
        raise UsageError("product expects exactly one block specification")
    surface = SurfaceInvariants(_parse_int(genus, "--surface-genus"))
    triple = chern_numbers_of_product(blocks[0].invariants, surface)
    _print_triple(triple, fmt)
    return 0


def _cmd_fibersum(tokens: list[str]) -> int:
    fmt, tokens = _extract_flag(tokens, "--format", True)
    fmt = _check_format(fmt, ("human", "json"), "human")
    oracle, tokens = _extract_flag(tokens, "--oracle", False)
    blocks = parse_block_specs(tokens)
    if len(blocks) != 2:
        raise UsageError("fibersum expects exactly two block specifications")
    triple = halic_construction(blocks[0], blocks[1])
    if oracle:
        symbolic = halic_construction_via_oracle(blocks[0], blocks[1])
        if symbolic != triple:
            print(
                f"oracle mismatch: closed form {triple.to_json()} vs symbolic {symbolic.to_json()}",
                file=sys.stderr,
            )
            return 1
        print("oracle: agreed", file=sys.stderr)
    _print_triple(triple, fmt)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    fmt = _check_format(args.format, ("human", "json"), "human")
    parts = args.target.split(",")
    if len(parts) != 3:
        raise UsageError("--target must be c3,c1cubed,c1c2")
    target = ChernTriple(*(_parse_int(p, "--target") for p in parts))

    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            bounds = SearchBounds.from_json(json.load(fh))
    else:
        generic = None
        if args.generic_chi or args.generic_c1sq or args.generic_genus:
            if not (args.generic_chi and args.generic_c1sq and args.generic_genus):
                raise UsageError(
                    "generic grid needs all of --generic-chi, --generic-c1sq, --generic-genus"
                )
            generic = GenericGrid(
                chi_h=_parse_range(args.generic_chi),
                c1_sq=_parse_range(args.generic_c1sq),
                genus=_parse_range(args.generic_genus),
            )
        bounds = SearchBounds(
            families=tuple(args.families.split(",")),
            max_m=args.max_m,
            max_k=args.max_k,
            max_knot_genus=args.max_knot_genus,
            generic=generic,
        )

    obstruction = construction_obstruction(target)
    for message in obstruction:
        print(f"obstruction: {message}", file=sys.stderr)
    results = search_realizations(target, bounds)
    if fmt == "json":
        payload = [
            {
                "block1": _block_record(r.block1),
                "block2": _block_record(r.block2),
                "triple": r.triple.to_json(),
            }
            for r in results
        ]
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            t = r.triple
            print(
                f"{r.block1.name} + {r.block2.name} -> "
                f"c3={t.c3}, c1^3={t.c1_cubed}, c1c2={t.c1c2}"
            )
        if not results:
            print("no realizations found", file=sys.stderr)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    fmt = _check_format(args.format, ("human", "json"), "human")
    cls = classify_geography_point(args.chi, args.c1sq)
    if fmt == "json":
        print(
            json.dumps(
                {
                    "chi_h": cls.chi_h,
                    "c1_sq": cls.c1_sq,
                    "labels": list(cls.labels),
                    "basic_class_count": cls.basic_class_count,
                    "on_elliptic_axis": cls.on_elliptic_axis,
                    "signature_sign": cls.signature_sign,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"point             ({cls.chi_h}, {cls.c1_sq})")
        print(f"regions           {', '.join(cls.labels) if cls.labels else '(none)'}")
        if cls.basic_class_count is not None:
            print(f"basic classes     {cls.basic_class_count}")
        print(f"elliptic axis     {'yes' if cls.on_elliptic_axis else 'no'}")
        sign = {1: "sigma > 0", 0: "sigma = 0", -1: "sigma < 0"}[cls.signature_sign]
        print(f"signature         {sign}")
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    fmt = _check_format(args.format, ("csv", "svg"), "csv")
    chi_range = _parse_range(args.chi)
    c1sq_range = _parse_range(args.c1sq)
    if chi_range[1] < chi_range[0] or c1sq_range[1] < c1sq_range[0]:
        raise UsageError("plot ranges must be non-empty")
    if fmt == "csv":
        content = plot_mod.grid_csv(chi_range, c1sq_range)
    else:
        try:
            content = plot_mod.geography_svg(chi_range, c1sq_range)
        except ValueError as exc:
            raise UsageError(str(exc))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(content)
    else:
        sys.stdout.write(content)
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    fmt = _check_format(args.format, ("human", "json"), "human")
    if args.catalog:
        blocks = catalog_mod.load_catalog(args.catalog)
    else:
        blocks = catalog_mod.default_catalog()
    if fmt == "json":
        print(json.dumps([_block_record(b) for b in blocks], sort_keys=True))
    else:
        for block in blocks:
            inv = block.invariants
            print(
                f"{block.name:<16} chi_h={inv.chi_h} c1_sq={inv.c1_sq} sigma={inv.sigma} "
                f"e={inv.euler} g={block.fiber_genus} n={block.singular_fibers}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cherngeo",
        description="Chern-number geography of fiber-summed symplectic 6-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("block", "show a building block and its derived invariants"),
        ("product", "Chern numbers of a block times a surface"),
        ("fibersum", "Chern numbers of the fiber-summed 6-manifold"),
    ):
        p = sub.add_parser(name, help=helptext, add_help=True)
        p.add_argument("tokens", nargs=argparse.REMAINDER)

    p = sub.add_parser("search", help="find block pairs realizing a target triple")
    p.add_argument("--target", required=True, help="target triple c3,c1cubed,c1c2")
    p.add_argument("--families", default="elliptic,ruled-spheres,knot-surgered-elliptic")
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-knot-genus", type=int, default=4)
    p.add_argument("--generic-chi", help="generic grid chi_h range a..b")
    p.add_argument("--generic-c1sq", help="generic grid c1^2 range a..b")
    p.add_argument("--generic-genus", help="generic grid fiber-genus range a..b")
    p.add_argument("--config", help="JSON file with search bounds")
    p.add_argument("--format", default=None)

    p = sub.add_parser("classify", help="classify a point of the (chi_h, c1^2) plane")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--c1sq", type=int, required=True)
    p.add_argument("--format", default=None)

    p = sub.add_parser("plot", help="emit a CSV grid or SVG chart of the plane")
    p.add_argument("--chi", required=True, help="chi_h range a..b")
    p.add_argument("--c1sq", required=True, help="c1^2 range a..b")
    p.add_argument("--format", default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("catalog", help="list the built-in or a user catalog")
    p.add_argument("--catalog", default=None)
    p.add_argument("--format", default=None)

    return parser


_VALUE_FLAGS = {
    "--chi", "--c1sq", "--target",
    "--generic-chi", "--generic-c1sq", "--generic-genus",
}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join flags with values that start with '-' so argparse accepts them."""
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_negative_values(list(argv)))
    try:
        if args.command == "block":
            return _cmd_block(list(args.tokens))
        if args.command == "product":
            return _cmd_product(list(args.tokens))
        if args.command == "fibersum":
            return _cmd_fibersum(list(args.tokens))
        if args.command == "search":
            return _cmd_search(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "plot":
            return _cmd_plot(args)
        if args.command == "catalog":
            return _cmd_catalog(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except BlockValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
