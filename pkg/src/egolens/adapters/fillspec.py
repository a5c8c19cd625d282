"""Compact string form of node fillings, as used in attribute files.

Examples: ``none``, ``solid:#d62728``, ``fraction:0.4``,
``fraction:0.4:green``, ``pie:red=2,blue=1``, ``timecolor:#a00,#0a0``,
``presence:101101:blue``.
"""

from __future__ import annotations

from ..errors import DataError
from ..model import FillingSpec

__all__ = ["parse_filling", "format_filling"]


def parse_filling(text: str) -> FillingSpec:
    parts = text.strip().split(":")
    variant = parts[0]
    args = parts[1:]
    try:
        if variant == "none":
            if args:
                raise DataError("none takes no parameters")
            return FillingSpec("none")
        if variant == "solid":
            if len(args) != 1 or not args[0]:
                raise DataError("solid needs exactly one color")
            return FillingSpec("solid", color=args[0])
        if variant == "fraction":
            if len(args) not in (1, 2):
                raise DataError("fraction needs d and an optional color")
            d = float(args[0])
            if not 0 <= d <= 1:
                raise DataError(f"fraction {d} outside [0, 1]")
            return FillingSpec(
                "fraction", fraction=d, color=args[1] if len(args) == 2 else None
            )
        if variant == "pie":
            if len(args) != 1 or not args[0]:
                raise DataError("pie needs color=weight pairs")
            weights = []
            for pair in args[0].split(","):
                color, _, raw = pair.partition("=")
                weight = float(raw)
                if not color or weight <= 0:
                    raise DataError(f"bad pie sector {pair!r}")
                weights.append((color, weight))
            return FillingSpec("pie", weights=tuple(weights))
        if variant == "timecolor":
            if len(args) != 1 or not args[0]:
                raise DataError("timecolor needs a color list")
            colors = tuple(c for c in args[0].split(",") if c)
            if not colors:
                raise DataError("timecolor needs at least one color")
            return FillingSpec("timecolor", colors=colors)
        if variant == "presence":
            if len(args) not in (1, 2) or not args[0]:
                raise DataError("presence needs a 0/1 string and an optional color")
            if set(args[0]) - {"0", "1"}:
                raise DataError(f"presence bits must be 0 or 1, got {args[0]!r}")
            booleans = tuple(bit == "1" for bit in args[0])
            return FillingSpec(
                "presence", booleans=booleans, color=args[1] if len(args) == 2 else None
            )
    except ValueError as exc:
        raise DataError(f"bad filling spec {text!r}: {exc}") from exc
    raise DataError(f"unknown filling variant in {text!r}")


def _num(value: float) -> str:
    # repr keeps the shortest round-tripping form, so parse(format(x)) == x.
    return str(int(value)) if value == int(value) else repr(value)


def format_filling(spec: FillingSpec) -> str:
    if spec.variant == "none":
        return "none"
    if spec.variant == "solid":
        return f"solid:{spec.color}"
    if spec.variant == "fraction":
        base = f"fraction:{_num(spec.fraction)}"
        return f"{base}:{spec.color}" if spec.color else base
    if spec.variant == "pie":
        pairs = ",".join(f"{color}={_num(weight)}" for color, weight in spec.weights)
        return f"pie:{pairs}"
    if spec.variant == "timecolor":
        return "timecolor:" + ",".join(spec.colors)
    if spec.variant == "presence":
        bits = "".join("1" if b else "0" for b in spec.booleans)
        return f"presence:{bits}:{spec.color}" if spec.color else f"presence:{bits}"
    raise DataError(f"unknown filling variant {spec.variant!r}")
