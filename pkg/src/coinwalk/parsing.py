"""Text forms of angles and measurement bases, as accepted by the service.

Angles are decimal radians or ``pi`` literals (``pi``, ``pi/4``, ``3pi/2``);
the literals evaluate to the exact floating-point multiples, so grid-critical
values like ``pi/4`` survive a round trip through flags untruncated.
"""

from __future__ import annotations

import math
import re

from .measurement import (
    CoinBasis,
    computational_basis,
    grover_max_basis,
    grover_min_basis,
    qubit_basis,
)

_PI_FORM = re.compile(r"^(?P<sign>-)?(?P<mult>\d+)?pi(?:/(?P<div>\d+))?$")


def parse_angle(value: float | int | str) -> float:
    """Parse an angle given in radians, either as a number or a pi literal."""
    if isinstance(value, (int, float)):
        return float(value)
    text = value.strip().lower().replace(" ", "")
    match = _PI_FORM.match(text)
    if match:
        angle = math.pi
        if match["mult"]:
            angle *= int(match["mult"])
        if match["div"]:
            if int(match["div"]) == 0:
                raise ValueError(f"invalid angle {value!r}")
            angle /= int(match["div"])
        return -angle if match["sign"] else angle
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"invalid angle {value!r}") from None


def parse_basis(spec: str, coin_dim: int) -> CoinBasis:
    """Resolve a basis specification string for the given coin dimension.

    Accepted forms: ``computational``, ``qubit:<theta>,<phi>`` (qubit walks
    only), ``grover-max`` and ``grover-min`` (four-component walks only).
    """
    text = spec.strip().lower()
    if text == "computational":
        return computational_basis(coin_dim)
    if text.startswith("qubit:"):
        if coin_dim != 2:
            raise ValueError("qubit:theta,phi bases apply only to the qubit walk")
        parts = text[len("qubit:") :].split(",")
        if len(parts) != 2:
            raise ValueError(f"expected qubit:<theta>,<phi>, got {spec!r}")
        return qubit_basis(parse_angle(parts[0]), parse_angle(parts[1]))
    if text in ("grover-max", "grover-min"):
        if coin_dim != 4:
            raise ValueError(f"{text} applies only to the four-component walk")
        return grover_max_basis() if text == "grover-max" else grover_min_basis()
    if text.startswith("random:"):
        raise ValueError("random:samples,seed bases are only valid for random-run")
    raise ValueError(f"unknown basis specification {spec!r}")
