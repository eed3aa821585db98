"""Complex literal grammar shared by the CLI and every JSON file.

    literal   := "inf" | real | real sign unsigned "i" | [sign] [unsigned] "i"
    examples  := "-6", "-2+1.4142135623730951i", "1i", "-i", "inf"

Literals are whitespace-free. Formatting uses ``repr`` of each float component,
so ``parse_complex(format_complex(z, clean=False)) == z`` exactly.
"""

from __future__ import annotations

import cmath
import re

from src.errors import LiteralParseError

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"

_LITERAL = re.compile(
    rf"""^(?:
        (?P<re>[+-]?{_NUM})(?:(?P<isign>[+-])(?P<im>{_NUM})?i)?
      | (?P<psign>[+-]?)(?P<pim>{_NUM})?i
    )$""",
    re.VERBOSE,
)

INFINITY_TOKENS = frozenset({"inf", "+inf", "infinity", "∞"})

# Components below this fraction of the modulus are printed as zero.
_CLEAN_REL = 1e-13


def parse_complex(text: str) -> complex:
    """Parse a finite complex literal. ``inf`` is rejected here."""
    token = str(text).strip()
    m = _LITERAL.match(token)
    if m is None:
        raise LiteralParseError(f"Not a complex literal: {text!r}")
    if m.group("re") is not None:
        real = float(m.group("re"))
        if m.group("isign") is None:
            z = complex(real, 0.0)
        else:
            imag = float(m.group("im")) if m.group("im") else 1.0
            z = complex(real, -imag if m.group("isign") == "-" else imag)
    else:
        imag = float(m.group("pim")) if m.group("pim") else 1.0
        z = complex(0.0, -imag if m.group("psign") == "-" else imag)
    if not cmath.isfinite(z):
        raise LiteralParseError(f"Complex literal overflows a float: {text!r}")
    return z


def is_infinity_token(text: str) -> bool:
    return str(text).strip().lower() in INFINITY_TOKENS


def _fmt_float(x: float) -> str:
    x = float(x)
    if x == 0.0:
        return "0.0"
    return repr(x)


def format_complex(z: complex, clean: bool = True) -> str:
    z = complex(z)
    re_, im_ = z.real, z.imag
    if clean:
        scale = max(1.0, abs(z))
        if abs(re_) <= _CLEAN_REL * scale:
            re_ = 0.0
        if abs(im_) <= _CLEAN_REL * scale:
            im_ = 0.0
    if im_ == 0.0:
        return _fmt_float(re_)
    if re_ == 0.0:
        return f"{_fmt_float(im_)}i"
    sign = "-" if im_ < 0 else "+"
    return f"{_fmt_float(re_)}{sign}{_fmt_float(abs(im_))}i"


def split_literal_list(text: str) -> list[str]:
    """Split the comma separated ``--points`` value."""
    items = [item.strip() for item in str(text).split(",")]
    if not items or any(not item for item in items):
        raise LiteralParseError(f"Empty entry in literal list: {text!r}")
    return items
