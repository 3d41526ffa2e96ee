"""The ordered 32-polynomial system behind the 64->32 bit compression map.

The polynomial definitions ship as a text asset (`data/polynomials.txt`)
rather than as code literals, so the parser stays the single source of
truth and the asset can be audited by independent text splitting.  The
environment variable ``HFHASH_POLYNOMIALS`` may point at an alternate
asset file for research use.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .anf import (
    SYSTEM_SIZE,
    BooleanPolynomial,
    PolynomialSyntaxError,
    parse_polynomial,
)

log = logging.getLogger(__name__)

ASSET_ENV_VAR = "HFHASH_POLYNOMIALS"


class SystemFormatError(ValueError):
    """The asset does not describe a valid 32-polynomial system."""


@dataclass(frozen=True)
class PolyAudit:
    """Shape record for one polynomial, used to pin down the shipped asset."""

    index: int
    terms: int
    quadratic: int
    linear: int
    constant: bool


@dataclass(frozen=True)
class PolynomialSystem:
    """Exactly 32 polynomials; position k-1 holds index k."""

    polys: tuple[BooleanPolynomial, ...]

    def __post_init__(self):
        if len(self.polys) != SYSTEM_SIZE:
            raise SystemFormatError(
                f"expected {SYSTEM_SIZE} polynomials, got {len(self.polys)}"
            )
        for k, poly in enumerate(self.polys, start=1):
            if poly.index != k:
                raise SystemFormatError(
                    f"position {k} holds polynomial index {poly.index}"
                )

    def eval_reference(self, x: int) -> int:
        """32-bit output word assembled from the term-by-term oracle.

        Output bit 31 (MSB) is polynomial 1, bit 0 is polynomial 32.
        """
        word = 0
        for k, poly in enumerate(self.polys, start=1):
            word |= poly.evaluate(x) << (SYSTEM_SIZE - k)
        return word

    # duck-type compatibility with the fast evaluators, so a raw system
    # can stand in wherever a compiled one is expected (tests, tracing)
    def eval_word(self, x: int) -> int:
        return self.eval_reference(x)

    def constant_word(self) -> int:
        """eval at x=0: the 32 constant terms packed MSB-first."""
        word = 0
        for k, poly in enumerate(self.polys, start=1):
            if poly.has_constant:
                word |= 1 << (SYSTEM_SIZE - k)
        return word

    def audit(self) -> tuple[PolyAudit, ...]:
        return tuple(
            PolyAudit(
                index=p.index,
                terms=p.term_count,
                quadratic=p.quadratic_count,
                linear=p.linear_count,
                constant=p.has_constant,
            )
            for p in self.polys
        )


def load_system(text: str) -> PolynomialSystem:
    """Parse a polynomial asset: 32 definition lines, `#` comments ignored.

    Raises SystemFormatError for a wrong polynomial count or out-of-order
    indices, and PolynomialSyntaxError (annotated with the line number)
    for any bad definition line.
    """
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            polys.append(parse_polynomial(line))
        except PolynomialSyntaxError as exc:
            exc.line = lineno
            raise
    system = PolynomialSystem(polys=tuple(polys))
    for a in system.audit():
        log.debug(
            "y_%d: %d terms (%d quadratic, %d linear, constant=%s)",
            a.index, a.terms, a.quadratic, a.linear, a.constant,
        )
    return system


def _asset_text() -> str:
    override = os.environ.get(ASSET_ENV_VAR)
    if override:
        with open(override, encoding="utf-8") as f:
            return f.read()
    return resources.files("hfhash.data").joinpath("polynomials.txt").read_text("utf-8")


@lru_cache(maxsize=None)
def load_default_system() -> PolynomialSystem:
    """The shipped system (or the ``HFHASH_POLYNOMIALS`` override), cached."""
    return load_system(_asset_text())
