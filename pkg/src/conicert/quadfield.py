"""Hilbert symbols after base change to a quadratic field Q(sqrt(m)).

A quaternion algebra over Q splits over Q(sqrt(m)) iff none of its ramified
places splits in the extension (split finite place / real place splitting into
two real places): at a non-split place the local field genuinely grows, and
every quaternion division algebra over a local field is split by its quadratic
extensions.  This needs only the Q-level ramification set plus the classical
splitting rules, no prime-ideal arithmetic in the quadratic field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .hilbert import Place, RamificationSet, factor, global_hilbert, kronecker
from .rationals import Rat, rat, squarefree_kernel_int


class SplitType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"
    TWO_REAL = "splits-into-two-real"
    COMPLEX = "becomes-complex"


@dataclass(frozen=True)
class QuadField:
    """Q(sqrt(m)), canonicalized by the squarefree core of the radicand.

    Convention: a radicand that is 0 or a nonzero rational square yields the
    trivial field Q (core 1); callers that care flag this as a degenerate
    discriminant.
    """

    radicand_raw: Fraction
    radicand_core: int

    @property
    def is_trivial(self) -> bool:
        return self.radicand_core == 1

    def __str__(self) -> str:
        return "Q" if self.is_trivial else f"Q(sqrt({self.radicand_core}))"


def squarefree_core(m: Rat) -> QuadField:
    """Normalize Q(sqrt(m)): strip square factors from the radicand."""
    m = rat(m)
    kernel = squarefree_kernel_int(m)
    if kernel == 0:
        return QuadField(radicand_raw=m, radicand_core=1)
    fac = factor(kernel)
    core = fac.sign
    for p, e in fac.factors:
        if e % 2:
            core *= p
    return QuadField(radicand_raw=m, radicand_core=core)


def place_splitting(v: Place, K: QuadField) -> SplitType:
    """Splitting behavior of a place of Q in the quadratic field K."""
    if K.is_trivial:
        raise ValueError("place splitting is undefined in the trivial field")
    core = K.radicand_core
    if v.is_real:
        return SplitType.TWO_REAL if core > 0 else SplitType.COMPLEX
    p = v.prime
    assert p is not None
    if p == 2:
        if core % 8 == 1:
            return SplitType.SPLIT
        if core % 8 == 5:
            return SplitType.INERT
        return SplitType.RAMIFIED
    if core % p == 0:
        return SplitType.RAMIFIED
    return SplitType.SPLIT if kronecker(core, p) == 1 else SplitType.INERT


@dataclass(frozen=True)
class ExtSymbol:
    """Value of (a, b) over Q(sqrt(m)), with an offending place when nonzero."""

    is_zero: bool
    field_core: int
    degenerate_discriminant: bool
    witness_place: Optional[Place] = None
    base_ramification: Optional[RamificationSet] = None

    def to_json(self) -> dict:
        out = {
            "value": "zero" if self.is_zero else "nonzero",
            "witness_place": None if self.witness_place is None else str(self.witness_place),
            "field_core": self.field_core,
        }
        if self.degenerate_discriminant:
            out["degenerate_discriminant"] = True
        return out


def ext_hilbert(a: Rat, b: Rat, K: QuadField) -> ExtSymbol:
    """Hilbert symbol of (a, b) after base change to K.

    Trivial K delegates to the symbol over Q.  Otherwise the symbol is zero
    iff no ramified place of (a, b) over Q splits in K; the witness is the
    smallest offending place in the canonical place order.
    """
    a = rat(a)
    b = rat(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    ram = global_hilbert(a, b)
    if K.is_trivial:
        witness = ram.places[0] if not ram.is_empty else None
        return ExtSymbol(
            is_zero=ram.is_empty,
            field_core=1,
            degenerate_discriminant=True,
            witness_place=witness,
            base_ramification=ram,
        )
    for v in ram:
        split = place_splitting(v, K)
        if split in (SplitType.SPLIT, SplitType.TWO_REAL):
            return ExtSymbol(
                is_zero=False,
                field_core=K.radicand_core,
                degenerate_discriminant=False,
                witness_place=v,
                base_ramification=ram,
            )
    return ExtSymbol(
        is_zero=True,
        field_core=K.radicand_core,
        degenerate_discriminant=False,
        base_ramification=ram,
    )
