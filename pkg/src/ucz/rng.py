"""Deterministic random streams for reproducible verification sweeps.

SplitMix64 (Steele, Lea, Vigna) is implemented directly so that a seed
produces the identical sample stream on every platform and Python version;
the stdlib `random` module makes no such cross-version promise.  Helpers
sample small rationals, which keeps Fraction arithmetic fast in long sweeps.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix64 generator; next_u64 is the published update."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def fraction(self, num_bound: int = 9, dens=(1, 1, 2, 3)) -> Fraction:
        """Small rational with numerator in [-num_bound, num_bound]."""
        return Fraction(self.randint(-num_bound, num_bound), self.choice(dens))

    def nonzero_fraction(self, num_bound: int = 9, dens=(1, 1, 2, 3)) -> Fraction:
        while True:
            x = self.fraction(num_bound, dens)
            if x != 0:
                return x


def stream(seed: int, label: str) -> SplitMix64:
    """Derive an independent generator for `label` from a master seed.

    The label is folded in FNV-1a style so distinct suite names get distinct,
    reproducible streams.
    """
    h = 0xCBF29CE484222325
    for b in label.encode("utf-8"):
        h = ((h ^ b) * 0x100000001B3) & _MASK
    g = SplitMix64((seed ^ h) & _MASK)
    g.next_u64()
    return g
