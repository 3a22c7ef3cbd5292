"""Conversions between Python-int bitsets, boolean masks and index arrays.

Subsets of a group of order ``n`` are stored as non-negative ints whose bit
``i`` is set when element ``i`` belongs to the subset.  Ints are hashable,
cheap to intersect/union, and ``int.bit_count`` gives sizes directly.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np


def from_mask(mask: np.ndarray) -> int:
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def to_mask(bits: int, n: int) -> np.ndarray:
    raw = bits.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)


_ASCII01 = bytes.maketrans(b"\x00\x01", b"01")


def from_bytemask(mask: bytes | bytearray) -> int:
    """Bitset from a byte string with one 0/1 byte per element."""
    if not mask:
        return 0
    return int(bytes(mask).translate(_ASCII01)[::-1], 2)


_BYTES01 = bytes.maketrans(b"01", b"\x00\x01")


def to_bytemask(bits: int, n: int) -> bytearray:
    """One 0/1 byte per element, inverse of :func:`from_bytemask`."""
    raw = bin(bits)[2:][::-1].encode().translate(_BYTES01)
    return bytearray(raw.ljust(n, b"\x00"))


def from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def to_indices(bits: int, n: int) -> np.ndarray:
    return np.flatnonzero(to_mask(bits, n))


def iter_bits(bits: int):
    """Yield the set bit positions of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1
