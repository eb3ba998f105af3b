"""
Bit-mask helpers for faces.

A face is stored as an int whose bit p is set when the vertex at
position p of the ground set belongs to the face. Positions are the
canonical (order preserving) re-indexing of a complex's labels.
"""

from typing import Iterable, Iterator, List, Sequence, Tuple

# Public face type: sorted tuple of vertex labels.
FaceSet = Tuple[int, ...]


def bit(position: int) -> int:
    return 1 << position


def mask_from_positions(positions: Iterable[int]) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << p
    return mask


def positions(mask: int) -> List[int]:
    """Set bit positions in ascending order."""
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including mask itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, kept: Sequence[int]) -> int:
    """Re-encode mask in the coordinates of the ascending position list kept."""
    out = 0
    for new_position, old_position in enumerate(kept):
        if mask >> old_position & 1:
            out |= 1 << new_position
    return out


def expand(mask: int, targets: Sequence[int]) -> int:
    """Inverse of compress: bit i of mask moves to position targets[i]."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << targets[i]
        mask >>= 1
        i += 1
    return out


def face_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Size first, then lexicographic on positions."""
    return mask.bit_count(), tuple(positions(mask))
