"""Deletion spheres and exhaustive s-deletion-correction checking.

The s-deletion sphere of a word x is the set of all distinct length-(|x|-s)
subsequences of x.  A codebook corrects s deletions exactly when all pairwise
spheres are disjoint; this module decides that by hashing every sphere member
and looking for collisions, which also yields an explicit witness on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .words import Word, ResourceLimitError

#: Refuse single-word sphere computations beyond this many index subsets.
DEFAULT_SPHERE_CAP = 10_000_000


@dataclass(frozen=True)
class Sphere:
    """The deletion sphere D_s(center): all subsequences after s deletions."""

    center: Word
    deletions: int
    members: frozenset[Word]


@dataclass(frozen=True)
class CorrectionReport:
    """Outcome of an s-deletion-correction check over one codebook.

    ``witness`` is None exactly when ``ok`` is true; otherwise it is the
    lexicographically first violating pair together with the smallest word
    their spheres share.
    """

    deletions: int
    ok: bool
    witness: tuple[Word, Word, Word] | None = None

    def __post_init__(self) -> None:
        if self.ok == (self.witness is not None):
            raise ValueError("witness must be present exactly on failure")


def single_deletions(word: Word) -> frozenset[Word]:
    """All distinct words obtained by deleting one position of ``word``."""
    if not word:
        raise ValueError("cannot delete from the empty word")
    return frozenset(word[:i] + word[i + 1 :] for i in range(len(word)))


def _check_sphere_args(word: Word, s: int, cap: int) -> None:
    if not 0 <= s <= len(word):
        raise ValueError(f"deletion count {s} out of range for length {len(word)}")
    if comb(len(word), s) > cap:
        raise ResourceLimitError(
            f"sphere of a length-{len(word)} word at s={s} exceeds cap {cap}"
        )


def sphere_members(word: Word, s: int, cap: int = DEFAULT_SPHERE_CAP) -> frozenset[Word]:
    """The member set of D_s(word), by iterated single deletions with dedup."""
    _check_sphere_args(word, s, cap)
    members: set[Word] = {word}
    for _ in range(s):
        members = {w[:i] + w[i + 1 :] for w in members for i in range(len(w))}
    return frozenset(members)


def deletion_sphere(word: Word, s: int, cap: int = DEFAULT_SPHERE_CAP) -> Sphere:
    return Sphere(center=word, deletions=s, members=sphere_members(word, s, cap))


def spheres_intersect(
    x: Word, y: Word, s: int, cap: int = DEFAULT_SPHERE_CAP
) -> tuple[bool, frozenset[Word]]:
    """Whether D_s(x) and D_s(y) share a member, plus the shared set."""
    if len(x) != len(y):
        raise ValueError("sphere intersection needs equal-length words")
    shared = sphere_members(x, s, cap) & sphere_members(y, s, cap)
    return bool(shared), shared


def check_deletion_correcting(
    codewords: Iterable[Word], s: int, cap: int = DEFAULT_SPHERE_CAP
) -> CorrectionReport:
    """Decide whether a codebook corrects s deletions.

    All codewords must share one length n >= s.  Every sphere member is
    hashed to the codewords producing it; a bucket holding two codewords is
    a violation.  The reported witness pair is the lexicographically first
    violating pair, independent of iteration or bucketing order.
    """
    code = sorted(set(codewords))
    if code:
        n = len(code[0])
        if any(len(w) != n for w in code):
            raise ValueError("codebook must have a single word length")
        if s > n:
            raise ValueError(f"deletion count {s} exceeds word length {n}")
    owners: dict[Word, Word] = {}
    violating: set[tuple[Word, Word]] = set()
    for word in code:
        for member in sphere_members(word, s, cap):
            other = owners.setdefault(member, word)
            if other != word:
                violating.add((other, word))
    if not violating:
        return CorrectionReport(deletions=s, ok=True)
    x, y = min(violating)
    shared = sphere_members(x, s, cap) & sphere_members(y, s, cap)
    return CorrectionReport(deletions=s, ok=False, witness=(x, y, min(shared)))
