"""Varshamov-Tenengolts codebooks over Z_2 and Z_q, and their map images.

Binary VT codes fix the weighted checksum sum(i * x_i) mod (n+1).  The q-ary
form constrains the signature sequence (alpha_i = 1 iff x_i <= x_{i+1}) to a
binary VT class and additionally fixes the symbol sum mod q.  On top of the
plain constructions this module runs the two image-level analyses: the
equal-weight scan over intersecting 1-deletion spheres, and the search for
same-residue image pairs whose spheres intersect.

Index conventions follow the defining checksums: positions are 1-based in
every residue formula, 0-based only inside loops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .maps import SymbolMap
from .spheres import sphere_members
from .words import DEFAULT_MAX_ENUM, Word, check_symbols, iter_words


@dataclass(frozen=True)
class BinaryVtParams:
    """Parameters (n, a) of the binary codebook with checksum a mod (n+1)."""

    n: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("codeword length must be >= 1")
        if not 0 <= self.a <= self.n:
            raise ValueError(f"residue {self.a} not in Z_{self.n + 1}")


@dataclass(frozen=True)
class QaryVtParams:
    """Parameters (n, q, a, b) of a q-ary VT codebook."""

    n: int
    q: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("codeword length must be >= 1")
        if self.q < 2:
            raise ValueError("alphabet size must be >= 2")
        if not 0 <= self.a < self.n:
            raise ValueError(f"residue {self.a} not in Z_{self.n}")
        if not 0 <= self.b < self.q:
            raise ValueError(f"residue {self.b} not in Z_{self.q}")


def binary_vt_residue(word: Word) -> int:
    """Checksum sum(i * x_i) mod (n+1) with 1-based positions."""
    check_symbols(word, 2)
    if not word:
        raise ValueError("binary VT residue needs length >= 1")
    return sum(i * bit for i, bit in enumerate(word, start=1)) % (len(word) + 1)


def binary_vt_code(
    params: BinaryVtParams, limit: int = DEFAULT_MAX_ENUM
) -> frozenset[Word]:
    """All binary words of length n with checksum a, by exhaustive scan."""
    return frozenset(
        w for w in iter_words(params.n, 2, limit) if binary_vt_residue(w) == params.a
    )


def signature(word: Word) -> tuple[int, ...]:
    """The monotonicity bits of a word: bit i is 1 iff x_i <= x_{i+1}."""
    if not word:
        raise ValueError("signature needs length >= 1")
    return tuple(
        1 if word[i] <= word[i + 1] else 0 for i in range(len(word) - 1)
    )


def qary_vt_residues(word: Word, q: int) -> tuple[int, int]:
    """The residue pair (a, b) of a word: signature checksum mod n, sum mod q.

    For n = 1 the signature is empty and a is 0 (the only element of Z_1).
    """
    check_symbols(word, q)
    n = len(word)
    if n < 1:
        raise ValueError("residues need length >= 1")
    b = sum(word) % q
    if n == 1:
        return 0, b
    a = sum(i * bit for i, bit in enumerate(signature(word), start=1)) % n
    return a, b


def qary_vt_classes(
    n: int, q: int, limit: int = DEFAULT_MAX_ENUM
) -> dict[tuple[int, int], tuple[Word, ...]]:
    """Bucket all of Z_q^n by residue pair; words sorted within each class."""
    buckets: dict[tuple[int, int], list[Word]] = {}
    for w in iter_words(n, q, limit):
        buckets.setdefault(qary_vt_residues(w, q), []).append(w)
    return {res: tuple(ws) for res, ws in sorted(buckets.items())}


def qary_vt_code(
    params: QaryVtParams, limit: int = DEFAULT_MAX_ENUM
) -> frozenset[Word]:
    return frozenset(
        w
        for w in iter_words(params.n, params.q, limit)
        if qary_vt_residues(w, params.q) == (params.a, params.b)
    )


def qary_vt_census(
    n: int, q: int, limit: int = DEFAULT_MAX_ENUM
) -> dict[tuple[int, int], int]:
    """Codeword count for every one of the q*n residue pairs; sums to q^n."""
    classes = qary_vt_classes(n, q, limit)
    return {
        (a, b): len(classes.get((a, b), ()))
        for a in range(n)
        for b in range(q)
    }


def phi8_signature_bit(b1: int, b2: int, b3: int, b4: int) -> int:
    """Signature bit of two consecutive phi8-mapped symbols, from their bits.

    Evaluates the boolean polynomial equivalent to
    phi8^-1(b1 b2) <= phi8^-1(b3 b4).
    """
    for b in (b1, b2, b3, b4):
        if b not in (0, 1):
            raise ValueError(f"bit {b} not in {{0, 1}}")
    return (
        (1 - b1) * (1 - b2)
        + (1 - b1) * b2 * (1 - b3) * b4
        + b2 * b3
        + b1 * (1 - b2) * b3 * (1 - b4)
    )


def image_pair_diff(
    x_bits: Word, y_bits: Word, smap: SymbolMap
) -> tuple[int, int]:
    """Absolute residue differences of the quaternary preimages of two images.

    Residues are canonical representatives; the differences are plain integer
    absolute values, not reduced modulo anything.
    """
    if len(x_bits) != len(y_bits):
        raise ValueError("image pair must have equal lengths")
    x = smap.invert(x_bits)
    y = smap.invert(y_bits)
    ax, bx = qary_vt_residues(x, 4)
    ay, by = qary_vt_residues(y, 4)
    return abs(ax - ay), abs(bx - by)


@dataclass(frozen=True)
class EqualWeightScan:
    """Result of scanning one map for the equal-weight property.

    Within every residue class of the quaternary VT partition, any two mapped
    codewords with intersecting 1-deletion spheres must have equal Hamming
    weight.  ``intersecting_pairs`` counts the distinct image pairs whose
    spheres intersect; ``counterexample`` carries the first violating image
    pair when the property fails.
    """

    n: int
    map_name: str
    passed: bool
    classes: int
    intersecting_pairs: int
    counterexample: tuple[Word, Word] | None = None


def _image_buckets(words: tuple[Word, ...], smap: SymbolMap) -> dict[Word, list[Word]]:
    """Hash every 1-deletion sphere member to the images producing it."""
    buckets: dict[Word, list[Word]] = {}
    for w in words:
        img = smap.apply(w)
        for member in sphere_members(img, 1):
            buckets.setdefault(member, []).append(img)
    return buckets


def equal_weight_scan(
    n: int, smap: SymbolMap, limit: int = DEFAULT_MAX_ENUM
) -> EqualWeightScan:
    """Check the equal-weight property for one map over all of Z_4^n.

    Two images share a 1-deletion sphere member iff they land in a common
    bucket, so the scan never enumerates non-intersecting pairs.
    """
    classes = qary_vt_classes(n, 4, limit)
    pairs: set[tuple[Word, Word]] = set()
    bad: list[tuple[Word, Word]] = []
    for words in classes.values():
        for members in _image_buckets(words, smap).values():
            if len(members) < 2:
                continue
            for x, y in itertools.combinations(sorted(members), 2):
                pairs.add((x, y))
                if sum(x) != sum(y):
                    bad.append((x, y))
    counterexample = min(bad) if bad else None
    return EqualWeightScan(
        n=n,
        map_name=smap.name,
        passed=not bad,
        classes=len(classes),
        intersecting_pairs=len(pairs),
        counterexample=counterexample,
    )


def same_residue_witness(
    n: int, smap: SymbolMap, limit: int = DEFAULT_MAX_ENUM
) -> tuple[Word, Word, frozenset[Word]] | None:
    """First same-residue image pair with intersecting 1-deletion spheres.

    Residue classes are visited in sorted order; within a class the
    lexicographically first intersecting image pair wins.  Returns the two
    images and the full shared member set, or None if every class has
    pairwise disjoint spheres.
    """
    for words in qary_vt_classes(n, 4, limit).values():
        candidates: set[tuple[Word, Word]] = set()
        for members in _image_buckets(words, smap).values():
            if len(members) < 2:
                continue
            candidates.update(itertools.combinations(sorted(members), 2))
        if candidates:
            x, y = min(candidates)
            shared = sphere_members(x, 1) & sphere_members(y, 1)
            return x, y, shared
    return None
