"""Generalized Helberg codes: number-theoretic weights, moments, codebooks.

The weight sequence obeys v_i = 1 + (q-1) * (v_{i-1} + ... + v_{i-s}) with
v_i = 0 for i <= 0.  A codeword of length n belongs to H(n, q, s, a) when its
moment sum(v_i * x_i) is congruent to a modulo m, where m equals v_{n+1}
(identically, (q-1) * (v_n + ... + v_{n-s+1}) + 1).  Such a codebook corrects
s deletions.

Everything here is exact integer or rational arithmetic; Python integers are
unbounded, so the weight recursion cannot silently wrap at any desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .words import DEFAULT_MAX_ENUM, Word, check_symbols, iter_words


@dataclass(frozen=True)
class WeightSequence:
    """Weights v_1..v_{n+1} for alphabet size q and deletion budget s."""

    q: int
    s: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) < 2:
            raise ValueError("need at least v_1 and v_2")
        if list(self.values) != sorted(set(self.values)):
            raise ValueError("weights must be strictly increasing")

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def modulus(self) -> int:
        """The codebook modulus m = v_{n+1}."""
        return self.values[-1]

    def v(self, i: int) -> int:
        """v_i with the recursion's base: zero for every i <= 0."""
        if i <= 0:
            return 0
        if i > len(self.values):
            raise ValueError(f"v_{i} not computed (have up to v_{len(self.values)})")
        return self.values[i - 1]


def weight_sequence(n: int, q: int, s: int) -> WeightSequence:
    """Compute v_1..v_{n+1} by the defining recursion."""
    if n < 1 or q < 2 or s < 1:
        raise ValueError(f"need n >= 1, q >= 2, s >= 1; got ({n}, {q}, {s})")
    r = q - 1
    window = [0] * s
    values = []
    for _ in range(n + 1):
        nxt = 1 + r * sum(window)
        values.append(nxt)
        window = window[1:] + [nxt] if s > 1 else [nxt]
    return WeightSequence(q=q, s=s, values=tuple(values))


def modulus_from_definition(n: int, q: int, s: int) -> int:
    """m written out directly: (q-1) * sum of the s top weights, plus one."""
    w = weight_sequence(n, q, s)
    return (q - 1) * sum(w.v(n - i) for i in range(s)) + 1


@dataclass(frozen=True)
class HelbergParams:
    """Parameters (n, q, s, a); the weights and modulus are derived."""

    n: int
    q: int
    s: int
    a: int
    weights: WeightSequence = field(init=False, compare=False, repr=False)
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        w = weight_sequence(self.n, self.q, self.s)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "m", w.modulus)
        if not 0 <= self.a < self.m:
            raise ValueError(f"residue {self.a} not in Z_{self.m}")


def moment(word: Word, weights: WeightSequence) -> int:
    """The weighted symbol sum sum(v_i * x_i), exactly."""
    if len(word) > weights.n:
        raise ValueError(
            f"word length {len(word)} exceeds weight sequence length {weights.n}"
        )
    check_symbols(word, weights.q)
    return sum(v * x for v, x in zip(weights.values, word))


def helberg_code(
    params: HelbergParams, limit: int = DEFAULT_MAX_ENUM
) -> frozenset[Word]:
    """All length-n words whose moment is congruent to a mod m."""
    w, m, a = params.weights, params.m, params.a
    return frozenset(
        x for x in iter_words(params.n, params.q, limit) if moment(x, w) % m == a
    )


def helberg_classes(
    n: int, q: int, s: int, limit: int = DEFAULT_MAX_ENUM
) -> tuple[int, dict[int, tuple[Word, ...]]]:
    """One exhaustive scan of Z_q^n bucketed by moment residue.

    Returns (m, classes); residues with no codeword are absent from the
    mapping.  Words are sorted within each class.
    """
    w = weight_sequence(n, q, s)
    m = w.modulus
    buckets: dict[int, list[Word]] = {}
    for x in iter_words(n, q, limit):
        buckets.setdefault(moment(x, w) % m, []).append(x)
    return m, {a: tuple(ws) for a, ws in sorted(buckets.items())}


@dataclass(frozen=True)
class CodebookCensus:
    """Codeword count per residue for one (n, q, s); counts sum to q^n."""

    n: int
    q: int
    s: int
    m: int
    counts: dict[int, int]

    def max_count(self) -> int:
        return max(self.counts.values(), default=0)

    def residues_with(self, count: int) -> tuple[int, ...]:
        return tuple(a for a, c in sorted(self.counts.items()) if c == count)


def helberg_census(
    n: int, q: int, s: int, limit: int = DEFAULT_MAX_ENUM
) -> CodebookCensus:
    m, classes = helberg_classes(n, q, s, limit)
    return CodebookCensus(
        n=n, q=q, s=s, m=m, counts={a: len(ws) for a, ws in classes.items()}
    )


def coefficient(i: int, weights: WeightSequence) -> int:
    """The bit-position coefficient C_i = ((i+1) mod 2 + 1) * v_ceil(i/2).

    Expanding a quaternary moment over mapped bits doubles the index range;
    C_i is the weight the i-th bit picks up: 2 * v_{i/2} at even i,
    v_{(i+1)/2} at odd i.
    """
    if i < 1:
        raise ValueError("coefficient index must be >= 1")
    half = (i + 1) // 2
    return ((i + 1) % 2 + 1) * weights.v(half)


@dataclass(frozen=True)
class CoefficientLemmaReport:
    """Exhaustive check of the three coefficient/weight inequality families.

    monotone:   C_i > C_j for all 1 <= j < i <= 2n.
    single_gap: C_L - sum_{i=L-s}^{L-1} C_i >= 1 for all 1 <= L <= 2n.
    paired_gap: v_{2L-1} - sum_{i=L-floor(s/2)+1}^{L-1} (v_{2i-1} + v_{2i}) >= 1
                for all L with 2L-1 in range.
    Sum terms with indices <= 0 contribute nothing.
    """

    n: int
    q: int
    s: int
    monotone: bool
    single_gap: bool
    paired_gap: bool
    violations: tuple[str, ...] = ()

    @property
    def all_hold(self) -> bool:
        return self.monotone and self.single_gap and self.paired_gap


def coefficient_lemma_report(n: int, q: int, s: int) -> CoefficientLemmaReport:
    w = weight_sequence(2 * n, q, s)  # indices up to 2n need v up to n+...; ample
    coeffs = {i: coefficient(i, w) for i in range(1, 2 * n + 1)}
    violations: list[str] = []

    monotone = True
    for i in range(2, 2 * n + 1):
        if coeffs[i] <= coeffs[i - 1]:
            monotone = False
            violations.append(f"C_{i} <= C_{i - 1}")

    single_gap = True
    for L in range(1, 2 * n + 1):
        gap = coeffs[L] - sum(coeffs[i] for i in range(max(1, L - s), L))
        if gap < 1:
            single_gap = False
            violations.append(f"C_{L} gap {gap} < 1")

    paired_gap = True
    for L in range(1, n + 1):
        lo = L - s // 2 + 1
        total = sum(w.v(2 * i - 1) + w.v(2 * i) for i in range(max(1, lo), L))
        gap = w.v(2 * L - 1) - total
        if gap < 1:
            paired_gap = False
            violations.append(f"v_{2 * L - 1} paired gap {gap} < 1")

    return CoefficientLemmaReport(
        n=n,
        q=q,
        s=s,
        monotone=monotone,
        single_gap=single_gap,
        paired_gap=paired_gap,
        violations=tuple(violations),
    )


def cardinality_lower_bound(n: int, q: int, s: int) -> Fraction:
    """Asymptotic lower bound ((s!)^2 q^(n+s) + s) / ((q-1)^(2s) 2^n 2^s)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(
        factorial(s) ** 2 * q ** (n + s) + s, (q - 1) ** (2 * s) * 2**n * 2**s
    )


def cardinality_upper_bound(n: int, q: int, s: int) -> Fraction:
    """Asymptotic upper bound s! q^n / ((q-1)^s n^s)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(factorial(s) * q**n, (q - 1) ** s * n**s)


def reduction_code(code: frozenset[Word] | set[Word]) -> frozenset[Word]:
    """Componentwise mod-2 image of a quaternary code, deduplicated."""
    out = set()
    for word in code:
        check_symbols(word, 4)
        out.add(tuple(sym % 2 for sym in word))
    return frozenset(out)


def torsion_code(code: frozenset[Word] | set[Word]) -> frozenset[Word]:
    """Binary words y such that 2y (componentwise, in Z_4) lies in the code."""
    out = set()
    for word in code:
        check_symbols(word, 4)
        if all(sym % 2 == 0 for sym in word):
            out.add(tuple(sym // 2 for sym in word))
    return frozenset(out)
