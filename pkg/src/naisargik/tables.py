"""Builders for the golden reference tables the CLI can emit.

Every builder recomputes its content from the library; nothing is replayed
from stored data except the fixed study pairs of the residue-difference
table, which are inputs rather than results.  Tables whose reference
counterparts are known to be internally inconsistent carry a note column
saying the values are recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .helberg import (
    cardinality_lower_bound,
    cardinality_upper_bound,
    helberg_census,
    helberg_classes,
    moment,
    weight_sequence,
)
from .maps import naisargik_map
from .spheres import sphere_members
from .verify import cardinality_comparison, verify_residue_bijection
from .vt import image_pair_diff, qary_vt_census, qary_vt_classes
from .words import DEFAULT_MAX_ENUM, format_word, parse_word


@dataclass(frozen=True)
class Table:
    name: str
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]


#: Fixed equal-weight study pairs (images under phi8), one per length.
RESIDUE_DIFF_PAIRS: tuple[tuple[str, str], ...] = (
    ("10", "00"),
    ("0001", "0000"),
    ("110001", "100001"),
    ("11100001", "11000001"),
    ("1011110111", "1011101101"),
    ("001000111001", "001000011001"),
    ("10111111100001", "10011111100001"),
    ("0001000011101000", "0000100001101000"),
    ("010111011010011101", "010111010100101101"),
    ("11110101011101111011", "11110101011011110101"),
)


def _sphere_cell(word, s: int) -> str:
    return ";".join(sorted(format_word(w) for w in sphere_members(word, s)))


def table2(n: int = 4, a: int = 1, b: int = 2, limit: int = DEFAULT_MAX_ENUM) -> Table:
    """Quaternary VT codebook beside its phi8 images."""
    smap = naisargik_map("phi8")
    words = qary_vt_classes(n, 4, limit).get((a, b), ())
    rows = tuple((format_word(w), format_word(smap.apply(w))) for w in words)
    return Table("table2", ("codeword", "image"), rows)


def table3() -> Table:
    """Recomputed residue differences for the fixed phi8 study pairs."""
    smap = naisargik_map("phi8")
    rows = []
    for xs, ys in RESIDUE_DIFF_PAIRS:
        x = parse_word(xs, 2)
        y = parse_word(ys, 2)
        da, db = image_pair_diff(x, y, smap)
        rows.append((str(len(x) // 2), xs, ys, str(da), str(db)))
    return Table("table3", ("n", "x", "y", "abs_da", "abs_db"), tuple(rows))


def table5(n: int = 4, q: int = 4, s: int = 1, limit: int = DEFAULT_MAX_ENUM) -> Table:
    """Helberg residue census, one row per populated residue."""
    census = helberg_census(n, q, s, limit)
    rows = tuple((str(a), str(c)) for a, c in sorted(census.counts.items()))
    return Table("table5", ("residue", "count"), rows)


def table6(n_values: tuple[int, ...] = (3, 4, 5, 6, 7), limit: int = DEFAULT_MAX_ENUM) -> Table:
    """Maximum-cardinality residues and their binary image residues."""
    rows = []
    for n in n_values:
        result = verify_residue_bijection(n, limit)
        top = result.summary["max_codewords"]
        for a, a_prime in result.summary["mapping"]:
            rows.append((str(n), str(top), str(a), str(a_prime)))
    return Table("table6", ("n", "count", "residue", "image_residue"), tuple(rows))


def table7(n_values: tuple[int, ...] = (2, 3, 4, 5, 6), limit: int = DEFAULT_MAX_ENUM) -> Table:
    """Cardinality comparison with the bound columns evaluated exactly.

    The note column marks every row as recomputed: the bound columns come
    from the formulas as implemented, and the maxima from fresh censuses.
    """
    rows = []
    for row in cardinality_comparison(n_values, limit):
        rows.append(
            (
                str(row.n),
                str(row.lower),
                str(row.upper),
                str(row.max_binary),
                str(row.max_image),
                "recomputed",
            )
        )
    return Table(
        "table7",
        ("n", "lower_bound", "upper_bound", "max_binary", "max_image", "note"),
        tuple(rows),
    )


def table8(
    cells: tuple[tuple[int, int], ...] = ((3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (6, 1), (7, 1)),
    limit: int = DEFAULT_MAX_ENUM,
) -> Table:
    """Maximum codebook size and all achieving residues per (n, s)."""
    rows = []
    for n, s in cells:
        census = helberg_census(n, 4, s, limit)
        top = census.max_count()
        residues = " ".join(str(a) for a in census.residues_with(top))
        rows.append((str(n), str(s), str(top), residues))
    return Table("table8", ("n", "s", "count", "residues"), tuple(rows))


def table9(
    n_bits: int = 10, s: int = 2, a: int | None = None, limit: int = DEFAULT_MAX_ENUM
) -> Table:
    """Binary Helberg codebook beside its phi9 inverse images.

    Defaults to the maximum-cardinality residue when ``a`` is omitted.
    """
    smap = naisargik_map("phi9")
    _, classes = helberg_classes(n_bits, 2, s, limit)
    if a is None:
        a = min(classes, key=lambda r: (-len(classes[r]), r))
    rows = tuple(
        (format_word(w), format_word(smap.invert(w))) for w in classes.get(a, ())
    )
    return Table("table9", ("codeword", "image"), rows)


def _image_vs_binary(n: int, a: int, limit: int) -> Table:
    smap = naisargik_map("phi9")
    _, classes4 = helberg_classes(n, 4, 1, limit)
    w2 = weight_sequence(2 * n, 2, 2)
    _, classes2 = helberg_classes(2 * n, 2, 2, limit)
    words = classes4.get(a, ())
    residues = {moment(smap.apply(w), w2) % w2.modulus for w in words}
    binary_class = set()
    if len(residues) == 1:
        binary_class = set(classes2.get(min(residues), ()))
    rows = []
    for w in words:
        img = smap.apply(w)
        rows.append(
            (
                format_word(w),
                format_word(img),
                format_word(img) if img in binary_class else "",
            )
        )
    return Table(f"table-image-{n}", ("codeword", "image", "binary_codeword"), tuple(rows))


def table10(n: int = 4, a: int = 40, limit: int = DEFAULT_MAX_ENUM) -> Table:
    """phi9 images of one maximal quaternary class against its binary class."""
    t = _image_vs_binary(n, a, limit)
    return Table("table10", t.headers, t.rows)


def table11(n: int = 5, a: int = 134, limit: int = DEFAULT_MAX_ENUM) -> Table:
    t = _image_vs_binary(n, a, limit)
    return Table("table11", t.headers, t.rows)


def table12(n: int = 4, s: int = 1, a: int = 13, limit: int = DEFAULT_MAX_ENUM) -> Table:
    """(s+1)-deletion spheres of the phi9 images of one Helberg codebook.

    Emitted from recomputed images; the reference listing for these spheres
    does not match its own mapping table, hence the note column.
    """
    smap = naisargik_map("phi9")
    _, classes = helberg_classes(n, 4, s, limit)
    rows = tuple(
        (format_word(smap.apply(w)), _sphere_cell(smap.apply(w), s + 1), "recomputed")
        for w in classes.get(a, ())
    )
    return Table("table12", ("codeword", "sphere", "note"), rows)


def table13(
    n_bits: int = 10, s: int = 2, a: int = 66, limit: int = DEFAULT_MAX_ENUM
) -> Table:
    """1-deletion spheres of the phi9 inverse images of one binary codebook."""
    smap = naisargik_map("phi9")
    _, classes = helberg_classes(n_bits, 2, s, limit)
    inverse = sorted(smap.invert(w) for w in classes.get(a, ()))
    rows = tuple((format_word(w), _sphere_cell(w, 1)) for w in inverse)
    return Table("table13", ("codeword", "sphere"), rows)


def table14(
    n: int = 4, a: int = 1, b: int = 2, limit: int = DEFAULT_MAX_ENUM
) -> Table:
    """1-deletion spheres of the phi8 images of one quaternary VT codebook."""
    smap = naisargik_map("phi8")
    words = qary_vt_classes(n, 4, limit).get((a, b), ())
    rows = tuple(
        (format_word(smap.apply(w)), _sphere_cell(smap.apply(w), 1)) for w in words
    )
    return Table("table14", ("codeword", "sphere"), rows)


def table15(n: int = 4, q: int = 4, limit: int = DEFAULT_MAX_ENUM) -> Table:
    """Residue-pair census of the q-ary VT partition."""
    census = qary_vt_census(n, q, limit)
    rows = tuple(
        (str(a), str(b), str(count)) for (a, b), count in sorted(census.items())
    )
    return Table("table15", ("a", "b", "count"), rows)


def bounds_table(n_values: tuple[int, ...], q: int, s: int) -> Table:
    """Formula-evaluated lower/upper cardinality bounds, exact and approximate."""
    rows = []
    for n in n_values:
        lo = cardinality_lower_bound(n, q, s)
        hi = cardinality_upper_bound(n, q, s)
        rows.append(
            (str(n), str(q), str(s), str(lo), f"{float(lo):.6g}", str(hi), f"{float(hi):.6g}")
        )
    return Table(
        "bounds",
        ("n", "q", "s", "lower", "lower_approx", "upper", "upper_approx"),
        tuple(rows),
    )
