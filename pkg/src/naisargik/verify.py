"""Cross-cutting verification campaigns over maps, spheres, and codebooks.

Each campaign sweeps a parameter grid (usually the residues of one codebook
family), runs an exhaustive sphere check per cell, and aggregates verdicts
into a CampaignResult that serializes to JSON.  Cells are independent, so a
campaign may fan residues out across worker processes; results are merged in
residue order, making output identical for every worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .helberg import (
    HelbergParams,
    WeightSequence,
    cardinality_lower_bound,
    cardinality_upper_bound,
    helberg_census,
    helberg_classes,
    helberg_code,
    moment,
    reduction_code,
    torsion_code,
    weight_sequence,
)
from .maps import SymbolMap, naisargik_map
from .spheres import CorrectionReport, check_deletion_correcting
from .vt import BinaryVtParams, QaryVtParams, binary_vt_code, qary_vt_classes, qary_vt_code
from .words import DEFAULT_MAX_ENUM, Word, format_word


@dataclass(frozen=True)
class CampaignCell:
    """One grid cell: a label, a verdict, and JSON-ready detail."""

    label: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CampaignResult:
    campaign: str
    params: dict
    passed: bool
    cells: tuple[CampaignCell, ...]
    summary: dict

    def first_failure(self) -> CampaignCell | None:
        for cell in self.cells:
            if not cell.passed:
                return cell
        return None

    def to_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "params": self.params,
            "passed": self.passed,
            "summary": self.summary,
            "cells": [
                {"label": c.label, "passed": c.passed, **c.detail}
                for c in self.cells
            ],
        }


def _witness_detail(report: CorrectionReport) -> dict:
    if report.ok or report.witness is None:
        return {}
    x, y, shared = report.witness
    return {
        "witness": {
            "x": format_word(x),
            "y": format_word(y),
            "shared": format_word(shared),
        }
    }


def _as_codebook(source, limit: int) -> frozenset[Word]:
    """Accept a parameter object or any iterable of words."""
    if isinstance(source, HelbergParams):
        return helberg_code(source, limit)
    if isinstance(source, QaryVtParams):
        return qary_vt_code(source, limit)
    return frozenset(source)


def image_code(
    source, smap: SymbolMap, limit: int = DEFAULT_MAX_ENUM
) -> frozenset[Word]:
    """Forward map of a codebook (given as params or words); size is preserved."""
    code = _as_codebook(source, limit)
    out = frozenset(smap.apply(w) for w in code)
    assert len(out) == len(code)
    return out


def inverse_image_code(
    source, smap: SymbolMap, limit: int = DEFAULT_MAX_ENUM
) -> frozenset[Word]:
    """Inverse map of an even-length binary codebook (params or words)."""
    code = _as_codebook(source, limit)
    out = frozenset(smap.invert(w) for w in code)
    assert len(out) == len(code)
    return out


def image_residue(x: Word, smap: SymbolMap, binary_weights: WeightSequence) -> int:
    """Moment residue of the mapped word under a binary weight sequence."""
    return moment(smap.apply(x), binary_weights) % binary_weights.modulus


def _correction_cell(args: tuple) -> CampaignCell:
    label, codewords, check_s = args
    report = check_deletion_correcting(codewords, check_s)
    return CampaignCell(
        label=label,
        passed=report.ok,
        detail={"codewords": len(codewords), **_witness_detail(report)},
    )


def _run_cells(
    inputs: Sequence[tuple], fn: Callable[[tuple], CampaignCell], workers: int = 1
) -> list[CampaignCell]:
    if workers <= 1 or len(inputs) < 2:
        return [fn(item) for item in inputs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, inputs, chunksize=max(1, len(inputs) // (4 * workers))))


def _max_summary(classes: dict[int, tuple[Word, ...]]) -> dict:
    sizes = {a: len(ws) for a, ws in classes.items()}
    top = max(sizes.values(), default=0)
    return {
        "max_codewords": top,
        "max_residues": sorted(a for a, c in sizes.items() if c == top),
    }


def verify_image_correction(
    n: int,
    s: int,
    smap: SymbolMap | None = None,
    limit: int = DEFAULT_MAX_ENUM,
    workers: int = 1,
) -> CampaignResult:
    """Mapped quaternary Helberg codebooks correct one extra deletion.

    For every residue a in Z_m the image of H(n, 4, s, a) is checked at
    s + 1 deletions.  Classes of size <= 1 pass vacuously and are tallied in
    the summary instead of producing cells.
    """
    smap = smap or naisargik_map("phi9")
    m, classes = helberg_classes(n, 4, s, limit)
    inputs = [
        (f"a={a}", sorted(smap.apply(w) for w in ws), s + 1)
        for a, ws in classes.items()
        if len(ws) >= 2
    ]
    cells = _run_cells(inputs, _correction_cell, workers)
    summary = {
        "modulus": m,
        "residues": m,
        "trivial_residues": m - len(inputs),
        **_max_summary(classes),
    }
    return CampaignResult(
        campaign="image-correction",
        params={"n": n, "q": 4, "s": s, "check_s": s + 1, "map": smap.name},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary=summary,
    )


def verify_inverse_correction(
    n_bits: int,
    s: int,
    smap: SymbolMap | None = None,
    limit: int = DEFAULT_MAX_ENUM,
    workers: int = 1,
) -> CampaignResult:
    """Inverse images of binary Helberg codebooks correct floor(s/2) deletions.

    ``n_bits`` must be even so every codeword has a quaternary preimage.
    """
    if n_bits % 2:
        raise ValueError("binary length must be even to invert the map")
    smap = smap or naisargik_map("phi9")
    check_s = s // 2
    m, classes = helberg_classes(n_bits, 2, s, limit)
    inputs = [
        (f"a={a}", sorted(smap.invert(w) for w in ws), check_s)
        for a, ws in classes.items()
        if len(ws) >= 2
    ]
    cells = _run_cells(inputs, _correction_cell, workers)
    summary = {
        "modulus": m,
        "residues": m,
        "trivial_residues": m - len(inputs),
        **_max_summary(classes),
    }
    return CampaignResult(
        campaign="inverse-correction",
        params={"n": n_bits, "q": 2, "s": s, "check_s": check_s, "map": smap.name},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary=summary,
    )


def verify_residue_bijection(
    n: int, limit: int = DEFAULT_MAX_ENUM
) -> CampaignResult:
    """Maximum single-deletion quaternary classes map onto one binary class.

    For each residue a of maximum cardinality in H(n, 4, 1, .), all phi9
    images must share a single residue a' of H(2n, 2, 2, .), be a subset of
    that class, and (stronger, reported separately) equal it.
    """
    smap = naisargik_map("phi9")
    _, classes4 = helberg_classes(n, 4, 1, limit)
    top = max(len(ws) for ws in classes4.values())
    w2 = weight_sequence(2 * n, 2, 2)
    _, classes2 = helberg_classes(2 * n, 2, 2, limit)
    cells = []
    mapping: list[tuple[int, int]] = []
    all_equal = True
    for a, ws in classes4.items():
        if len(ws) != top:
            continue
        images = {smap.apply(w) for w in ws}
        residues = {moment(img, w2) % w2.modulus for img in images}
        consistent = len(residues) == 1
        a_prime = min(residues)
        binary_class = set(classes2.get(a_prime, ()))
        subset = consistent and images <= binary_class
        equal = consistent and images == binary_class
        all_equal = all_equal and equal
        mapping.append((a, a_prime))
        cells.append(
            CampaignCell(
                label=f"a={a}",
                passed=consistent and subset,
                detail={
                    "image_residue": a_prime,
                    "consistent": consistent,
                    "subset": subset,
                    "set_equal": equal,
                    "codewords": len(ws),
                },
            )
        )
    summary = {
        "max_codewords": top,
        "mapping": mapping,
        "all_classes_equal": all_equal,
    }
    return CampaignResult(
        campaign="residue-bijection",
        params={"n": n, "map": smap.name},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary=summary,
    )


@dataclass(frozen=True)
class CardinalityRow:
    """One comparison row: bounds vs the two recomputed maximum codebook sizes."""

    n: int
    lower: Fraction
    upper: Fraction
    max_binary: int
    max_image: int


def cardinality_comparison(
    n_values: Iterable[int], limit: int = DEFAULT_MAX_ENUM
) -> tuple[CardinalityRow, ...]:
    """Bounds L_n(4,1)/U_n(4,1) beside max |H(2n,2,2,.)| and max |phi9(H(n,4,1,.))|."""
    rows = []
    for n in n_values:
        max_binary = helberg_census(2 * n, 2, 2, limit).max_count()
        max_image = helberg_census(n, 4, 1, limit).max_count()
        rows.append(
            CardinalityRow(
                n=n,
                lower=cardinality_lower_bound(n, 4, 1),
                upper=cardinality_upper_bound(n, 4, 1),
                max_binary=max_binary,
                max_image=max_image,
            )
        )
    return tuple(rows)


def reduction_analysis(
    n: int,
    q: int,
    s: int,
    check_s: int | None = None,
    limit: int = DEFAULT_MAX_ENUM,
) -> CampaignResult:
    """Per-residue sphere disjointness of componentwise mod-2 reductions.

    The expected outcome is mixed: some residues reduce to a deletion-
    correcting binary code and some do not, so the summary records both
    counts.  ``check_s`` defaults to the codebook's own s.
    """
    check = s if check_s is None else check_s
    m, classes = helberg_classes(n, q, s, limit)
    cells = []
    for a, ws in classes.items():
        red = reduction_code(frozenset(ws))
        report = check_deletion_correcting(red, check)
        cells.append(
            CampaignCell(
                label=f"a={a}",
                passed=report.ok,
                detail={
                    "codewords": len(ws),
                    "reduced": len(red),
                    **_witness_detail(report),
                },
            )
        )
    passing = sum(1 for c in cells if c.passed)
    summary = {
        "modulus": m,
        "check_s": check,
        "passing_residues": passing,
        "failing_residues": len(cells) - passing,
        "mixed": 0 < passing < len(cells),
    }
    return CampaignResult(
        campaign="reduction",
        params={"n": n, "q": q, "s": s, "check_s": check},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary=summary,
    )


def torsion_analysis(
    n: int, q: int, s: int, limit: int = DEFAULT_MAX_ENUM
) -> CampaignResult:
    """Torsion codes of every residue class; nontrivial ones fail their cell.

    A cell passes when the torsion code has at most one word, confirming
    that no residue carries a nontrivial torsion code.
    """
    m, classes = helberg_classes(n, q, s, limit)
    cells = []
    for a, ws in classes.items():
        tor = torsion_code(frozenset(ws))
        cells.append(
            CampaignCell(
                label=f"a={a}",
                passed=len(tor) <= 1,
                detail={
                    "codewords": len(ws),
                    "torsion_size": len(tor),
                    "torsion": sorted(format_word(w) for w in tor),
                },
            )
        )
    sizes = sorted({c.detail["torsion_size"] for c in cells})
    summary = {"modulus": m, "torsion_sizes_seen": sizes}
    return CampaignResult(
        campaign="torsion",
        params={"n": n, "q": q, "s": s},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary=summary,
    )


def verify_vt_correction(
    n: int, q: int = 2, limit: int = DEFAULT_MAX_ENUM, workers: int = 1
) -> CampaignResult:
    """Every VT residue class (binary or q-ary) corrects a single deletion."""
    if q == 2:
        inputs = [
            (f"a={a}", sorted(binary_vt_code(BinaryVtParams(n, a), limit)), 1)
            for a in range(n + 1)
        ]
    else:
        inputs = [
            (f"a={a},b={b}", list(ws), 1)
            for (a, b), ws in qary_vt_classes(n, q, limit).items()
        ]
    cells = _run_cells(inputs, _correction_cell, workers)
    return CampaignResult(
        campaign="vt-correction",
        params={"n": n, "q": q, "s": 1},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary={"classes": len(inputs)},
    )


def verify_helberg_self(
    n: int, q: int, s: int, limit: int = DEFAULT_MAX_ENUM, workers: int = 1
) -> CampaignResult:
    """Every Helberg codebook corrects its own deletion budget s."""
    m, classes = helberg_classes(n, q, s, limit)
    inputs = [
        (f"a={a}", list(ws), s) for a, ws in classes.items() if len(ws) >= 2
    ]
    cells = _run_cells(inputs, _correction_cell, workers)
    return CampaignResult(
        campaign="helberg-self",
        params={"n": n, "q": q, "s": s},
        passed=all(c.passed for c in cells),
        cells=tuple(cells),
        summary={"modulus": m, "trivial_residues": m - len(inputs)},
    )
