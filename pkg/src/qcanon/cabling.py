"""Weight cabling: reduce arbitrary capacities to the unit-capacity case.

Refine each highest weight lam_i into lam_i copies of 1.  On modules this is
the embedding M_lam -> M_1^(x lam) sending the top vector to the pure tensor
of top vectors; on dual coordinates it transposes to a collapse map from the
unit-weight dual slice onto the lam-weight dual slice.  On diagrams it is the
blockwise projection of `cable_diagram`.

`cabling_report` runs both sides over every unit-weight dual canonical
element and insists they tell the same story: an element dies under the
algebraic collapse exactly when its diagram has an intra-block chord, and a
surviving element lands on the dual canonical element indexed by the
collapsed diagram, up to a scalar.  The expected scalar is 1; any other value
would signal a normalization subtlety, so scalars are recorded in the report
rather than assumed (a non-monomial-unit scalar is flagged).  A kill-pattern
or target-index disagreement is a hard failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .canonical import dual_canonical_basis
from .diagrams import cable_diagram, diagram_of_index, index_of_diagram
from .qring import ONE, QScalar, exact_div, quantum_factorial
from .tensor import coproduct_matrix, enumerate_P, weight_space
from .weightmod import GEN_F, make_verma_truncated


class ZeroBlockError(ValueError):
    """Cabling blocks must have positive size."""


class StructuralMismatchError(AssertionError):
    """The algebraic collapse disagrees with the diagram collapse."""


def block_map(lam: Sequence[int]) -> tuple[int, ...]:
    """Point p in 1..sum(lam) -> 1-based block index, in consecutive blocks."""
    out = []
    for b, size in enumerate(lam, start=1):
        if size <= 0:
            raise ZeroBlockError(f"block {b} has size {size}")
        out.extend([b] * size)
    return tuple(out)


@dataclass(frozen=True)
class UnitEmbedding:
    """M_lam -> M_1^(x lam) on levels 0..level, one column per level.

    Column m holds the coordinates of the image of F^(m) applied to the top
    vector, i.e. the divided coproduct power applied to the pure top tensor.
    """
    factor_weight: int
    level: int
    columns: tuple[np.ndarray, ...]

    def target_space(self, m: int):
        unit = make_verma_truncated(1, self.level)
        return weight_space((unit,) * self.factor_weight, m)


def verma_unit_embedding(factor_weight: int, level: int) -> UnitEmbedding:
    if factor_weight < 1:
        raise ZeroBlockError(f"factor weight must be >= 1, got {factor_weight}")
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    unit = make_verma_truncated(1, level)
    factors = (unit,) * factor_weight
    vec = weight_space(factors, 0).unit_vector((0,) * factor_weight)
    columns = []
    for m in range(level + 1):
        col = np.array([exact_div(x, quantum_factorial(m)) for x in vec],
                       dtype=object)
        columns.append(col)
        if m < level:
            vec = linalg.matmul(coproduct_matrix(factors, m, GEN_F), vec)
    return UnitEmbedding(factor_weight, level, tuple(columns))


@dataclass(frozen=True)
class DualCablingMatrix:
    """The transposed embedding between dual weight slices at one level.

    Rows run over all nonnegative index tuples of the target summing to the
    level (the ambient truncated-Verma slice, so leaks outside the simple
    range are visible); columns run over the unit-capacity index tuples.
    """
    lam: tuple[int, ...]
    level: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]
    matrix: np.ndarray


def dual_cabling_matrix(lam: Sequence[int], level: int) -> DualCablingMatrix:
    lam = tuple(lam)
    blocks = block_map(lam)  # validates positivity
    total = sum(lam)
    if total < level:
        raise ValueError(f"level {level} exceeds the unit point count {total}")
    rows = tuple(enumerate_P((level,) * len(lam), level))
    cols = tuple(enumerate_P((1,) * total, level))
    embeddings = [verma_unit_embedding(x, level) for x in lam]
    spaces = [[emb.target_space(m) for m in range(level + 1)]
              for emb in embeddings]
    out = linalg.zeros(len(rows), len(cols))
    starts = [0]
    for x in lam:
        starts.append(starts[-1] + x)
    for r, a in enumerate(rows):
        for c, mt in enumerate(cols):
            val = ONE
            for i, ai in enumerate(a):
                block = mt[starts[i]:starts[i + 1]]
                if sum(block) != ai:
                    val = None
                    break
                val = val * embeddings[i].columns[ai][spaces[i][ai].pos[block]]
                if not val:
                    val = None
                    break
            if val is not None:
                out[r, c] = val
    return DualCablingMatrix(lam, level, rows, cols, out)


def is_monomial_unit(s: QScalar) -> bool:
    return s.is_monomial() and next(iter(s._terms.values())) in (1, -1)


@dataclass(frozen=True)
class CablingOutcome:
    source: tuple[int, ...]
    killed: bool
    target: tuple[int, ...] | None = None
    scalar: QScalar | None = None

    def to_json_dict(self) -> dict:
        if self.killed:
            return {"source": list(self.source), "killed": True}
        return {"source": list(self.source), "killed": False,
                "target": list(self.target),
                "scalar": self.scalar.to_pairs()}


@dataclass(frozen=True)
class CablingReport:
    lam: tuple[int, ...]
    level: int
    outcomes: tuple[CablingOutcome, ...]
    all_unit_scalars: bool
    all_scalars_one: bool

    def scalars(self) -> list[QScalar]:
        return [o.scalar for o in self.outcomes if not o.killed]

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "level": self.level,
            "outcomes": [o.to_json_dict() for o in self.outcomes],
            "all_unit_scalars": self.all_unit_scalars,
            "all_scalars_one": self.all_scalars_one,
        }


def cabling_report(lam: Sequence[int], level: int) -> CablingReport:
    """Collapse every unit-weight dual canonical element and compare with the
    diagram collapse; raises StructuralMismatchError on any disagreement."""
    lam = tuple(lam)
    unit = (1,) * sum(lam)
    source = dual_canonical_basis(unit, level)
    target = dual_canonical_basis(lam, level)
    dcm = dual_cabling_matrix(lam, level)
    row_pos = {a: r for r, a in enumerate(dcm.rows)}
    target_padded = {}
    for b in target:
        vec = linalg.zeros(len(dcm.rows))
        for k, c in zip(b.space.indices, b.coords):
            if c:
                vec[row_pos[k]] = c
        target_padded[b.index] = vec
    outcomes = []
    for b in source:
        x = linalg.matmul(dcm.matrix, b.coords)
        diagram = diagram_of_index(unit, b.index)
        collapsed = cable_diagram(diagram, lam)
        if collapsed is None:
            if not linalg.is_zero(x):
                raise StructuralMismatchError(
                    f"diagram of {b.index} dies under cabling but the "
                    f"algebraic image is nonzero on {lam} at level {level}")
            outcomes.append(CablingOutcome(b.index, killed=True))
            continue
        a = index_of_diagram(collapsed)
        s = x[row_pos[a]]
        if not s:
            raise StructuralMismatchError(
                f"diagram of {b.index} survives cabling but the algebraic "
                f"image misses its target {a} on {lam} at level {level}")
        expected = linalg.mat_scale(target_padded[a], s)
        if not linalg.mat_eq(x, expected):
            raise StructuralMismatchError(
                f"image of {b.index} is not proportional to the dual "
                f"canonical element {a} on {lam} at level {level}")
        outcomes.append(CablingOutcome(b.index, killed=False, target=a,
                                       scalar=s))
    mapped = [o for o in outcomes if not o.killed]
    return CablingReport(
        lam, level, tuple(outcomes),
        all_unit_scalars=all(is_monomial_unit(o.scalar) for o in mapped),
        all_scalars_one=all(o.scalar == ONE for o in mapped))
