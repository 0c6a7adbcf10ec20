"""Single-factor weight modules for quantum sl2.

A module here is a finite ordered basis of weight vectors together with exact
matrices for the generators E, F, q^{+-h} and q^{+-h/2}.  Basis slot m stands
for the divided-power vector F^(m) applied to the highest-weight vector (or
its dual functional, for contragredients), so slot m has weight lam - 2m.

Three kinds are supported:

* ``simple``: the (lam+1)-dimensional irreducible with highest weight lam >= 0.
  The ladder action on divided powers is

      E . slot m = [lam - m + 1] slot (m-1)        (slot 0 -> 0)
      F . slot m = [m + 1] slot (m+1)              (slot lam -> 0)
      q^h . slot m = q^(lam - 2m) slot m

  These coefficients follow from commuting E past F^m with
  [E, F] = (q^h - q^-h)/(q - q^-1) and dividing by [m]!; the expansion is
  re-derived symbolically in the test suite and frozen here.

* ``verma``: the same formulas on slots 0..L for any integer highest weight,
  with F truncated past slot L.  Truncation is lossless for computations that
  never push past level L; callers guard that with ``require_level``.

* ``contragredient``: the restricted dual of another module, with the action
  twisted by the antiautomorphism tau (e <-> f, q^h fixed).  On the rewritten
  generators, tau(E) = F q^h and tau(F) = q^-h E, so the matrix of a generator
  g on the dual basis is the transpose of the matrix of tau(g) downstairs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg
from .qring import QScalar, exact_div, quantum_factorial, quantum_int

GEN_E = "E"
GEN_F = "F"
GEN_QH = "qh"
GEN_QH_INV = "qh_inv"
GEN_QHALF = "qh2"
GEN_QHALF_INV = "qh2_inv"

GENERATORS = (GEN_E, GEN_F, GEN_QH, GEN_QH_INV, GEN_QHALF, GEN_QHALF_INV)


class NegativeWeightError(ValueError):
    """Simple modules need a nonnegative integer highest weight."""


class DimensionMismatchError(ValueError):
    """Vector length does not match the module dimension."""


class TruncationTooSmallError(ValueError):
    """A computation needs levels beyond the Verma truncation bound."""


class WeightModule:
    """Immutable single factor with cached generator matrices."""

    __slots__ = ("kind", "highest_weight", "size", "base", "_mats")

    def __init__(self, kind: str, highest_weight: int, size: int,
                 mats: dict, base: "WeightModule | None" = None):
        self.kind = kind
        self.highest_weight = highest_weight
        self.size = size
        self.base = base
        self._mats = mats

    def matrix(self, gen: str) -> np.ndarray:
        return self._mats[gen]

    def weight(self, slot: int) -> int:
        return self.highest_weight - 2 * slot

    @property
    def truncation_level(self) -> int:
        return self.size - 1

    def require_level(self, level: int) -> None:
        if self.kind != "simple" and level > self.truncation_level:
            raise TruncationTooSmallError(
                f"level {level} exceeds truncation {self.truncation_level}")

    def __repr__(self):
        if self.kind == "contragredient":
            return f"({self.base!r})^c"
        tag = "V" if self.kind == "simple" else "M"
        extra = "" if self.kind == "simple" else f";L={self.truncation_level}"
        return f"{tag}({self.highest_weight}{extra})"


def _ladder_matrices(lam: int, size: int) -> dict:
    e = linalg.zeros(size, size)
    f = linalg.zeros(size, size)
    qh = linalg.zeros(size, size)
    qh_inv = linalg.zeros(size, size)
    qh2 = linalg.zeros(size, size)
    qh2_inv = linalg.zeros(size, size)
    for m in range(size):
        w = lam - 2 * m
        qh[m, m] = QScalar.q_power(w)
        qh_inv[m, m] = QScalar.q_power(-w)
        qh2[m, m] = QScalar.v_power(w)
        qh2_inv[m, m] = QScalar.v_power(-w)
        if m >= 1:
            e[m - 1, m] = quantum_int(lam - m + 1) if lam - m + 1 >= 0 \
                else -quantum_int(m - 1 - lam)
        if m + 1 < size:
            f[m + 1, m] = quantum_int(m + 1)
    return {GEN_E: e, GEN_F: f, GEN_QH: qh, GEN_QH_INV: qh_inv,
            GEN_QHALF: qh2, GEN_QHALF_INV: qh2_inv}


@lru_cache(maxsize=None)
def make_simple(lam: int) -> WeightModule:
    if lam < 0:
        raise NegativeWeightError(f"highest weight must be >= 0, got {lam}")
    return WeightModule("simple", lam, lam + 1, _ladder_matrices(lam, lam + 1))


@lru_cache(maxsize=None)
def make_verma_truncated(lam: int, level: int) -> WeightModule:
    if level < 0:
        raise ValueError(f"truncation level must be >= 0, got {level}")
    return WeightModule("verma", lam, level + 1, _ladder_matrices(lam, level + 1))


@lru_cache(maxsize=None)
def contragredient(module: WeightModule) -> WeightModule:
    if module.kind == "contragredient":
        return module.base
    mats = module._mats
    # tau(E) = F q^h, tau(F) = q^-h E, tau fixes the Cartan part; the dual
    # action of g is the transpose of tau(g).
    tau_e = linalg.matmul(mats[GEN_F], mats[GEN_QH])
    tau_f = linalg.matmul(mats[GEN_QH_INV], mats[GEN_E])
    dual = {
        GEN_E: tau_e.T.copy(),
        GEN_F: tau_f.T.copy(),
        GEN_QH: mats[GEN_QH].T.copy(),
        GEN_QH_INV: mats[GEN_QH_INV].T.copy(),
        GEN_QHALF: mats[GEN_QHALF].T.copy(),
        GEN_QHALF_INV: mats[GEN_QHALF_INV].T.copy(),
    }
    return WeightModule("contragredient", module.highest_weight, module.size,
                        dual, base=module)


def apply_generator(module: WeightModule, word: Sequence, vec) -> np.ndarray:
    """Apply a word of generators right-to-left to an exact coordinate vector.

    Word items are either a generator name or a pair ``(name, k)`` meaning the
    divided power E^(k) = E^k/[k]! (likewise for F).
    """
    vec = np.asarray(vec, dtype=object)
    if vec.shape != (module.size,):
        raise DimensionMismatchError(
            f"vector of length {vec.shape} on module of size {module.size}")
    for item in reversed(word):
        if isinstance(item, tuple):
            gen, k = item
            if gen not in (GEN_E, GEN_F) or k < 0:
                raise ValueError(f"bad divided power {item!r}")
            mat = module.matrix(gen)
            for _ in range(k):
                vec = linalg.matmul(mat, vec)
            vec = np.array([exact_div(x, quantum_factorial(k)) for x in vec],
                           dtype=object)
        else:
            vec = linalg.matmul(module.matrix(item), vec)
    return vec


def shapovalov_embed(lam: int, level: int) -> np.ndarray:
    """The map V_lam -> (M_lam)^c fixed by sending the top vector to its dual.

    Column m is F^(m) applied to the top dual functional in the contragredient
    truncated Verma; the matrix has shape (level+1, lam+1).
    """
    if lam < 0:
        raise NegativeWeightError(f"highest weight must be >= 0, got {lam}")
    if level < lam:
        raise TruncationTooSmallError(
            f"need truncation level >= {lam}, got {level}")
    dual = contragredient(make_verma_truncated(lam, level))
    out = linalg.zeros(level + 1, lam + 1)
    vec = linalg.unit_vector(level + 1, 0)
    fmat = dual.matrix(GEN_F)
    for m in range(lam + 1):
        col = np.array([exact_div(x, quantum_factorial(m)) for x in vec],
                       dtype=object)
        out[:, m] = col
        if m < lam:
            vec = linalg.matmul(fmat, vec)
    return out
