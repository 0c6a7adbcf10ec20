"""Non-crossing arc diagrams with capacities: the combinatorial model.

A diagram lives on the marked points 0, z_1, ..., z_n on a line, with chords
drawn in the upper half plane.  Each chord carries one marked point, so a
diagram with l chords models a degree-l object.  The defining conditions are:

* chords do not cross (shared endpoints and parallel copies are fine, so the
  chord collection is a multiset);
* each z_p is an endpoint of at most lam_p chords; the origin is unbounded;
* if z_p is unsaturated (fewer than lam_p chords end there), no chord may
  pass over it.

A diagram's index is the tuple a with a_i = number of chords joining z_i to
any point on its left (the origin counts as a left endpoint; every chord's
right endpoint is some z_i, which is what makes the indices sum to l).  On
diagrams satisfying the conditions above this is a bijection onto the tuples
a with a_i <= lam_i and sum(a) = l, and the inverse has a fast recursive
form: strip the arc with the rightmost right endpoint, recurse, and re-attach
it in the unique admissible way.

Cabling refines every capacity into units: a diagram on sum(lam)
unit-capacity points collapses blockwise onto the lam-capacity points, dying
if any chord joins two points of the same block.

Only the chord multiset is identity: embeddings differing by nesting order of
parallel arcs are the same diagram, and marked points are never labeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class InvalidDiagramError(ValueError):
    """The chord multiset violates one of the diagram conditions."""


class NotInPError(ValueError):
    """The requested index tuple is outside the admissible set."""


class WeightMismatchError(ValueError):
    """Invariant filtering needs capacities summing to twice the arc count."""


class ValidationReport(NamedTuple):
    ok: bool
    reason: str | None


@dataclass(frozen=True)
class ArcDiagram:
    """Chords as a sorted tuple of (left, right) pairs on points 0..n."""
    n: int
    capacities: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "capacities", tuple(self.capacities))
        object.__setattr__(self, "chords",
                           tuple(sorted(tuple(c) for c in self.chords)))

    @property
    def arcs(self) -> int:
        return len(self.chords)

    def degree(self, p: int) -> int:
        return sum((i == p) + (j == p) for i, j in self.chords)

    def to_json_dict(self) -> dict:
        return {"points": self.n, "capacities": list(self.capacities),
                "chords": [list(c) for c in self.chords]}

    def __repr__(self):
        return f"ArcDiagram(caps={self.capacities}, chords={list(self.chords)})"


def _crossing(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    (i, j), (k, l) = sorted((c1, c2))
    return i < k < j < l


def validate_diagram(d: ArcDiagram) -> ValidationReport:
    """Check every condition and report the first violation."""
    if len(d.capacities) != d.n:
        return ValidationReport(False, "capacity list does not match n")
    for i, j in d.chords:
        if not (0 <= i < j <= d.n):
            return ValidationReport(False, f"bad chord endpoints ({i}, {j})")
    for p in range(1, d.n + 1):
        if d.degree(p) > d.capacities[p - 1]:
            return ValidationReport(
                False, f"point z{p} exceeds its capacity {d.capacities[p - 1]}")
    chords = d.chords
    for a in range(len(chords)):
        for b in range(a + 1, len(chords)):
            if _crossing(chords[a], chords[b]):
                return ValidationReport(
                    False, f"chords {chords[a]} and {chords[b]} cross")
    for p in range(1, d.n + 1):
        if d.degree(p) < d.capacities[p - 1]:
            for i, j in chords:
                if i < p < j:
                    return ValidationReport(
                        False,
                        f"chord ({i}, {j}) passes over unsaturated z{p}")
    return ValidationReport(True, None)


def _require_valid(d: ArcDiagram) -> None:
    report = validate_diagram(d)
    if not report.ok:
        raise InvalidDiagramError(report.reason)


def enumerate_B(lam: Sequence[int], l: int) -> list[ArcDiagram]:
    """All valid diagrams with l chords, in deterministic (sorted) order.

    Recursive multiset choice over the chord alphabet with early capacity and
    crossing pruning; the pass-over condition depends on final degrees and is
    checked on complete candidates.
    """
    lam = tuple(lam)
    n = len(lam)
    alphabet = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    out = []
    degrees = [0] * (n + 1)

    def chord_cap(c):
        i, j = c
        cap = lam[j - 1] - degrees[j]
        if i >= 1:
            cap = min(cap, lam[i - 1] - degrees[i])
        return cap

    def rec(pos: int, remaining: int, chosen: list):
        if remaining == 0:
            d = ArcDiagram(n, lam, tuple(chosen))
            if validate_diagram(d).ok:
                out.append(d)
            return
        if pos == len(alphabet):
            return
        c = alphabet[pos]
        crosses = any(_crossing(c, other) for other in chosen)
        top = 0 if crosses else min(remaining, chord_cap(c))
        rec(pos + 1, remaining, chosen)
        for mult in range(1, top + 1):
            chosen.extend([c] * mult)
            degrees[c[0]] += mult
            degrees[c[1]] += mult
            rec(pos + 1, remaining - mult, chosen)
            degrees[c[0]] -= mult
            degrees[c[1]] -= mult
            del chosen[len(chosen) - mult:]

    rec(0, l, [])
    return sorted(out, key=lambda d: d.chords)


def index_of_diagram(d: ArcDiagram) -> tuple[int, ...]:
    """a_i = number of chords joining z_i to a point on its left."""
    _require_valid(d)
    a = [0] * d.n
    for _, j in d.chords:
        a[j - 1] += 1
    return tuple(a)


def diagram_of_index(lam: Sequence[int], a: Sequence[int],
                     method: str = "greedy") -> ArcDiagram:
    """The unique valid diagram with the given index tuple.

    ``greedy`` rebuilds the diagram arc by arc (strip/re-attach recursion);
    ``filter`` scans the full enumeration and is kept as the brute-force
    reference the greedy construction is tested against.
    """
    lam = tuple(lam)
    a = tuple(a)
    if len(a) != len(lam) or any(x < 0 or x > c for x, c in zip(a, lam)):
        raise NotInPError(f"{a} is not an admissible index for {lam}")
    l = sum(a)
    if method == "filter":
        matches = [d for d in enumerate_B(lam, l) if index_of_diagram(d) == a]
        if len(matches) != 1:
            raise NotInPError(f"index {a} matched {len(matches)} diagrams")
        return matches[0]
    if method != "greedy":
        raise ValueError(f"unknown method {method!r}")
    if l == 0:
        return ArcDiagram(len(lam), lam, ())
    i = max(p for p in range(1, len(lam) + 1) if a[p - 1] > 0)
    sub = diagram_of_index(lam, a[:i - 1] + (a[i - 1] - 1,) + a[i:], "greedy")
    candidates = []
    for p in range(i):
        cand = ArcDiagram(len(lam), lam, sub.chords + ((p, i),))
        if validate_diagram(cand).ok:
            candidates.append(cand)
    if len(candidates) != 1:
        raise InvalidDiagramError(
            f"re-attaching an arc at z{i} admitted {len(candidates)} "
            f"extensions; the index correspondence is broken")
    return candidates[0]


def filter_singular(diagrams: Iterable[ArcDiagram]) -> list[ArcDiagram]:
    """Diagrams with no chord incident to the origin."""
    return [d for d in diagrams if all(i != 0 for i, _ in d.chords)]


def filter_invariant(diagrams: Iterable[ArcDiagram]) -> list[ArcDiagram]:
    """Diagrams with every point saturated; needs sum(lam) = 2l.

    Saturation forces every endpoint onto the z-points, so these are exactly
    the singular diagrams of a weight-zero slice: non-crossing perfect
    matchings with multiplicities.
    """
    out = []
    for d in diagrams:
        if sum(d.capacities) != 2 * d.arcs:
            raise WeightMismatchError(
                f"need sum(capacities) = 2*arcs, got {sum(d.capacities)} "
                f"vs {2 * d.arcs}")
        if all(d.degree(p) == d.capacities[p - 1] for p in range(1, d.n + 1)):
            out.append(d)
    return out


def _blocks(lam: Sequence[int]) -> list[int]:
    """Point p in 1..sum(lam) -> 1-based block number; index 0 is the origin."""
    blocks = [0]
    for b, size in enumerate(lam, start=1):
        blocks.extend([b] * size)
    return blocks


def cable_diagram(d: ArcDiagram, lam: Sequence[int]) -> ArcDiagram | None:
    """Collapse a unit-capacity diagram blockwise; None if a chord dies.

    A chord joining two points of the same block has no image; otherwise
    chords map through the block projection (origin to origin) and the result
    is a valid diagram on the collapsed points.
    """
    lam = tuple(lam)
    if any(c != 1 for c in d.capacities):
        raise InvalidDiagramError("cabling input must have unit capacities")
    if d.n != sum(lam):
        raise InvalidDiagramError(
            f"diagram on {d.n} points cannot collapse to blocks of {lam}")
    _require_valid(d)
    blocks = _blocks(lam)
    mapped = []
    for i, j in d.chords:
        bi, bj = blocks[i], blocks[j]
        if i >= 1 and bi == bj:
            return None
        mapped.append((bi, bj))
    out = ArcDiagram(len(lam), lam, tuple(mapped))
    _require_valid(out)
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _sorted_instances(d: ArcDiagram) -> list[tuple[int, int, int]]:
    """Chord instances (i, j, copy); copies of a chord are numbered from 0."""
    seen: dict[tuple[int, int], int] = {}
    out = []
    for c in d.chords:
        k = seen.get(c, 0)
        seen[c] = k + 1
        out.append((c[0], c[1], k))
    return out


def _labels(n: int) -> list[str]:
    return ["0"] + [f"z{p}" for p in range(1, n + 1)]


def render_ascii(d: ArcDiagram) -> str:
    """Label line, then one row per chord: widest span first, dot at apex."""
    _require_valid(d)
    width = 5
    cols = [width * p for p in range(d.n + 1)]
    header = ""
    for p, lab in enumerate(_labels(d.n)):
        header = header.ljust(cols[p]) + lab
    rows = [header]
    order = sorted(_sorted_instances(d),
                   key=lambda t: (-(t[1] - t[0]), t[0], t[1], t[2]))
    for i, j, _ in order:
        left, right = cols[i], cols[j]
        mid = (left + right) // 2
        row = [" "] * (right + 1)
        row[left] = row[right] = "+"
        for x in range(left + 1, right):
            row[x] = "-"
        row[mid] = "*"
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def _svg_panel(d: ArcDiagram) -> tuple[int, int, list[str]]:
    step, margin = 60, 40
    base_y = 30 + 16 * (max((j - i) for i, j in d.chords) if d.chords else 1) \
        + 10 * max((d.chords.count(c) for c in d.chords), default=1)
    width = 2 * margin + step * d.n
    height = base_y + 30
    x = [margin + step * p for p in range(d.n + 1)]
    parts = [
        f'<line x1="{x[0] - 20}" y1="{base_y}" x2="{x[-1] + 20}" '
        f'y2="{base_y}" stroke="#888" stroke-width="1"/>',
    ]
    for p, lab in enumerate(_labels(d.n)):
        parts.append(f'<circle cx="{x[p]}" cy="{base_y}" r="3" fill="#000"/>')
        parts.append(f'<text x="{x[p]}" y="{base_y + 18}" font-size="12" '
                     f'text-anchor="middle">{lab}</text>')
    for i, j, copy in _sorted_instances(d):
        rx = (x[j] - x[i]) / 2
        ry = 14 * (j - i) + 9 * copy
        apex_x = (x[i] + x[j]) / 2
        apex_y = base_y - ry
        parts.append(
            f'<path d="M {x[i]} {base_y} A {rx} {ry} 0 0 1 {x[j]} {base_y}" '
            f'fill="none" stroke="#000" stroke-width="1.5"/>')
        parts.append(
            f'<circle cx="{apex_x}" cy="{apex_y}" r="3" fill="#c00"/>')
    return width, height, parts


def render_svg(d: ArcDiagram) -> str:
    """A standalone SVG: baseline points, elliptical arcs, one dot per arc."""
    _require_valid(d)
    width, height, parts = _svg_panel(d)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">')
    return "\n".join([head] + parts + ["</svg>"]) + "\n"


def render_svg_many(diagrams: Sequence[ArcDiagram]) -> str:
    """Stack several diagrams vertically inside one SVG document."""
    panels = []
    for d in diagrams:
        _require_valid(d)
        panels.append(_svg_panel(d))
    width = max((w for w, _, _ in panels), default=120)
    total = sum(h for _, h, _ in panels) or 40
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width}" height="{total}" viewBox="0 0 {width} {total}">']
    y = 0
    for _, h, parts in panels:
        out.append(f'<g transform="translate(0,{y})">')
        out.extend(parts)
        out.append("</g>")
        y += h
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(d: ArcDiagram, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(d)
    if format == "svg":
        return render_svg(d)
    raise ValueError(f"unknown render format {format!r}")
