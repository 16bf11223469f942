"""Exact state enumeration for the six-vertex/8VSOS lattice with a reflecting end.

Geometry conventions for half-size ``n``:

* ``2n`` horizontal lattice rows, indexed ``r = 0 .. 2n-1`` from the bottom.
  Rows ``2i`` and ``2i+1`` are the lower and upper branch of the ``i``-th
  horizontal double line; the branches join at turn ``i`` on the left wall.
* ``n`` vertical lattice columns, indexed ``c = 0 .. n-1`` from the left.
* ``right[r][s]`` for ``s = 0 .. n`` holds the horizontal edge arrows of row
  ``r`` (``True`` = points right).  Segment ``0`` adjoins the turn, segment
  ``n`` is the outgoing right-boundary edge.
* ``up[c][t]`` for ``t = 0 .. 2n`` holds the vertical edge arrows of column
  ``c`` (``True`` = points up).  ``t = 0`` is the bottom boundary edge.
* ``turn_positive[i]`` is ``True`` when the flow enters turn ``i`` on the
  lower branch and leaves on the upper one (a "positive" turn).

Fixed boundary: bottom vertical edges point up, top vertical edges point
down, all right-boundary horizontal edges point right.

Faces form a ``(2n+1) x (n+1)`` grid, rows indexed bottom-up, columns
left-to-right (column 0 touches the wall, column n the right boundary).
Looking along any arrow, the face on the right is one lower than the face on
the left; the upper-left face is pinned to height 0.  This forces every wall
face to height 0 and the face inside a turn to -1 (positive turn) or +1
(negative turn).  Heights mod 3 give a proper three-coloring; a positive
turn face has color 2, a negative one color 1.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Optional


class LatticeError(Exception):
    """Violation of the lattice model's structural rules."""


class IceRuleError(LatticeError):
    """A vertex does not have exactly two inward and two outward arrows."""


class InconsistentHeightsError(LatticeError):
    """Two propagation paths assign different heights to the same face."""


class LeftArrowError(LatticeError):
    """The next-to-last column does not carry exactly one left arrow."""


VERTEX_KINDS = ("a+", "a-", "b+", "b-", "c+", "c-")
TURN_KINDS = ("k+", "k-")

# Vertex classification by the arrow pattern (W_right, E_right, S_up, N_up).
# Upper rows are read in the standard orientation; lower rows are read a
# quarter turn clockwise because the flow on the lower branch runs leftward.
_UPPER_KIND = {
    (True, True, True, True): "a+",
    (False, False, False, False): "a-",
    (True, True, False, False): "b+",
    (False, False, True, True): "b-",
    (True, False, False, True): "c+",
    (False, True, True, False): "c-",
}
_LOWER_KIND = {
    (False, False, True, True): "a+",
    (True, True, False, False): "a-",
    (True, True, True, True): "b+",
    (False, False, False, False): "b-",
    (False, True, True, False): "c+",
    (True, False, False, True): "c-",
}


@dataclass(frozen=True)
class LatticeState:
    """Arrow assignment on every edge and turn of the 2n x n lattice."""

    n: int
    right: tuple[tuple[bool, ...], ...]
    up: tuple[tuple[bool, ...], ...]
    turn_positive: tuple[bool, ...]


@dataclass(frozen=True)
class HeightGrid:
    """Face heights, rows bottom-up, with the upper-left face at 0."""

    n: int
    heights: tuple[tuple[int, ...], ...]

    def colors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(h % 3 for h in row) for row in self.heights)

    def color_counts(self) -> tuple[int, int, int]:
        tally = Counter(h % 3 for row in self.heights for h in row)
        return (tally[0], tally[1], tally[2])


@dataclass(frozen=True)
class VertexCensus:
    """Counts per vertex/turn kind, plus the rightmost-column breakdown."""

    counts: Mapping[str, int]
    rightmost: Mapping[str, int]


@dataclass(frozen=True)
class StateStats:
    m: int
    l: int
    k0: int
    k1: int
    k2: int
    census: VertexCensus


CountKey = tuple[Optional[int], Optional[int], int, int, int]


def classify_vertex(upper: bool, w_right: bool, e_right: bool,
                    s_up: bool, n_up: bool) -> str:
    table = _UPPER_KIND if upper else _LOWER_KIND
    try:
        return table[(w_right, e_right, s_up, n_up)]
    except KeyError:
        raise IceRuleError(
            f"arrow pattern {(w_right, e_right, s_up, n_up)} breaks the ice rule"
        ) from None


def vertex_kinds(state: LatticeState) -> tuple[tuple[str, ...], ...]:
    """Kind of every vertex, indexed [row][column]."""
    n = state.n
    grid = []
    for r in range(2 * n):
        upper = r % 2 == 1
        row = tuple(
            classify_vertex(upper, state.right[r][c], state.right[r][c + 1],
                            state.up[c][r], state.up[c][r + 1])
            for c in range(n)
        )
        grid.append(row)
    return tuple(grid)


# Completions (N_up, E_right) for a vertex whose W and S edges are known,
# keyed by how many of N, E must still point inward.  Order is fixed so the
# enumeration is deterministic.
_COMPLETIONS = {
    0: ((True, True),),
    1: ((True, False), (False, True)),
    2: ((False, False),),
}


def _states_for_turns(n: int, turns: tuple[bool, ...]) -> Iterator[LatticeState]:
    rows = 2 * n
    right = [[False] * (n + 1) for _ in range(rows)]
    up = [[False] * (rows + 1) for _ in range(n)]
    for c in range(n):
        up[c][0] = True
        up[c][rows] = False
    for i, pos in enumerate(turns):
        # Positive turn: lower branch arrow points left (into the turn),
        # upper branch arrow points right (out of it).  Negative: reversed.
        right[2 * i][0] = not pos
        right[2 * i + 1][0] = pos

    def walk(c: int, r: int) -> Iterator[LatticeState]:
        if r == rows:
            if c + 1 == n:
                yield LatticeState(
                    n,
                    tuple(tuple(row) for row in right),
                    tuple(tuple(col) for col in up),
                    turns,
                )
            else:
                yield from walk(c + 1, 0)
            return
        inward = int(right[r][c]) + int(up[c][r])
        for n_up, e_right in _COMPLETIONS[2 - inward]:
            if r == rows - 1 and n_up:
                continue  # top boundary edge must point down
            if c == n - 1 and not e_right:
                continue  # right boundary edge must point right
            up[c][r + 1] = n_up
            right[r][c + 1] = e_right
            yield from walk(c, r + 1)

    yield from walk(0, 0)


def enumerate_states(n: int) -> Iterator[LatticeState]:
    """Yield every admissible state exactly once, in a fixed order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield LatticeState(0, (), (), ())
        return
    for turns in product((False, True), repeat=n):
        yield from _states_for_turns(n, turns)


def heights(state: LatticeState) -> HeightGrid:
    """Propagate face heights from the upper-left face and verify consistency.

    Every edge and turn contributes one difference constraint; the grid is
    accepted only if all of them hold, so any ice-rule or turn bookkeeping
    bug surfaces here as :class:`InconsistentHeightsError`.
    """
    n = state.n
    rows = 2 * n
    if n == 0:
        return HeightGrid(0, ((0,),))

    constraints: list[tuple[tuple[int, int], tuple[int, int], int]] = []
    for r in range(rows):
        for s in range(n + 1):
            delta = 1 if state.right[r][s] else -1
            constraints.append(((r, s), (r + 1, s), delta))
    for c in range(n):
        for t in range(rows + 1):
            delta = -1 if state.up[c][t] else 1
            constraints.append(((t, c), (t, c + 1), delta))
    for i, pos in enumerate(state.turn_positive):
        delta = -1 if pos else 1
        constraints.append(((2 * i, 0), (2 * i + 1, 0), delta))
        constraints.append(((2 * i + 2, 0), (2 * i + 1, 0), delta))

    adj: dict[tuple[int, int], list[tuple[tuple[int, int], int]]] = {}
    for a, b, d in constraints:
        adj.setdefault(a, []).append((b, d))
        adj.setdefault(b, []).append((a, -d))

    grid: dict[tuple[int, int], int] = {(rows, 0): 0}
    queue = deque([(rows, 0)])
    while queue:
        face = queue.popleft()
        for other, d in adj[face]:
            value = grid[face] + d
            if other not in grid:
                grid[other] = value
                queue.append(other)
            elif grid[other] != value:
                raise InconsistentHeightsError(
                    f"face {other} reachable with heights {grid[other]} and {value}"
                )
    return HeightGrid(
        n, tuple(tuple(grid[(fr, fc)] for fc in range(n + 1)) for fr in range(rows + 1))
    )


def vertex_census(state: LatticeState) -> VertexCensus:
    kinds = vertex_kinds(state)
    counts = {k: 0 for k in VERTEX_KINDS + TURN_KINDS}
    rightmost = {k: 0 for k in VERTEX_KINDS}
    for row in kinds:
        for kind in row:
            counts[kind] += 1
    n = state.n
    for r in range(2 * n):
        rightmost[kinds[r][n - 1]] += 1
    for pos in state.turn_positive:
        counts["k+" if pos else "k-"] += 1
    return VertexCensus(counts, rightmost)


def left_arrow_row(state: LatticeState) -> int:
    """Row (1-based from below) of the unique left arrow at segment n-1."""
    n = state.n
    hits = [r for r in range(2 * n) if not state.right[r][n - 1]]
    if len(hits) != 1:
        raise LeftArrowError(
            f"expected one left arrow at segment {n - 1}, found rows {hits}"
        )
    return hits[0] + 1


def stats(state: LatticeState) -> StateStats:
    if state.n == 0:
        raise ValueError("stats are undefined for the empty n=0 lattice")
    k0, k1, k2 = heights(state).color_counts()
    return StateStats(
        m=sum(state.turn_positive),
        l=left_arrow_row(state),
        k0=k0,
        k1=k1,
        k2=k2,
        census=vertex_census(state),
    )


@dataclass
class CountTable:
    """Aggregated state counts keyed by (m, l, k0, k1, k2)."""

    n: int
    counts: dict[CountKey, int]

    def total(self) -> int:
        return sum(self.counts.values())

    @staticmethod
    def _sort_key(key: CountKey):
        m, l, k0, k1, k2 = key
        return (-1 if m is None else m, -1 if l is None else l, k0, k1, k2)

    def records(self) -> list[dict]:
        out = []
        for key in sorted(self.counts, key=self._sort_key):
            m, l, k0, k1, k2 = key
            out.append({"m": m, "l": l, "k0": k0, "k1": k1, "k2": k2,
                        "count": self.counts[key]})
        return out

    def to_json(self) -> str:
        return json.dumps(self.records())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["m", "l", "k0", "k1", "k2", "count"])
        for rec in self.records():
            writer.writerow([
                "" if rec["m"] is None else rec["m"],
                "" if rec["l"] is None else rec["l"],
                rec["k0"], rec["k1"], rec["k2"], rec["count"],
            ])
        return buf.getvalue()

    def color_marginal(self, color: int) -> dict[tuple[int, int], dict[int, int]]:
        """Counts N_{m,l}(k) for one color, as {(m, l): {k: count}}."""
        if color not in (0, 1, 2):
            raise ValueError("color must be 0, 1 or 2")
        marg: dict[tuple[int, int], dict[int, int]] = {}
        for (m, l, k0, k1, k2), cnt in self.counts.items():
            if m is None or l is None:
                continue
            k = (k0, k1, k2)[color]
            bucket = marg.setdefault((m, l), {})
            bucket[k] = bucket.get(k, 0) + cnt
        return marg


def _count_for_turns(task: tuple[int, tuple[bool, ...]]) -> Counter:
    n, turns = task
    tally: Counter = Counter()
    for state in _states_for_turns(n, turns):
        s = stats(state)
        tally[(s.m, s.l, s.k0, s.k1, s.k2)] += 1
    return tally


def count_table(n: int, workers: int = 1) -> CountTable:
    """Aggregate stats over all states; partitionable by turn configuration."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return CountTable(0, {(None, None, 1, 0, 0): 1})
    tasks = [(n, turns) for turns in product((False, True), repeat=n)]
    total: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for tally in pool.map(_count_for_turns, tasks):
                total.update(tally)
    else:
        for task in tasks:
            total.update(_count_for_turns(task))
    return CountTable(n, dict(total))


def render_state(state: LatticeState, grid: HeightGrid | None = None) -> str:
    """ASCII dump: arrows interleaved with the face height grid."""
    n = state.n
    if n == 0:
        return "  0\n"
    if grid is None:
        grid = heights(state)
    lines = []
    for fr in range(2 * n, -1, -1):
        cells = []
        for fc in range(n + 1):
            cells.append(f"{grid.heights[fr][fc]:>3}")
            if fc < n:
                cells.append("^" if state.up[fc][fr] else "v")
        lines.append("   " + " ".join(cells))
        if fr > 0:
            r = fr - 1
            mark = ")" if r % 2 == 0 else "("  # lower / upper branch of a pair
            arrows = "---".join(">" if a else "<" for a in state.right[r])
            lines.append(f" {mark} {arrows}")
    return "\n".join(lines) + "\n"
