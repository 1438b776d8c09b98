"""Robinson-Schensted correspondence for the hyperoctahedral group B_n.

The window of g in B_n splits into its uncolored and colored subwords.  Row
insertion of the absolute values of each subword (recording the window
positions) produces a pair of bitableaux ((P0, P1), (Q0, Q1)) of matching
shapes: P0/Q0 from the uncolored letters, P1/Q1 from the colored ones.  The
transpose map rebuilds an element from ((P0, P1'), (Q0, Q1')); it preserves
the colored positions and swaps descent data between the two orders on
colored integers.

Tableaux are tuples of row tuples, rows and columns strictly increasing.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .groups import ColoredPermutation, ProjectiveElement, canonicalize
from .stats import ScopeError

Tableau = tuple[tuple[int, ...], ...]


class ShapeMismatchError(ValueError):
    """The pieces of a bitableau pair do not fit together."""


def _insert(rows: list[list[int]], positions: list[list[int]], value: int, pos: int):
    """Schensted row insertion of value, recording pos at the new cell."""
    x = value
    for i, row in enumerate(rows):
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            positions[i].append(pos)
            return
        row[j], x = x, row[j]
    rows.append([x])
    positions.append([pos])


def _freeze(rows: list[list[int]]) -> Tableau:
    return tuple(tuple(row) for row in rows)


def shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


def content(t: Tableau) -> set[int]:
    return {x for row in t for x in row}


def transpose(t: Tableau) -> Tableau:
    if not t:
        return ()
    return tuple(
        tuple(row[j] for row in t if j < len(row)) for j in range(len(t[0]))
    )


def is_standard(t: Tableau) -> bool:
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if len(lower) > len(upper):
            return False
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def tableau_descents(t: Tableau) -> set[int]:
    """{i : i and i+1 both in t, with i strictly above i+1}."""
    row_of = {x: i for i, row in enumerate(t) for x in row}
    return {i for i in row_of if i + 1 in row_of and row_of[i] < row_of[i + 1]}


def _require_bn(g: ProjectiveElement):
    group = g.group
    if group.r != 2 or group.p != 1 or group.s != 1:
        raise ScopeError(f"Robinson-Schensted here is for B_n only, not {group}")


def rs_correspondence(g: ProjectiveElement) -> tuple[tuple[Tableau, Tableau], tuple[Tableau, Tableau]]:
    """((P0, P1), (Q0, Q1)): insertion/recording pair per color subword."""
    _require_bn(g)
    p0, q0, p1, q1 = [], [], [], []
    for i, (v, c) in enumerate(zip(g.sigma, g.colors), start=1):
        if c == 0:
            _insert(p0, q0, v, i)
        else:
            _insert(p1, q1, v, i)
    return (_freeze(p0), _freeze(p1)), (_freeze(q0), _freeze(q1))


def _reverse_insertions(p: Tableau, q: Tableau) -> list[tuple[int, int]]:
    """Undo insertions; (position, value) pairs, in insertion order."""
    rows = [list(row) for row in p]
    labels = [list(row) for row in q]
    cells = sorted(
        ((labels[i][j], i) for i, row in enumerate(labels) for j in range(len(row))),
        reverse=True,
    )
    out = []
    for label, row_idx in cells:
        x = rows[row_idx].pop()
        labels[row_idx].pop()
        for i in range(row_idx - 1, -1, -1):
            row = rows[i]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        out.append((label, x))
    out.reverse()
    return out


def rs_inverse(
    bitableaux: tuple[tuple[Tableau, Tableau], tuple[Tableau, Tableau]],
    n: int,
    group,
) -> ProjectiveElement:
    """The element of B_n mapping to the given bitableau pair."""
    (p0, p1), (q0, q1) = bitableaux
    for p, q, name in ((p0, q0, "0"), (p1, q1, "1")):
        if shape(p) != shape(q):
            raise ShapeMismatchError(
                f"shape(P{name})={shape(p)} differs from shape(Q{name})={shape(q)}"
            )
        if not (is_standard(p) and is_standard(q)):
            raise ShapeMismatchError(f"pair {name} is not a pair of standard tableaux")
    if content(q0) | content(q1) != set(range(1, n + 1)) or content(q0) & content(q1):
        raise ShapeMismatchError("recording tableaux do not partition the positions")
    if content(p0) | content(p1) != set(range(1, n + 1)) or content(p0) & content(p1):
        raise ShapeMismatchError("insertion tableaux do not partition the values")
    window = [None] * n
    for pos, value in _reverse_insertions(p0, q0):
        window[pos - 1] = (value, 0)
    for pos, value in _reverse_insertions(p1, q1):
        window[pos - 1] = (value, 1)
    sigma = tuple(v for v, _ in window)
    colors = tuple(c for _, c in window)
    return canonicalize(ColoredPermutation(sigma, colors), group)


def rs_transpose_map(g: ProjectiveElement) -> ProjectiveElement:
    """g -> the element with bitableaux ((P0, P1'), (Q0, Q1'))."""
    (p0, p1), (q0, q1) = rs_correspondence(g)
    return rs_inverse(
        ((p0, transpose(p1)), (q0, transpose(q1))), g.group.n, g.group
    )
