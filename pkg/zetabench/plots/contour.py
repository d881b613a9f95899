"""
Marching-squares extraction of the curves Re zeta = 0 and Im zeta = 0

Crossings live on lattice edges, keyed ('h', i, j) for the edge from (i, j) to
(i + 1, j) and ('v', i, j) for the edge from (i, j) to (i, j + 1). Each cell
contributes 0, 1 or 2 segments between its crossing edges; segments are then
chained through shared edges. A sample equal to zero counts as positive.
"""

from typing import Dict, List, Tuple

import numpy as np

from zetabench.records import GridField, Polyline, KIND_RE_ZERO, KIND_IM_ZERO

EdgeKey = Tuple[str, int, int]


def _crossing(field: GridField, values: np.ndarray, key: EdgeKey) -> Tuple[float, float]:
    direction, i, j = key
    v0 = values[j, i]
    if direction == 'h':
        v1 = values[j, i + 1]
        frac = v0 / (v0 - v1)
        return field.x_at(i + frac), field.y_at(j)
    v1 = values[j + 1, i]
    frac = v0 / (v0 - v1)
    return field.x_at(i), field.y_at(j + frac)


def _cell_segments(positive: np.ndarray, values: np.ndarray, i: int, j: int) -> List[Tuple[EdgeKey, EdgeKey]]:
    bl, br = positive[j, i], positive[j, i + 1]
    tl, tr = positive[j + 1, i], positive[j + 1, i + 1]
    bottom, right = ('h', i, j), ('v', i + 1, j)
    top, left = ('h', i, j + 1), ('v', i, j)

    crossed = [edge for edge, (a, b) in (
        (bottom, (bl, br)), (right, (br, tr)), (top, (tl, tr)), (left, (bl, tl))
    ) if a != b]
    if len(crossed) == 2:
        return [(crossed[0], crossed[1])]
    if len(crossed) == 4:
        # saddle: the cell center decides which diagonal pair is joined
        center = 0.25 * (values[j, i] + values[j, i + 1] + values[j + 1, i] + values[j + 1, i + 1])
        if (center >= 0) == bl:
            return [(bottom, right), (top, left)]
        return [(left, bottom), (right, top)]
    return []


def _chain(segments: List[Tuple[EdgeKey, EdgeKey]]) -> List[List[EdgeKey]]:
    neighbours: Dict[EdgeKey, List[EdgeKey]] = {}
    for a, b in segments:
        neighbours.setdefault(a, []).append(b)
        neighbours.setdefault(b, []).append(a)

    visited = set()
    chains = []

    def walk(start: EdgeKey) -> List[EdgeKey]:
        chain = [start]
        visited.add(start)
        current = start
        while True:
            nxt = [n for n in neighbours[current] if n not in visited]
            if not nxt:
                break
            current = min(nxt)
            visited.add(current)
            chain.append(current)
        return chain

    # open chains start at their ends, then closed loops
    for key in sorted(k for k, v in neighbours.items() if len(v) == 1):
        if key not in visited:
            chains.append(walk(key))
    for key in sorted(neighbours):
        if key not in visited:
            chain = walk(key)
            chain.append(chain[0])
            chains.append(chain)
    return chains


def extract_zero_curves(field: GridField) -> List[Polyline]:
    """
    Polylines along Re zeta = 0 followed by those along Im zeta = 0
    :param field:
    :return:
    """
    masked = field.mask.reshape(field.ny, field.nx)
    polylines = []
    for kind in (KIND_RE_ZERO, KIND_IM_ZERO):
        values = field.values(kind)
        positive = values >= 0
        segments = []
        for j in range(field.ny - 1):
            for i in range(field.nx - 1):
                if masked[j:j + 2, i:i + 2].any():
                    continue
                segments.extend(_cell_segments(positive, values, i, j))
        for chain in _chain(segments):
            points = [_crossing(field, values, key) for key in chain]
            polylines.append(Polyline(kind, points))
    return polylines


def _segment_intersection(p1, p2, q1, q2):
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        return None
    rx, ry = q1[0] - p1[0], q1[1] - p1[1]
    u = (rx * d2[1] - ry * d2[0]) / denom
    v = (rx * d1[1] - ry * d1[0]) / denom
    if 0.0 <= u <= 1.0 and 0.0 <= v <= 1.0:
        return p1[0] + u * d1[0], p1[1] + u * d1[1]
    return None


def approximate_zeros(curves: List[Polyline]) -> List[Tuple[float, float]]:
    """
    Crossings of re_zero with im_zero polylines, sorted, each within a cell of a zero of zeta
    :param curves:
    :return:
    """
    re_lines = [c for c in curves if c.kind == KIND_RE_ZERO]
    im_lines = [c for c in curves if c.kind == KIND_IM_ZERO]
    found = set()
    for re_line in re_lines:
        for im_line in im_lines:
            for a in range(len(re_line.points) - 1):
                for b in range(len(im_line.points) - 1):
                    hit = _segment_intersection(re_line.points[a], re_line.points[a + 1],
                                                im_line.points[b], im_line.points[b + 1])
                    if hit is not None:
                        found.add((round(hit[0], 12), round(hit[1], 12)))
    return sorted(found)
