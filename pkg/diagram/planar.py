"""
Planar data of a connected diagram: faces, checkerboard coloring, the
M-number and the Goeritz form.

Corner (x, s) of crossing x is the region between slot s and slot s + 1
(counterclockwise). The A-corners of a crossing (s = 1 and s = 3) are the
regions the 0-smoothing joins.
"""

import logging
from collections import deque
from typing import Dict, List, Tuple

import numpy as np
import sympy

from models.diagram import AnnularDiagram, GoeritzData, oriented_smoothing
from models.errors import DisconnectedDiagramError, InvariantViolation

from .resolutions import diagram_index, is_connected, trace_components

logger = logging.getLogger(__name__)

Corner = Tuple[int, int]
A_CORNERS = (1, 3)


def _require_connected(d: AnnularDiagram) -> None:
    if not d.crossings:
        raise DisconnectedDiagramError("a crossingless diagram has no planar faces")
    if not is_connected(d):
        raise DisconnectedDiagramError("diagram is split")


def faces(d: AnnularDiagram) -> List[Tuple[Corner, ...]]:
    """
    Faces of the projection as cyclic corner sequences.

    Walking the boundary, the corner after (x, s) is the far endpoint of
    the edge at slot s + 1.
    """
    _require_connected(d)
    index = diagram_index(d)
    seen = set()
    out: List[Tuple[Corner, ...]] = []
    for x in range(d.crossing_count):
        for s in range(4):
            if (x, s) in seen:
                continue
            face = []
            corner = (x, s)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                corner = index.other_end((corner[0], (corner[1] + 1) % 4))
            out.append(tuple(face))
    if len(out) != d.crossing_count + 2:
        raise InvariantViolation("face count does not match a connected planar diagram", witness=len(out))
    return out


def _face_of(face_list: List[Tuple[Corner, ...]]) -> Dict[Corner, int]:
    return {corner: number for number, face in enumerate(face_list) for corner in face}


def checkerboard(d: AnnularDiagram) -> Tuple[List[Tuple[Corner, ...]], List[bool]]:
    """
    Faces and their colors; the faces at the A-corners of the first crossing are white.

    Corners adjacent around a crossing always lie in faces of opposite color.
    """
    face_list = faces(d)
    face_of = _face_of(face_list)
    neighbours: Dict[int, List[Tuple[int, bool]]] = {n: [] for n in range(len(face_list))}
    for x in range(d.crossing_count):
        for s in range(4):
            here, there = face_of[(x, s)], face_of[(x, (s + 1) % 4)]
            neighbours[here].append((there, False))
            neighbours[there].append((here, False))
            opposite = face_of[(x, (s + 2) % 4)]
            neighbours[here].append((opposite, True))

    white: Dict[int, bool] = {face_of[(0, A_CORNERS[0])]: True}
    queue = deque(white)
    while queue:
        face = queue.popleft()
        for other, same in neighbours[face]:
            colour = white[face] if same else not white[face]
            if other not in white:
                white[other] = colour
                queue.append(other)
            elif white[other] != colour:
                raise InvariantViolation("projection is not checkerboard colorable", witness=other)
    return face_list, [white[n] for n in range(len(face_list))]


def axis_face(d: AnnularDiagram, face_list: List[Tuple[Corner, ...]]) -> int:
    """
    The face containing the axis point.

    The marked arc is innermost, so the axis lies on its left when it runs
    counterclockwise (positive ray count) and on its right otherwise.
    """
    index = diagram_index(d)
    arc = d.arc(d.marked_arc)
    if arc.label not in index.tail:
        raise InvariantViolation("marked arc is a crossingless circle", witness=arc.label)
    if arc.winding == 0:
        raise InvariantViolation("marked arc does not meet the reference ray", witness=arc.label)
    x, s = index.tail[arc.label]
    corner = (x, s) if arc.winding > 0 else (x, (s - 1) % 4)
    return _face_of(face_list)[corner]


def checkerboard_and_M(d: AnnularDiagram) -> Tuple[List[bool], int]:
    """
    Face colors and the M-number.

    M is 0 when the ray meets the link an odd number of times; otherwise it
    is +1 if the axis lies in a white face and -1 if it lies in a black one.
    """
    face_list, white = checkerboard(d)
    if d.ray_intersections % 2:
        return white, 0
    return white, 1 if white[axis_face(d, face_list)] else -1


def correction_term(d: AnnularDiagram, white: List[bool], face_list: List[Tuple[Corner, ...]]) -> Tuple[List[int], int]:
    """
    Incidence numbers of every crossing and the correction term mu.

    A crossing has incidence +1 when its black corners are its A-corners.
    It is of type II when the oriented smoothing joins its black corners;
    mu sums the incidence numbers of type II crossings.
    """
    face_of = _face_of(face_list)
    eta: List[int] = []
    mu = 0
    for x, crossing in enumerate(d.crossings):
        a_black = not white[face_of[(x, A_CORNERS[0])]]
        eta.append(1 if a_black else -1)
        joins_a = oriented_smoothing(crossing.sign) == 0
        if joins_a == a_black:
            mu += eta[-1]
    return eta, mu


def goeritz(d: AnnularDiagram) -> GoeritzData:
    """
    Goeritz matrix over the white faces, with signature and determinant.

    Off-diagonal entries are minus the summed incidence numbers of crossings
    joining two distinct white faces; the diagonal makes every row sum
    vanish. Deleting one white face gives a form whose signature minus mu is
    the link signature and whose absolute determinant is the link
    determinant.
    """
    if not d.crossings and len(d.arcs) == 1:
        return GoeritzData(faces=[], white=[], matrix=[[0]], mu=0, signature=0, determinant=1)
    face_list, white = checkerboard(d)
    face_of = _face_of(face_list)
    eta, mu = correction_term(d, white, face_list)
    white_faces = [n for n in range(len(face_list)) if white[n]]
    position = {face: row for row, face in enumerate(white_faces)}
    size = len(white_faces)
    G = np.zeros((size, size), dtype=int)
    for x in range(d.crossing_count):
        corners = A_CORNERS if eta[x] < 0 else (0, 2)
        first, second = (face_of[(x, s)] for s in corners)
        if first != second:
            i, j = position[first], position[second]
            G[i, j] -= eta[x]
            G[j, i] -= eta[x]
    for i in range(size):
        G[i, i] = -(G[i].sum() - G[i, i])

    reduced = G[1:, 1:]
    if reduced.size:
        eigenvalues = np.linalg.eigvalsh(reduced.astype(float))
        form_signature = int(np.sum(eigenvalues > 1e-9) - np.sum(eigenvalues < -1e-9))
        determinant = abs(int(sympy.Matrix(reduced.tolist()).det()))
    else:
        form_signature, determinant = 0, 1
    logger.debug("Goeritz form of size %d, mu=%d", size, mu)
    return GoeritzData(
        faces=face_list,
        white=white,
        matrix=G.tolist(),
        mu=mu,
        signature=form_signature - mu,
        determinant=determinant,
    )


def is_alternating(d: AnnularDiagram) -> bool:
    """True when every component alternates over and under along its length."""
    index = diagram_index(d)
    for steps in trace_components(index, {}):
        passes = []
        for arc, forward in steps:
            x, s = index.head[arc] if forward else index.tail[arc]
            passes.append(s in (0, 2))
        for position, under in enumerate(passes):
            if passes[position - 1] == under:
                return False
    return True
