"""Static index bookkeeping for the six internal edges.

Flat positions 0-5 correspond to the edge pairs
{1,2}, {1,3}, {1,4}, {3,4}, {2,4}, {2,3}; positions (0,3), (1,4), (2,5)
hold opposite-edge pairs. Every six-fold symmetric formula consumes these
tables rather than spelling indices inline.
"""

EDGE_PAIRS = ((1, 2), (1, 3), (1, 4), (3, 4), (2, 4), (2, 3))

#: position of the edge joining vertices i and j
POSITION = {frozenset(pair): pos for pos, pair in enumerate(EDGE_PAIRS)}

#: position of the edge opposite (vertex-disjoint from) each position
OPPOSITE = (3, 4, 5, 0, 1, 2)

#: for each vertex 1-4, the positions of the three edges emanating from it
VERTEX_EDGES = (
    (0, 1, 2),  # vertex 1: {1,2}, {1,3}, {1,4}
    (0, 4, 5),  # vertex 2: {1,2}, {2,4}, {2,3}
    (1, 3, 5),  # vertex 3: {1,3}, {3,4}, {2,3}
    (2, 3, 4),  # vertex 4: {1,4}, {3,4}, {2,4}
)

#: for each vertex, the positions of the three edges of the opposite face
OPPOSITE_FACE_EDGES = tuple(
    tuple(OPPOSITE[p] for p in edges) for edges in VERTEX_EDGES
)


def edge_position(i, j):
    return POSITION[frozenset((i, j))]
