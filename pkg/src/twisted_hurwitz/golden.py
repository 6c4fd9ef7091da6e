"""Published reference values checked by ``selfcheck``.

Series use the textual format of ``format_series``.
"""

from __future__ import annotations

# partition -> (zonal polynomial, H(2) * H'(2))
ZONAL = {
    (1,): ("1 * p[1]", 2),
    (1, 1): ("1 * p[1,1] + -1 * p[2]", 12),
    (2,): ("1 * p[1,1] + 2 * p[2]", 24),
    (1, 1, 1): ("1 * p[1,1,1] + -3 * p[2,1] + 2 * p[3]", 144),
    (2, 1): ("1 * p[1,1,1] + 1 * p[2,1] + -2 * p[3]", 80),
    (3,): ("1 * p[1,1,1] + 6 * p[2,1] + 8 * p[3]", 720),
}

# (m, partition) -> twisted Hurwitz number
HURWITZ = {
    (1, (2,)): 2,
    (1, (2, 1)): 2,
    (2, (1, 1)): 4,
    (2, (2,)): 4,
    (2, (1, 1, 1)): 4,
    (2, (2, 1)): 4,
    (2, (3,)): 16,
}

MOEBIUS_WORD = "G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}"
MOEBIUS = {
    "orientable": False,
    "euler_characteristic": 0,
    "boundary_type": (3,),
    "cover_boundary_type": (3, 3),
    "classification": "1 cross-cap, 1 boundary circle",
}
