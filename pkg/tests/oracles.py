"""Straight-line reference implementations of the coretraction and the homotopy.

The recursions are unrolled by hand for dimensions 0..3, term by term, using
only raw face/degeneracy table lookups and group multiplication.  Nothing here
shares helper code with the production implementations; these functions exist
solely to cross-check them.
"""

from __future__ import annotations


def _d(G, level, k, x):
    return G.faces[level][k].image[x]


def _s(G, level, k, x):
    return G.degeneracies[level][k].image[x]


def coretraction_oracle(G, n, w_entries):
    """Image entries (descending order) of a classifying n-simplex, n <= 3.

    ``w_entries`` is the descending tuple (g_{n-1}, ..., g_0).
    """
    if n == 0:
        return ()
    grp = G.levels[n]
    mul = grp.mult
    inv = grp.inverse
    if n == 1:
        (g0,) = w_entries
        return (_s(G, 0, 0, g0),)
    if n == 2:
        g1, g0 = w_entries
        y1 = _s(G, 1, 1, g1)
        t1 = _s(G, 1, 0, _d(G, 2, 1, inv[y1]))
        t2 = _s(G, 1, 1, _s(G, 0, 0, _d(G, 1, 1, g1)))
        t3 = _s(G, 1, 1, _s(G, 0, 0, g0))
        y0 = mul[mul[t1][t2]][t3]
        return (y1, y0)
    if n == 3:
        g2, g1, g0 = w_entries
        y2 = _s(G, 2, 2, g2)
        # y1 = (y2^-1 d2 s1)(g2 d2 s1 s2)(g1 s1 s2)
        a1 = _s(G, 2, 1, _d(G, 3, 2, inv[y2]))
        a2 = _s(G, 2, 2, _s(G, 1, 1, _d(G, 2, 2, g2)))
        a3 = _s(G, 2, 2, _s(G, 1, 1, g1))
        y1 = mul[mul[a1][a2]][a3]
        # y0 = (y1^-1 d1 s0)(y2^-1 d2 d1 s0 s1)(g2 d2 d1 s0 s1 s2)(g1 d1 s0 s1 s2)(g0 s0 s1 s2)
        b1 = _s(G, 2, 0, _d(G, 3, 1, inv[y1]))
        b2 = _s(G, 2, 1, _s(G, 1, 0, _d(G, 2, 1, _d(G, 3, 2, inv[y2]))))
        b3 = _s(G, 2, 2, _s(G, 1, 1, _s(G, 0, 0, _d(G, 1, 1, _d(G, 2, 2, g2)))))
        b4 = _s(G, 2, 2, _s(G, 1, 1, _s(G, 0, 0, _d(G, 1, 1, g1))))
        b5 = _s(G, 2, 2, _s(G, 1, 1, _s(G, 0, 0, g0)))
        y0 = mul[mul[mul[mul[b1][b2]][b3]][b4]][b5]
        return (y2, y1, y0)
    raise ValueError(f"oracle only unrolls n <= 3, got {n}")


def homotopy_oracle(G, n, x_entries, tau_index):
    """Image entries (descending order) of the homotopy at one prism coordinate, n <= 3.

    ``x_entries`` is the descending tuple of a diagonal n-simplex; ``tau_index``
    identifies the prism coordinate, with n + 1 - tau_index entries recomputed.
    """
    if n > 3:
        raise ValueError(f"oracle only unrolls n <= 3, got {n}")
    k = n + 1 - tau_index
    if k <= 1 or n == 0:
        return tuple(x_entries)
    grp = G.levels[n]
    mul = grp.mult
    inv = grp.inverse
    if n == 1:
        # k == 2: y0 = g0 d1 s0
        (g0,) = x_entries
        return (_s(G, 0, 0, _d(G, 1, 1, g0)),)
    if n == 2:
        g1, g0 = x_entries
        if k == 2:
            return (g1, _s(G, 1, 0, _d(G, 2, 1, g0)))
        # k == 3: y1 = g1 d2 s1; y0 = (y1^-1 d1 s0)(g1 d2 d1 s0 s1)(g0 d2 d1 s0 s1)
        y1 = _s(G, 1, 1, _d(G, 2, 2, g1))
        t1 = _s(G, 1, 0, _d(G, 2, 1, inv[y1]))

        def fixed2(g):
            return _s(G, 1, 1, _s(G, 0, 0, _d(G, 1, 1, _d(G, 2, 2, g))))

        y0 = mul[mul[t1][fixed2(g1)]][fixed2(g0)]
        return (y1, y0)
    g2, g1, g0 = x_entries
    if k == 2:
        return (g2, g1, _s(G, 2, 0, _d(G, 3, 1, g0)))
    if k == 3:
        # y2 = g2; y1 = g1 d2 s1; y0 = (y1^-1 d1 s0)(g1 d2 d1 s0 s1)(g0 d2 d1 s0 s1)
        y1 = _s(G, 2, 1, _d(G, 3, 2, g1))
        t1 = _s(G, 2, 0, _d(G, 3, 1, inv[y1]))

        def fixed3(g):
            return _s(G, 2, 1, _s(G, 1, 0, _d(G, 2, 1, _d(G, 3, 2, g))))

        y0 = mul[mul[t1][fixed3(g1)]][fixed3(g0)]
        return (g2, y1, y0)
    # k == 4: y2 = g2 d3 s2;
    # y1 = (y2^-1 d2 s1)(g2 d3 d2 s1 s2)(g1 d3 d2 s1 s2);
    # y0 = (y1^-1 d1 s0)(y2^-1 d2 d1 s0 s1)
    #      (g2 d3 d2 d1 s0 s1 s2)(g1 d3 d2 d1 s0 s1 s2)(g0 d3 d2 d1 s0 s1 s2)
    y2 = _s(G, 2, 2, _d(G, 3, 3, g2))
    a1 = _s(G, 2, 1, _d(G, 3, 2, inv[y2]))

    def mid(g):
        return _s(G, 2, 2, _s(G, 1, 1, _d(G, 2, 2, _d(G, 3, 3, g))))

    y1 = mul[mul[a1][mid(g2)]][mid(g1)]
    b1 = _s(G, 2, 0, _d(G, 3, 1, inv[y1]))
    b2 = _s(G, 2, 1, _s(G, 1, 0, _d(G, 2, 1, _d(G, 3, 2, inv[y2]))))

    def low(g):
        return _s(
            G, 2, 2, _s(G, 1, 1, _s(G, 0, 0, _d(G, 1, 1, _d(G, 2, 2, _d(G, 3, 3, g)))))
        )

    y0 = mul[mul[mul[mul[b1][b2]][low(g2)]][low(g1)]][low(g0)]
    return (y2, y1, y0)
