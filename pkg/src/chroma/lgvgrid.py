"""The planar grid of a semiorder, weighted paths, and multipath sums.

Grid vertices are (column, row) with rows 1..n+1.  Every vertex of row
r <= n has a vertical edge to (column, r+1) of weight 1 and a diagonal edge
to (column+1, next(r)) of weight v_r, where next is the threshold vector of
the semiorder.  Rows strictly increase along any path, so the grid is
acyclic, and nondecreasing thresholds keep the straight-line drawing free
of crossings.

A path records the rows where it takes diagonal steps; those rows form a
chain of the semiorder, so the sum of path weights between (i, 1) and
(i+j, n+1) is exactly the stable-set polynomial of size j of the
incomparability graph.  Base vertices sit on row 1, destinations on row
n+1, placed by a partition; the determinant of the path-sum matrix then
collapses onto non-intersecting multipaths (which planarity forces to
connect base i to destination i), giving the Schur analogue of the
conjugate partition as a manifestly monomial-positive sum.
"""

from itertools import permutations

from .combinat import conjugate, is_partition
from .errors import BadShape, NonIdentityPermutation, TooLarge
from .ghom import GAnalogueContext, schur_g
from .polyring import Polynomial, det, monomial_from_elements

DEFAULT_MULTIPATH_BUDGET = 2_000_000


class GridSpec:
    """The grid of a semiorder with base/destination rows for one partition."""

    __slots__ = ("uio", "k", "lam", "bases", "dests", "columns")

    def __init__(self, uio, k, lam, bases, dests, columns):
        self.uio = uio
        self.k = k
        self.lam = lam
        self.bases = bases
        self.dests = dests
        self.columns = columns

    def __repr__(self):
        return "GridSpec(uio=%s, k=%d, lam=%r)" % (self.uio, self.k, self.lam)


def build_grid(u, k, lam):
    """Bases a_i = (k+1-i, 1) and destinations b_i = (k+1-i+lam_i, n+1),
    lam padded with zeros to length k; columns span 1..k+lam_1."""
    lam = tuple(lam)
    if len(lam) > k:
        raise BadShape("partition longer than the requested path count")
    if any(p < 0 for p in lam) or any(
        lam[i] < lam[i + 1] for i in range(len(lam) - 1)
    ):
        raise BadShape("parts must be weakly decreasing and nonnegative")
    padded = lam + (0,) * (k - len(lam))
    n = u.n
    bases = tuple((k + 1 - i, 1) for i in range(1, k + 1))
    dests = tuple((k + 1 - i + padded[i - 1], n + 1) for i in range(1, k + 1))
    columns = k + (padded[0] if padded else 0)
    return GridSpec(u, k, padded, bases, dests, columns)


class GridPath:
    """A directed grid path stored as its full vertex sequence."""

    __slots__ = ("vertices", "diag_rows", "vertex_set")

    def __init__(self, vertices, diag_rows):
        self.vertices = tuple(vertices)
        self.diag_rows = tuple(diag_rows)
        self.vertex_set = frozenset(self.vertices)

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    def weight_monomial(self):
        return monomial_from_elements(self.diag_rows)

    def weight(self, n):
        return Polynomial.monomial(self.weight_monomial(), 1, n)

    def __eq__(self, other):
        return isinstance(other, GridPath) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "GridPath(%r)" % (list(self.vertices),)


def grid_path_from_vertices(vertices):
    """Rebuild a GridPath from an explicit vertex sequence; diagonal steps
    are the column increments and contribute their source row."""
    vertices = tuple(tuple(v) for v in vertices)
    rows = tuple(
        r1 for (c1, r1), (c2, _) in zip(vertices, vertices[1:]) if c2 == c1 + 1
    )
    return GridPath(vertices, rows)


def _vertical_run(col, row_from, row_to):
    return [(col, r) for r in range(row_from, row_to + 1)]


def paths_between(u, a, b):
    """All grid paths from a to b, each as an explicit vertex sequence.

    A path is determined by its diagonal rows r_1 < r_2 < ... with
    next(r_m) <= r_{m+1}; vertical runs fill the gaps.
    """
    nxt = u.next
    n = u.n
    (ca, ra), (cb, rb) = a, b
    out = []
    if cb < ca or rb < ra or rb > n + 1:
        return out

    def rec(col, row, vertices, diag_rows):
        if col == cb:
            if row <= rb:
                out.append(
                    GridPath(vertices + _vertical_run(col, row, rb), diag_rows)
                )
            return
        # choose the next diagonal row; it must leave room to reach row rb
        for rd in range(row, min(n, rb) + 1):
            target = nxt[rd - 1]
            if target > rb:
                break  # later rd only grows the target (thresholds nondecreasing)
            rec(
                col + 1,
                target,
                vertices + _vertical_run(col, row, rd),
                diag_rows + [rd],
            )

    rec(ca, ra, [], [])
    return out


def path_sum(u, a, b):
    """Exact sum of path weights from a to b (the matrix entries below)."""
    total = Polynomial.zero(u.n)
    for p in paths_between(u, a, b):
        total = total + p.weight(u.n)
    return total


class Multipath:
    """A tuple of paths, path i from base i to destination sigma(i)."""

    __slots__ = ("paths", "sigma", "sign")

    def __init__(self, paths, sigma):
        self.paths = tuple(paths)
        self.sigma = tuple(sigma)  # 1-based destination index per path
        inv = 0
        for i in range(len(sigma)):
            for j in range(i + 1, len(sigma)):
                if sigma[i] > sigma[j]:
                    inv += 1
        self.sign = -1 if inv & 1 else 1

    @property
    def k(self):
        return len(self.paths)

    def is_nonintersecting(self):
        for i in range(self.k):
            si = self.paths[i].vertex_set
            for j in range(i + 1, self.k):
                if si & self.paths[j].vertex_set:
                    return False
        return True

    def intersection_vertices(self):
        """Vertices shared by at least two paths."""
        seen = set()
        shared = set()
        for p in self.paths:
            dup = seen & p.vertex_set
            shared |= dup
            seen |= p.vertex_set
        return shared

    def multiplier(self):
        """Index of the base whose path reaches destination 1."""
        return self.sigma.index(1) + 1

    def weight_vector(self):
        return tuple(p.weight_monomial() for p in self.paths)

    def weight_product(self, n):
        elements = []
        for p in self.paths:
            elements.extend(p.diag_rows)
        return Polynomial.monomial(monomial_from_elements(elements), 1, n)

    def key(self):
        return (self.sigma, tuple(p.vertices for p in self.paths))

    def __eq__(self, other):
        return isinstance(other, Multipath) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Multipath(sigma=%r)" % (list(self.sigma),)

    def to_json(self):
        return {
            "paths": [[list(v) for v in p.vertices] for p in self.paths],
            "sigma": list(self.sigma),
        }


def enumerate_multipaths(g, budget=DEFAULT_MULTIPATH_BUDGET):
    """All multipaths of a grid, over all destination permutations.

    Deterministic order: permutations lexicographically, then the path
    choices per base in enumeration order.  Guarded by a global budget.
    """
    u = g.uio
    k = g.k
    path_table = {}
    for i in range(k):
        for j in range(k):
            path_table[(i, j)] = paths_between(u, g.bases[i], g.dests[j])
    total = 0
    feasible = []
    for perm in permutations(range(k)):
        count = 1
        for i, j in enumerate(perm):
            count *= len(path_table[(i, j)])
            if not count:
                break
        if count:
            feasible.append(perm)
            total += count
    if total > budget:
        raise TooLarge("%d multipaths exceed the budget of %d" % (total, budget))
    out = []
    for perm in feasible:
        choices = [path_table[(i, j)] for i, j in enumerate(perm)]
        sigma = tuple(j + 1 for j in perm)
        stack = [[]]
        for options in choices:
            stack = [partial + [p] for partial in stack for p in options]
        out.extend(Multipath(chosen, sigma) for chosen in stack)
    return out


def path_sum_matrix(g):
    return [
        [path_sum(g.uio, g.bases[i], g.dests[j]) for j in range(g.k)]
        for i in range(g.k)
    ]


def lgv_check(g, budget=DEFAULT_MULTIPATH_BUDGET):
    """det(path-sum matrix) equals the signed sum over non-intersecting
    multipaths; exact polynomial identity."""
    matrix = path_sum_matrix(g)
    determinant = det(matrix)
    n = g.uio.n
    total = Polynomial.zero(n)
    for mp in enumerate_multipaths(g, budget):
        if mp.is_nonintersecting():
            total = total + mp.sign * mp.weight_product(n)
    return determinant == total


def nonintersecting_multipaths(g, budget=DEFAULT_MULTIPATH_BUDGET):
    """Only the pairwise-disjoint multipaths, found by assigning paths base
    by base with disjointness pruning (destinations may permute; planarity
    is verified by the caller, not assumed here)."""
    u = g.uio
    k = g.k
    path_table = {}
    for i in range(k):
        for j in range(k):
            path_table[(i, j)] = paths_between(u, g.bases[i], g.dests[j])
    out = []
    nodes = 0

    def rec(i, used_dests, chosen, occupied):
        nonlocal nodes
        if i == k:
            sigma = tuple(j + 1 for j in used_dests)
            out.append(Multipath(chosen, sigma))
            return
        for j in range(k):
            if j in used_dests:
                continue
            for p in path_table[(i, j)]:
                nodes += 1
                if nodes > budget:
                    raise TooLarge("disjoint-family search exceeded its budget")
                if occupied & p.vertex_set:
                    continue
                rec(i + 1, used_dests + [j], chosen + [p], occupied | p.vertex_set)

    rec(0, [], [], frozenset())
    return out


def schur_via_lgv(u, lam, budget=DEFAULT_MULTIPATH_BUDGET):
    """The Schur analogue of conjugate(lam), summed over non-intersecting
    multipaths of the grid built for lam.  Monomial-positive by construction;
    raises NonIdentityPermutation if any disjoint family permutes the
    destinations, since planarity rules that out."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError("not a partition: %r" % (lam,))
    if not lam:
        return Polynomial.one(u.n)
    g = build_grid(u, len(lam), lam)
    total = Polynomial.zero(u.n)
    for mp in nonintersecting_multipaths(g, budget):
        if mp.sigma != tuple(range(1, g.k + 1)):
            raise NonIdentityPermutation(
                "disjoint multipath with sigma=%r" % (list(mp.sigma),)
            )
        total = total + mp.weight_product(u.n)
    return total


def schur_positivity_check(u, lam, ctx=None, budget=DEFAULT_MULTIPATH_BUDGET):
    """Cross-module identity: the grid sum for lam* equals the determinant
    route for lam, and both are monomial-positive."""
    ctx = ctx or GAnalogueContext(u.inc_graph())
    via_det = schur_g(ctx, lam)
    via_grid = schur_via_lgv(u, conjugate(lam), budget)
    return via_det == via_grid and via_det.is_monomial_positive()


def grid_edges(g):
    """All edges of the grid window as ((c1,r1),(c2,r2),weight_row_or_None)."""
    n = g.uio.n
    nxt = g.uio.next
    edges = []
    for c in range(1, g.columns + 1):
        for r in range(1, n + 1):
            edges.append(((c, r), (c, r + 1), None))
            if c + 1 <= g.columns:
                edges.append(((c, r), (c + 1, nxt[r - 1]), r))
    return edges


def grid_is_acyclic_and_planar(g):
    """Structural check: every edge strictly increases the row (acyclic) and
    diagonals leaving one column never invert (no crossings under the
    straight-line embedding, given nondecreasing thresholds)."""
    n = g.uio.n
    nxt = g.uio.next
    for _, _, r in grid_edges(g):
        if r is not None and nxt[r - 1] <= r:
            return False
    for r1 in range(1, n):
        if nxt[r1 - 1] > nxt[r1]:
            return False
    return True
