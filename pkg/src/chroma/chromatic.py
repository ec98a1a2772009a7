"""Chromatic symmetric functions, basis expansions, and sink statistics.

Ground truth is the definition itself: sum x^c over proper colourings,
enumerated with n colours (enough to determine a degree-n symmetric
function).  A stable-partition accelerator computes the same m-expansion
through partitions of the vertex set into independent blocks; the test
suite cross-validates the two routes before anything else relies on the
fast one.
"""

from dataclasses import dataclass

from .combinat import multiplicity_factor, partitions_of
from .errors import TooLarge
from .symfunc import SymFunc, default_cache

BRUTE_FORCE_BOUND = 8


# ---------------------------------------------------------------------------
# the colouring sum


def _proper_coloring_counts(g):
    """Count proper colourings with colours 1..n by colour-usage vector."""
    n = g.n
    adj = g.adj
    counts = {}
    color_mask = [0] * (n + 1)
    usage = [0] * n

    def rec(v):
        if v > n:
            key = tuple(usage)
            counts[key] = counts.get(key, 0) + 1
            return
        av = adj[v]
        bit = 1 << (v - 1)
        for c in range(1, n + 1):
            if color_mask[c] & av:
                continue
            color_mask[c] |= bit
            usage[c - 1] += 1
            rec(v + 1)
            usage[c - 1] -= 1
            color_mask[c] &= ~bit

    rec(1)
    return counts


def chromatic_symmetric_brute(g, bound=BRUTE_FORCE_BOUND):
    """X_g by enumerating all proper colourings; the definitional oracle."""
    n = g.n
    if n > bound:
        raise TooLarge("brute-force colouring is capped at n <= %d" % bound)
    if n == 0:
        return SymFunc("m", {(): 1})
    counts = _proper_coloring_counts(g)
    coeffs = {}
    for lam in partitions_of(n):
        padded = tuple(lam) + (0,) * (n - len(lam))
        c = counts.get(padded, 0)
        if c:
            coeffs[lam] = c
    return SymFunc("m", coeffs)


def _stable_partition_signatures(g):
    """Count partitions of V(g) into independent blocks by block-size type."""
    n = g.n
    adj = g.adj
    out = {}
    block_masks = []
    block_sizes = []

    def rec(v):
        if v > n:
            sig = tuple(sorted(block_sizes, reverse=True))
            out[sig] = out.get(sig, 0) + 1
            return
        bit = 1 << (v - 1)
        av = adj[v]
        for idx in range(len(block_masks)):
            if block_masks[idx] & av:
                continue
            block_masks[idx] |= bit
            block_sizes[idx] += 1
            rec(v + 1)
            block_sizes[idx] -= 1
            block_masks[idx] &= ~bit
        block_masks.append(bit)
        block_sizes.append(1)
        rec(v + 1)
        block_masks.pop()
        block_sizes.pop()

    rec(1)
    return out


def chromatic_symmetric_stable(g):
    """X_g via independent-set partitions: the m-coefficient of lam counts
    stable partitions of type lam, weighted by permutations of equal parts."""
    if g.n == 0:
        return SymFunc("m", {(): 1})
    sigs = _stable_partition_signatures(g)
    return SymFunc(
        "m", {lam: count * multiplicity_factor(lam) for lam, count in sigs.items()}
    )


def chromatic_symmetric(g, method="auto", bound=BRUTE_FORCE_BOUND):
    """X_g as an m-basis SymFunc of degree n.

    method "brute" enumerates colourings (TooLarge past the bound); "stable"
    uses the accelerator; "auto" picks the accelerator.
    """
    if method == "brute":
        return chromatic_symmetric_brute(g, bound)
    if method in ("stable", "auto"):
        return chromatic_symmetric_stable(g)
    raise ValueError("unknown method %r" % (method,))


def e_coefficients(g, cache=None, method="auto"):
    """The integer coefficients of X_g on the e-basis."""
    x = chromatic_symmetric(g, method=method)
    xe = (cache or default_cache).convert(x, "e")
    return xe.as_int_dict()


def s_coefficients(g, cache=None, method="auto"):
    x = chromatic_symmetric(g, method=method)
    xs = (cache or default_cache).convert(x, "s")
    return xs.as_int_dict()


# ---------------------------------------------------------------------------
# acyclic orientations and sinks


def _independent_nonempty_submasks(mask, adj):
    sub = mask
    while sub:
        ok = True
        rest = sub
        while rest:
            low = rest & -rest
            if adj[low.bit_length()] & sub:
                ok = False
                break
            rest ^= low
        if ok:
            yield sub
        sub = (sub - 1) & mask


def acyclic_orientation_sinks(g):
    """Map j -> number of acyclic orientations of g with exactly j sinks.

    Peels the sink set layer by layer: an acyclic orientation with sink set
    S restricts to an acyclic orientation of g - S whose own sinks are all
    adjacent to S (anything else would have been a sink already).
    """
    n = g.n
    adj = g.adj
    full = (1 << n) - 1

    def nbr(mask):
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            out |= adj[low.bit_length()]
            rest ^= low
        return out

    memo = {}

    def count(mask, allowed):
        # acyclic orientations of g[mask] with every sink inside `allowed`
        if mask == 0:
            return 1
        key = (mask, allowed)
        if key in memo:
            return memo[key]
        total = 0
        for s in _independent_nonempty_submasks(mask & allowed, adj):
            rest = mask & ~s
            total += count(rest, nbr(s) & rest)
        memo[key] = total
        return total

    result = {}
    if n == 0:
        return result
    for s in _independent_nonempty_submasks(full, adj):
        rest = full & ~s
        c = count(rest, nbr(s) & rest)
        if c:
            j = bin(s).count("1")
            result[j] = result.get(j, 0) + c
    return result


def acyclic_orientation_sinks_brute(g):
    """Oracle: enumerate all 2^|E| orientations and filter acyclic ones."""
    edges = g.edges()
    n = g.n
    result = {}
    for mask in range(1 << len(edges)):
        out_adj = [[] for _ in range(n + 1)]
        indeg = [0] * (n + 1)
        for k, (i, j) in enumerate(edges):
            a, b = (i, j) if mask >> k & 1 else (j, i)
            out_adj[a].append(b)
            indeg[b] += 1
        order = [v for v in range(1, n + 1) if indeg[v] == 0]
        seen = 0
        queue = list(order)
        while queue:
            v = queue.pop()
            seen += 1
            for w in out_adj[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if seen != n:
            continue
        sinks = sum(1 for v in range(1, n + 1) if not out_adj[v])
        result[sinks] = result.get(sinks, 0) + 1
    return result


def check_sink_theorem(g, cache=None):
    """sink(g, j) equals the sum of e-coefficients over partitions of length j."""
    coeffs = e_coefficients(g, cache=cache)
    by_length = {}
    for lam, c in coeffs.items():
        by_length[len(lam)] = by_length.get(len(lam), 0) + c
    by_length = {j: c for j, c in by_length.items() if c}
    sinks = acyclic_orientation_sinks(g)
    return sinks == by_length


# ---------------------------------------------------------------------------
# positivity reports


@dataclass
class ChromaticExpansion:
    graph: object
    m: SymFunc
    e: SymFunc
    s: SymFunc
    e_positive: bool
    s_positive: bool
    sink_ok: bool

    def to_json(self):
        return {
            "graph": self.graph.to_json(),
            "m": self.m.to_json()["coeffs"],
            "e": self.e.to_json()["coeffs"],
            "s": self.s.to_json()["coeffs"],
            "ePositive": self.e_positive,
            "sPositive": self.s_positive,
            "sinkCheck": self.sink_ok,
        }


def positivity_report(g, cache=None, method="auto"):
    """Full m/e/s expansions of X_g with positivity flags and the sink check."""
    cache = cache or default_cache
    xm = chromatic_symmetric(g, method=method)
    xe = cache.convert(xm, "e")
    xs = cache.convert(xm, "s")
    if not (xe.is_integral() and xs.is_integral()):
        raise AssertionError("chromatic expansions must be integral")
    return ChromaticExpansion(
        graph=g,
        m=xm,
        e=xe,
        s=xs,
        e_positive=xe.is_positive(),
        s_positive=xs.is_positive(),
        sink_ok=check_sink_theorem(g, cache=cache),
    )
