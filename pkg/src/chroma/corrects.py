"""Correct sequences and the cancellation analysis of the power-sum grid.

A sequence (w_1, .., w_k) of semiorder elements is *correct* when

  (1) no w_i strictly dominates its successor w_{i+1}, and
  (2) every w_j (j >= 2) has some earlier w_i that does not lie strictly
      below it -- equivalently, every prefix is connected in the
      incomparability graph.

Correct sequences expand the power-sum analogue: on the all-ones grid
(destinations shifted one column right of the bases), expanding the Newton
determinant gives every multipath a sign and a multiplier (the base index
whose path lands on the rightmost destination), and three cancellations
kill everything except the correct sequences:

  * switching tails at the leftmost lowest crossing is a sign-reversing,
    multiplier-preserving involution on the multipaths whose crossing
    avoids the rightmost destination (class I);
  * the remaining intersecting multipaths pair off, leaving signed residues
    whose weight vectors look like (1,..,1, chain, singles..) (class J);
  * those residues cancel against the disjoint-but-incorrect multipaths
    (class L) through a chain-shrinking/growing bijection.

This module enumerates everything at desk scale and verifies each step as
an exact polynomial identity rather than trusting the bookkeeping.
"""

from dataclasses import dataclass, field

from .errors import (
    BadParameter,
    NonIdentityPermutation,
    NotIntersecting,
    TooLarge,
    TriplePoint,
    WrongShape,
)
from .ghom import GAnalogueContext, power_g
from .lgvgrid import (
    DEFAULT_MULTIPATH_BUDGET,
    Multipath,
    build_grid,
    enumerate_multipaths,
    grid_path_from_vertices,
)
from .polyring import Polynomial, monomial_from_elements

DEFAULT_SEQUENCE_BUDGET = 10_000_000


# ---------------------------------------------------------------------------
# correct sequences


def is_correct(u, seq):
    """Both defining conditions, checked literally."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("sequence must be nonempty")
    for w in seq:
        if not 1 <= w <= u.n:
            raise ValueError("element out of range")
    for i in range(len(seq) - 1):
        if u.succ(seq[i], seq[i + 1]):
            return False
    for j in range(1, len(seq)):
        if all(u.prec(seq[i], seq[j]) for i in range(j)):
            return False
    return True


def is_correct_via_connectivity(u, seq):
    """Cross-check form: condition (1) plus connectivity of every prefix in
    the incomparability graph."""
    seq = tuple(seq)
    for i in range(len(seq) - 1):
        if u.succ(seq[i], seq[i + 1]):
            return False
    g = u.inc_graph()
    for j in range(1, len(seq) + 1):
        support = set(seq[:j])
        if len(support) == 1:
            continue
        start = next(iter(support))
        seen = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in support:
                if w not in seen and g.adjacent(v, w):
                    seen.add(w)
                    frontier.append(w)
        if seen != support:
            return False
    return True


def enumerate_corrects(u, k, budget=DEFAULT_SEQUENCE_BUDGET):
    """All correct sequences of length k, lexicographic.

    Prefixes of correct sequences are correct, so this is a straight DFS:
    extend by c whenever the last element does not dominate c and c does not
    dominate the running maximum (dominating the maximum is the same as
    dominating everything before, since the elements are sorted by
    position).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if u.n ** k > budget:
        raise TooLarge("n^k = %d exceeds the sequence budget" % (u.n ** k,))
    out = []
    n = u.n

    def rec(prefix, running_max):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else None
        for c in range(1, n + 1):
            if last is not None:
                if u.succ(last, c):
                    continue
                if u.succ(c, running_max):
                    continue
            prefix.append(c)
            rec(prefix, max(running_max, c))
            prefix.pop()

    rec([], 0)
    return out


def power_via_corrects(u, k, budget=DEFAULT_SEQUENCE_BUDGET):
    """Sum of w_1 * .. * w_k over correct sequences; the power-sum analogue."""
    total = Polynomial.zero(u.n)
    acc = {}
    for seq in enumerate_corrects(u, k, budget):
        mono = monomial_from_elements(seq)
        acc[mono] = acc.get(mono, 0) + 1
    total.terms.update(acc)
    return total


def covering_corrects_count(u):
    """Correct sequences of length n using every element exactly once.

    Searches over permutations directly (prefixes of a covering correct are
    corrects with distinct entries), so the antichain costs n! rather than
    n^n."""
    n = u.n
    count = 0

    def rec(prefix, used, running_max):
        nonlocal count
        if len(prefix) == n:
            count += 1
            return
        last = prefix[-1] if prefix else None
        for c in range(1, n + 1):
            if used & (1 << c):
                continue
            if last is not None:
                if u.succ(last, c) or u.succ(c, running_max):
                    continue
            prefix.append(c)
            rec(prefix, used | (1 << c), max(running_max, c))
            prefix.pop()

    rec([], 0, 0)
    return count


def m_l1_via_corrects(u, l, budget=DEFAULT_SEQUENCE_BUDGET):
    """The hook-shape monomial analogue m^G_{(l,1)} as a sum over pairs of a
    correct sequence of length l and one extra element z with either z
    dominating the whole sequence or z below the last entry.

    Restricted to l >= 2: at l = 1 the same recipe double-counts.
    """
    if l < 2:
        raise BadParameter("the pair expansion needs l >= 2")
    n = u.n
    acc = {}
    for seq in enumerate_corrects(u, l, budget):
        mx = max(seq)
        last = seq[-1]
        for z in range(1, n + 1):
            if u.succ(z, mx) or u.succ(last, z):
                mono = monomial_from_elements(seq + (z,))
                acc[mono] = acc.get(mono, 0) + 1
    total = Polynomial.zero(n)
    total.terms.update(acc)
    return total


# ---------------------------------------------------------------------------
# crossing geometry


def leftmost_lowest_intersection(mp):
    """The crossing vertex with minimal column, ties broken by maximal row
    (rows grow downwards, so this is the leftmost lowest point).  Exactly two
    paths may pass through it."""
    shared = mp.intersection_vertices()
    if not shared:
        raise NotIntersecting("multipath is disjoint")
    z = min(shared, key=lambda cr: (cr[0], -cr[1]))
    through = [i for i, p in enumerate(mp.paths) if z in p.vertex_set]
    if len(through) != 2:
        raise TriplePoint("%d paths through %r" % (len(through), z))
    return z


def delta_switch(mp):
    """Swap the two tails at the leftmost lowest crossing.

    The union of the two affected vertex sets is unchanged, so the crossing
    set -- and with it the distinguished point -- is preserved, which makes
    the operation an involution; the two destination indices swap, so the
    sign flips.
    """
    z = leftmost_lowest_intersection(mp)
    through = [i for i, p in enumerate(mp.paths) if z in p.vertex_set]
    i, j = through
    pi, pj = mp.paths[i], mp.paths[j]
    cut_i = pi.vertices.index(z)
    cut_j = pj.vertices.index(z)
    new_i = pi.vertices[:cut_i] + pj.vertices[cut_j:]
    new_j = pj.vertices[:cut_j] + pi.vertices[cut_i:]
    paths = list(mp.paths)
    paths[i] = grid_path_from_vertices(new_i)
    paths[j] = grid_path_from_vertices(new_j)
    sigma = list(mp.sigma)
    sigma[i], sigma[j] = sigma[j], sigma[i]
    return Multipath(paths, sigma)


# ---------------------------------------------------------------------------
# classification on the all-ones geometry


@dataclass(frozen=True)
class MultipathClass:
    tag: str  # P, I, J, L or other
    z: tuple = None
    chain_length: int = 0


def _identity(k):
    return tuple(range(1, k + 1))


def _j_form(mp, u):
    """Match the residue pattern: l-1 empty weights, one chain of length l
    ending on the rightmost destination, then singles; the chain bottom must
    not dominate the first single, nor any single its successor.  Returns the
    chain length, or None."""
    k = mp.k
    degrees = [len(p.diag_rows) for p in mp.paths]
    l = mp.multiplier()
    if l < 2 or degrees[l - 1] != l:
        return None
    if any(degrees[i] != 0 for i in range(l - 1)):
        return None
    if any(degrees[i] != 1 for i in range(l, k)):
        return None
    chain = mp.paths[l - 1].diag_rows
    singles = [mp.paths[i].diag_rows[0] for i in range(l, k)]
    if singles and u.succ(chain[0], singles[0]):
        return None
    for a, b in zip(singles, singles[1:]):
        if u.succ(a, b):
            return None
    return l


def classify_multipath(mp, u, grid):
    """One of P (disjoint, correct), L (disjoint, incorrect), I (crossing
    away from the rightmost destination), J (the residue pattern), or other."""
    if grid.lam != (1,) * grid.k:
        raise WrongShape("classification needs the all-ones geometry")
    if mp.is_nonintersecting():
        if mp.sigma != _identity(mp.k):
            raise NonIdentityPermutation(
                "disjoint multipath with sigma=%r" % (list(mp.sigma),)
            )
        seq = tuple(p.diag_rows[0] for p in mp.paths)
        if is_correct(u, seq):
            return MultipathClass("P")
        return MultipathClass("L")
    z = leftmost_lowest_intersection(mp)
    through = [i for i, p in enumerate(mp.paths) if z in p.vertex_set]
    if all(mp.sigma[i] != 1 for i in through):
        return MultipathClass("I", z=z)
    l = _j_form(mp, u)
    if l is not None:
        return MultipathClass("J", z=z, chain_length=l)
    return MultipathClass("other", z=z)


# ---------------------------------------------------------------------------
# weight-vector forms and the chain bijection


@dataclass(frozen=True)
class WeightForm:
    """A residue (J) or disjoint-incorrect (L) weight vector, split as the
    leading chain plus the trailing singles; sign is (-1)^(chain length - 1)."""

    chain: tuple
    singles: tuple

    @property
    def flattened(self):
        return self.chain + self.singles

    @property
    def sign(self):
        return -1 if (len(self.chain) - 1) & 1 else 1

    def weight_product(self, n):
        return Polynomial.monomial(monomial_from_elements(self.flattened), 1, n)


def _dominating_single_positions(form, u):
    """Indices into `singles` whose element dominates everything before it
    in the flattened sequence."""
    flat = form.flattened
    offset = len(form.chain)
    out = []
    running_max = max(flat[:offset])
    for idx in range(offset, len(flat)):
        if u.succ(flat[idx], running_max):
            out.append(idx - offset)
        running_max = max(running_max, flat[idx])
    return out


def absorb_dominating_single(form, u):
    """Move the last dominating single onto the top of the chain.

    Dominating everything before it includes the current chain top, so the
    extended chain is again a chain; the chosen single is the last dominating
    one, which makes the result dominator-free.
    """
    positions = _dominating_single_positions(form, u)
    if not positions:
        raise BadParameter("no dominating single to absorb")
    m = positions[-1]
    return WeightForm(
        chain=form.chain + (form.singles[m],),
        singles=form.singles[:m] + form.singles[m + 1:],
    )


def split_chain_top(form, u):
    """Inverse move: drop the chain top back among the singles, right after
    the longest prefix of singles it dominates.  (Past that prefix would sit
    an element it does not dominate, so the reinsertion point is forced.)"""
    if len(form.chain) < 2:
        raise BadParameter("nothing to split off a length-1 chain")
    top = form.chain[-1]
    cut = 0
    for s in form.singles:
        if u.succ(top, s):
            cut += 1
        else:
            break
    return WeightForm(
        chain=form.chain[:-1],
        singles=form.singles[:cut] + (top,) + form.singles[cut:],
    )


# ---------------------------------------------------------------------------
# reports


@dataclass
class CancellationReport:
    uio: str
    k: int
    counts: dict
    sum_I: Polynomial
    sum_JL: Polynomial
    total: Polynomial
    sum_P: Polynomial
    pk: Polynomial
    rewrite_lhs: Polynomial
    rewrite_rhs: Polynomial
    involution_ok: bool
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = (
            self.sum_I.is_zero()
            and self.sum_JL.is_zero()
            and self.total == self.sum_P
            and self.total == self.pk
            and self.rewrite_lhs == self.rewrite_rhs
            and self.involution_ok
        )

    def to_json(self):
        return {
            "uio": self.uio,
            "k": self.k,
            "counts": dict(self.counts),
            "sumI": str(self.sum_I),
            "sumJL": str(self.sum_JL),
            "total": self.total.to_json(),
            "pk": self.pk.to_json(),
            "ok": self.ok,
        }


def verify_cancellations(u, k, budget=DEFAULT_MULTIPATH_BUDGET, ctx=None):
    """Enumerate every multipath of the all-ones grid and check:

      (a) the signed multiplier sum over class I vanishes,
      (b) the signed multiplier sum over the rest minus P vanishes, and it
          rewrites as the plain signed sum over J and L,
      (c) the grand total equals the sum over P, equals the power-sum
          analogue,
      (d) the tail switch is a sign-reversing, multiplier- and
          weight-preserving involution on I.
    """
    grid = build_grid(u, k, (1,) * k)
    n = u.n
    mps = enumerate_multipaths(grid, budget)
    zero = Polynomial.zero(n)
    sums = {"I": zero, "rest": zero, "P": zero, "total": zero, "JL_plain": zero}
    counts = {"P": 0, "I": 0, "J": 0, "L": 0, "other": 0}
    i_class = []
    for mp in mps:
        cls = classify_multipath(mp, u, grid)
        counts[cls.tag] += 1
        contrib = (mp.sign * mp.multiplier()) * mp.weight_product(n)
        sums["total"] = sums["total"] + contrib
        if cls.tag == "I":
            sums["I"] = sums["I"] + contrib
            i_class.append(mp)
        elif cls.tag == "P":
            sums["P"] = sums["P"] + mp.weight_product(n)
        else:
            sums["rest"] = sums["rest"] + contrib
            if cls.tag in ("J", "L"):
                sums["JL_plain"] = sums["JL_plain"] + mp.sign * mp.weight_product(n)
    involution_ok = _check_involution_on_I(i_class, u, grid)
    ctx = ctx or GAnalogueContext(u.inc_graph())
    return CancellationReport(
        uio=str(u),
        k=k,
        counts=counts,
        sum_I=sums["I"],
        sum_JL=sums["rest"],
        total=sums["total"],
        sum_P=sums["P"],
        pk=power_g(ctx, k),
        rewrite_lhs=sums["rest"],
        rewrite_rhs=sums["JL_plain"],
        involution_ok=involution_ok,
    )


def _check_involution_on_I(i_class, u, grid):
    keys = {mp.key() for mp in i_class}
    n = u.n
    for mp in i_class:
        image = delta_switch(mp)
        if image.key() not in keys:
            return False
        if classify_multipath(image, u, grid).tag != "I":
            return False
        if delta_switch(image) != mp:
            return False
        if image.sign != -mp.sign:
            return False
        if image.multiplier() != mp.multiplier():
            return False
        if image.weight_product(n) != mp.weight_product(n):
            return False
        if leftmost_lowest_intersection(image) != leftmost_lowest_intersection(mp):
            return False
    return True


@dataclass
class ChainBijectionReport:
    uio: str
    k: int
    dominator_count: int
    dominator_free_count: int
    mutually_inverse: bool
    sign_reversing: bool
    weight_preserving: bool
    signed_sum: Polynomial
    forms_match_multipaths: bool
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = (
            self.mutually_inverse
            and self.sign_reversing
            and self.weight_preserving
            and self.signed_sum.is_zero()
            and self.forms_match_multipaths
        )


def chi_psi_check(u, k, budget=DEFAULT_MULTIPATH_BUDGET):
    """Build the residue (J) and disjoint-incorrect (L) weight forms from the
    multipath enumeration, split them into dominator-carrying and
    dominator-free halves, and verify the chain moves are mutually inverse,
    sign-reversing, weight-preserving, and kill the signed sum."""
    grid = build_grid(u, k, (1,) * k)
    n = u.n
    forms = []
    for mp in enumerate_multipaths(grid, budget):
        cls = classify_multipath(mp, u, grid)
        if cls.tag == "J":
            l = cls.chain_length
            forms.append(
                WeightForm(
                    chain=mp.paths[l - 1].diag_rows,
                    singles=tuple(p.diag_rows[0] for p in mp.paths[l:]),
                )
            )
        elif cls.tag == "L":
            seq = tuple(p.diag_rows[0] for p in mp.paths)
            forms.append(WeightForm(chain=seq[:1], singles=seq[1:]))
    with_dominator = [f for f in forms if _dominating_single_positions(f, u)]
    dominator_free = [f for f in forms if not _dominating_single_positions(f, u)]
    free_set = set(dominator_free)
    with_set = set(with_dominator)
    mutually_inverse = True
    sign_reversing = True
    weight_preserving = True
    for f in with_dominator:
        image = absorb_dominating_single(f, u)
        if image not in free_set or split_chain_top(image, u) != f:
            mutually_inverse = False
        if image.sign != -f.sign:
            sign_reversing = False
        if sorted(image.flattened) != sorted(f.flattened):
            weight_preserving = False
    for f in dominator_free:
        image = split_chain_top(f, u)
        if image not in with_set or absorb_dominating_single(image, u) != f:
            mutually_inverse = False
    signed = Polynomial.zero(n)
    for f in forms:
        signed = signed + f.sign * f.weight_product(n)
    # every dominator-free form must genuinely carry a chain to split
    forms_ok = all(len(f.chain) >= 2 for f in dominator_free) and len(forms) == len(
        set(forms)
    )
    return ChainBijectionReport(
        uio=str(u),
        k=k,
        dominator_count=len(with_dominator),
        dominator_free_count=len(dominator_free),
        mutually_inverse=mutually_inverse,
        sign_reversing=sign_reversing,
        weight_preserving=weight_preserving,
        signed_sum=signed,
        forms_match_multipaths=forms_ok,
    )
