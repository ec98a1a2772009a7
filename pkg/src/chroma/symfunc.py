"""Symmetric functions in the e/m/p/s bases with exact basis changes.

Basis elements are indexed by partitions; coefficients are Fractions.  All
basis changes go through one oracle-grade mechanism: expand both bases
concretely in exactly d variables (enough, since a partition of d has at
most d parts), read coordinates off the partition monomials
x_1^{a_1}..x_l^{a_l}, and solve the resulting square system exactly.
Computed matrices are cached in memory and, optionally, on disk.
"""

import hashlib
import json
import os
import tempfile
import threading
from fractions import Fraction
from itertools import combinations

from .combinat import (
    conjugate,
    format_partition,
    is_partition,
    parse_partition,
    partitions_of,
)
from .errors import SingularSystem
from .polyring import Polynomial, det

BASES = ("e", "m", "p", "s")


def _as_partition(lam):
    if isinstance(lam, int):
        lam = (lam,)
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError("not a partition: %r" % (lam,))
    return lam


# ---------------------------------------------------------------------------
# concrete expansions in finitely many variables


def elementary_concrete(m, N):
    """e_m truncated to x_1..x_N."""
    if m < 0:
        return Polynomial.zero(N, "x")
    if m == 0:
        return Polynomial.one(N, "x")
    terms = {}
    for subset in combinations(range(1, N + 1), m):
        terms[tuple((i, 1) for i in subset)] = 1
    return Polynomial(N, terms, "x")


def power_concrete(m, N):
    """p_m truncated to x_1..x_N."""
    terms = {((i, m),): 1 for i in range(1, N + 1)}
    return Polynomial(N, terms, "x")


def _distinct_permutations(values):
    values = sorted(values, reverse=True)
    n = len(values)

    def rec(remaining, prefix):
        if not remaining:
            yield tuple(prefix)
            return
        seen = set()
        for idx, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            prefix.append(v)
            yield from rec(remaining[:idx] + remaining[idx + 1:], prefix)
            prefix.pop()

    yield from rec(values, [])


def monomial_concrete(lam, N):
    """m_lam truncated to x_1..x_N (zero when N < len(lam))."""
    lam = _as_partition(lam)
    if len(lam) > N:
        return Polynomial.zero(N, "x")
    padded = list(lam) + [0] * (N - len(lam))
    terms = {}
    for vec in _distinct_permutations(padded):
        mono = tuple((i + 1, e) for i, e in enumerate(vec) if e)
        terms[mono] = 1
    return Polynomial(N, terms, "x")


def schur_concrete(lam, N):
    """s_lam truncated to x_1..x_N, through its e-determinant expansion."""
    f = jacobi_trudi_e(lam)
    out = Polynomial.zero(N, "x")
    for mu, coeff in f.coeffs.items():
        out = out + coeff * _e_product_concrete(mu, N)
    return out


def _e_product_concrete(mu, N):
    out = Polynomial.one(N, "x")
    for part in mu:
        out = out * elementary_concrete(part, N)
    return out


def expand_concrete(basis, lam, N):
    """The literal truncation of the defining sum to x_1..x_N."""
    lam = _as_partition(lam)
    if basis == "e":
        return _e_product_concrete(lam, N)
    if basis == "p":
        out = Polynomial.one(N, "x")
        for part in lam:
            out = out * power_concrete(part, N)
        return out
    if basis == "m":
        return monomial_concrete(lam, N)
    if basis == "s":
        return schur_concrete(lam, N)
    raise ValueError("unknown basis %r" % (basis,))


# ---------------------------------------------------------------------------
# the SymFunc container


class SymFunc:
    """A symmetric function stored as basis-tagged partition coefficients."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        clean = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = _as_partition(lam)
                c = Fraction(c)
                if c:
                    clean[lam] = c
        self.basis = basis
        self.coeffs = clean

    @classmethod
    def unit(cls, basis, lam):
        return cls(basis, {_as_partition(lam): 1})

    @classmethod
    def e(cls, lam):
        return cls.unit("e", lam)

    @classmethod
    def m(cls, lam):
        return cls.unit("m", lam)

    @classmethod
    def p(cls, lam):
        return cls.unit("p", lam)

    @classmethod
    def s(cls, lam):
        return cls.unit("s", lam)

    @classmethod
    def zero(cls, basis):
        return cls(basis, {})

    # linear structure -------------------------------------------------------

    def _check(self, other):
        if self.basis != other.basis:
            raise ValueError("mixed bases %s/%s; convert first" % (self.basis, other.basis))

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, 0) + c
        return SymFunc(self.basis, coeffs)

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(
                self.basis, {lam: c * other for lam, c in self.coeffs.items()}
            )
        self._check(other)
        if self.basis not in ("e", "p"):
            raise ValueError(
                "products are only defined in the multiplicative bases e and p"
            )
        coeffs = {}
        for lam, c1 in self.coeffs.items():
            for mu, c2 in other.coeffs.items():
                prod = tuple(sorted(lam + mu, reverse=True))
                coeffs[prod] = coeffs.get(prod, 0) + c1 * c2
        return SymFunc(self.basis, coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SymFunc)
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    # queries ------------------------------------------------------------------

    def degrees(self):
        return sorted({sum(lam) for lam in self.coeffs})

    def degree_slice(self, d):
        return SymFunc(
            self.basis, {lam: c for lam, c in self.coeffs.items() if sum(lam) == d}
        )

    def is_positive(self):
        """No negative coefficient (zero entries are never stored)."""
        return all(c > 0 for c in self.coeffs.values())

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def as_int_dict(self):
        if not self.is_integral():
            raise ValueError("non-integer coefficients present")
        return {lam: int(c) for lam, c in self.coeffs.items()}

    def expand(self, N):
        """Concrete polynomial in x_1..x_N."""
        out = Polynomial.zero(N, "x")
        for lam, c in self.coeffs.items():
            out = out + c * expand_concrete(self.basis, lam, N)
        return out

    def convert(self, to, cache=None):
        return (cache or default_cache).convert(self, to)

    # serialization --------------------------------------------------------------

    def to_json(self):
        keys = sorted(self.coeffs, key=lambda lam: (sum(lam), lam), reverse=True)
        return {
            "basis": self.basis,
            "coeffs": {format_partition(lam): str(self.coeffs[lam]) for lam in keys},
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["basis"],
            {
                parse_partition(key): Fraction(val)
                for key, val in data["coeffs"].items()
            },
        )

    def __str__(self):
        if not self.coeffs:
            return "0"
        keys = sorted(self.coeffs, key=lambda lam: (sum(lam), lam), reverse=True)
        parts = []
        for lam in keys:
            c = self.coeffs[lam]
            name = "%s[%s]" % (self.basis, format_partition(lam))
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append("%s*%s" % (c, name))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


# ---------------------------------------------------------------------------
# determinant expressions


def _e_entry(r):
    if r < 0:
        return SymFunc.zero("e")
    if r == 0:
        return SymFunc("e", {(): 1})
    return SymFunc.e((r,))


def jacobi_trudi_e(lam):
    """s_lam as an e-basis expansion, via det(e_{lam*_i + j - i})."""
    lam = _as_partition(lam)
    if not lam:
        return SymFunc("e", {(): 1})
    lstar = conjugate(lam)
    m = len(lstar)
    mat = [[_e_entry(lstar[i] + (j + 1) - (i + 1)) for j in range(m)] for i in range(m)]
    return det(mat)


def newton_p(k):
    """p_k as an e-basis expansion via the k x k determinant with first
    column i*e_i and banded columns e_{i-j+1} elsewhere."""
    if k < 1:
        raise ValueError("k must be >= 1")
    mat = []
    for i in range(1, k + 1):
        row = [i * _e_entry(i)]
        row += [_e_entry(i - j + 1) for j in range(2, k + 1)]
        mat.append(row)
    return det(mat)


# ---------------------------------------------------------------------------
# transition matrices


def _partition_coords(poly, d):
    """Coordinates of a degree-d symmetric polynomial in d variables, read off
    the monomials x_1^{nu_1}..x_l^{nu_l} for nu running over partitions_of(d)."""
    coords = []
    for nu in partitions_of(d):
        mono = tuple((i + 1, nu[i]) for i in range(len(nu)))
        coords.append(Fraction(poly.coeff(mono)))
    return coords


def _solve_columns(columns, targets):
    """Solve A x = t for each target, A given by columns; exact Fractions."""
    size = len(columns)
    rows = [
        [columns[c][r] for c in range(size)] + [t[r] for t in targets]
        for r in range(size)
    ]
    width = size + len(targets)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            raise SingularSystem("basis expansion matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / Fraction(rows[col][col])
        rows[col] = [v * inv for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [[rows[r][size + t] for r in range(size)] for t in range(len(targets))]


def _compute_matrix(frm, to, d):
    lams = partitions_of(d)
    if frm == to:
        return {lam: {lam: Fraction(1)} for lam in lams}
    columns = [_partition_coords(expand_concrete(to, mu, d), d) for mu in lams]
    targets = [_partition_coords(expand_concrete(frm, lam, d), d) for lam in lams]
    solved = _solve_columns(columns, targets)
    matrix = {}
    for lam, sol in zip(lams, solved):
        row = {}
        for mu, c in zip(lams, sol):
            if c:
                row[mu] = c
        matrix[lam] = row
    return matrix


def _matrix_payload(frm, to, d, matrix):
    return {
        "from": frm,
        "to": to,
        "degree": d,
        "matrix": {
            format_partition(lam): {
                format_partition(mu): str(c) for mu, c in sorted(row.items())
            }
            for lam, row in sorted(matrix.items())
        },
    }


def _payload_checksum(payload):
    body = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(body).hexdigest()


class TransitionMatrixCache:
    """Once-writer / many-reader store of exact basis-change matrices.

    Entries are computed on demand and published atomically; when a cache
    directory is configured, each (from, to, degree) key is one JSON file
    with a checksum, and corrupted files are silently recomputed.
    """

    def __init__(self, directory=None):
        self.directory = os.path.abspath(directory) if directory else None
        self._memory = {}
        self._lock = threading.Lock()

    def key_path(self, frm, to, d):
        return os.path.join(self.directory, "%s_to_%s_deg%d.json" % (frm, to, d))

    def get(self, frm, to, d):
        """Matrix M with from_lam = sum_mu M[lam][mu] * to_mu, weight d."""
        if frm not in BASES or to not in BASES:
            raise ValueError("unknown basis")
        if d < 1:
            raise ValueError("degree must be >= 1")
        key = (frm, to, d)
        with self._lock:
            if key in self._memory:
                return self._memory[key]
        matrix = self._load(frm, to, d)
        if matrix is None:
            matrix = _compute_matrix(frm, to, d)
            self._store(frm, to, d, matrix)
        with self._lock:
            self._memory.setdefault(key, matrix)
            return self._memory[key]

    def _load(self, frm, to, d):
        if not self.directory:
            return None
        path = self.key_path(frm, to, d)
        try:
            with open(path) as fh:
                data = json.load(fh)
            payload = {k: data[k] for k in ("from", "to", "degree", "matrix")}
            if data.get("checksum") != _payload_checksum(payload):
                return None
            return {
                parse_partition(lam): {
                    parse_partition(mu): Fraction(c) for mu, c in row.items()
                }
                for lam, row in payload["matrix"].items()
            }
        except (OSError, ValueError, KeyError):
            return None

    def _store(self, frm, to, d, matrix):
        if not self.directory:
            return
        os.makedirs(self.directory, exist_ok=True)
        payload = _matrix_payload(frm, to, d, matrix)
        payload["checksum"] = _payload_checksum(
            {k: payload[k] for k in ("from", "to", "degree", "matrix")}
        )
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self.key_path(frm, to, d))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def convert(self, f, to):
        """Re-express a SymFunc in another basis; exact."""
        if to not in BASES:
            raise ValueError("unknown basis")
        if to == f.basis:
            return SymFunc(f.basis, dict(f.coeffs))
        out = {}
        for d in f.degrees():
            piece = f.degree_slice(d)
            if d == 0:
                out[()] = out.get((), 0) + piece.coeffs[()]
                continue
            matrix = self.get(f.basis, to, d)
            for lam, c in piece.coeffs.items():
                for mu, entry in matrix[lam].items():
                    out[mu] = out.get(mu, 0) + c * entry
        return SymFunc(to, out)

    def rebuild(self, max_degree):
        built = []
        for d in range(1, max_degree + 1):
            for frm in BASES:
                for to in BASES:
                    if frm != to:
                        self.get(frm, to, d)
                        built.append((frm, to, d))
        return built

    def stored_keys(self):
        keys = set(self._memory)
        if self.directory and os.path.isdir(self.directory):
            for name in os.listdir(self.directory):
                if name.endswith(".json"):
                    stem = name[: -len(".json")]
                    try:
                        frm, rest = stem.split("_to_")
                        to, deg = rest.split("_deg")
                        keys.add((frm, to, int(deg)))
                    except ValueError:
                        continue
        return sorted(keys)

    def clear(self):
        with self._lock:
            self._memory.clear()
        if self.directory and os.path.isdir(self.directory):
            for name in os.listdir(self.directory):
                if name.endswith(".json"):
                    os.unlink(os.path.join(self.directory, name))


default_cache = TransitionMatrixCache()


def transition_matrix(frm, to, d, cache=None):
    return (cache or default_cache).get(frm, to, d)


def convert(f, to, cache=None):
    return (cache or default_cache).convert(f, to)


# ---------------------------------------------------------------------------
# the three-way product identity


def cauchy_check(d, N, cache=None):
    """Truncated product identity at degree d in x_1..x_N, y_1..y_N:

        sum m_lam(x) e_lam(y) == sum s_lam(x) s_{lam*}(y) == sum e_lam(x) m_lam(y)

    with lam running over partitions of d.  Exact polynomial comparison.
    """
    if not 1 <= d <= N:
        raise ValueError("requires 1 <= d <= N")
    total = 2 * N

    def pair(bx, by, star=False):
        acc = Polynomial.zero(total, "x")
        for lam in partitions_of(d):
            mu = conjugate(lam) if star else lam
            fx = expand_concrete(bx, lam, N).embed(total, 0)
            fy = expand_concrete(by, mu, N).embed(total, N)
            acc = acc + fx * fy
        return acc

    side_me = pair("m", "e")
    side_ss = pair("s", "s", star=True)
    side_em = pair("e", "m")
    return side_me == side_ss and side_ss == side_em
