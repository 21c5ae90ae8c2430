"""Exact scalars, dense tensors and fraction-free linear algebra.

Everything here is immutable and exact. Scalars are ``fractions.Fraction``
(always reduced, positive denominator). Tensors are dense, row-major and
0-indexed internally; files and reports use 1-based indices.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import cached_property, reduce
from math import lcm, prod
from operator import itemgetter
from typing import Iterable, Mapping, Sequence

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


class InputError(ValueError):
    """Malformed input: bad extents, indices out of range, unparsable scalars."""


class PreconditionError(ValueError):
    """An operation was called on data violating its precondition."""


def scalar(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact scalar.

    Floats are refused on purpose: nothing in this package is approximate.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                q = int(q)
                if q <= 0:
                    raise InputError(f"denominator must be positive in {x!r}")
                return Fraction(int(p), q)
            return Fraction(int(s))
        except ValueError as exc:
            raise InputError(f"not a scalar: {x!r}") from exc
    raise InputError(f"not a scalar: {x!r}")


def format_scalar(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Tensor:
    """Dense tensor of exact scalars with fixed extents."""

    __slots__ = ("dims", "entries", "__dict__")

    def __init__(self, dims: Sequence[int], entries: Iterable = None):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 0 for d in dims):
            raise InputError(f"bad tensor extents {dims}")
        size = prod(dims)
        if entries is None:
            vals = (ZERO,) * size
        else:
            vals = tuple(scalar(v) for v in entries)
            if len(vals) != size:
                raise InputError(f"expected {size} entries for extents {dims}, got {len(vals)}")
        self.dims = dims
        self.entries = vals

    @classmethod
    def zeros(cls, dims: Sequence[int]) -> "Tensor":
        return cls(dims)

    @classmethod
    def from_sparse(cls, dims: Sequence[int], values: Mapping[tuple, object]) -> "Tensor":
        dims = tuple(dims)
        flat = [ZERO] * prod(dims)
        strides = _strides(dims)
        for idx, v in values.items():
            _check_index(idx, dims)
            flat[sum(i * s for i, s in zip(idx, strides))] = scalar(v)
        return cls(dims, flat)

    @property
    def rank(self) -> int:
        return len(self.dims)

    @cached_property
    def _strides(self) -> tuple:
        return _strides(self.dims)

    def _offset(self, idx: tuple) -> int:
        _check_index(idx, self.dims)
        return sum(i * s for i, s in zip(idx, self._strides))

    def __getitem__(self, idx) -> Fraction:
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self.entries[self._offset(idx)]

    @cached_property
    def sparse(self) -> dict:
        """Nonzero entries keyed by 0-based index tuples."""
        out = {}
        for idx, v in zip(itertools.product(*map(range, self.dims)), self.entries):
            if v:
                out[idx] = v
        return out

    def replace(self, updates: Mapping[tuple, object]) -> "Tensor":
        flat = list(self.entries)
        for idx, v in updates.items():
            flat[self._offset(tuple(idx))] = scalar(v)
        return type(self)(self.dims, flat)

    def map(self, f) -> "Tensor":
        return type(self)(self.dims, [f(v) for v in self.entries])

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.dims == other.dims and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.dims, self.entries))

    def __repr__(self) -> str:
        body = ", ".join(f"{tuple(i + 1 for i in k)}: {format_scalar(v)}" for k, v in self.sparse.items())
        return f"{type(self).__name__}{self.dims}{{{body}}}"

    def is_zero(self) -> bool:
        return not self.sparse


def _strides(dims: tuple) -> tuple:
    out, acc = [], 1
    for d in reversed(dims):
        out.append(acc)
        acc *= d
    return tuple(reversed(out))


def _check_index(idx: tuple, dims: tuple) -> None:
    if len(idx) != len(dims):
        raise InputError(f"index {idx} has wrong length for extents {dims}")
    for i, d in zip(idx, dims):
        if not 0 <= i < d:
            raise InputError(f"index {idx} out of range for extents {dims}")


class Matrix(Tensor):
    """Rank-2 tensor; ``m[r, c]`` is row r, column c (acts on column vectors)."""

    def __init__(self, dims: Sequence[int], entries: Iterable = None):
        super().__init__(dims, entries)
        if len(self.dims) != 2:
            raise InputError(f"matrix needs two extents, got {self.dims}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise InputError("ragged matrix rows")
        return cls((nr, nc), [v for r in rows for v in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_sparse((n, n), {(i, i): 1 for i in range(n)})

    @property
    def rows(self) -> int:
        return self.dims[0]

    @property
    def cols(self) -> int:
        return self.dims[1]

    def row_lists(self) -> list:
        c = self.cols
        return [list(self.entries[r * c:(r + 1) * c]) for r in range(self.rows)]

    def transpose(self) -> "Matrix":
        return transpose_factors(self, 1, 2)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.dims} by {other.dims}")
        a, b = self.row_lists(), other.row_lists()
        return Matrix.from_rows(
            [[sum((a[i][k] * b[k][j] for k in range(self.cols)), ZERO) for j in range(other.cols)]
             for i in range(self.rows)]
        ) if self.rows else Matrix((0, other.cols))

    def __neg__(self) -> "Matrix":
        return self.map(lambda v: -v)

    def apply(self, v: Sequence) -> tuple:
        rows = self.row_lists()
        return tuple(sum((r[j] * scalar(v[j]) for j in range(self.cols)), ZERO) for r in rows)


def transpose_factors(t: Tensor, i: int, j: int) -> Tensor:
    """Swap tensor factors i and j (1-based, as in the switching operator)."""
    if i == j or not (1 <= i <= t.rank and 1 <= j <= t.rank):
        raise InputError(f"cannot swap factors {i},{j} of a rank-{t.rank} tensor")
    perm = list(range(t.rank))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    dims = tuple(t.dims[p] for p in perm)
    out = {tuple(idx[p] for p in perm): v for idx, v in t.sparse.items()}
    return type(t).from_sparse(dims, out)


def wedge3(u: int, v: int, w: int, n: int) -> Tensor:
    """Full antisymmetrizer of e_u, e_v, e_w (1-based), without 1/3!."""
    for x in (u, v, w):
        if not 1 <= x <= n:
            raise InputError(f"basis index {x} out of range 1..{n}")
    acc = defaultdict(Fraction)
    base = (u - 1, v - 1, w - 1)
    for perm in itertools.permutations(range(3)):
        acc[tuple(base[p] for p in perm)] += permutation_sign(perm)
    return Tensor.from_sparse((n, n, n), {k: x for k, x in acc.items() if x})


def permutation_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, k = 0, start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# fraction-free elimination

def _integer_rows(rows: Sequence[Sequence]) -> list:
    out = []
    for r in rows:
        r = [scalar(v) for v in r]
        den = reduce(lcm, (v.denominator for v in r), 1)
        out.append([int(v * den) for v in r])
    return out


def bareiss_echelon(rows: Sequence[Sequence], ncols: int = None):
    """Fraction-free row echelon form.

    Returns (echelon rows as ints, pivot columns, sign of the row permutation).
    Every entry below the k-th pivot step is a (k+1)-minor of the input,
    so the integer divisions are exact.
    """
    m = _integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else (ncols or 0)
    prev, r, sign, pivots = 1, 0, 1, []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
            sign = -sign
        piv, prow = m[r][c], m[r]
        for i in range(r + 1, nrows):
            row, f = m[i], m[i][c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots, sign


def rank(m: Matrix) -> int:
    return len(bareiss_echelon(m.row_lists(), m.cols)[1])


def determinant(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise InputError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return ONE
    rows = [[scalar(v) for v in r] for r in m.row_lists()]
    dens = [reduce(lcm, (v.denominator for v in r), 1) for r in rows]
    ech, pivots, sign = bareiss_echelon(rows, n)
    if len(pivots) < n:
        return ZERO
    return Fraction(sign * ech[n - 1][n - 1], prod(dens))


def nullspace(m: Matrix) -> list:
    """Basis of {v : m v = 0} as tuples of Fractions (one per free column)."""
    ncols = m.cols
    ech, pivots, _ = bareiss_echelon(m.row_lists(), ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = ech[r]
            s = sum((row[j] * x[j] for j in range(c + 1, ncols) if row[j]), ZERO)
            x[c] = -s / row[c]
        basis.append(tuple(x))
    return basis


# ---------------------------------------------------------------------------
# sparse contraction used by the law evaluators

def contract(spec: str, *operands: Mapping[tuple, Fraction]) -> dict:
    """Einsum over sparse dicts of nonzero entries.

    ``spec`` looks like ``"xym,mzl->xyzl"``; each letter is one index. Only
    nonzero entries are visited, so cost follows the number of nonzeros.
    """
    ins, out = spec.split("->")
    ins = ins.split(",")
    if len(ins) != len(operands):
        raise ValueError(f"{spec!r} expects {len(ins)} operands")
    missing = set(out) - set("".join(ins))
    if missing:
        raise ValueError(f"output letters {missing} not bound in {spec!r}")
    if any(len(set(i)) != len(i) for i in ins):
        raise ValueError("repeated letter inside one operand is not supported")
    operands = [_ints(o) for o in operands]
    cur_idx, cur = ins[0], operands[0]
    for k in range(1, len(ins)):
        nxt_idx, nxt = ins[k], operands[k]
        later = set(out).union(*ins[k + 1:])
        shared = [c for c in nxt_idx if c in cur_idx]
        both = cur_idx + nxt_idx
        keep = [c for c in dict.fromkeys(both) if c in later]
        cget = _getter([cur_idx.index(c) for c in shared])
        nget = _getter([nxt_idx.index(c) for c in shared])
        kget = _getter([both.index(c) for c in keep])
        buckets = defaultdict(list)
        for key, v in nxt.items():
            buckets[nget(key)].append((key, v))
        acc = defaultdict(int)
        for key, v in cur.items():
            hits = buckets.get(cget(key))
            if not hits:
                continue
            for key2, v2 in hits:
                acc[kget(key + key2)] += v * v2
        cur = {k2: v for k2, v in acc.items() if v}
        cur_idx = "".join(keep)
    pget = _getter([cur_idx.index(c) for c in out])
    if len(out) == len(cur_idx):
        return {pget(key): v for key, v in cur.items()}
    acc = defaultdict(int)
    for key, v in cur.items():
        acc[pget(key)] += v
    return {k2: v for k2, v in acc.items() if v}


def _getter(positions: list):
    if not positions:
        return lambda key: ()
    if len(positions) == 1:
        p = positions[0]
        return lambda key: (key[p],)
    return itemgetter(*positions)


def _ints(d: Mapping) -> Mapping:
    """Integral Fractions become ints: int arithmetic is far cheaper.

    Callers treat values as exact rationals either way (ints compare and
    combine correctly with Fractions).
    """
    if getattr(d, "_all_int", False):
        return d
    out = IntDict()
    for k, v in d.items():
        out[k] = v.numerator if type(v) is Fraction and v.denominator == 1 else v
    return out


class IntDict(dict):
    _all_int = True


# ---------------------------------------------------------------------------
# multivariate polynomials, only for determinants of generic combinations

class Polynomial:
    """Sparse polynomial over Q: {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Fraction] = None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: scalar(c)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = scalar(c)
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = defaultdict(Fraction)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += v1 * v2
        return Polynomial(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = ZERO
        for k, v in self.terms.items():
            total += v * prod((scalar(x) ** e for x, e in zip(point, k)), start=ONE)
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"t{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(k) if e)
            parts.append(format_scalar(v) + ("*" + mono if mono else ""))
        return " + ".join(parts)


def determinant_polynomial(entries: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Division-free determinant by Laplace expansion memoized on column subsets."""
    n = len(entries)
    if n == 0:
        return Polynomial(0, {(): ONE})
    nvars = entries[0][0].nvars
    # minors[mask] = det of the last popcount(mask) rows restricted to columns in mask
    minors = {0: Polynomial.constant(nvars, 1)}
    for size in range(1, n + 1):
        row = n - size
        nxt = {}
        for mask in _masks(n, size):
            total = Polynomial(nvars)
            cols = [c for c in range(n) if mask >> c & 1]
            for pos, c in enumerate(cols):
                e = entries[row][c]
                if e.is_zero():
                    continue
                sub = minors.get(mask & ~(1 << c))
                if sub is None or sub.is_zero():
                    continue
                term = e * sub
                total = total + (term if pos % 2 == 0 else -term)
            nxt[mask] = total
        minors = nxt
    return minors[(1 << n) - 1]


def _masks(n: int, size: int):
    for cols in itertools.combinations(range(n), size):
        yield sum(1 << c for c in cols)
