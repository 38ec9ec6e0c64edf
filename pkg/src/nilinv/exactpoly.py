"""Exact arithmetic substrate: rationals, sparse polynomials, matrices, rank.

Everything is computed over arbitrary-precision rationals
(fractions.Fraction); no floating point appears anywhere.  Polynomial
variables are matrix positions (i, j) plus named parameters given as
strings, with the one-parameter deformation variable ``t`` reserved for
the group-action checks.

Canonical term order for printing: graded lexicographic with position
variables ordered by (i, j) and string parameters (t in particular) last.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Union

T = "t"  # the deformation parameter of one-parameter subgroup transforms

Var = Union[tuple, str]
Scalar = Union[int, Fraction]


def _var_key(v: Var):
    # positions first (by row, column), named parameters after, t last of all
    if isinstance(v, str):
        return (1, v == T, v)
    return (0, False, (v[0], v[1]))


def _canon_mono(items) -> tuple:
    return tuple(sorted(((v, e) for v, e in items if e), key=lambda ve: _var_key(ve[0])))


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    exps: dict = {}
    for v, e in m1:
        exps[v] = exps.get(v, 0) + e
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return _canon_mono(exps.items())


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients.

    Terms are stored as a dict from monomial (a sorted tuple of
    (variable, exponent) pairs) to a nonzero Fraction.  Instances are
    treated as immutable; all operations build new polynomials.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        canon: dict = {}
        if terms:
            for mono, coef in terms.items():
                coef = Fraction(coef)
                if coef == 0:
                    continue
                mono = _canon_mono(mono)
                acc = canon.get(mono, Fraction(0)) + coef
                if acc:
                    canon[mono] = acc
                elif mono in canon:
                    del canon[mono]
        self.terms = canon

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls({(): Fraction(c)})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def var(cls, v: Var) -> "Polynomial":
        return cls({((v, 1),): Fraction(1)})

    @classmethod
    def _coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Polynomial")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = Polynomial._coerce(other)
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            acc = out.get(mono, Fraction(0)) + coef
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
        p = Polynomial.__new__(Polynomial)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Polynomial.__new__(Polynomial)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-Polynomial._coerce(other))

    def __rsub__(self, other):
        return Polynomial._coerce(other) + (-self)

    def __mul__(self, other):
        other = Polynomial._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                acc = out.get(mono, Fraction(0)) + c1 * c2
                if acc:
                    out[mono] = acc
                elif mono in out:
                    del out[mono]
        p = Polynomial.__new__(Polynomial)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one()
        square = self
        while k:
            if k & 1:
                result = result * square
            square = square * square if k > 1 else square
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in mono) for mono in self.terms)

    def degree_in(self, v: Var) -> int:
        best = 0
        for mono in self.terms:
            for var, e in mono:
                if var == v:
                    best = max(best, e)
        return best

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(_canon_mono(mono), Fraction(0))

    def as_monomial(self) -> tuple[Fraction, tuple]:
        """Return (coefficient, monomial) if the polynomial has exactly one term."""
        if len(self.terms) != 1:
            raise ValueError(f"not a monomial: {self}")
        ((mono, coef),) = self.terms.items()
        return coef, mono

    # -- substitution and calculus -----------------------------------------

    def substitute(self, mapping: Mapping[Var, "Polynomial | Scalar"]) -> "Polynomial":
        """Substitute polynomials (or scalars) for variables; missing variables stay."""
        images = {v: Polynomial._coerce(img) for v, img in mapping.items()}
        out = Polynomial.zero()
        for mono, coef in self.terms.items():
            term = Polynomial.constant(coef)
            for v, e in mono:
                factor = images.get(v)
                if factor is None:
                    factor = Polynomial.var(v)
                term = term * factor**e
            out = out + term
        return out

    def evaluate(self, values: Mapping[Var, Scalar]) -> Fraction:
        """Evaluate at a total assignment of the variables that occur."""
        total = Fraction(0)
        for mono, coef in self.terms.items():
            acc = coef
            for v, e in mono:
                if v not in values:
                    raise ValueError(f"no value supplied for variable {v!r}")
                acc *= Fraction(values[v]) ** e
            total += acc
        return total

    def derivative(self, v: Var) -> "Polynomial":
        out: dict = {}
        for mono, coef in self.terms.items():
            for idx, (var, e) in enumerate(mono):
                if var == v:
                    rest = mono[:idx] + ((var, e - 1),) + mono[idx + 1 :]
                    out[_canon_mono(rest)] = coef * e
                    break
        return Polynomial(out)

    # -- rendering -----------------------------------------------------------

    def _sorted_terms(self):
        all_vars = sorted(self.variables(), key=_var_key)
        index = {v: k for k, v in enumerate(all_vars)}

        def exps(mono):
            vec = [0] * len(all_vars)
            for v, e in mono:
                vec[index[v]] = e
            return tuple(vec)

        return sorted(
            self.terms.items(),
            key=lambda mc: (-sum(e for _, e in mc[0]), tuple(-e for e in exps(mc[0]))),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for mono, coef in self._sorted_terms():
            sign = "-" if coef < 0 else "+"
            mag = -coef if coef < 0 else coef
            factors = []
            if mag != 1 or not mono:
                factors.append(str(mag))
            for v, e in mono:
                name = T if v == T else (v if isinstance(v, str) else f"x[{v[0]},{v[1]}]")
                factors.append(name if e == 1 else f"{name}^{e}")
            chunk = "*".join(factors)
            if not chunks:
                chunks.append(chunk if sign == "+" else "-" + chunk)
            else:
                chunks.append(f" {sign} {chunk}")
        return "".join(chunks)

    def __repr__(self):
        return f"Polynomial({self})"

    def latex(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mono, coef in self._sorted_terms():
            sign = "-" if coef < 0 else "+"
            mag = -coef if coef < 0 else coef
            body = ""
            if mag != 1 or not mono:
                body += str(mag.numerator) if mag.denominator == 1 else rf"\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
            for v, e in mono:
                if isinstance(v, str):
                    name = v
                elif v[0] < 10 and v[1] < 10:
                    name = f"x_{{{v[0]}{v[1]}}}"
                else:
                    name = f"x_{{{v[0]},{v[1]}}}"
                body += name if e == 1 else f"{name}^{{{e}}}"
            if not chunks:
                chunks.append(body if sign == "+" else "-" + body)
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)


class PolyMatrix:
    """Square matrix of polynomials; rows and columns are addressed 1-based."""

    def __init__(self, n: int, entries: list[list[Polynomial]] | None = None):
        self.n = n
        if entries is None:
            entries = [[Polynomial.zero() for _ in range(n)] for _ in range(n)]
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        m = cls(n)
        for i in range(n):
            m.entries[i][i] = Polynomial.one()
        return m

    def at(self, i: int, j: int) -> Polynomial:
        return self.entries[i - 1][j - 1]

    def set_at(self, i: int, j: int, value: Polynomial) -> None:
        self.entries[i - 1][j - 1] = value

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        out = PolyMatrix(n)
        for i in range(n):
            for j in range(n):
                acc = Polynomial.zero()
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a.is_zero or b.is_zero:
                        continue
                    acc = acc + a * b
                out.entries[i][j] = acc
        return out

    def power(self, k: int) -> "PolyMatrix":
        if k < 1:
            raise ValueError("power must be >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out


def det_minor(m: PolyMatrix, rows: Iterable[int], cols: Iterable[int]) -> Polynomial:
    """Determinant of the submatrix on the given rows and columns.

    Indices must be strictly ascending; this fixes the sign convention used
    throughout the package.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError(f"ragged index sets: {len(rows)} rows vs {len(cols)} columns")
    for seq in (rows, cols):
        if any(not 1 <= k <= m.n for k in seq):
            raise ValueError(f"indices out of range 1..{m.n}: {seq}")
        if any(x >= y for x, y in zip(seq, seq[1:])):
            raise ValueError(f"indices must be strictly ascending: {seq}")
    memo: dict = {}

    def go(rs: tuple, cs: tuple) -> Polynomial:
        if not rs:
            return Polynomial.one()
        key = (rs, cs)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = Polynomial.zero()
        r0 = rs[0]
        for k, c in enumerate(cs):
            entry = m.at(r0, c)
            if entry.is_zero:
                continue
            sub = go(rs[1:], cs[:k] + cs[k + 1 :])
            term = entry * sub
            acc = acc + (term if k % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return go(rows, cols)


def rank(matrix: Iterable[Iterable[Scalar]]) -> int:
    """Exact rank over the rationals via fraction-free (Bareiss) elimination."""
    work = [[Fraction(x) for x in row] for row in matrix]
    if not work or not work[0]:
        return 0
    # clear denominators row by row so the elimination runs over integers
    rows = []
    for row in work:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * mult) for x in row])
    nr, nc = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(nc):
        pivot_row = next((p for p in range(r, nr) if rows[p][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        for p in range(r + 1, nr):
            factor = rows[p][c]
            for q in range(c + 1, nc):
                rows[p][q] = (rows[p][q] * pivot - factor * rows[r][q]) // prev
            rows[p][c] = 0
        prev = pivot
        r += 1
        if r == nr:
            break
    return r


@dataclass
class MatrixPoint:
    """An n x n matrix of exact rationals, used for points of the nilradical."""

    n: int
    rows: list[list[Fraction]]

    @classmethod
    def zeros(cls, n: int) -> "MatrixPoint":
        return cls(n, [[Fraction(0)] * n for _ in range(n)])

    @classmethod
    def from_dict(cls, n: int, entries: Mapping[tuple, Scalar]) -> "MatrixPoint":
        point = cls.zeros(n)
        for (i, j), value in entries.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"entry ({i},{j}) out of range for n={n}")
            point.rows[i - 1][j - 1] = Fraction(value)
        return point

    def get(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def support(self) -> set[tuple]:
        return {
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if self.rows[i][j] != 0
        }

    def to_dict(self) -> dict[tuple, Fraction]:
        return {(i, j): self.get(i, j) for (i, j) in sorted(self.support())}

    def copy(self) -> "MatrixPoint":
        return MatrixPoint(self.n, [row[:] for row in self.rows])

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [[i, j, str(self.get(i, j))] for (i, j) in sorted(self.support())],
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "MatrixPoint":
        n = int(doc["n"])
        point = cls.zeros(n)
        for i, j, value in doc["entries"]:
            if not isinstance(value, str):
                raise ValueError("matrix entries must be exact rational strings like '3/4'")
            point.rows[int(i) - 1][int(j) - 1] = Fraction(value)
        return point
