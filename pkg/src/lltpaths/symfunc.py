"""The algebra of symmetric functions over the q,t coefficient ring.

A `SymFunc` is a basis-tagged linear combination of partitions: one of
the classical bases m (monomial), e (elementary), h (complete
homogeneous), p (power sum), s (Schur).  All conversions route through
the monomial basis with per-degree transition matrices:

  * e_k = m_{(1^k)}, h_k = sum of all m_lam of degree k, p_k = m_{(k)},
    products expanded by exact monomial convolution;
  * s_mu = sum_lam K_{mu,lam} m_lam with Kostka numbers from the
    independent tableau-enumeration oracle;
  * the reverse direction solves the (invertible) transition matrix over
    Fraction once per degree and caches it.

Degrees may be mixed inside one SymFunc; every graded slice converts
independently.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .coeffring import CoeffQT
from .errors import LLTError
from .partitions import (
    DEGREE_BOUND,
    Partition,
    is_partition,
    kostka,
    partitions_of,
)

BASES = ("m", "e", "h", "p", "s")

ScalarLike = Union[int, Fraction, CoeffQT]

_M_MUL_CACHE: dict[tuple[Partition, Partition], dict[Partition, int]] = {}
_TRANSITION_CACHE: dict[tuple[str, int], tuple[list[Partition], list[list[Fraction]], list[list[Fraction]]]] = {}


def _coeff(v: ScalarLike) -> CoeffQT:
    if isinstance(v, CoeffQT):
        return v
    return CoeffQT.from_rational(v)


class SymFunc:
    """A finite linear combination of basis elements b_lambda over CoeffQT."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[Partition, ScalarLike] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict[Partition, CoeffQT] = {}
        if coeffs:
            for lam, v in coeffs.items():
                lam = tuple(lam)
                if not is_partition(lam):
                    raise ValueError(f"{lam} is not a partition")
                c = _coeff(v)
                if not c.is_zero():
                    clean[lam] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, basis: str = "m") -> "SymFunc":
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "m") -> "SymFunc":
        return cls(basis, {(): 1})

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int], coeff: ScalarLike = 1) -> "SymFunc":
        return cls(basis, {tuple(lam): coeff})

    # -- structure ---------------------------------------------------------

    def degrees(self) -> list[int]:
        return sorted({sum(lam) for lam in self.coeffs})

    def graded_slice(self, d: int) -> dict[Partition, CoeffQT]:
        return {lam: c for lam, c in self.coeffs.items() if sum(lam) == d}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.coeffs.items())))

    # -- linear arithmetic (same basis) -------------------------------------

    def _require_same_basis(self, other: "SymFunc") -> None:
        if self.basis != other.basis:
            raise LLTError(
                f"basis mismatch: {self.basis} vs {other.basis}; convert explicitly"
            )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._require_same_basis(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, CoeffQT.zero()) + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        res = SymFunc.__new__(SymFunc)
        res.basis = self.basis
        res.coeffs = out
        return res

    def __neg__(self) -> "SymFunc":
        res = SymFunc.__new__(SymFunc)
        res.basis = self.basis
        res.coeffs = {lam: -c for lam, c in self.coeffs.items()}
        return res

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, v: ScalarLike) -> "SymFunc":
        c = _coeff(v)
        if c.is_zero():
            return SymFunc(self.basis)
        res = SymFunc.__new__(SymFunc)
        res.basis = self.basis
        res.coeffs = {lam: w * c for lam, w in self.coeffs.items()}
        return res

    def map_coeffs(self, fn: Callable[[CoeffQT], CoeffQT]) -> "SymFunc":
        out = {}
        for lam, c in self.coeffs.items():
            v = fn(c)
            if not v.is_zero():
                out[lam] = v
        res = SymFunc.__new__(SymFunc)
        res.basis = self.basis
        res.coeffs = out
        return res

    def shift_q(self, c: int) -> "SymFunc":
        return self.map_coeffs(lambda v: v.shift_q(c))

    # -- conversions ---------------------------------------------------------

    def convert(self, target: str) -> "SymFunc":
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        out: dict[Partition, CoeffQT] = {}
        for d in self.degrees():
            slice_ = self.graded_slice(d)
            m_vec = slice_ if self.basis == "m" else _to_m(self.basis, d, slice_)
            if target == "m":
                converted = m_vec
            else:
                converted = _from_m(target, d, m_vec)
            for lam, c in converted.items():
                if not c.is_zero():
                    out[lam] = c
        res = SymFunc.__new__(SymFunc)
        res.basis = target
        res.coeffs = out
        return res

    def coefficient(self, basis: str, lam: Iterable[int]) -> CoeffQT:
        """The lam-coefficient of this function expressed in the given basis."""
        lam = tuple(lam)
        return self.convert(basis).coeffs.get(lam, CoeffQT.zero())

    def equals(self, other: "SymFunc") -> bool:
        """Equality as abstract symmetric functions (compared in the e-basis)."""
        return (self.convert("e") - other.convert("e")).is_zero()

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        """Product, returned in this function's basis.

        In a multiplicative basis (e, h, p) the product of basis elements
        is concatenation; the general case is monomial convolution in the
        m-basis.  The two routes agree (this is checked in the tests).
        """
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis and self.basis in ("e", "h", "p"):
            out: dict[Partition, CoeffQT] = {}
            for lam, a in self.coeffs.items():
                for mu, b in other.coeffs.items():
                    nu = tuple(sorted(lam + mu, reverse=True))
                    s = out.get(nu, CoeffQT.zero()) + a * b
                    if s.is_zero():
                        out.pop(nu, None)
                    else:
                        out[nu] = s
            return SymFunc(self.basis, out)
        fm = self.convert("m")
        gm = other.convert("m")
        out = {}
        for lam, a in fm.coeffs.items():
            for mu, b in gm.coeffs.items():
                ab = a * b
                for nu, count in _m_mul_pair(lam, mu).items():
                    s = out.get(nu, CoeffQT.zero()) + ab * count
                    if s.is_zero():
                        out.pop(nu, None)
                    else:
                        out[nu] = s
        return SymFunc("m", out).convert(self.basis)

    # -- the classical involution and the one plethysm we need ---------------

    def omega(self) -> "SymFunc":
        """The standard involution: p_k -> (-1)^(k-1) p_k, i.e. e <-> h."""
        p = self.convert("p")
        out = {
            lam: c if (sum(lam) - len(lam)) % 2 == 0 else -c
            for lam, c in p.coeffs.items()
        }
        res = SymFunc("p", out)
        return res.convert(self.basis)

    def pleth_q_minus_1(self) -> "SymFunc":
        """The substitution f |-> f[x(q-1)]: p_k -> (q^k - 1) p_k."""
        p = self.convert("p")
        out = {}
        for lam, c in p.coeffs.items():
            factor = CoeffQT.one()
            for part in lam:
                factor = factor * (CoeffQT.q(part) - CoeffQT.one())
            v = c * factor
            if not v.is_zero():
                out[lam] = v
        return SymFunc("p", out).convert(self.basis)

    # -- serialization and display --------------------------------------------

    def to_obj(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": c.to_obj()}
                for lam, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "SymFunc":
        return cls(
            obj["basis"],
            {
                tuple(term["partition"]): CoeffQT.from_obj(term["coeff"])
                for term in obj["terms"]
            },
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for lam, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            blob = f"{self.basis}[{','.join(map(str, lam))}]" if lam else None
            cs = str(c)
            if blob is None:
                bits.append(cs)
            elif cs == "1":
                bits.append(blob)
            elif cs == "-1":
                bits.append(f"-{blob}")
            elif len(c.terms) == 1 and not cs.startswith("-"):
                bits.append(f"{cs}*{blob}")
            else:
                bits.append(f"({cs})*{blob}")
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out

    def __repr__(self) -> str:
        return f"SymFunc({self})"


# -- monomial-basis multiplication --------------------------------------------


def _m_mul_pair(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Expansion of m_lam * m_mu as integer combinations of m_nu.

    The coefficient of m_nu counts vector pairs (a, b) with a a
    rearrangement of lam, b a rearrangement of mu (both padded with
    zeros to len(nu) slots) and a + b = nu componentwise.
    """
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    key = (lam, mu)
    cached = _M_MUL_CACHE.get(key)
    if cached is not None:
        return cached
    n = sum(lam) + sum(mu)
    maxlen = len(lam) + len(mu)
    out: dict[Partition, int] = {}
    for nu in partitions_of(n):
        r = len(nu)
        if r > maxlen or r < max(len(lam), len(mu)):
            continue
        avail_a = Counter(lam)
        avail_a[0] = r - len(lam)
        avail_b = Counter(mu)
        avail_b[0] = r - len(mu)

        def rec(i: int) -> int:
            if i == r:
                return 1
            total = 0
            for x in [v for v, k in avail_a.items() if k > 0 and v <= nu[i]]:
                y = nu[i] - x
                if avail_b.get(y, 0) <= 0:
                    continue
                avail_a[x] -= 1
                avail_b[y] -= 1
                total += rec(i + 1)
                avail_a[x] += 1
                avail_b[y] += 1
            return total

        count = rec(0)
        if count:
            out[nu] = count
    _M_MUL_CACHE[key] = out
    return out


def _m_mul(f: dict[Partition, Fraction], g: dict[Partition, Fraction]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            ab = a * b
            for nu, count in _m_mul_pair(lam, mu).items():
                s = out.get(nu, Fraction(0)) + ab * count
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
    return out


# -- transition matrices -------------------------------------------------------


def _expand_in_m(basis: str, lam: Partition) -> dict[Partition, Fraction]:
    """Monomial expansion of a single basis element b_lam (rational coefficients)."""
    if basis == "s":
        return {
            mu: Fraction(kostka(lam, mu))
            for mu in partitions_of(sum(lam))
            if kostka(lam, mu)
        }
    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for part in lam:
        if basis == "e":
            factor = {(1,) * part: Fraction(1)}
        elif basis == "p":
            factor = {(part,): Fraction(1)}
        elif basis == "h":
            factor = {mu: Fraction(1) for mu in partitions_of(part)}
        else:
            raise ValueError(basis)
        out = _m_mul(out, factor)
    return out


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Invert a square matrix over Fraction by Gauss-Jordan elimination."""
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise LLTError("transition matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _transition(basis: str, d: int):
    """(partitions of d, matrix basis->m, matrix m->basis), cached per degree.

    Cache inserts are idempotent, so concurrent construction is harmless.
    """
    key = (basis, d)
    cached = _TRANSITION_CACHE.get(key)
    if cached is not None:
        return cached
    if d > DEGREE_BOUND:
        raise LLTError(f"degree {d} exceeds the global bound {DEGREE_BOUND}")
    parts = partitions_of(d)
    index = {lam: i for i, lam in enumerate(parts)}
    mat = []
    for lam in parts:
        row = [Fraction(0)] * len(parts)
        for mu, v in _expand_in_m(basis, lam).items():
            row[index[mu]] = v
        mat.append(row)
    inv = _invert(mat)
    result = (parts, mat, inv)
    _TRANSITION_CACHE[key] = result
    return result


def _to_m(basis: str, d: int, coeffs: dict[Partition, CoeffQT]) -> dict[Partition, CoeffQT]:
    parts, mat, _ = _transition(basis, d)
    index = {lam: i for i, lam in enumerate(parts)}
    out: dict[Partition, CoeffQT] = {}
    for lam, c in coeffs.items():
        row = mat[index[lam]]
        for j, v in enumerate(row):
            if v:
                s = out.get(parts[j], CoeffQT.zero()) + c * v
                if s.is_zero():
                    out.pop(parts[j], None)
                else:
                    out[parts[j]] = s
    return out


def _from_m(basis: str, d: int, m_coeffs: dict[Partition, CoeffQT]) -> dict[Partition, CoeffQT]:
    parts, _, inv = _transition(basis, d)
    index = {lam: i for i, lam in enumerate(parts)}
    # coefficient vector in basis = m-vector times inverse matrix
    out: dict[Partition, CoeffQT] = {}
    for mu, c in m_coeffs.items():
        col = index[mu]
        for i in range(len(parts)):
            v = inv[col][i]
            if v:
                s = out.get(parts[i], CoeffQT.zero()) + c * v
                if s.is_zero():
                    out.pop(parts[i], None)
                else:
                    out[parts[i]] = s
    return out


# -- Jacobi-Trudi straightening -------------------------------------------------


def straighten_schur(alpha: Iterable[int]):
    """Straighten s_alpha for a composition alpha via the alpha+delta sorting rule.

    Returns None when the shifted vector alpha + (l-1, l-2, ..., 0) has a
    repeated or negative entry (the Schur function vanishes), otherwise a
    pair (sign, partition).
    """
    alpha = tuple(alpha)
    ell = len(alpha)
    shifted = [alpha[i] + (ell - 1 - i) for i in range(ell)]
    if any(v < 0 for v in shifted):
        return None
    if len(set(shifted)) != ell:
        return None
    inversions = sum(
        1
        for i in range(ell)
        for j in range(i + 1, ell)
        if shifted[i] < shifted[j]
    )
    sign = -1 if inversions % 2 else 1
    ordered = sorted(shifted, reverse=True)
    lam = [ordered[i] - (ell - 1 - i) for i in range(ell)]
    while lam and lam[-1] == 0:
        lam.pop()
    return sign, tuple(lam)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two symmetric functions, in f's basis."""
    return f * g
