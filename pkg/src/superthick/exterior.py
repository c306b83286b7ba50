"""Grassmann algebra on q odd generators with Laurent coefficients.

Elements are finite maps from strictly increasing index tuples (subsets of
1..q) to LaurentPoly coefficients in p even variables.  Indices are kept
sorted at construction, paying Koszul signs there, so theta_a^2 = 0 is
structural.  The left convention is used for the odd derivations:
d/dtheta_a (theta_{i1}...theta_{in}) = (-1)^(j-1) theta_{i1}...^...theta_{in}
when a = i_j.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .laurent import ChartMap, LaurentPoly


def sort_index_tuple(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort an odd-index word, returning (sorted tuple, Koszul sign).

    Returns sign 0 when an index repeats.
    """
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


def merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Koszul sign for merging two disjoint sorted index tuples, 0 on overlap."""
    sign = 1
    inversions = 0
    li = 0
    for r in right:
        while li < len(left) and left[li] < r:
            li += 1
        if li < len(left) and left[li] == r:
            return 0
        inversions += len(left) - li
    if inversions % 2:
        sign = -1
    return sign


def merge_indices(left: tuple[int, ...], right: tuple[int, ...]):
    sign = merge_sign(left, right)
    if sign == 0:
        return None, 0
    merged = tuple(sorted(left + right))
    return merged, sign


class GrassmannElement:
    """Element of Lambda(theta_1..theta_q) tensor LaurentPoly(p variables)."""

    __slots__ = ("p", "q", "terms")

    def __init__(self, p: int, q: int, terms: Mapping[tuple, LaurentPoly] | None = None):
        clean: dict[tuple, LaurentPoly] = {}
        if terms:
            for idx, coef in terms.items():
                idx = tuple(idx)
                if any(not 1 <= i <= q for i in idx):
                    raise ValueError(f"odd index out of range 1..{q}: {idx}")
                if list(idx) != sorted(set(idx)):
                    raise ValueError(f"index tuple must be strictly increasing: {idx}")
                if coef.dim != p:
                    raise ValueError("coefficient dimension mismatch")
                if not coef.is_zero():
                    if idx in clean:
                        s = clean[idx] + coef
                        if s.is_zero():
                            del clean[idx]
                        else:
                            clean[idx] = s
                    else:
                        clean[idx] = coef
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("GrassmannElement is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(p: int, q: int) -> "GrassmannElement":
        return GrassmannElement(p, q)

    @staticmethod
    def scalar(p: int, q: int, poly: LaurentPoly) -> "GrassmannElement":
        return GrassmannElement(p, q, {(): poly})

    @staticmethod
    def theta(p: int, q: int, index: int, coef: LaurentPoly | None = None) -> "GrassmannElement":
        coef = coef if coef is not None else LaurentPoly.one(p)
        return GrassmannElement(p, q, {(index,): coef})

    @staticmethod
    def term(p: int, q: int, indices: Sequence[int], coef: LaurentPoly) -> "GrassmannElement":
        idx, sign = sort_index_tuple(indices)
        if sign == 0:
            return GrassmannElement.zero(p, q)
        return GrassmannElement(p, q, {idx: coef if sign == 1 else -coef})

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def body(self) -> LaurentPoly:
        """Degree-0 part."""
        return self.terms.get((), LaurentPoly.zero(self.p))

    def soul(self) -> "GrassmannElement":
        """Everything of theta-degree > 0."""
        return GrassmannElement(self.p, self.q, {k: v for k, v in self.terms.items() if k})

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def is_even(self) -> bool:
        return all(len(k) % 2 == 0 for k in self.terms)

    def is_odd(self) -> bool:
        return all(len(k) % 2 == 1 for k in self.terms)

    def degree_part(self, d: int) -> "GrassmannElement":
        return GrassmannElement(
            self.p, self.q, {k: v for k, v in self.terms.items() if len(k) == d}
        )

    def coeff(self, indices: Sequence[int]) -> LaurentPoly:
        idx, sign = sort_index_tuple(indices)
        if sign == 0:
            return LaurentPoly.zero(self.p)
        c = self.terms.get(idx, LaurentPoly.zero(self.p))
        return c if sign == 1 else -c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GrassmannElement)
            and (self.p, self.q) == (other.p, other.q)
            and self.terms == other.terms
        )

    # -- algebra -------------------------------------------------------------

    def _check(self, other: "GrassmannElement"):
        if (self.p, self.q) != (other.p, other.q):
            raise ValueError("Grassmann dimensions mismatch")

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            if k in terms:
                s = terms[k] + v
                if s.is_zero():
                    del terms[k]
                else:
                    terms[k] = s
            else:
                terms[k] = v
        out = GrassmannElement.__new__(GrassmannElement)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "q", self.q)
        object.__setattr__(out, "terms", terms)
        return out

    def __neg__(self) -> "GrassmannElement":
        out = GrassmannElement.__new__(GrassmannElement)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "q", self.q)
        object.__setattr__(out, "terms", {k: -v for k, v in self.terms.items()})
        return out

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + (-other)

    def wedge(self, other: "GrassmannElement") -> "GrassmannElement":
        self._check(other)
        terms: dict[tuple, LaurentPoly] = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                merged, sign = merge_indices(i1, i2)
                if sign == 0:
                    continue
                prod = c1 * c2
                if sign == -1:
                    prod = -prod
                if merged in terms:
                    s = terms[merged] + prod
                    if s.is_zero():
                        del terms[merged]
                    else:
                        terms[merged] = s
                else:
                    if not prod.is_zero():
                        terms[merged] = prod
        out = GrassmannElement.__new__(GrassmannElement)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "q", self.q)
        object.__setattr__(out, "terms", terms)
        return out

    __mul__ = wedge

    def scale(self, c) -> "GrassmannElement":
        return GrassmannElement(
            self.p, self.q, {k: v.scale(c) for k, v in self.terms.items()}
        )

    def scale_poly(self, poly: LaurentPoly) -> "GrassmannElement":
        return GrassmannElement(
            self.p, self.q, {k: v * poly for k, v in self.terms.items()}
        )

    def truncate(self, m: int) -> "GrassmannElement":
        """Quotient mod J^(m+1): drop terms of theta-degree > m."""
        if m < 0:
            return GrassmannElement.zero(self.p, self.q)
        return GrassmannElement(
            self.p, self.q, {k: v for k, v in self.terms.items() if len(k) <= m}
        )

    def odd_derivation(self, index: int) -> "GrassmannElement":
        """Left derivative with respect to theta_index."""
        if not 1 <= index <= self.q:
            raise ValueError(f"odd index out of range: {index}")
        terms: dict[tuple, LaurentPoly] = {}
        for idx, coef in self.terms.items():
            if index not in idx:
                continue
            pos = idx.index(index)
            rest = idx[:pos] + idx[pos + 1 :]
            val = coef if pos % 2 == 0 else -coef
            if rest in terms:
                s = terms[rest] + val
                if s.is_zero():
                    del terms[rest]
                else:
                    terms[rest] = s
            else:
                terms[rest] = val
        return GrassmannElement(self.p, self.q, terms)

    def wedge_power(self, n: int) -> "GrassmannElement":
        result = GrassmannElement.scalar(self.p, self.q, LaurentPoly.one(self.p))
        for _ in range(n):
            result = result.wedge(self)
            if result.is_zero():
                break
        return result

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list:
        return [
            {"indices": list(k), "coef": v.to_json()}
            for k, v in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(p: int, q: int, data: Iterable[dict]) -> "GrassmannElement":
        return GrassmannElement(
            p, q, {tuple(t["indices"]): LaurentPoly.from_json(p, t["coef"]) for t in data}
        )

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for k, v in sorted(self.terms.items()):
            th = "".join(f"th{i}" for i in k)
            bits.append(f"({v!r})" + (f"*{th}" if th else ""))
        return " + ".join(bits)


def substitute_nilpotent(
    poly: LaurentPoly,
    base: ChartMap,
    nilpotent: Sequence[GrassmannElement],
    order: int,
) -> GrassmannElement:
    """Evaluate poly(base + nilpotent) mod J^(order+1) by a finite Taylor sum.

    Each nilpotent entry must be even with vanishing body, so its theta-degree
    is at least 2 and the multi-index sum terminates.  Negative exponents are
    admissible exactly when the base component is an invertible monomial.
    """
    if poly.dim != base.target_dim:
        raise ValueError("polynomial and base dimensions mismatch")
    if len(nilpotent) != poly.dim:
        raise ValueError("one nilpotent shift per variable is required")
    p_dim = base.source_dim
    if not nilpotent:
        raise ValueError("empty substitution")
    q = nilpotent[0].q
    for n in nilpotent:
        if (n.p, n.q) != (p_dim, q):
            raise ValueError("nilpotent shifts disagree on dimensions")
        if not n.is_even() or not n.body().is_zero():
            raise ValueError("nilpotent shifts must be even with zero body")

    nonzero = [i for i, n in enumerate(nilpotent) if not n.is_zero()]
    # wedge powers of each shift, up to nilpotency or the truncation order
    powers: dict[int, list[GrassmannElement]] = {}
    for i in nonzero:
        lst = [GrassmannElement.scalar(p_dim, q, LaurentPoly.one(p_dim))]
        while True:
            nxt = lst[-1].wedge(nilpotent[i]).truncate(order)
            if nxt.is_zero():
                break
            lst.append(nxt)
        powers[i] = lst

    deriv_cache: dict[tuple, LaurentPoly] = {tuple([0] * poly.dim): poly}

    def derivative(alpha: tuple) -> LaurentPoly:
        if alpha in deriv_cache:
            return deriv_cache[alpha]
        for v in range(poly.dim):
            if alpha[v] > 0:
                prev = list(alpha)
                prev[v] -= 1
                d = derivative(tuple(prev)).partial(v)
                deriv_cache[alpha] = d
                return d
        raise AssertionError

    result = GrassmannElement.zero(p_dim, q)

    def loop(pos: int, alpha: list[int], wedge: GrassmannElement, fact: int):
        nonlocal result
        if wedge.is_zero():
            return
        if pos == len(nonzero):
            d = derivative(tuple(alpha))
            if d.is_zero():
                return
            val = base.apply(d).scale(Fraction(1, fact))
            result = result + wedge.scale_poly(val)
            return
        i = nonzero[pos]
        for k in range(len(powers[i])):
            alpha[i] = k
            loop(pos + 1, alpha, wedge.wedge(powers[i][k]).truncate(order), fact * factorial(k))
            alpha[i] = 0

    loop(0, [0] * poly.dim, GrassmannElement.scalar(p_dim, q, LaurentPoly.one(p_dim)), 1)
    return result.truncate(order)
