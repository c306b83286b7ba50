"""Exact multivariate Laurent polynomials over the rationals.

Coefficients are ``fractions.Fraction`` (arbitrary precision, always reduced,
positive denominator), so every operation in this package is exact.  A
polynomial of dimension ``d`` is a finite map from exponent vectors (length-d
tuples of signed ints) to nonzero coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class NonInvertibleBaseError(ValueError):
    """Raised when a negative power of a non-monomial would be needed."""


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


def fraction_to_str(c: Fraction) -> str:
    """Serialize as "num/den", den omitted when 1."""
    c = _coerce(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``dim`` variables."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[tuple, object] | None = None):
        if dim < 1:
            raise ValueError("dim must be positive")
        clean: dict[tuple, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                e = tuple(int(x) for x in exps)
                if len(e) != dim:
                    raise ValueError(f"exponent vector {e} has wrong length for dim {dim}")
                c = _coerce(c)
                if c != 0:
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if clean[e] == 0:
                        del clean[e]
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "LaurentPoly":
        return LaurentPoly(dim)

    @staticmethod
    def const(dim: int, c) -> "LaurentPoly":
        return LaurentPoly(dim, {tuple([0] * dim): _coerce(c)})

    @staticmethod
    def one(dim: int) -> "LaurentPoly":
        return LaurentPoly.const(dim, 1)

    @staticmethod
    def monomial(dim: int, exps: Sequence[int], c=1) -> "LaurentPoly":
        return LaurentPoly(dim, {tuple(exps): _coerce(c)})

    @staticmethod
    def variable(dim: int, var: int) -> "LaurentPoly":
        e = [0] * dim
        e[var] = 1
        return LaurentPoly(dim, {tuple(e): Fraction(1)})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        """Coefficient of the zero exponent vector."""
        return self.terms.get(tuple([0] * self.dim), Fraction(0))

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "dim", self.dim)
        object.__setattr__(out, "terms", terms)
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "dim", self.dim)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "dim", self.dim)
        object.__setattr__(out, "terms", terms)
        return out

    def scale(self, c) -> "LaurentPoly":
        c = _coerce(c)
        if c == 0:
            return LaurentPoly.zero(self.dim)
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "dim", self.dim)
        object.__setattr__(out, "terms", {e: c * v for e, v in self.terms.items()})
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            raise TypeError("integer power required")
        if n < 0:
            return self.invert() ** (-n)
        result = LaurentPoly.one(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self) -> "LaurentPoly":
        """Inverse, defined only for a single nonzero monomial."""
        if len(self.terms) != 1:
            raise NonInvertibleBaseError(
                "only monomials are invertible in the Laurent ring"
            )
        (e, c), = self.terms.items()
        return LaurentPoly.monomial(self.dim, tuple(-x for x in e), Fraction(1) / c)

    def partial(self, var: int) -> "LaurentPoly":
        """Formal partial derivative in variable ``var``."""
        if not 0 <= var < self.dim:
            raise ValueError(f"variable index {var} out of range")
        terms: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            ne = list(e)
            ne[var] = k - 1
            ne = tuple(ne)
            s = terms.get(ne, Fraction(0)) + c * k
            if s == 0:
                terms.pop(ne, None)
            else:
                terms[ne] = s
        return LaurentPoly(self.dim, terms)

    # -- substitution --------------------------------------------------------

    def compose(self, parts: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """Substitute ``parts[i]`` for variable ``i``.

        Negative exponents require the corresponding part to be an invertible
        monomial (true for all standard projective transition maps).
        """
        if len(parts) != self.dim:
            raise ValueError("wrong number of substituted components")
        if not parts:
            raise ValueError("empty substitution")
        tdim = parts[0].dim
        for p in parts:
            if p.dim != tdim:
                raise ValueError("substituted components disagree on dimension")
        # cache powers per variable
        pow_cache: list[dict[int, LaurentPoly]] = [
            {0: LaurentPoly.one(tdim)} for _ in range(self.dim)
        ]

        def power(i: int, k: int) -> LaurentPoly:
            cache = pow_cache[i]
            if k in cache:
                return cache[k]
            if k > 0:
                cache[k] = power(i, k - 1) * parts[i]
            else:
                if not parts[i].is_monomial():
                    raise NonInvertibleBaseError(
                        f"non-invertible base point: component {i} is not a monomial"
                    )
                cache[k] = power(i, k + 1) * parts[i].invert()
            return cache[k]

        acc = LaurentPoly.zero(tdim)
        for e, c in self.terms.items():
            term = LaurentPoly.const(tdim, c)
            for i, k in enumerate(e):
                if k != 0:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    # -- serialization -------------------------------------------------------

    def to_json(self) -> list:
        return [
            {"exps": list(e), "coef": fraction_to_str(c)}
            for e, c in sorted(self.terms.items())
        ]

    @staticmethod
    def from_json(dim: int, data: Iterable[dict]) -> "LaurentPoly":
        return LaurentPoly(dim, {tuple(t["exps"]): Fraction(t["coef"]) for t in data})

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{i}^{k}" for i, k in enumerate(e) if k != 0
            )
            bits.append(f"{fraction_to_str(c)}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


class ChartMap:
    """A tuple of Laurent polynomials, one per target coordinate."""

    __slots__ = ("source_dim", "target_dim", "components")

    def __init__(self, components: Sequence[LaurentPoly]):
        if not components:
            raise ValueError("a chart map needs at least one component")
        sd = components[0].dim
        for p in components:
            if p.dim != sd:
                raise ValueError("components disagree on source dimension")
        object.__setattr__(self, "source_dim", sd)
        object.__setattr__(self, "target_dim", len(components))
        object.__setattr__(self, "components", tuple(components))

    def __setattr__(self, *a):
        raise AttributeError("ChartMap is immutable")

    @staticmethod
    def identity(dim: int) -> "ChartMap":
        return ChartMap([LaurentPoly.variable(dim, i) for i in range(dim)])

    def apply(self, p: LaurentPoly) -> LaurentPoly:
        """Pull a function on the target back along this map."""
        if p.dim != self.target_dim:
            raise ValueError("dimension mismatch in chart-map application")
        return p.compose(self.components)

    def after(self, other: "ChartMap") -> "ChartMap":
        """self ∘ other, evaluated exactly."""
        if other.target_dim != self.source_dim:
            raise ValueError("chart maps are not composable")
        return ChartMap([other.apply(c) for c in self.components])

    def jacobian(self) -> list[list[LaurentPoly]]:
        """Matrix J[mu][nu] = d(component mu)/d(source variable nu)."""
        return [
            [comp.partial(nu) for nu in range(self.source_dim)]
            for comp in self.components
        ]

    def __eq__(self, other) -> bool:
        return isinstance(other, ChartMap) and self.components == other.components

    def __repr__(self) -> str:
        return "ChartMap(" + ", ".join(repr(c) for c in self.components) + ")"
