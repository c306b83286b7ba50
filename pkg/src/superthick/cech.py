"""Covers of P^1 and P^2, alternating cochains, twisted coboundaries, and
exact cohomology of line-bundle sums by monomial bookkeeping.

Conventions.  Chart i of P^n is {z_i != 0} with affine coordinates
z_l/z_i for l != i, listed in increasing l.  All transition maps are monomial,
so every transport (pullback of arguments, Jacobian action on tangent
components, inverse Jacobian on one-forms, monomial factor per line-bundle
twist) is exact Laurent arithmetic.

A cochain stores one section per sorted simplex, presented entirely in the
chart of the smallest index: arguments, vector frame and bundle frame alike.
Values on permuted index tuples are the stored value times the sign of the
permutation.  The coboundary is the classical alternating sum with transports
made explicit, so delta о delta = 0 holds exactly.

Every section decomposes over torus characters (exponent vectors of the
homogeneous coordinates), the coboundary preserves the character, and each
character pins down at most one monomial per simplex, summand and component.
Coboundary equations therefore split into small exact linear systems, one per
character, and solving them is complete: no truncation window enters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import ChartMap, LaurentPoly, fraction_to_str
from . import linalg


# ---------------------------------------------------------------------------
# covers


class Cover:
    """The standard affine cover of P^n, n in {1, 2}."""

    def __init__(self, n: int):
        if n not in (1, 2):
            raise ValueError("only P^1 and P^2 are supported")
        self.n = n
        self.charts = tuple(range(n + 1))
        self._transitions: dict[tuple[int, int], ChartMap] = {}
        self._jacobians: dict[tuple[int, int], list[list[LaurentPoly]]] = {}

    def chart_vars(self, i: int) -> tuple[int, ...]:
        """Homogeneous indices of the affine coordinates of chart i."""
        return tuple(l for l in self.charts if l != i)

    def var_pos(self, i: int, l: int) -> int:
        return self.chart_vars(i).index(l)

    def transition(self, i: int, j: int) -> ChartMap:
        """Chart-j coordinates as monomial functions of chart-i coordinates."""
        key = (i, j)
        if key not in self._transitions:
            n = self.n
            comps = []
            for l in self.chart_vars(j):
                exps = [0] * n
                if l != i:
                    exps[self.var_pos(i, l)] += 1
                exps[self.var_pos(i, j)] -= 1
                comps.append(LaurentPoly.monomial(n, exps))
            self._transitions[key] = ChartMap(comps)
        return self._transitions[key]

    def jacobian(self, i: int, j: int) -> list[list[LaurentPoly]]:
        key = (i, j)
        if key not in self._jacobians:
            self._jacobians[key] = self.transition(i, j).jacobian()
        return self._jacobians[key]

    def line_factor(self, a: int, b: int, k: int) -> LaurentPoly:
        """(z_a / z_b)^k as a chart-b monomial; re-presents O(k) data a -> b."""
        exps = [0] * self.n
        if a != b:
            exps[self.var_pos(b, a)] = k
        return LaurentPoly.monomial(self.n, exps)

    def simplices(self, q: int) -> list[tuple[int, ...]]:
        return [tuple(s) for s in itertools.combinations(self.charts, q + 1)]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return self.simplices(1)

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        return self.simplices(2)

    def __eq__(self, other):
        return isinstance(other, Cover) and self.n == other.n

    def __repr__(self):
        return f"Cover(P^{self.n})"


def standard_cover(n: int) -> Cover:
    return Cover(n)


# ---------------------------------------------------------------------------
# sheaves and sections

LINE_SUM = "line_sum"
TANGENT = "tangent_twisted"
ONE_FORM = "oneform_twisted"


@dataclass(frozen=True)
class SheafSpec:
    """A direct sum of twisted line/tangent/one-form pieces over a cover."""

    cover: Cover
    kind: str
    twists: tuple[int, ...]
    labels: tuple = ()

    def __post_init__(self):
        if self.kind not in (LINE_SUM, TANGENT, ONE_FORM):
            raise ValueError(f"unknown sheaf kind {self.kind!r}")
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if self.labels and len(self.labels) != len(self.twists):
            raise ValueError("one label per summand required")

    @property
    def ncomp(self) -> int:
        return 1 if self.kind == LINE_SUM else self.cover.n

    @property
    def nsummands(self) -> int:
        return len(self.twists)


def line_sum(cover: Cover, twists, labels=()) -> SheafSpec:
    return SheafSpec(cover, LINE_SUM, tuple(twists), tuple(labels))


def tangent_twisted(cover: Cover, twists, labels=()) -> SheafSpec:
    return SheafSpec(cover, TANGENT, tuple(twists), tuple(labels))


def oneform_twisted(cover: Cover, twists, labels=()) -> SheafSpec:
    return SheafSpec(cover, ONE_FORM, tuple(twists), tuple(labels))


Section = tuple  # tuple over summands of tuples over components of LaurentPoly


def section_zero(spec: SheafSpec) -> Section:
    z = LaurentPoly.zero(spec.cover.n)
    return tuple(tuple(z for _ in range(spec.ncomp)) for _ in spec.twists)


def section_map(f, *sections: Section) -> Section:
    return tuple(
        tuple(f(*comps) for comps in zip(*summands))
        for summands in zip(*sections)
    )


def section_add(a: Section, b: Section) -> Section:
    return section_map(lambda x, y: x + y, a, b)


def section_neg(a: Section) -> Section:
    return section_map(lambda x: -x, a)


def section_scale(a: Section, c) -> Section:
    return section_map(lambda x: x.scale(c), a)


def section_is_zero(a: Section) -> bool:
    return all(comp.is_zero() for summand in a for comp in summand)


def represent(spec: SheafSpec, sec: Section, a: int, b: int) -> Section:
    """Re-present a section from chart a to chart b (args, frames and twist)."""
    if a == b:
        return sec
    cover = spec.cover
    f_ba = cover.transition(b, a)
    out = []
    for s, twist in enumerate(spec.twists):
        lf = cover.line_factor(a, b, twist)
        comps = sec[s]
        if spec.kind == LINE_SUM:
            new = (lf * f_ba.apply(comps[0]),)
        elif spec.kind == TANGENT:
            jac = cover.jacobian(a, b)  # d x^(b)_mu / d x^(a)_nu, chart-a args
            new = tuple(
                lf
                * sum(
                    (f_ba.apply(jac[mu][nu]) * f_ba.apply(comps[nu]) for nu in range(cover.n)),
                    LaurentPoly.zero(cover.n),
                )
                for mu in range(cover.n)
            )
        else:  # one-forms: d x^(a)_nu = sum_mu (d f_ba_nu / d x^(b)_mu) d x^(b)_mu
            jac = cover.jacobian(b, a)  # chart-b args directly
            new = tuple(
                lf
                * sum(
                    (jac[nu][mu] * f_ba.apply(comps[nu]) for nu in range(cover.n)),
                    LaurentPoly.zero(cover.n),
                )
                for mu in range(cover.n)
            )
        out.append(new)
    return tuple(out)


# ---------------------------------------------------------------------------
# cochains


def perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


class Cochain:
    """Alternating assignment of sections to the nerve simplices."""

    def __init__(self, sheaf: SheafSpec, degree: int, values: dict | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.sheaf = sheaf
        self.degree = degree
        vals: dict[tuple, Section] = {}
        if values:
            for key, sec in values.items():
                key = tuple(key)
                if list(key) != sorted(key) or len(key) != degree + 1:
                    raise ValueError(f"cochain keys must be sorted {degree + 1}-tuples: {key}")
                if not section_is_zero(sec):
                    vals[key] = sec
        self.values = vals

    def value(self, simplex) -> Section:
        """Alternating lookup; the result is presented in chart min(simplex)."""
        simplex = tuple(simplex)
        key = tuple(sorted(simplex))
        if len(set(simplex)) != len(simplex):
            return section_zero(self.sheaf)
        stored = self.values.get(key)
        if stored is None:
            return section_zero(self.sheaf)
        sign = perm_sign(simplex)
        return stored if sign == 1 else section_neg(stored)

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.sheaf != other.sheaf or self.degree != other.degree:
            raise ValueError("cochain mismatch")
        keys = set(self.values) | set(other.values)
        return Cochain(
            self.sheaf,
            self.degree,
            {k: section_add(self.value(k), other.value(k)) for k in keys},
        )

    def __neg__(self) -> "Cochain":
        return Cochain(self.sheaf, self.degree, {k: section_neg(v) for k, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c) -> "Cochain":
        return Cochain(self.sheaf, self.degree, {k: section_scale(v, c) for k, v in self.values.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.sheaf == other.sheaf
            and self.degree == other.degree
            and self.values == other.values
        )

    def to_json(self) -> dict:
        vals = {}
        for key, sec in sorted(self.values.items()):
            vals[",".join(map(str, key))] = [
                [comp.to_json() for comp in summand] for summand in sec
            ]
        return {
            "sheaf": {"kind": self.sheaf.kind, "twists": list(self.sheaf.twists)},
            "degree": self.degree,
            "values": vals,
        }

    @staticmethod
    def from_json(cover: Cover, data: dict) -> "Cochain":
        spec = SheafSpec(cover, data["sheaf"]["kind"], tuple(data["sheaf"]["twists"]))
        values = {}
        for key, sec in data["values"].items():
            simplex = tuple(int(x) for x in key.split(","))
            values[simplex] = tuple(
                tuple(LaurentPoly.from_json(cover.n, comp) for comp in summand)
                for summand in sec
            )
        return Cochain(spec, data["degree"], values)

    def __repr__(self):
        return f"Cochain(deg={self.degree}, {len(self.values)} simplices)"


def zero_cochain(spec: SheafSpec, degree: int) -> Cochain:
    return Cochain(spec, degree)


def coboundary(c: Cochain) -> Cochain:
    """Twisted Čech differential; the untwisted case is the alternating sum."""
    spec = c.sheaf
    cover = spec.cover
    out: dict[tuple, Section] = {}
    for simplex in cover.simplices(c.degree + 1):
        chart = simplex[0]
        acc = section_zero(spec)
        for j in range(len(simplex)):
            face = simplex[:j] + simplex[j + 1 :]
            sec = c.value(face)
            sec = represent(spec, sec, face[0], chart)
            if j % 2 == 1:
                sec = section_neg(sec)
            acc = section_add(acc, sec)
        if not section_is_zero(acc):
            out[simplex] = acc
    return Cochain(spec, c.degree + 1, out)


# ---------------------------------------------------------------------------
# character grading

Char = tuple  # length n+1 exponent vector of homogeneous coordinates


def monomial_char(spec: SheafSpec, chart: int, summand: int, comp: int, exps) -> Char:
    """Torus character of one monomial of a section in chart presentation."""
    cover = spec.cover
    g = [0] * (cover.n + 1)
    for pos, l in enumerate(cover.chart_vars(chart)):
        g[l] = exps[pos]
    g[chart] = spec.twists[summand] - sum(exps)
    if spec.kind == TANGENT:
        mu = cover.chart_vars(chart)[comp]
        g[chart] += 1
        g[mu] -= 1
    elif spec.kind == ONE_FORM:
        mu = cover.chart_vars(chart)[comp]
        g[chart] -= 1
        g[mu] += 1
    return tuple(g)


def char_monomial_exps(spec: SheafSpec, chart: int, summand: int, comp: int, g: Char):
    """Inverse of monomial_char; None when the character misses this slot."""
    cover = spec.cover
    adjust = [0] * (cover.n + 1)
    if spec.kind in (TANGENT, ONE_FORM):
        mu = cover.chart_vars(chart)[comp]
        s = 1 if spec.kind == TANGENT else -1
        adjust[chart] += s
        adjust[mu] -= s
    exps = []
    for l in cover.chart_vars(chart):
        exps.append(g[l] - adjust[l])
    implied = spec.twists[summand] - sum(exps) + adjust[chart]
    if implied != g[chart]:
        return None
    return tuple(exps)


def _cone_ok(cover: Cover, simplex: tuple, chart: int, exps) -> bool:
    # regular on U_simplex: poles only along z_l with l in the simplex
    for pos, l in enumerate(cover.chart_vars(chart)):
        if exps[pos] < 0 and l not in simplex:
            return False
    return True


@dataclass(frozen=True)
class BasisSlot:
    simplex: tuple
    summand: int
    comp: int
    exps: tuple


def char_basis(spec: SheafSpec, degree: int, summand: int, g: Char) -> list[BasisSlot]:
    """All monomial slots of character g in degree-``degree`` cochains."""
    cover = spec.cover
    slots = []
    for simplex in cover.simplices(degree):
        chart = simplex[0]
        for comp in range(spec.ncomp):
            exps = char_monomial_exps(spec, chart, summand, comp, g)
            if exps is not None and _cone_ok(cover, simplex, chart, exps):
                slots.append(BasisSlot(simplex, summand, comp, exps))
    return slots


def cochain_from_slot(spec: SheafSpec, degree: int, slot: BasisSlot, coef=1) -> Cochain:
    sec = [
        [LaurentPoly.zero(spec.cover.n) for _ in range(spec.ncomp)]
        for _ in spec.twists
    ]
    sec[slot.summand][slot.comp] = LaurentPoly.monomial(spec.cover.n, slot.exps, coef)
    return Cochain(spec, degree, {slot.simplex: tuple(tuple(r) for r in sec)})


def cochain_chars(c: Cochain) -> dict[tuple[int, Char], dict[BasisSlot, Fraction]]:
    """Decompose a cochain into (summand, character) blocks of coefficients."""
    blocks: dict[tuple[int, Char], dict[BasisSlot, Fraction]] = {}
    for simplex, sec in c.values.items():
        chart = simplex[0]
        for s, summand in enumerate(sec):
            for comp, poly in enumerate(summand):
                for exps, coef in poly.terms.items():
                    g = monomial_char(c.sheaf, chart, s, comp, exps)
                    slot = BasisSlot(simplex, s, comp, exps)
                    blocks.setdefault((s, g), {})[slot] = coef
    return blocks


def delta_block_matrix(
    spec: SheafSpec, degree: int, summand: int, g: Char
) -> tuple[list[BasisSlot], list[BasisSlot], list[list[Fraction]]]:
    """Exact matrix of the coboundary on one (summand, character) block.

    Returns (domain slots, codomain slots, matrix) with matrix[row][col]
    giving the codomain coefficient of the image of the col-th domain slot.
    """
    dom = char_basis(spec, degree, summand, g)
    cod = char_basis(spec, degree + 1, summand, g)
    index = {slot: i for i, slot in enumerate(cod)}
    mat = [[Fraction(0)] * len(dom) for _ in cod]
    for col, slot in enumerate(dom):
        image = coboundary(cochain_from_slot(spec, degree, slot))
        for (s, gg), coeffs in cochain_chars(image).items():
            if (s, gg) != (summand, g):
                raise AssertionError("coboundary failed to preserve the character")
            for cslot, coef in coeffs.items():
                mat[index[cslot]][col] = coef
    return dom, cod, mat


# ---------------------------------------------------------------------------
# monomial oracle for line bundles


def _char_complex_dims(n: int, g: Char) -> dict[int, int]:
    """Cohomology of the one-character Čech complex, by explicit small ranks."""
    poles = frozenset(l for l, e in enumerate(g) if e < 0)
    charts = list(range(n + 1))
    simplices = {
        q: [s for s in itertools.combinations(charts, q + 1) if poles <= set(s)]
        for q in range(n + 1)
    }

    def delta(q):
        dom = simplices[q]
        cod = simplices.get(q + 1, [])
        idx = {s: i for i, s in enumerate(cod)}
        mat = [[Fraction(0)] * len(dom) for _ in cod]
        for col, s in enumerate(dom):
            for big in cod:
                missing = [v for v in big if v not in s]
                if len(missing) == 1 and set(s) <= set(big):
                    j = big.index(missing[0])
                    mat[idx[big]][col] = Fraction((-1) ** j)
        return mat

    dims = {}
    for q in range(n + 1):
        dom = simplices[q]
        mat_out = delta(q)
        rank_out = linalg.rank(mat_out) if mat_out and dom else 0
        if q == 0:
            rank_in = 0
        else:
            mat_in = delta(q - 1)
            rank_in = linalg.rank(mat_in) if mat_in and simplices[q - 1] else 0
        dims[q] = len(dom) - rank_out - rank_in
    return dims


def _compositions(total: int, parts: int, lower: int):
    """All integer tuples of the given length with entries >= lower summing to total."""
    if parts == 1:
        if total >= lower:
            yield (total,)
        return
    rest_min = lower * (parts - 1)
    v = lower
    while total - v >= rest_min:
        for tail in _compositions(total - v, parts - 1, lower):
            yield (v,) + tail
        v += 1


@dataclass
class CohomologyReport:
    dims: dict[int, int]
    representatives: dict[int, list[Cochain]]
    method: str
    complete: bool = True
    notes: list[str] = field(default_factory=list)


def line_bundle_cohomology(n: int, k: int, q: int) -> CohomologyReport:
    """Exact h^q(P^n, O(k)) by classifying monomial characters.

    A character contributes only when its pole set is empty or full; the star
    of any intermediate pole set is a cone, hence acyclic, which the rank
    computation in _char_complex_dims reproduces on every candidate char.
    """
    if n not in (1, 2):
        raise ValueError("only n in {1, 2} is supported")
    if not 0 <= q <= n:
        return CohomologyReport({q: 0}, {q: []}, "monomial-oracle")
    cover = standard_cover(n)
    spec = line_sum(cover, [k])
    candidates: list[Char] = []
    candidates.extend(_compositions(k, n + 1, 0))  # no poles
    # full pole set: entries a_i = -1 - b_i with b_i >= 0 summing to -k-(n+1)
    for g in _compositions(-k - (n + 1), n + 1, 0):
        candidates.append(tuple(-1 - x for x in g))
    dim = 0
    reps: list[Cochain] = []
    for g in candidates:
        h = _char_complex_dims(n, g).get(q, 0)
        if h == 0:
            continue
        dim += h
        if q == 0:
            chart_vals = {}
            for c in cover.charts:
                exps = char_monomial_exps(spec, c, 0, 0, g)
                chart_vals[(c,)] = ((LaurentPoly.monomial(n, exps),),)
            reps.append(Cochain(spec, 0, chart_vals))
        else:
            simplex = tuple(range(n + 1)) if q == n else None
            if simplex is not None:
                exps = char_monomial_exps(spec, simplex[0], 0, 0, g)
                reps.append(
                    Cochain(spec, q, {simplex: ((LaurentPoly.monomial(n, exps),),)})
                )
    return CohomologyReport({q: dim}, {q: reps}, "monomial-oracle")


# ---------------------------------------------------------------------------
# exact solving and representatives


class NotACocycleError(ValueError):
    def __init__(self, residual: Cochain):
        super().__init__("input cochain is not a cocycle")
        self.residual = residual


def solve_coboundary(target: Cochain):
    """Exact preimage of the coboundary, or an infeasibility certificate.

    Returns (solution, certificate): one of the two is None.  Solving splits
    over (summand, character) blocks; each block is finite, so infeasibility
    of any block certifies that the target class is nonzero.  The certificate
    lists the infeasible blocks.
    """
    residual = coboundary(target)
    if not residual.is_zero():
        raise NotACocycleError(residual)
    spec = target.sheaf
    deg = target.degree
    if deg not in (1, 2):
        raise ValueError("can only solve for preimages of 1- and 2-cochains")
    solution = zero_cochain(spec, deg - 1)
    infeasible: list[tuple[int, Char]] = []
    for (summand, g), coeffs in sorted(cochain_chars(target).items()):
        dom, cod, mat = delta_block_matrix(spec, deg - 1, summand, g)
        rhs = [Fraction(0)] * len(cod)
        idx = {slot: i for i, slot in enumerate(cod)}
        for slot, coef in coeffs.items():
            rhs[idx[slot]] = coef
        x = linalg.solve(mat, rhs) if cod else None
        if x is None:
            infeasible.append((summand, g))
            continue
        for slot, coef in zip(dom, x):
            if coef != 0:
                solution = solution + cochain_from_slot(spec, deg - 1, slot, coef)
    if infeasible:
        return None, infeasible
    check = coboundary(solution) - target
    if not check.is_zero():
        raise AssertionError("solver returned an invalid preimage")
    return solution, None


def _summand_bott_dim(spec: SheafSpec, summand: int, q: int) -> int:
    from . import bott

    n = spec.cover.n
    t = spec.twists[summand]
    if spec.kind == LINE_SUM:
        return bott.line_dim(n, q, t)
    if spec.kind == TANGENT:
        return bott.tangent_dim(n, q, t)
    return bott.bott_dim(n, 1, q, t)


def enumerate_chars(spec: SheafSpec, summand: int, window: int):
    """Characters with entries in [-window, window] on the summand's stratum."""
    n = spec.cover.n
    t = spec.twists[summand]
    span = []
    for g_rest in itertools.product(range(-window, window + 1), repeat=n):
        g0 = t - sum(g_rest)
        if -window <= g0 <= window:
            span.append((g0,) + tuple(g_rest))
    return span


def h1_representatives(spec: SheafSpec, window: int = 10) -> CohomologyReport:
    """Kernel-mod-image basis of the degree-1 complex, character by character.

    The per-character blocks are complete; the window only bounds which
    characters are visited.  The total is cross-checked against the closed
    formula per summand, and a mismatch is reported as an incomplete window
    rather than silently truncated.
    """
    reps: list[Cochain] = []
    dims_per_summand = []
    notes: list[str] = []
    for summand in range(spec.nsummands):
        found = 0
        for g in enumerate_chars(spec, summand, window):
            dom, cod, mat = delta_block_matrix(spec, 1, summand, g)
            if not dom:
                continue
            kernel = linalg.kernel_basis(mat, len(dom)) if cod else linalg.kernel_basis([], len(dom))
            if not kernel:
                continue
            # image of delta0 inside the kernel
            dom0, cod0, mat0 = delta_block_matrix(spec, 0, summand, g)
            image_vecs = []
            if dom0:
                for col in range(len(dom0)):
                    image_vecs.append([mat0[r][col] for r in range(len(cod0))])
            # express kernel vectors modulo the image by row reduction
            basis_rows = [v[:] for v in image_vecs]
            picked = []
            rk = linalg.rank(basis_rows) if basis_rows else 0
            for vec in kernel:
                trial = basis_rows + [vec]
                new_rank = linalg.rank(trial)
                if new_rank > rk:
                    basis_rows = trial
                    rk = new_rank
                    picked.append(vec)
            for vec in picked:
                c = zero_cochain(spec, 1)
                for slot, coef in zip(dom, vec):
                    if coef != 0:
                        c = c + cochain_from_slot(spec, 1, slot, coef)
                reps.append(c)
                found += 1
        expected = _summand_bott_dim(spec, summand, 1)
        dims_per_summand.append((found, expected))
    total = sum(f for f, _ in dims_per_summand)
    expected_total = sum(e for _, e in dims_per_summand)
    complete = total == expected_total
    if not complete:
        notes.append(
            f"window incomplete: found {total} classes, closed formula gives {expected_total}"
        )
    return CohomologyReport(
        {1: total}, {1: reps}, "windowed-linear-algebra", complete, notes
    )


def windowed_dims(spec: SheafSpec, window: int = 10) -> dict[int, int]:
    """All cohomology dimensions of the windowed complex, by exact ranks.

    Valid whenever the window captures every contributing character; callers
    cross-check against the closed formulas.
    """
    n = spec.cover.n
    dims = {q: 0 for q in range(n + 1)}
    for summand in range(spec.nsummands):
        for g in enumerate_chars(spec, summand, window):
            sizes = {}
            ranks = {}
            for q in range(n + 1):
                dom, cod, mat = delta_block_matrix(spec, q, summand, g)
                sizes[q] = len(dom)
                ranks[q] = linalg.rank(mat) if dom and cod else 0
            for q in range(n + 1):
                rank_in = ranks[q - 1] if q > 0 else 0
                dims[q] += sizes[q] - ranks[q] - rank_in
    return dims


def harmonic_h2_part(c: Cochain) -> list[tuple[int, Char, Fraction]]:
    """Class coordinates of a degree-2 line-sum cochain.

    For line-bundle sums the degree-2 cohomology is spanned by the characters
    whose pole set is the whole index range; the coordinate of such a basis
    class is the raw coefficient of its monomial.  Everything else is exact.
    """
    if c.sheaf.kind != LINE_SUM or c.degree != 2:
        raise ValueError("harmonic reading applies to degree-2 line sums")
    out = []
    for (summand, g), coeffs in sorted(cochain_chars(c).items()):
        if all(e < 0 for e in g):
            (slot, coef), = coeffs.items()
            out.append((summand, g, coef))
    return out


def line_h2_basis(spec: SheafSpec) -> list[tuple[int, Char]]:
    """Ordered basis labels of H^2 for a line-bundle sum on P^2."""
    if spec.kind != LINE_SUM or spec.cover.n != 2:
        raise ValueError("H^2 basis applies to line sums on P^2")
    basis = []
    for summand, t in enumerate(spec.twists):
        for g in _compositions(-t - 3, 3, 0):
            basis.append((summand, tuple(-1 - x for x in g)))
    return basis


# ---------------------------------------------------------------------------
# randomized sections (seeded suites)


def random_section(spec: SheafSpec, simplex: tuple, rng, terms: int = 1, span: int = 2) -> Section:
    """A sparse random section over U_simplex, regular by construction."""
    cover = spec.cover
    chart = simplex[0]
    sec = [
        [LaurentPoly.zero(cover.n) for _ in range(spec.ncomp)]
        for _ in spec.twists
    ]
    for _ in range(terms):
        s = rng.randrange(spec.nsummands)
        compn = rng.randrange(spec.ncomp)
        exps = []
        for l in cover.chart_vars(chart):
            if l in simplex:
                exps.append(rng.randint(-span, span))
            else:
                exps.append(rng.randint(0, span))
        coef = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
        mono = LaurentPoly.monomial(cover.n, exps, coef)
        sec[s][compn] = sec[s][compn] + mono
    return tuple(tuple(r) for r in sec)


def random_cochain(spec: SheafSpec, degree: int, rng, terms: int = 1, span: int = 2) -> Cochain:
    values = {}
    for simplex in spec.cover.simplices(degree):
        values[simplex] = random_section(spec, simplex, rng, terms, span)
    return Cochain(spec, degree, values)


def random_closed_cochain(
    spec: SheafSpec, rng, harmonic: list[Cochain] | None = None, terms: int = 1, span: int = 2
) -> Cochain:
    """delta of a random 0-cochain, plus optional harmonic contributions."""
    out = coboundary(random_cochain(spec, 0, rng, terms, span))
    if harmonic:
        for h in harmonic:
            if rng.random() < 0.75:
                out = out + h.scale(Fraction(rng.choice([-2, -1, 1, 2])))
    return out
