"""Graded shuffle-algebra elements and the shuffle product.

An element of grading k = (k_1, ..., k_{n-1}) is stored as its symmetric
numerator in the variables x[i,r] (1 <= r <= k_i) over the canonical pole
denominator

    prod_{i=1}^{n-2} prod_{r <= k_i, r' <= k_{i+1}} (x[i,r] - x[i+1,r']),

which is never materialized: the pole condition holds by representation.
The product of two elements is computed per (k,l)-shuffle: the two block
numerators are relabeled, cross zeta numerators (x-x'+1 for equal colors,
x-x'-1/2 for adjacent colors) are multiplied in, the term is completed to
the common denominator D_{k+l} * Delta with Delta the product of all
same-color differences, signs from reorienting denominator differences are
tracked, and the summed numerator is divided exactly by Delta.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .fields import QQ, FieldMismatchError, require_same_field
from .poly import (
    Polynomial,
    divide_linear_diff,
    is_symmetric,
    mul_linear_diff,
    xvar,
    TVAR,
)
from .report import FAIL, PASS, CaseResult
from .roots import PBWExponent, Root


def cartan(i: int, j: int) -> int:
    """Cartan matrix entry of type A: 2, -1 on the off-diagonal, else 0."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


class ZetaFactor:
    """The weight 1 + c_ij/(2z) attached to a variable pair, as num/den."""

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        self.numerator = numerator
        self.denominator = denominator

    def __eq__(self, other):
        return (
            isinstance(other, ZetaFactor)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __repr__(self):
        return f"ZetaFactor(({self.numerator})/({self.denominator}))"


def zeta(i: int, j: int, field=QQ) -> ZetaFactor:
    """(z+1)/z for equal colors, (z-1/2)/z for adjacent colors, else 1."""
    c = cartan(i, j)
    z = Polynomial.variable(field, TVAR)
    if c == 0:
        one = Polynomial.one(field)
        return ZetaFactor(one, one)
    shift = Polynomial.constant(field, Fraction(c, 2))
    return ZetaFactor(z + shift, z)


class ShuffleElement:
    """Symmetric numerator over the canonical pole denominator."""

    __slots__ = ("n", "field", "grading", "numerator")

    def __init__(self, n, field, grading, numerator: Polynomial, *, check=True):
        grading = tuple(grading)
        if n < 2 or len(grading) != n - 1 or any(c < 0 for c in grading):
            raise ValueError(f"grading {grading} does not match rank {n}")
        require_same_field(field, numerator.field)
        self.n = n
        self.field = field
        self.grading = grading
        self.numerator = numerator
        if check and not is_symmetric(numerator, grading):
            raise ValueError("numerator is not symmetric within its grading")

    @classmethod
    def unit(cls, n: int, field) -> "ShuffleElement":
        return cls(n, field, (0,) * (n - 1), Polynomial.one(field), check=False)

    @classmethod
    def zero(cls, n: int, field, grading=None) -> "ShuffleElement":
        g = (0,) * (n - 1) if grading is None else grading
        return cls(n, field, g, Polynomial.zero(field), check=False)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ShuffleElement)
            and self.n == other.n
            and self.field == other.field
            and self.grading == other.grading
            and self.numerator == other.numerator
        )

    __hash__ = None

    def __repr__(self):
        return f"ShuffleElement(n={self.n}, k={self.grading}, f={self.numerator})"

    def _require_compatible(self, other: "ShuffleElement"):
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        require_same_field(self.field, other.field)

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        self._require_compatible(other)
        if self.grading != other.grading:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("cannot add elements of distinct gradings")
        return ShuffleElement(
            self.n, self.field, self.grading, self.numerator + other.numerator, check=False
        )

    def __sub__(self, other: "ShuffleElement") -> "ShuffleElement":
        return self + (-other)

    def __neg__(self) -> "ShuffleElement":
        return ShuffleElement(self.n, self.field, self.grading, -self.numerator, check=False)

    def scale(self, c) -> "ShuffleElement":
        return ShuffleElement(
            self.n, self.field, self.grading, self.numerator.scale(self.field.coerce(c)), check=False
        )

    def __mul__(self, other):
        if isinstance(other, ShuffleElement):
            return shuffle_mul(self, other)
        return self.scale(other)

    __rmul__ = scale


def enumerate_shuffles(k, l):
    """All (k,l)-shuffles as per-color index tuples sigma_i of length k_i+l_i.

    sigma_i lists first the (ascending) final indices handed to the left
    block's slots, then those of the right block; the count is the product
    of binomials C(k_i + l_i, k_i).
    """
    k, l = tuple(k), tuple(l)
    if len(k) != len(l):
        raise ValueError("gradings of different rank")
    per_color = []
    for ki, li in zip(k, l):
        m = ki + li
        opts = []
        for a in combinations(range(1, m + 1), ki):
            bset = tuple(sorted(set(range(1, m + 1)) - set(a)))
            opts.append(a + bset)
        per_color.append(opts)
    return [tuple(choice) for choice in product(*per_color)]


def shuffle_mul(F: ShuffleElement, G: ShuffleElement) -> ShuffleElement:
    """The shuffle product; grading adds, numerator stays polynomial."""
    F._require_compatible(G)
    n, fld = F.n, F.field
    k, l = F.grading, G.grading
    m = tuple(a + b for a, b in zip(k, l))
    if F.is_zero() or G.is_zero():
        return ShuffleElement.zero(n, fld, m)
    colors = list(range(1, n))
    one = fld.one
    minus_half = fld.from_fraction(Fraction(-1, 2))
    zero_c = fld.zero

    # reorienting the (higher color, lower color) adjacent zeta denominators
    # contributes a global sign, independent of the shuffle
    adj_flips = sum(k[c] * l[c - 1] for c in range(1, n - 1))

    per_color_choices = [
        list(combinations(range(1, m[c - 1] + 1), k[c - 1])) for c in colors
    ]
    total = Polynomial.zero(fld)
    for choice in product(*per_color_choices):
        a_sets = {c: choice[c - 1] for c in colors}
        b_sets = {
            c: tuple(sorted(set(range(1, m[c - 1] + 1)) - set(a_sets[c])))
            for c in colors
        }
        renameF = {}
        renameG = {}
        for c in colors:
            for slot, final in enumerate(a_sets[c], start=1):
                if slot != final:
                    renameF[xvar(c, slot)] = xvar(c, final)
            for slot, final in enumerate(b_sets[c], start=1):
                if slot != final:
                    renameG[xvar(c, slot)] = xvar(c, final)
        term = F.numerator.rename(renameF) * G.numerator.rename(renameG)

        flips = adj_flips
        for c in colors:
            a_set, b_set = a_sets[c], b_sets[c]
            for a in a_set:
                for b in b_set:
                    # same-color zeta numerator (x_a - x_b + 1)
                    term = mul_linear_diff(term, xvar(c, a), xvar(c, b), one)
                    if a > b:
                        flips += 1
            # complete the same-color denominators to the full difference
            # product: pairs u < v living in the same block
            for u, v in combinations(range(1, m[c - 1] + 1), 2):
                if (u in a_set) == (v in a_set):
                    term = mul_linear_diff(term, xvar(c, u), xvar(c, v), zero_c)
        for c in colors:
            for c2 in (c - 1, c + 1):
                if 1 <= c2 <= n - 1:
                    for a in a_sets[c]:
                        for b in b_sets[c2]:
                            # adjacent-color zeta numerator (x_a - x_b - 1/2)
                            term = mul_linear_diff(
                                term, xvar(c, a), xvar(c2, b), minus_half
                            )
        if flips & 1:
            term = -term
        total = total + term

    # divide out Delta: the full same-color difference product
    for c in colors:
        for u, v in combinations(range(1, m[c - 1] + 1), 2):
            total = divide_linear_diff(total, xvar(c, u), xvar(c, v), zero_c)
    result = ShuffleElement(n, fld, m, total, check=False)
    assert is_symmetric(total, m), "shuffle product lost symmetry"
    return result


def generator_image(n: int, field, i: int, r: int) -> ShuffleElement:
    """Image of the degree-r generator of color i: x[i,1]^r in grading 1_i."""
    if not (1 <= i <= n - 1) or r < 0:
        raise ValueError(f"generator ({i},{r}) out of range for rank {n}")
    grading = tuple(1 if c == i else 0 for c in range(1, n))
    num = Polynomial.monomial(field, ((xvar(i, 1), r),) if r else (), field.one)
    return ShuffleElement(n, field, grading, num, check=False)


def root_vector_image(n: int, field, beta: Root, r: int) -> ShuffleElement:
    """Closed form of the root vector image: (-1)^(j-i) x[i,1]^r over the
    chain of differences supplied by the canonical denominator."""
    if beta.j > n - 1 or r < 0:
        raise ValueError(f"root vector ({beta},{r}) out of range for rank {n}")
    grading = beta.indicator(n)
    coeff = field.one if (beta.j - beta.i) % 2 == 0 else field.neg(field.one)
    mono = ((xvar(beta.i, 1), r),) if r else ()
    num = Polynomial.monomial(field, mono, coeff)
    return ShuffleElement(n, field, grading, num, check=False)


def bracket(F: ShuffleElement, G: ShuffleElement) -> ShuffleElement:
    return shuffle_mul(F, G) - shuffle_mul(G, F)


def bracket_root_vector(n: int, field, beta: Root, r: int) -> ShuffleElement:
    """Root vector image built from generators by left-nested brackets."""
    out = generator_image(n, field, beta.i, r)
    for ell in range(beta.i + 1, beta.j + 1):
        out = bracket(out, generator_image(n, field, ell, 0))
    return out


def pbw_monomial_image(field, h: PBWExponent) -> ShuffleElement:
    """Shuffle product of the root vector images of h, in PBW order."""
    out = ShuffleElement.unit(h.n, field)
    for beta, r in h.factor_sequence():
        out = shuffle_mul(out, root_vector_image(h.n, field, beta, r))
    return out


def divided_power_image(n: int, field, i: int, r: int, t: int) -> ShuffleElement:
    """Closed-form divided power image: (x[i,1]...x[i,t])^r in grading t*1_i.

    Defined by this formula in every characteristic; over Q it equals the
    t-th shuffle power of the generator image divided by t!.
    """
    if t < 0:
        raise ValueError("negative divided power")
    if t == 0:
        return ShuffleElement.unit(n, field)
    grading = tuple(t if c == i else 0 for c in range(1, n))
    mono = tuple((xvar(i, s), r) for s in range(1, t + 1)) if r else ()
    num = Polynomial.monomial(field, mono, field.one)
    return ShuffleElement(n, field, grading, num, check=False)


def check_wheel(F: ShuffleElement) -> bool:
    """Vanishing on the wheel locus x[i,r1] = x[i+e,s] + 1/2 = x[i,r2] + 1.

    One representative per (color, direction) suffices: the numerator is
    symmetric within each color, so all index choices are equivalent.
    """
    fld = F.field
    k = F.grading
    t = Polynomial.variable(fld, TVAR)
    half = fld.from_fraction(Fraction(1, 2))
    for c in range(1, F.n):
        if k[c - 1] < 2:
            continue
        for eps in (1, -1):
            c2 = c + eps
            if not (1 <= c2 <= F.n - 1) or k[c2 - 1] < 1:
                continue
            images = {
                xvar(c, 1): t,
                xvar(c2, 1): t - Polynomial.constant(fld, half),
                xvar(c, 2): t - Polynomial.one(fld),
            }
            if not F.numerator.substitute(images).is_zero():
                return False
    return True


def verify_relations(n: int, field, r_max: int) -> list[CaseResult]:
    """Check the quadratic and Serre identities on generator images.

    Families: the degree-shift quadratic relation for all color pairs, the
    commuting relation for distant colors, and the cubic Serre relation for
    adjacent colors, all with generator degrees up to r_max.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    cases = []
    e = lambda i, r: generator_image(n, field, i, r)

    def record(statement, params, ok, witness=None):
        cases.append(
            CaseResult(statement, params, PASS if ok else FAIL, witness if not ok else None)
        )

    for i in range(1, n):
        for j in range(1, n):
            cij = cartan(i, j)
            half_c = field.from_fraction(Fraction(cij, 2))
            for r in range(r_max + 1):
                for s in range(r_max + 1):
                    lhs = bracket(e(i, r + 1), e(j, s)) - bracket(e(i, r), e(j, s + 1))
                    rhs = (
                        shuffle_mul(e(i, r), e(j, s)) + shuffle_mul(e(j, s), e(i, r))
                    ).scale(half_c)
                    diff = lhs - rhs
                    record(
                        "quadratic",
                        {"i": i, "j": j, "r": r, "s": s},
                        diff.is_zero(),
                        str(diff.numerator),
                    )
            if cij == 0:
                for r in range(r_max + 1):
                    for s in range(r_max + 1):
                        d = bracket(e(i, r), e(j, s))
                        record(
                            "commuting",
                            {"i": i, "j": j, "r": r, "s": s},
                            d.is_zero(),
                            str(d.numerator),
                        )
            if cij == -1:
                for r1 in range(r_max + 1):
                    for r2 in range(r1 + 1):
                        for s in range(r_max + 1):
                            d = bracket(e(i, r1), bracket(e(i, r2), e(j, s))) + bracket(
                                e(i, r2), bracket(e(i, r1), e(j, s))
                            )
                            record(
                                "serre",
                                {"i": i, "j": j, "r1": r1, "r2": r2, "s": s},
                                d.is_zero(),
                                str(d.numerator),
                            )
    return cases
