"""Symmetric polynomials in one color: monomial and Hall-Littlewood bases,
the characteristic-p wheel subspace, and p-restricted expansions.

At rank 2 a shuffle element of grading k is just a symmetric polynomial in
x[1,1..k] (no pole denominators).  The Hall-Littlewood variant P_lam is the
normalized shuffle product of the powers x^lam_s; it has integer
coefficients and expands as the monomial basis element plus strictly
smaller-size terms, so expansions are unitriangular and work verbatim over
F_p.  Integer coefficients are produced over Q and reduced, never by
dividing mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .fields import QQ, PrimeField, RationalField
from .linalg import span_rank
from .poly import Polynomial, is_symmetric, xvar, TVAR
from .roots import (
    check_partition,
    is_p_restricted,
    mul_factor,
    partitions_of,
    partitions_up_to,
    size_lex_key,
)
from .shuffle import ShuffleElement, generator_image, shuffle_mul


class NotInImageError(ValueError):
    """Expansion hit a partition that is not p-restricted."""

    def __init__(self, witness: tuple):
        super().__init__(f"not in the image: offending partition {witness}")
        self.witness = witness


@dataclass(frozen=True)
class SymPoly:
    """A symmetric polynomial in the k variables x[1,1..k]."""

    k: int
    poly: Polynomial

    def __post_init__(self):
        if not is_symmetric(self.poly, (self.k,)):
            raise ValueError("polynomial is not symmetric in its k variables")

    @property
    def field(self):
        return self.poly.field

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def to_shuffle(self) -> ShuffleElement:
        return ShuffleElement(2, self.field, (self.k,), self.poly, check=False)

    @classmethod
    def from_shuffle(cls, F: ShuffleElement) -> "SymPoly":
        if F.n != 2:
            raise ValueError("rank-1 theory lives at n = 2")
        return cls(F.grading[0], F.numerator)


def monomial_sym(field, lam: tuple) -> SymPoly:
    """The monomial symmetric polynomial: sum over distinct rearrangements."""
    check_partition(lam)
    k = len(lam)
    terms = {}
    for arrangement in set(permutations(lam)):
        mono = tuple((xvar(1, r + 1), e) for r, e in enumerate(arrangement) if e)
        terms[mono] = field.one
    return SymPoly(k, Polynomial(field, terms, _clean=True))


_HL_CACHE: dict = {}


def hall_littlewood(field, lam: tuple) -> SymPoly:
    """The shuffle product x^lam_1 * ... * x^lam_k over mul(lam).

    Computed over Q, where the coefficients come out integral, then reduced
    into the requested field.
    """
    check_partition(lam)
    lam = tuple(lam)
    key = (field, lam)
    if key in _HL_CACHE:
        return _HL_CACHE[key]
    rational = _HL_CACHE.get((QQ, lam))
    if rational is None:
        prod = ShuffleElement.unit(2, QQ)
        for part in lam:
            prod = shuffle_mul(prod, generator_image(2, QQ, 1, part))
        scaled = prod.numerator.scale(Fraction(1, mul_factor(lam)))
        assert all(c.denominator == 1 for c in scaled.terms.values()), (
            "Hall-Littlewood coefficients must be integers"
        )
        rational = SymPoly(len(lam), scaled)
        _HL_CACHE[(QQ, lam)] = rational
    if isinstance(field, RationalField):
        return rational
    reduced = SymPoly(
        len(lam),
        rational.poly.map_coefficients(field, lambda c: field.from_int(c.numerator)),
    )
    _HL_CACHE[key] = reduced
    return reduced


def _leading_partition(poly: Polynomial, k: int) -> tuple:
    mono, coeff = poly.leading()
    exps = [0] * k
    for v, e in mono:
        exps[v[2] - 1] = e
    lam = tuple(exps)
    check_partition(lam)  # symmetric polynomials lead with sorted exponents
    return lam, coeff


def expand_monomial(f: SymPoly) -> dict:
    """Coefficients of f in the monomial symmetric basis."""
    out = {}
    work = f.poly
    while not work.is_zero():
        lam, coeff = _leading_partition(work, f.k)
        out[lam] = coeff
        work = work - monomial_sym(f.field, lam).poly.scale(coeff)
    return out


_HL_MEXP_CACHE: dict = {}


def _hl_monomial_expansion(field, lam: tuple) -> dict:
    key = (field, lam)
    if key not in _HL_MEXP_CACHE:
        _HL_MEXP_CACHE[key] = expand_monomial(hall_littlewood(field, lam))
    return _HL_MEXP_CACHE[key]


def expand_hall_littlewood(f: SymPoly) -> dict:
    """Coefficients of f in the Hall-Littlewood basis.

    Back-substitution along the size-then-lex order; valid over Q and over
    F_p because the transition to the monomial basis is unitriangular with
    strictly smaller-size off-diagonal support.
    """
    field = f.field
    coeffs = dict(expand_monomial(f))
    out = {}
    while coeffs:
        lam = max(coeffs, key=size_lex_key)
        c = coeffs.pop(lam)
        out[lam] = c
        for mu, a in _hl_monomial_expansion(field, lam).items():
            if mu == lam:
                continue
            cur = field.sub(coeffs.get(mu, field.zero), field.mul(c, a))
            if cur == field.zero:
                coeffs.pop(mu, None)
            else:
                coeffs[mu] = cur
    return out


def wheel_p_vanishes(f: SymPoly, p: int) -> bool:
    """Vanishing once p of the variables sit in the progression t, t-1, ...

    Vacuously true for fewer than p variables; one representative choice of
    variables suffices by symmetry.
    """
    if f.k < p:
        return True
    fld = f.field
    t = Polynomial.variable(fld, TVAR)
    images = {
        xvar(1, r): t - Polynomial.constant(fld, r - 1) for r in range(1, p + 1)
    }
    return f.poly.substitute(images).is_zero()


def express_p_restricted(f: SymPoly, p: int) -> dict:
    """Hall-Littlewood coordinates of f, required to sit on p-restricted
    partitions; raises NotInImageError with the offending partition."""
    out = expand_hall_littlewood(f)
    for lam in sorted(out, key=size_lex_key, reverse=True):
        if not is_p_restricted(lam, p):
            raise NotInImageError(lam)
    return out


def drop_variable(f: SymPoly) -> SymPoly:
    """Set the last variable to zero, landing in one variable fewer."""
    if f.k == 0:
        raise ValueError("no variable left to drop")
    images = {xvar(1, f.k): Polynomial.zero(f.field)}
    return SymPoly(f.k - 1, f.poly.substitute(images))


def staircase_evaluate(f: SymPoly, p: int) -> SymPoly:
    """Substitute 0, 1, ..., p-1 for the last p variables."""
    if f.k < p:
        raise ValueError(f"need at least {p} variables, have {f.k}")
    fld = f.field
    images = {}
    for offset in range(p):
        images[xvar(1, f.k - p + 1 + offset)] = Polynomial.constant(
            fld, fld.from_int(offset)
        )
    return SymPoly(f.k - p, f.poly.substitute(images))


def dim_check(k: int, max_size: int, p: int) -> tuple[int, int]:
    """Dimension of the wheel-p subspace of symmetric polynomials in k
    variables of total degree <= max_size, versus the number of p-restricted
    partitions of length k and size <= max_size.  The two agree."""
    field = PrimeField(p)
    lams = list(partitions_up_to(max_size, k))
    count = sum(1 for lam in lams if is_p_restricted(lam, p))
    if k < p:
        return len(lams), count
    t = Polynomial.variable(field, TVAR)
    images = {
        xvar(1, r): t - Polynomial.constant(field, r - 1) for r in range(1, p + 1)
    }
    constraints = [monomial_sym(field, lam).poly.substitute(images) for lam in lams]
    dim = len(lams) - span_rank(constraints)
    return dim, count


def restricted_partition_count(k: int, exact_size: int, p: int) -> int:
    return sum(1 for lam in partitions_of(exact_size, k) if is_p_restricted(lam, p))
