"""Specialization of shuffle elements along Kostant partitions.

A Kostant partition d of the grading splits the x-variables into one group
per root occurrence; the group for occurrence s of root beta = [i,j] sends
its color-ell variable to w[beta,s] - ell/2.  Applied to the numerator this
yields a polynomial in the w-variables, symmetric within each root's group.
The reduced map divides out the within-group factor prod (w_s - w_s' + 1)
raised to j-i, which the specialization of any shuffle-product image always
contains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .fields import PrimeField
from .poly import (
    Polynomial,
    divide_linear_diff,
    exact_divide,
    is_symmetric_in_groups,
    mul_linear_diff,
    wvar,
    TVAR,
)
from .report import FAIL, PASS, CaseResult
from .roots import (
    KostantPartition,
    PBWExponent,
    Root,
    canonical_split,
    kostant_partitions,
)
from .shuffle import ShuffleElement, pbw_monomial_image


def group_var(beta: Root, s: int) -> tuple:
    return wvar(beta.i, beta.j, s)


@dataclass(frozen=True)
class SpecializedPoly:
    """A polynomial in the w-variables of one Kostant partition."""

    d: KostantPartition
    poly: Polynomial

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_group_symmetric(self) -> bool:
        groups = [
            [group_var(beta, s) for s in range(1, m + 1)] for beta, m in self.d.counts
        ]
        return is_symmetric_in_groups(self.poly, groups)

    def __str__(self) -> str:
        return str(self.poly)


def specialize(d: KostantPartition, F: ShuffleElement, split=None) -> SpecializedPoly:
    """Apply the specialization of d to the numerator of F.

    Elements whose grading differs from that of d go to zero.  `split` may
    override the canonical variable split; any admissible split gives the
    same answer because the numerator is symmetric (tested, not assumed).
    """
    fld = F.field
    if F.grading != d.grading:
        return SpecializedPoly(d, Polynomial.zero(fld))
    if split is None:
        split = canonical_split(d)
    images = {}
    for (beta, s, ell), var in split.items():
        images[var] = Polynomial(
            fld,
            {
                ((group_var(beta, s), 1),): fld.one,
                (): fld.from_fraction(Fraction(-ell, 2)),
            },
        )
    return SpecializedPoly(d, F.numerator.substitute(images))


def group_factor(field, beta: Root, mult: int) -> Polynomial:
    """prod over ordered pairs s != s' of (w_s - w_s' + 1)^(j-i)."""
    out = Polynomial.one(field)
    e = beta.j - beta.i
    if e == 0 or mult < 2:
        return out
    one = field.one
    for s in range(1, mult + 1):
        for s2 in range(1, mult + 1):
            if s == s2:
                continue
            for _ in range(e):
                out = mul_linear_diff(out, group_var(beta, s), group_var(beta, s2), one)
    return out


def cross_group_factor(field, b1: Root, b2: Root, m1: int, m2: int) -> Polynomial:
    """Cross factor between the groups of two roots b1 < b2.

    Per variable pair: (w - w' + 1) for every shared color, (w - w' - 1) for
    every color of b1 sitting one above a color of b2, and a plain (w - w')
    when b2 starts strictly later and contains j+1.
    """
    if not b1 < b2:
        raise ValueError(f"cross factor needs increasing roots, got {b1}, {b2}")
    out = Polynomial.one(field)
    one = field.one
    minus_one = field.neg(field.one)
    shared = len(set(b1.colors()) & set(b2.colors()))
    above = len({ell for ell in b1.colors() if ell - 1 in b2.colors()})
    separating = 1 if (b2.i > b1.i and b1.j + 1 in b2.colors()) else 0
    for s in range(1, m1 + 1):
        for s2 in range(1, m2 + 1):
            v1, v2 = group_var(b1, s), group_var(b2, s2)
            for _ in range(shared):
                out = mul_linear_diff(out, v1, v2, one)
            for _ in range(above):
                out = mul_linear_diff(out, v1, v2, minus_one)
            for _ in range(separating):
                out = mul_linear_diff(out, v1, v2, field.zero)
    return out


def expected_factorization(field, h: PBWExponent) -> Polynomial:
    """The product of cross factors, group factors and shifted
    Hall-Littlewood polynomials predicted for the specialization of h's
    ordered monomial at its own degree."""
    d = h.degree()
    out = Polynomial.one(field)
    roots = d.roots()
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            out = out * cross_group_factor(
                field, roots[a], roots[b], d.mult(roots[a]), d.mult(roots[b])
            )
    for beta in roots:
        out = out * group_factor(field, beta, d.mult(beta))
    for beta in roots:
        out = out * shifted_hall_littlewood(field, h.root_partition(beta), beta)
    return out


def shifted_hall_littlewood(field, lam: tuple, beta: Root) -> Polynomial:
    """Symmetrization of prod (w_s - i/2)^lam_s prod (w_s - w_s' + 1)/(w_s - w_s')
    over the group of root beta; always a polynomial, computed by clearing
    the difference-product denominator and dividing exactly."""
    d = len(lam)
    if d == 0:
        return Polynomial.one(field)
    shift = field.from_fraction(Fraction(-beta.i, 2))
    vars_ = [group_var(beta, s) for s in range(1, d + 1)]
    shifted = [
        Polynomial(field, {((v, 1),): field.one, (): shift}) for v in vars_
    ]
    pow_cache: dict = {}

    def shifted_pow(idx, e):
        key = (idx, e)
        if key not in pow_cache:
            pow_cache[key] = shifted[idx] ** e
        return pow_cache[key]

    total = Polynomial.zero(field)
    one = field.one
    for perm in permutations(range(d)):
        inversions = sum(
            1 for a in range(d) for b in range(a + 1, d) if perm[a] > perm[b]
        )
        term = Polynomial.one(field)
        for s in range(d):
            term = term * shifted_pow(perm[s], lam[s])  # slot s -> variable perm[s]
        for a in range(d):
            for b in range(a + 1, d):
                term = mul_linear_diff(term, vars_[perm[a]], vars_[perm[b]], one)
        total = total + (-term if inversions & 1 else term)
    for a in range(d):
        for b in range(a + 1, d):
            total = divide_linear_diff(total, vars_[a], vars_[b], field.zero)
    return total


def group_factor_product(field, d: KostantPartition) -> Polynomial:
    out = Polynomial.one(field)
    for beta, m in d.counts:
        out = out * group_factor(field, beta, m)
    return out


def specialize_reduced(d: KostantPartition, F: ShuffleElement) -> SpecializedPoly:
    """The specialization divided exactly by the within-group factors.

    Non-divisibility is a verification failure (the divisibility is a
    theorem for images of shuffle products), so NotDivisibleError escapes.
    """
    phi = specialize(d, F)
    if phi.is_zero():
        return phi
    fld = F.field
    quotient = phi.poly
    for beta, m in d.counts:
        e = beta.j - beta.i
        if e == 0 or m < 2:
            continue
        for s in range(1, m + 1):
            for s2 in range(1, m + 1):
                if s == s2:
                    continue
                for _ in range(e):
                    factor = Polynomial(
                        fld,
                        {
                            ((group_var(beta, s), 1),): fld.one,
                            ((group_var(beta, s2), 1),): fld.neg(fld.one),
                            (): fld.one,
                        },
                    )
                    quotient = exact_divide(quotient, factor)
    return SpecializedPoly(d, quotient)


def check_wheel_p(d: KostantPartition, F: ShuffleElement, p: int) -> bool:
    """Extra characteristic-p wheel condition on the reduced specialization:
    vanishing once p group variables of one root sit in an arithmetic
    progression of step -1.  Vacuous when every multiplicity is below p."""
    if not isinstance(F.field, PrimeField) or F.field.p != p:
        raise ValueError("wheel-p check needs an F_p element matching p")
    if all(m < p for _, m in d.counts):
        return True
    reduced = specialize_reduced(d, F)
    fld = F.field
    t = Polynomial.variable(fld, TVAR)
    for beta, m in d.counts:
        if m < p:
            continue
        images = {}
        for s in range(1, p + 1):
            images[group_var(beta, s)] = t - Polynomial.constant(fld, s - 1)
        if not reduced.poly.substitute(images).is_zero():
            return False
    return True


def in_wheel_p_subalgebra(F: ShuffleElement, p: int) -> bool:
    """Ordinary wheel condition plus the wheel-p condition for every
    Kostant partition of the grading."""
    from .shuffle import check_wheel

    if not check_wheel(F):
        return False
    for d in kostant_partitions(F.n, F.grading):
        if not check_wheel_p(d, F, p):
            return False
    return True


def verify_vanishing(field, h: PBWExponent) -> list[CaseResult]:
    """The specialization of h's ordered monomial vanishes at every Kostant
    partition strictly below its degree."""
    F = pbw_monomial_image(field, h)
    deg = h.degree()
    cases = []
    for d_prime in kostant_partitions(h.n, h.grading):
        if not d_prime < deg:
            continue
        value = specialize(d_prime, F)
        ok = value.is_zero()
        cases.append(
            CaseResult(
                "lower-specialization-vanishes",
                {"h": str(h), "d'": str(d_prime)},
                PASS if ok else FAIL,
                None if ok else str(value.poly),
            )
        )
    return cases


def verify_factorization(field, h: PBWExponent) -> CaseResult:
    """Compare the specialization of h's ordered monomial at its own degree
    against the predicted factor product.

    Over Q the two sides must agree up to a single global sign; over F_p up
    to a nonzero scalar.  The resolved sign/scalar is reported.
    """
    F = pbw_monomial_image(field, h)
    d = h.degree()
    lhs = specialize(d, F).poly
    rhs = expected_factorization(field, h)
    params = {"h": str(h), "d": str(d)}
    if lhs.is_zero() or rhs.is_zero():
        ok = lhs.is_zero() and rhs.is_zero()
        return CaseResult(
            "specialization-factorizes",
            params,
            PASS if ok else FAIL,
            None if ok else f"lhs={lhs} rhs={rhs}",
        )
    if isinstance(field, PrimeField):
        _, lc_l = lhs.leading()
        _, lc_r = rhs.leading()
        scalar = field.div(lc_l, lc_r)
        ok = lhs == rhs.scale(scalar)
        params["scalar"] = field.to_str(scalar)
    else:
        if lhs == rhs:
            ok, sign = True, "+"
        elif lhs == -rhs:
            ok, sign = True, "-"
        else:
            ok, sign = False, "?"
        params["sign"] = sign
    return CaseResult(
        "specialization-factorizes",
        params,
        PASS if ok else FAIL,
        None if ok else f"lhs={lhs} rhs={rhs}",
    )
