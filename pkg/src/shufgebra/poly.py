"""Sparse exact multivariate polynomials in the colored variable universe.

Variables are plain tuples whose natural tuple order IS the global variable
order used for canonical forms everywhere (x before w before the probe t;
x by (color, index); w by (root, index)):

    x[i,r]    -> (0, i, r)       color i >= 1, index r >= 1
    w[i,j,s]  -> (1, i, j, s)    root [i,j], group index s >= 1
    t         -> (2,)            single probe variable

A monomial is a tuple of (variable, exponent) pairs sorted by variable with
all exponents positive; the empty tuple is the constant monomial.  A
polynomial is {monomial: coefficient} plus a field tag, with no stored zero
coefficients, so two polynomials are equal iff their dicts are equal.

Monomials are compared in graded lexicographic order: total degree first,
then the earliest variable with differing exponent decides (higher exponent
wins).  This makes x[1,1] the largest variable, fixes leading terms for
exact division, and fixes the printed term order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Mapping

from .fields import QQ, FieldMismatchError, PrimeField, RationalField, require_same_field


class NotDivisibleError(ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ParseError(ValueError):
    """Malformed polynomial text."""


# ---------------------------------------------------------------------------
# variables

TVAR = (2,)


def xvar(i: int, r: int) -> tuple:
    if i < 1 or r < 1:
        raise ValueError(f"x-variable needs color >= 1 and index >= 1, got ({i},{r})")
    return (0, i, r)


def wvar(i: int, j: int, s: int) -> tuple:
    if not (1 <= i <= j) or s < 1:
        raise ValueError(f"w-variable needs a root [i,j] and index >= 1, got ({i},{j},{s})")
    return (1, i, j, s)


def var_str(v: tuple) -> str:
    if v[0] == 0:
        return f"x[{v[1]},{v[2]}]"
    if v[0] == 1:
        return f"w[{v[1]},{v[2]},{v[3]}]"
    return "t"


# ---------------------------------------------------------------------------
# monomials

MONO_ONE = ()


def mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_div(a: tuple, b: tuple):
    """a / b as a monomial, or None when b does not divide a."""
    if not b:
        return a
    out = []
    bd = dict(b)
    for v, e in a:
        eb = bd.pop(v, 0)
        if e < eb:
            return None
        if e > eb:
            out.append((v, e - eb))
    if bd:
        return None
    return tuple(out)


def mono_deg(m: tuple) -> int:
    return sum(e for _, e in m)


def mono_cmp(a: tuple, b: tuple) -> int:
    """Graded lex: degree first, then earlier variable / higher exponent."""
    da, db = mono_deg(a), mono_deg(b)
    if da != db:
        return 1 if da > db else -1
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va != vb:
            return 1 if va < vb else -1
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1
        j += 1
    if i < la:
        return 1
    if j < lb:
        return -1
    return 0


MONO_KEY = cmp_to_key(mono_cmp)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable-by-convention sparse polynomial over one coefficient field."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: Mapping[tuple, object] | None = None, *, _clean=False):
        self.field = field
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = dict(terms)
        else:
            zero = field.zero
            self.terms = {m: c for m, c in terms.items() if c != zero}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Polynomial":
        return cls(field, {}, _clean=True)

    @classmethod
    def one(cls, field) -> "Polynomial":
        return cls(field, {MONO_ONE: field.one}, _clean=True)

    @classmethod
    def constant(cls, field, c) -> "Polynomial":
        return cls(field, {MONO_ONE: field.coerce(c)})

    @classmethod
    def variable(cls, field, v: tuple) -> "Polynomial":
        return cls(field, {((v, 1),): field.one}, _clean=True)

    @classmethod
    def monomial(cls, field, mono: tuple, coeff) -> "Polynomial":
        return cls(field, {mono: field.coerce(coeff)})

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {poly_str(self)!r})"

    def __str__(self) -> str:
        return poly_str(self)

    def total_degree(self) -> int:
        """-1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def degree_in(self, v: tuple) -> int:
        deg = 0
        for m in self.terms:
            for var, e in m:
                if var == v and e > deg:
                    deg = e
        return deg

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def coefficient(self, mono: tuple):
        return self.terms.get(mono, self.field.zero)

    def leading(self):
        """(monomial, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=MONO_KEY)
        return m, self.terms[m]

    def sorted_terms(self):
        """Terms in descending graded-lex order (leading first)."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=MONO_KEY, reverse=True)]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce_operand(other)
        require_same_field(self.field, other.field)
        fld = self.field
        zero = fld.zero
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.add(out.get(m, zero), c)
            if s == zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.field, out, _clean=True)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce_operand(other)
        require_same_field(self.field, other.field)
        fld = self.field
        zero = fld.zero
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.sub(out.get(m, zero), c)
            if s == zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.field, out, _clean=True)

    def __neg__(self) -> "Polynomial":
        fld = self.field
        return Polynomial(fld, {m: fld.neg(c) for m, c in self.terms.items()}, _clean=True)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.coerce(other))
        if not isinstance(other, Polynomial):
            return NotImplemented
        require_same_field(self.field, other.field)
        fld = self.field
        zero = fld.zero
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        mul = fld.mul
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                s = fld.add(out.get(m, zero), mul(ca, cb))
                if s == zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(fld, out, _clean=True)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.coerce(other))
        return NotImplemented

    def scale(self, c) -> "Polynomial":
        fld = self.field
        if c == fld.zero:
            return Polynomial.zero(fld)
        mul = fld.mul
        return Polynomial(fld, {m: mul(co, c) for m, co in self.terms.items()}, _clean=True)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base_needed = e > 1
            e >>= 1
            if base_needed and e:
                base = base * base
        return result

    def _coerce_operand(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.field, other)
        raise TypeError(f"cannot combine polynomial with {other!r}")

    # -- substitution and renaming ------------------------------------------

    def substitute(self, images: Mapping[tuple, object]) -> "Polynomial":
        """Simultaneous ring substitution; unmapped variables are fixed.

        Values may be polynomials over the same field, ints or fractions.
        """
        if not images:
            return self
        fld = self.field
        imgs = {}
        for v, val in images.items():
            if isinstance(val, Polynomial):
                require_same_field(fld, val.field)
                imgs[v] = val
            else:
                imgs[v] = Polynomial.constant(fld, val)
        # power cache per image variable
        powers: dict = {v: [Polynomial.one(fld), p] for v, p in imgs.items()}

        def img_pow(v, e):
            lst = powers[v]
            while len(lst) <= e:
                lst.append(lst[-1] * lst[1])
            return lst[e]

        total = Polynomial.zero(fld)
        for m, c in self.terms.items():
            fixed = []
            factor = None
            for v, e in m:
                if v in imgs:
                    p = img_pow(v, e)
                    factor = p if factor is None else factor * p
                else:
                    fixed.append((v, e))
            term = Polynomial.monomial(fld, tuple(fixed), c)
            total = total + (term if factor is None else term * factor)
        return total

    def probe_substitute(self, shifts: Mapping[tuple, object]) -> "Polynomial":
        """Substitute var -> t + shift for every mapped variable.

        Specialized fast path for the wheel-condition substitutions: shifts
        are field constants, the probe t is shared, and the univariate
        factor prod (t + c)^e of each monomial is cached by its multiset of
        shifted exponents.
        """
        fld = self.field
        zero = fld.zero
        add, mul = fld.add, fld.mul
        cache: dict = {}
        out: dict = {}
        for mono, c in self.terms.items():
            fixed = []
            mapped = []
            for v, e in mono:
                if v in shifts:
                    mapped.append((shifts[v], e))
                else:
                    fixed.append((v, e))
            if not mapped:
                s = add(out.get(mono, zero), c)
                if s == zero:
                    out.pop(mono, None)
                else:
                    out[mono] = s
                continue
            key = tuple(sorted(mapped))
            tcoeffs = cache.get(key)
            if tcoeffs is None:
                tcoeffs = [fld.one]
                for shift, e in mapped:
                    for _ in range(e):
                        nxt = [zero] * (len(tcoeffs) + 1)
                        for j, a in enumerate(tcoeffs):
                            nxt[j + 1] = add(nxt[j + 1], a)
                            nxt[j] = add(nxt[j], mul(a, shift))
                        tcoeffs = nxt
                cache[key] = tcoeffs
            fixed_t = tuple(fixed)
            for j, a in enumerate(tcoeffs):
                if a == zero:
                    continue
                m = fixed_t if j == 0 else mono_mul(fixed_t, ((TVAR, j),))
                s = add(out.get(m, zero), mul(c, a))
                if s == zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(fld, out, _clean=True)

    def rename(self, mapping: Mapping[tuple, tuple]) -> "Polynomial":
        """Variable-to-variable renaming; must be injective on the support."""
        out = {}
        for m, c in self.terms.items():
            newm = tuple(sorted(((mapping.get(v, v), e) for v, e in m)))
            if newm in out:
                raise ValueError("renaming is not injective on this polynomial")
            out[newm] = c
        return Polynomial(self.field, out, _clean=True)

    def swap_vars(self, v1: tuple, v2: tuple) -> "Polynomial":
        return self.rename({v1: v2, v2: v1})

    def map_coefficients(self, new_field, fn) -> "Polynomial":
        """Push coefficients through fn into new_field, dropping zeros."""
        return Polynomial(new_field, {m: fn(c) for m, c in self.terms.items()})

    def split_by_variable(self, v: tuple):
        """Group terms by the exponent of v: {e: {mono-without-v: coeff}}."""
        groups: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = 0
            rest = m
            for idx, (var, ex) in enumerate(m):
                if var == v:
                    e = ex
                    rest = m[:idx] + m[idx + 1:]
                    break
            groups.setdefault(e, {})[rest] = c
        return groups


# ---------------------------------------------------------------------------
# fast linear-form helpers (hot path of the shuffle product)


def mul_linear_diff(f: Polynomial, va: tuple, vb: tuple, const) -> Polynomial:
    """f * (va - vb + const), with const a field element (may be zero)."""
    fld = f.field
    zero = fld.zero
    out: dict = {}
    add, mul, neg = fld.add, fld.mul, fld.neg
    ma = ((va, 1),)
    mb = ((vb, 1),)
    use_const = const != zero
    for m, c in f.terms.items():
        m1 = mono_mul(m, ma)
        s = add(out.get(m1, zero), c)
        if s == zero:
            out.pop(m1, None)
        else:
            out[m1] = s
        m2 = mono_mul(m, mb)
        s = add(out.get(m2, zero), neg(c))
        if s == zero:
            out.pop(m2, None)
        else:
            out[m2] = s
        if use_const:
            s = add(out.get(m, zero), mul(c, const))
            if s == zero:
                out.pop(m, None)
            else:
                out[m] = s
    return Polynomial(fld, out, _clean=True)


def _dict_add_scaled(fld, acc: dict, other: dict, scale) -> None:
    zero = fld.zero
    add, mul = fld.add, fld.mul
    for m, c in other.items():
        s = add(acc.get(m, zero), mul(c, scale))
        if s == zero:
            acc.pop(m, None)
        else:
            acc[m] = s


def _dict_mul(fld, a: dict, b: dict) -> dict:
    zero = fld.zero
    add, mul = fld.add, fld.mul
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(ma, mb)
            s = add(out.get(m, zero), mul(ca, cb))
            if s == zero:
                out.pop(m, None)
            else:
                out[m] = s
    return out


def as_monic_linear(g: Polynomial):
    """Recognize g = u*(v - c) with v a variable absent from c.

    Returns (v, c_polynomial, u) or None.  Covers every divisor arising in
    the canonical denominators: differences of variables plus a constant.
    """
    if g.is_zero():
        return None
    lead_mono, lead_coeff = g.leading()
    if len(lead_mono) != 1 or lead_mono[0][1] != 1:
        return None
    v = lead_mono[0][0]
    rest = {}
    for m, c in g.terms.items():
        if m == lead_mono:
            continue
        if any(var == v for var, _ in m):
            return None
        rest[m] = c
    fld = g.field
    u_inv = fld.inv(lead_coeff)
    c_poly = Polynomial(fld, {m: fld.neg(fld.mul(c, u_inv)) for m, c in rest.items()}, _clean=True)
    return v, c_poly, lead_coeff


def _divide_monic_linear(f: Polynomial, v: tuple, c: Polynomial) -> Polynomial:
    """Exact quotient of f by (v - c); synthetic division in v."""
    fld = f.field
    groups = f.split_by_variable(v)
    if not groups:
        return Polynomial.zero(fld)
    d = max(groups)
    if d == 0:
        if f.is_zero():
            return f
        raise NotDivisibleError("divisor variable absent from a nonzero dividend", f)
    cterms = c.terms
    quot: dict = {}
    carry = dict(groups.get(d, {}))
    for k in range(d, 0, -1):
        # carry is the quotient coefficient of v^(k-1)
        if carry:
            if k - 1 > 0:
                vm = ((v, k - 1),)
            else:
                vm = MONO_ONE
            for m, co in carry.items():
                quot[mono_mul(m, vm)] = co
        nxt = dict(groups.get(k - 1, {}))
        if carry and cterms:
            _dict_add_scaled(fld, nxt, _dict_mul(fld, cterms, carry), fld.one)
        carry = nxt
    if carry:
        raise NotDivisibleError(
            "nonzero remainder in exact division",
            Polynomial(fld, carry, _clean=True),
        )
    return Polynomial(fld, quot, _clean=True)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f/g; raises NotDivisibleError if the remainder is nonzero.

    Multivariate division by leading-term reduction under the fixed graded-lex
    order, with a synthetic fast path for the ubiquitous linear divisors
    u*(v - c).
    """
    require_same_field(f.field, g.field)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    fld = f.field
    lin = as_monic_linear(g)
    if lin is not None:
        v, c, u = lin
        q = _divide_monic_linear(f, v, c)
        if u != fld.one:
            q = q.scale(fld.inv(u))
        return q
    gm, gc = g.leading()
    gc_inv = fld.inv(gc)
    work = dict(f.terms)
    quot: dict = {}
    zero = fld.zero
    while work:
        m = max(work, key=MONO_KEY)
        d = mono_div(m, gm)
        if d is None:
            raise NotDivisibleError("nonzero remainder in exact division", Polynomial(fld, work, _clean=True))
        c = fld.mul(work[m], gc_inv)
        quot[d] = c
        for mg, cg in g.terms.items():
            key = mono_mul(d, mg)
            s = fld.sub(work.get(key, zero), fld.mul(c, cg))
            if s == zero:
                work.pop(key, None)
            else:
                work[key] = s
    return Polynomial(fld, quot, _clean=True)


def divide_linear_diff(f: Polynomial, va: tuple, vb: tuple, const) -> Polynomial:
    """Exact quotient of f by (va - vb + const), va earlier than vb."""
    fld = f.field
    c = Polynomial(fld, {((vb, 1),): fld.one, MONO_ONE: fld.neg(const)})
    return _divide_monic_linear(f, va, c)


# ---------------------------------------------------------------------------
# symmetry helpers


def _color_index_map(perm_by_color: Mapping[int, tuple]) -> dict:
    mapping = {}
    for color, images in perm_by_color.items():
        for r, image in enumerate(images, start=1):
            if r != image:
                mapping[xvar(color, r)] = xvar(color, image)
    return mapping


def apply_index_permutation(f: Polynomial, perm_by_color: Mapping[int, tuple]) -> Polynomial:
    """Permute x-variable indices per color: x[i,r] -> x[i, sigma_i(r)]."""
    for v in f.variables():
        if v[0] == 0:
            images = perm_by_color.get(v[1])
            if images is None or v[2] > len(images):
                raise ValueError(
                    f"permutation does not cover variable {var_str(v)}"
                )
    return f.rename(_color_index_map(perm_by_color))


def symmetrize(f: Polynomial, perms: Iterable[Mapping[int, tuple]]) -> Polynomial:
    """Sum of f over the given per-color index permutations, no normalization."""
    total = Polynomial.zero(f.field)
    for perm in perms:
        total = total + apply_index_permutation(f, perm)
    return total


def full_permutations(grading: Iterable[int]):
    """All of Sigma_k as per-color permutation dicts, colors numbered from 1."""
    from itertools import permutations, product

    per_color = [
        [tuple(p) for p in permutations(range(1, k + 1))] for k in grading
    ]
    out = []
    for combo in product(*per_color):
        out.append({i + 1: combo[i] for i in range(len(per_color))})
    return out


def is_symmetric(f: Polynomial, grading) -> bool:
    """Invariance under adjacent index transpositions within each color."""
    grading = tuple(grading)
    for v in f.variables():
        if v[0] != 0:
            raise ValueError(f"non-x variable {var_str(v)} in symmetry check")
        if v[1] > len(grading) or v[2] > grading[v[1] - 1]:
            raise ValueError(f"variable {var_str(v)} outside grading {grading}")
    for color, k in enumerate(grading, start=1):
        for r in range(1, k):
            if f.swap_vars(xvar(color, r), xvar(color, r + 1)) != f:
                return False
    return True


def is_symmetric_in_groups(f: Polynomial, groups: Iterable[list]) -> bool:
    """Invariance under adjacent transpositions within each variable group."""
    for group in groups:
        for a, b in zip(group, group[1:]):
            if f.swap_vars(a, b) != f:
                return False
    return True


def coeffs_in_half_integers(f: Polynomial) -> bool:
    """True iff every coefficient is in Z[1/2] (denominator a power of 2)."""
    if not isinstance(f.field, RationalField):
        raise TypeError("half-integer test is only defined over Q")
    for c in f.terms.values():
        d = c.denominator
        if d & (d - 1):
            return False
    return True


# ---------------------------------------------------------------------------
# canonical text form

_TOKEN = re.compile(
    r"\s*(?:(?P<frac>\d+/\d+)|(?P<int>\d+)|(?P<xv>x\[\d+,\d+\])|"
    r"(?P<wv>w\[\d+,\d+,\d+\])|(?P<tv>t)|(?P<op>[+\-*^]))"
)


def _format_mono(m: tuple) -> str:
    parts = []
    for v, e in m:
        parts.append(var_str(v) if e == 1 else f"{var_str(v)}^{e}")
    return "*".join(parts)


def poly_str(f: Polynomial) -> str:
    """Canonical text: graded-lex descending terms joined by +/-."""
    if f.is_zero():
        return "0"
    fld = f.field
    rational = isinstance(fld, RationalField)
    pieces = []
    for idx, (m, c) in enumerate(f.sorted_terms()):
        negative = rational and c < 0
        mag = -c if negative else c
        mono_txt = _format_mono(m)
        if not mono_txt:
            body = fld.to_str(mag)
        elif mag == fld.one:
            body = mono_txt
        else:
            body = f"{fld.to_str(mag)}*{mono_txt}"
        if idx == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"-{body}" if negative else f"+{body}")
    return "".join(pieces)


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected input at {text[pos:]!r}")
            break
        pos = m.end()
        out.append((m.lastgroup, m.group().strip()))
    return out


def _parse_var(kind: str, tok: str) -> tuple:
    nums = [int(x) for x in re.findall(r"\d+", tok)]
    if kind == "xv":
        return xvar(nums[0], nums[1])
    if kind == "wv":
        return wvar(nums[0], nums[1], nums[2])
    return TVAR


def parse_polynomial(text: str, field=QQ, *, collect_mentions: bool = False):
    """Parse the canonical grammar: terms c*x[i,r]^e*... joined by +/-.

    With collect_mentions=True also returns the set of variables that occur
    syntactically, including ones written with exponent 0 (used to declare a
    grading without contributing to the polynomial).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    mentions: set = set()
    total = Polynomial.zero(field)
    i = 0
    n = len(tokens)

    def parse_term(i, sign):
        coeff = Fraction(-1 if sign == "-" else 1)
        mono: dict = {}
        expect_factor = True
        while i < n:
            kind, tok = tokens[i]
            if kind == "op" and tok in "+-":
                break
            if kind == "op" and tok == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ParseError(f"missing operator before {tok!r}")
            if kind == "frac":
                a, b = tok.split("/")
                coeff *= Fraction(int(a), int(b))
                i += 1
            elif kind == "int":
                coeff *= int(tok)
                i += 1
            elif kind in ("xv", "wv", "tv"):
                v = _parse_var(kind, tok)
                mentions.add(v)
                e = 1
                if i + 1 < n and tokens[i + 1] == ("op", "^"):
                    if i + 2 >= n or tokens[i + 2][0] != "int":
                        raise ParseError("exponent must be a nonnegative integer")
                    e = int(tokens[i + 2][1])
                    i += 2
                if e:
                    mono[v] = mono.get(v, 0) + e
                i += 1
            else:
                raise ParseError(f"unexpected token {tok!r}")
            expect_factor = False
        if expect_factor:
            raise ParseError("dangling operator in polynomial text")
        key = tuple(sorted(mono.items()))
        return i, key, coeff

    sign = "+"
    if tokens[0] == ("op", "+") or tokens[0] == ("op", "-"):
        sign = tokens[0][1]
        i = 1
    while i < n:
        i, mono, coeff = parse_term(i, sign)
        total = total + Polynomial.monomial(field, mono, field.from_fraction(coeff))
        if i < n:
            kind, tok = tokens[i]
            if kind != "op" or tok not in "+-":
                raise ParseError(f"expected + or - at {tok!r}")
            sign = tok
            i += 1
            if i >= n:
                raise ParseError("dangling sign at end of polynomial text")
    if collect_mentions:
        return total, mentions
    return total
