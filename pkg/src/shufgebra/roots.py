"""Type-A positive roots, their total orders, Kostant partitions, integer
partitions, and PBW exponent bookkeeping.

Roots of sl_n are intervals [i,j] of simple roots (1 <= i <= j <= n-1),
compared lexicographically on (i, j).  The PBW index order on (root, r)
pairs compares roots first and r in REVERSE within a root.  A Kostant
partition of a grading vector k records how many times each root is used;
partitions of equal grading are compared by their multiplicity vectors read
along increasing roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import product
from math import factorial
from typing import Iterable, Mapping

from .poly import ParseError, xvar


@total_ordering
@dataclass(frozen=True)
class Root:
    """The positive root alpha_i + ... + alpha_j, written [i,j]."""

    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i <= self.j):
            raise ValueError(f"invalid root [{self.i},{self.j}]")

    def __lt__(self, other: "Root") -> bool:
        return (self.i, self.j) < (other.i, other.j)

    @property
    def height(self) -> int:
        return self.j - self.i + 1

    def colors(self) -> range:
        return range(self.i, self.j + 1)

    def indicator(self, n: int) -> tuple:
        """Grading vector of the root: 1 on colors i..j, 0 elsewhere."""
        if self.j > n - 1:
            raise ValueError(f"root {self} does not fit rank {n}")
        return tuple(1 if self.i <= c <= self.j else 0 for c in range(1, n))

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


def positive_roots(n: int) -> list[Root]:
    """All positive roots of sl_n in increasing order."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    return [Root(i, j) for i in range(1, n) for j in range(i, n)]


def pbw_cmp(a: tuple[Root, int], b: tuple[Root, int]) -> int:
    """Total order on (root, r): roots ascending, r DESCENDING within a root."""
    ka, kb = pbw_sort_key(a), pbw_sort_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def pbw_sort_key(item: tuple[Root, int]):
    beta, r = item
    return (beta.i, beta.j, -r)


@total_ordering
@dataclass(frozen=True)
class KostantPartition:
    """Multiset of positive roots {d_beta} summing to a grading vector."""

    n: int
    counts: tuple  # sorted ((Root, mult), ...) with mult > 0

    @classmethod
    def of(cls, n: int, counts: Mapping[Root, int]) -> "KostantPartition":
        items = tuple(sorted((b, m) for b, m in counts.items() if m))
        for b, m in items:
            if m < 0 or b.j > n - 1:
                raise ValueError(f"bad multiplicity {m} for root {b} at rank {n}")
        return cls(n, items)

    def mult(self, beta: Root) -> int:
        for b, m in self.counts:
            if b == beta:
                return m
        return 0

    def roots(self) -> list[Root]:
        return [b for b, _ in self.counts]

    @property
    def grading(self) -> tuple:
        k = [0] * (self.n - 1)
        for b, m in self.counts:
            for c in b.colors():
                k[c - 1] += m
        return tuple(k)

    def sort_key(self) -> tuple:
        """Multiplicity vector along increasing roots; lex gives the order."""
        return tuple(self.mult(b) for b in positive_roots(self.n))

    def __lt__(self, other: "KostantPartition") -> bool:
        if self.n != other.n:
            raise ValueError("cannot compare partitions of different ranks")
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        inner = ", ".join(f"{b}:{m}" for b, m in self.counts)
        return "{" + inner + "}"


def kostant_partitions(n: int, k: Iterable[int]) -> list[KostantPartition]:
    """All Kostant partitions of k, sorted ascending in the canonical order."""
    k = tuple(k)
    if len(k) != n - 1 or any(c < 0 for c in k):
        raise ValueError(f"grading {k} does not match rank {n}")
    roots = positive_roots(n)
    out: list[KostantPartition] = []

    def recurse(idx: int, remaining: tuple, chosen: dict):
        if idx == len(roots):
            if all(c == 0 for c in remaining):
                out.append(KostantPartition.of(n, dict(chosen)))
            return
        beta = roots[idx]
        cols = [c - 1 for c in beta.colors()]
        cap = min(remaining[c] for c in cols)
        for m in range(cap + 1):
            if m:
                chosen[beta] = m
            rem = list(remaining)
            for c in cols:
                rem[c] -= m
            recurse(idx + 1, tuple(rem), chosen)
            chosen.pop(beta, None)

    recurse(0, k, {})
    out.sort(key=KostantPartition.sort_key)
    return out


def canonical_split(d: KostantPartition) -> dict:
    """Deterministic variable split for a Kostant partition.

    Walk roots ascending, group index s ascending, color ell ascending, and
    hand each slot the next unused x-variable index of its color.  Returns
    {(root, s, ell): x-variable}; a bijection onto the grading's variables.
    """
    next_index = [1] * (d.n - 1)
    assignment = {}
    for beta, m in d.counts:
        for s in range(1, m + 1):
            for ell in beta.colors():
                r = next_index[ell - 1]
                next_index[ell - 1] = r + 1
                assignment[(beta, s, ell)] = xvar(ell, r)
    return assignment


@dataclass(frozen=True)
class PBWExponent:
    """Finitely supported map (root, r) -> multiplicity, stored in PBW order."""

    n: int
    entries: tuple  # (((Root, r), mult), ...) sorted by pbw_sort_key, mult > 0

    @classmethod
    def of(cls, n: int, data: Mapping[tuple[Root, int], int]) -> "PBWExponent":
        items = [(key, m) for key, m in data.items() if m]
        for (beta, r), m in items:
            if beta.j > n - 1 or r < 0 or m < 0:
                raise ValueError(f"bad entry {beta}({r}) -> {m} at rank {n}")
        items.sort(key=lambda it: pbw_sort_key(it[0]))
        return cls(n, tuple(items))

    def degree(self) -> KostantPartition:
        counts: dict[Root, int] = {}
        for (beta, _), m in self.entries:
            counts[beta] = counts.get(beta, 0) + m
        return KostantPartition.of(self.n, counts)

    @property
    def grading(self) -> tuple:
        return self.degree().grading

    def factor_sequence(self) -> list[tuple[Root, int]]:
        """The ordered (root, r) factors, multiplicities expanded."""
        out = []
        for (beta, r), m in self.entries:
            out.extend([(beta, r)] * m)
        return out

    def root_partition(self, beta: Root) -> tuple:
        """r-values used with beta, with multiplicity, in decreasing order."""
        vals = []
        for (b, r), m in self.entries:
            if b == beta:
                vals.extend([r] * m)
        return tuple(sorted(vals, reverse=True))

    def numerator_degree(self) -> int:
        """Total degree of the shuffle numerator of the ordered monomial.

        Each factor for root [i,j] contributes r - (j - i) on top of the
        canonical denominator degree of the grading.
        """
        k = self.grading
        base = sum(k[c] * k[c + 1] for c in range(len(k) - 1))
        offset = sum(m * (r - (beta.j - beta.i)) for (beta, r), m in self.entries)
        return base + offset

    def __str__(self) -> str:
        inner = ", ".join(f"({b},{r}):{m}" for (b, r), m in self.entries)
        return "{" + inner + "}"


def is_p_restricted(obj, p: int) -> bool:
    """Multiplicity-below-p test for PBW exponents and integer partitions.

    For a partition, zero parts count: m_0 < p is required as well.
    """
    if isinstance(obj, PBWExponent):
        return all(m < p for _, m in obj.entries)
    lam = tuple(obj)
    check_partition(lam)
    for i in set(lam) | {0}:
        if sum(1 for part in lam if part == i) >= p:
            return False
    return True


# ---------------------------------------------------------------------------
# integer partitions (weakly decreasing tuples, explicit zero parts)


def check_partition(lam: tuple) -> None:
    if any(a < 0 for a in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")


def multiplicity(lam: tuple, i: int) -> int:
    return sum(1 for part in lam if part == i)


def mul_factor(lam: tuple) -> int:
    """prod over i >= 0 of m_i(lam)!, zero parts included."""
    check_partition(lam)
    out = 1
    for i in set(lam):
        out *= factorial(multiplicity(lam, i))
    return out


def size(lam: tuple) -> int:
    return sum(lam)


def size_lex_key(lam: tuple):
    """Sort key for the size-then-lexicographic partition order."""
    return (sum(lam), tuple(lam))


def partitions_of(total: int, length: int, max_part: int | None = None):
    """Weakly decreasing length-`length` tuples of naturals summing to total."""
    if max_part is None:
        max_part = total
    if length == 0:
        if total == 0:
            yield ()
        return
    top = min(max_part, total)
    for first in range(top, -1, -1):
        if first * length < total:
            break
        for rest in partitions_of(total - first, length - 1, first):
            yield (first,) + rest


def partitions_up_to(max_size: int, length: int):
    for total in range(max_size + 1):
        yield from partitions_of(total, length)


def _root_multisets(d: int, budget: int, p: int | None):
    """Weakly decreasing r-multisets of size d, sum <= budget, value
    multiplicities < p when p is given."""
    out = []

    def recurse(remaining, max_val, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for v in range(min(max_val, budget - sum(prefix)), -1, -1):
            if p is not None:
                run = 1
                for prev in reversed(prefix):
                    if prev == v:
                        run += 1
                    else:
                        break
                if run >= p:
                    continue
            prefix.append(v)
            recurse(remaining - 1, v, prefix)
            prefix.pop()

    recurse(d, budget, [])
    return out


def pbw_exponents(n: int, k: Iterable[int], max_degree: int, p: int | None = None) -> list[PBWExponent]:
    """All h with grading k, numerator degree <= max_degree, and (optionally)
    all multiplicities < p."""
    k = tuple(k)
    base = sum(k[c] * k[c + 1] for c in range(len(k) - 1))
    out: list[PBWExponent] = []
    for d in kostant_partitions(n, k):
        offset0 = sum(m * (beta.j - beta.i) for beta, m in d.counts)
        budget = max_degree - base + offset0
        if budget < 0:
            continue
        roots = d.roots()

        def assemble(idx: int, remaining: int, chosen: dict):
            if idx == len(roots):
                out.append(PBWExponent.of(n, dict(chosen)))
                return
            beta = roots[idx]
            for multiset in _root_multisets(d.mult(beta), remaining, p):
                used = sum(multiset)
                for r in multiset:
                    key = (beta, r)
                    chosen[key] = chosen.get(key, 0) + 1
                assemble(idx + 1, remaining - used, chosen)
                for r in multiset:
                    key = (beta, r)
                    chosen[key] -= 1
                    if not chosen[key]:
                        del chosen[key]

        assemble(0, budget, {})
    return out


# ---------------------------------------------------------------------------
# text forms

_ROOT_RE = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_root(text: str) -> Root:
    m = _ROOT_RE.fullmatch(text.strip())
    if not m:
        raise ParseError(f"not a root: {text!r}")
    return Root(int(m.group(1)), int(m.group(2)))


_KP_ENTRY = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*:\s*(\d+)")


def parse_kostant_partition(text: str, n: int) -> KostantPartition:
    """Parse the {[1,1]:2, [2,2]:1} form."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"not a Kostant partition: {text!r}")
    inner = body[1:-1]
    counts: dict[Root, int] = {}
    for m in _KP_ENTRY.finditer(inner):
        root = Root(int(m.group(1)), int(m.group(2)))
        counts[root] = counts.get(root, 0) + int(m.group(3))
    leftover = _KP_ENTRY.sub("", inner).replace(",", "").strip()
    if leftover:
        raise ParseError(f"malformed Kostant partition: {text!r}")
    return KostantPartition.of(n, counts)
