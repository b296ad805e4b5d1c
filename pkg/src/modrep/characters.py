"""Formal characters of Weyl modules and single-box filtration combinatorics.

The character of the Weyl module with highest weight lam is computed by
enumerating semistandard tableaux (characteristic free). The alternant
quotient form of the character formula is kept as a separate identity that
can be verified exactly, so the two routes stay independent of each other.
Dominant weights with negative entries are handled by shifting with a
multiple of (1,...,1), computing, and shifting back.
"""

from __future__ import annotations

import itertools

from .errors import InputError
from .weights import (
    Weight,
    addable_rows,
    normalize_partition,
    removable_rows,
    require_dominant,
    require_prime,
    shift_row,
)


class FormalCharacter:
    """Finite map from length-n integer weights to integer multiplicities.

    Zero multiplicities are never stored. Negative multiplicities are allowed
    (alternants are signed); Weyl characters only ever hold positive ones.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise InputError("weight length must be positive")
        self.n = n
        clean = {}
        for w, m in (terms or {}).items():
            w = tuple(w)
            if len(w) != n:
                raise InputError(f"weight {w} does not have length {n}")
            m = int(m)
            if m:
                clean[w] = m
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, FormalCharacter)
                and self.n == other.n and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for w, m in other.terms.items():
            terms[w] = terms.get(w, 0) + m
        return FormalCharacter(self.n, terms)

    def __sub__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for w, m in other.terms.items():
            terms[w] = terms.get(w, 0) - m
        return FormalCharacter(self.n, terms)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalCharacter(self.n, {w: m * other for w, m in self.terms.items()})
        self._check_compatible(other)
        terms = {}
        for w1, m1 in self.terms.items():
            for w2, m2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                terms[w] = terms.get(w, 0) + m1 * m2
        return FormalCharacter(self.n, terms)

    __rmul__ = __mul__

    def _check_compatible(self, other):
        if not isinstance(other, FormalCharacter) or other.n != self.n:
            raise InputError("characters must share the same weight length")

    def to_json_obj(self):
        return [{"weight": list(w), "mult": self.terms[w]} for w in sorted(self.terms)]

    def __repr__(self):
        body = " + ".join(f"{m}*e{w}" for w, m in sorted(self.terms.items()))
        return f"FormalCharacter(n={self.n}, {body or '0'})"


def _ssyt_contents(shape, n: int):
    """Yield the content vector (count of each entry 1..n) of every
    semistandard tableau of the given shape with entries at most n."""
    if not shape:
        yield (0,) * n
        return
    if len(shape) > n:
        return
    rows = len(shape)
    content = [0] * n

    def fill(r, prev_row):
        if r == rows:
            yield tuple(content)
            return
        width = shape[r]
        row = [0] * width

        def cell(c):
            if c == width:
                yield from fill(r + 1, row)
                return
            lo = row[c - 1] if c else 1
            if r:
                lo = max(lo, prev_row[c] + 1)
            for v in range(lo, n + 1):
                row[c] = v
                content[v - 1] += 1
                yield from cell(c + 1)
                content[v - 1] -= 1

        yield from cell(0)

    yield from fill(0, None)


def weyl_character(lam, n: int | None = None) -> FormalCharacter:
    """Character of the Weyl module with highest weight lam, by tableau
    enumeration; all multiplicities are positive."""
    lam = require_dominant(lam)
    if n is None:
        n = len(lam)
    if len(lam) != n:
        raise InputError(f"weight {lam} does not have length {n}")
    shift = -lam[-1] if lam[-1] < 0 else 0
    shape = normalize_partition(x + shift for x in lam)
    terms = {}
    for content in _ssyt_contents(shape, n):
        w = tuple(c - shift for c in content)
        terms[w] = terms.get(w, 0) + 1
    return FormalCharacter(n, terms)


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def alternant(mu, n: int | None = None) -> FormalCharacter:
    """Signed sum of e^{w(mu)} over all entry permutations w; identically zero
    when mu has a repeated entry."""
    mu = tuple(mu)
    if n is None:
        n = len(mu)
    if len(mu) != n:
        raise InputError(f"weight {mu} does not have length {n}")
    terms = {}
    for perm in itertools.permutations(range(n)):
        w = tuple(mu[j] for j in perm)
        terms[w] = terms.get(w, 0) + _perm_sign(perm)
    return FormalCharacter(n, terms)


def rho(n: int) -> Weight:
    return tuple(range(n, 0, -1))


def verify_weyl_formula(lam, n: int | None = None) -> bool:
    """Check alternant(lam + rho) == weyl_character(lam) * alternant(rho)
    as an exact identity of signed characters."""
    lam = require_dominant(lam)
    if n is None:
        n = len(lam)
    r = rho(n)
    lhs = alternant(tuple(a + b for a, b in zip(lam, r)), n)
    return lhs == weyl_character(lam, n) * alternant(r, n)


def dimension(ch: FormalCharacter) -> int:
    """Sum of all multiplicities; defined for honest (unsigned) characters."""
    if any(m < 0 for m in ch.terms.values()):
        raise InputError("dimension of a signed character is undefined")
    return sum(ch.terms.values())


def tensor_filtration_f(lam, alpha: int | None = None, p: int | None = None) -> list[Weight]:
    """Highest weights of the filtration of V tensor Delta(lam), in filtration
    order (rows increasing). With alpha given, keep only rows whose added box
    has content lam_i + 1 - i congruent to alpha mod p."""
    lam = require_dominant(lam)
    rows = sorted(addable_rows(lam))
    if alpha is not None:
        require_prime(p)
        rows = [i for i in rows if (lam[i - 1] + 1 - i - alpha) % p == 0]
    return [shift_row(lam, i, +1) for i in rows]


def tensor_filtration_e(lam, alpha: int | None = None, p: int | None = None) -> list[Weight]:
    """Highest weights of the filtration of V* tensor Delta(lam), rows
    decreasing; the residue filter keys on the removed box content lam_i - i."""
    lam = require_dominant(lam)
    rows = sorted(removable_rows(lam), reverse=True)
    if alpha is not None:
        require_prime(p)
        rows = [i for i in rows if (lam[i - 1] - i - alpha) % p == 0]
    return [shift_row(lam, i, -1) for i in rows]


def _char_sum(n, chars) -> FormalCharacter:
    total = FormalCharacter(n)
    for c in chars:
        total = total + c
    return total


def verify_pieri(lam, n: int | None = None) -> bool:
    """Check the single-box product rules as exact character identities:
    ch V * ch Delta(lam) against the F filtration and ch V* * ch Delta(lam)
    against the E filtration."""
    lam = require_dominant(lam)
    if n is None:
        n = len(lam)
    chl = weyl_character(lam, n)
    v = weyl_character((1,) + (0,) * (n - 1), n)
    f_ok = v * chl == _char_sum(n, (weyl_character(m, n) for m in tensor_filtration_f(lam)))
    vdual = weyl_character((0,) * (n - 1) + (-1,), n)
    e_ok = vdual * chl == _char_sum(n, (weyl_character(m, n) for m in tensor_filtration_e(lam)))
    return f_ok and e_ok


def casimir_scalar(mu, n: int | None = None) -> int:
    """The integer sum of mu_i * (mu_i + n + 1 - 2i): the scalar by which the
    quadratic Casimir acts on the module with highest weight mu."""
    mu = tuple(mu)
    if n is None:
        n = len(mu)
    if len(mu) != n:
        raise InputError(f"weight {mu} does not have length {n}")
    return sum(x * (x + n + 1 - 2 * (k + 1)) for k, x in enumerate(mu))
