"""Exact operators on tensor powers of the tautological module over F_p.

The basis of the D-fold tensor power of an n-dimensional space is the
lexicographically ordered list of index tuples, so every matrix built here
is reproducible bit for bit. Entries live in [0, p); products go through
float64 BLAS, which is exact because every intermediate value is an integer
far below 2^53 at the sizes used here, and are reduced mod p afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import InputError, VerificationError
from .weights import (
    add_box,
    addable_boxes,
    normalize_partition,
    partitions_of,
    require_prime,
)
from .characters import dimension, weyl_character


@dataclass(frozen=True)
class TensorSpace:
    """The D-fold tensor power of F^n with its fixed lexicographic basis."""
    n: int
    factors: int

    def __post_init__(self):
        if self.n < 1 or self.factors < 0:
            raise InputError(f"bad tensor space ({self.n}, {self.factors})")

    @property
    def dim(self) -> int:
        return self.n ** self.factors

    def tuple_of(self, idx: int) -> tuple[int, ...]:
        """Basis tuple (0-based entries) at a lexicographic position."""
        digits = []
        for _ in range(self.factors):
            idx, r = divmod(idx, self.n)
            digits.append(r)
        return tuple(reversed(digits))

    def index_of(self, t) -> int:
        idx = 0
        for d in t:
            idx = idx * self.n + d
        return idx


def _require_p3(p):
    require_prime(p)
    if p < 3:
        raise InputError("operators on tensor powers need p >= 3")
    return p


def mat_eye(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.int64)


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # float64 BLAS is exact as long as every accumulated value stays below
    # 2^53; entries are < p, so the inner dimension bounds the products
    if a.shape[1] * (p - 1) ** 2 >= 2 ** 53:
        raise InputError(f"matrix product of inner dimension {a.shape[1]} "
                         f"mod {p} would overflow exact float64 accumulation")
    c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return c % p


def mat_pow(m: np.ndarray, k: int, p: int) -> np.ndarray:
    result = mat_eye(m.shape[0])
    base = np.asarray(m, dtype=np.int64) % p
    while k:
        if k & 1:
            result = mat_mul(result, base, p)
        base = mat_mul(base, base, p)
        k >>= 1
    return result


def _check_factors(factors, space, allow_empty=False):
    factors = sorted(set(factors))
    if not factors and not allow_empty:
        raise InputError("factor set must be nonempty")
    if factors and (factors[0] < 1 or factors[-1] > space.factors):
        raise InputError(f"slots {factors} out of range 1..{space.factors}")
    return factors


def matrix_unit_action(i: int, j: int, factors, space: TensorSpace, p: int) -> np.ndarray:
    """Sum over the given 1-based slots of the matrix unit E_ij applied at
    that slot, identity elsewhere."""
    require_prime(p)
    if not (1 <= i <= space.n and 1 <= j <= space.n):
        raise InputError(f"matrix unit indices ({i},{j}) out of range 1..{space.n}")
    factors = _check_factors(factors, space)
    dim = space.dim
    m = np.zeros((dim, dim), dtype=np.int64)
    for col in range(dim):
        t = space.tuple_of(col)
        for a in factors:
            if t[a - 1] == j - 1:
                row = space.index_of(t[:a - 1] + (i - 1,) + t[a:])
                m[row, col] += 1
    return m % p


def casimir(factors, space: TensorSpace, p: int) -> np.ndarray:
    """The quadratic Casimir sum of E_ij E_ji acting on the given slots
    through the Leibniz rule; the empty slot set gives the zero matrix."""
    _require_p3(p)
    factors = _check_factors(factors, space, allow_empty=True)
    dim = space.dim
    m = np.zeros((dim, dim), dtype=np.int64)
    if not factors:
        return m
    units = {}
    for i in range(1, space.n + 1):
        for j in range(1, space.n + 1):
            units[(i, j)] = matrix_unit_action(i, j, factors, space, p)
    for i in range(1, space.n + 1):
        for j in range(1, space.n + 1):
            m = (m + mat_mul(units[(i, j)], units[(j, i)], p)) % p
    return m


def casimir_normal_ordered(factors, space: TensorSpace, p: int) -> np.ndarray:
    """The rewritten Casimir 2*sum_{i>j} E_ij E_ji + sum_i E_ii (E_ii + n+1-2i);
    must agree with casimir() as a matrix."""
    _require_p3(p)
    factors = _check_factors(factors, space, allow_empty=True)
    dim = space.dim
    m = np.zeros((dim, dim), dtype=np.int64)
    if not factors:
        return m
    n = space.n
    for i in range(1, n + 1):
        for j in range(1, i):
            m = (m + 2 * mat_mul(matrix_unit_action(i, j, factors, space, p),
                                 matrix_unit_action(j, i, factors, space, p), p)) % p
    for i in range(1, n + 1):
        eii = matrix_unit_action(i, i, factors, space, p)
        m = (m + mat_mul(eii, (eii + (n + 1 - 2 * i) * mat_eye(dim)) % p, p)) % p
    return m


def tensor_casimir(a: int, factors, space: TensorSpace, p: int) -> np.ndarray:
    """Sum over i,j of E_ij at slot a composed with E_ji spread over the
    given slots; the slot a must not occur among them."""
    _require_p3(p)
    factors = _check_factors(factors, space, allow_empty=True)
    if not (1 <= a <= space.factors):
        raise InputError(f"slot {a} out of range 1..{space.factors}")
    if a in factors:
        raise InputError(f"slot {a} overlaps the factor set {factors}")
    dim = space.dim
    m = np.zeros((dim, dim), dtype=np.int64)
    if not factors:
        return m
    for i in range(1, space.n + 1):
        for j in range(1, space.n + 1):
            m = (m + mat_mul(matrix_unit_action(i, j, [a], space, p),
                             matrix_unit_action(j, i, factors, space, p), p)) % p
    return m


def swap_slots(a: int, b: int, space: TensorSpace, p: int) -> np.ndarray:
    """Permutation matrix exchanging two tensor slots."""
    require_prime(p)
    dim = space.dim
    m = np.zeros((dim, dim), dtype=np.int64)
    for col in range(dim):
        t = list(space.tuple_of(col))
        t[a - 1], t[b - 1] = t[b - 1], t[a - 1]
        m[space.index_of(tuple(t)), col] = 1
    return m


def build_Xi(i: int, N: int, d: int, n: int, p: int) -> np.ndarray:
    """The i-th polynomial generator on the N+d slot space: the tensor
    Casimir at slot N-i+1 paired with every slot to its right (the module
    occupies the last d slots)."""
    if not 1 <= i <= N:
        raise InputError(f"index {i} out of range 1..{N}")
    space = TensorSpace(n, N + d)
    a = N - i + 1
    return tensor_casimir(a, range(a + 1, N + d + 1), space, p)


def build_Ti(i: int, N: int, d: int, n: int, p: int) -> np.ndarray:
    """The i-th swap generator: exchange slots N-i and N-i+1."""
    if not 1 <= i <= N - 1:
        raise InputError(f"index {i} out of range 1..{N - 1}")
    _require_p3(p)
    return swap_slots(N - i, N - i + 1, TensorSpace(n, N + d), p)


def verify_hecke_relations(n: int, N: int, d: int, p: int,
                           xs=None, ts=None) -> list[str]:
    """Check all six defining relation families as exact matrix identities
    over F_p; return the list of violations (empty on success). xs and ts
    may be supplied to test the checker itself against corrupted operators."""
    _require_p3(p)
    if N < 1 or d < 0:
        raise InputError(f"bad shape N={N}, d={d}")
    if xs is None:
        xs = [build_Xi(i, N, d, n, p) for i in range(1, N + 1)]
    if ts is None:
        ts = [build_Ti(i, N, d, n, p) for i in range(1, N)]
    dim = n ** (N + d)
    eye = mat_eye(dim)
    report = []

    def x(i):
        return xs[i - 1]

    def t(i):
        return ts[i - 1]

    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if not np.array_equal(mat_mul(x(i), x(j), p), mat_mul(x(j), x(i), p)):
                report.append(f"X{i} X{j} != X{j} X{i}")
    for i in range(1, N):
        if not np.array_equal(mat_mul(t(i), t(i), p), eye):
            report.append(f"T{i}^2 != 1")
    for i in range(1, N):
        for j in range(i + 2, N):
            if not np.array_equal(mat_mul(t(i), t(j), p), mat_mul(t(j), t(i), p)):
                report.append(f"T{i} T{j} != T{j} T{i}")
    for i in range(1, N - 1):
        lhs = mat_mul(mat_mul(t(i), t(i + 1), p), t(i), p)
        rhs = mat_mul(mat_mul(t(i + 1), t(i), p), t(i + 1), p)
        if not np.array_equal(lhs, rhs):
            report.append(f"T{i} T{i+1} T{i} != T{i+1} T{i} T{i+1}")
    for i in range(1, N):
        lhs = (mat_mul(t(i), x(i + 1), p) - mat_mul(x(i), t(i), p)) % p
        if not np.array_equal(lhs, eye):
            report.append(f"T{i} X{i+1} - X{i} T{i} != 1")
    for i in range(1, N):
        for j in range(1, N + 1):
            if j - i in (0, 1):
                continue
            if not np.array_equal(mat_mul(t(i), x(j), p), mat_mul(x(j), t(i), p)):
                report.append(f"T{i} X{j} != X{j} T{i}")
    return report


def verify_flip_identity(n: int, p: int) -> bool:
    """The tensor Casimir on two bare slots equals the slot swap."""
    space = TensorSpace(n, 2)
    return np.array_equal(tensor_casimir(1, [2], space, p),
                          swap_slots(1, 2, space, p))


def verify_casimir_coproduct(a: int, factors, space: TensorSpace, p: int) -> bool:
    """Casimir of the union minus the two parts equals twice the tensor
    Casimir pairing slot a with the factor set."""
    factors = _check_factors(factors, space, allow_empty=True)
    lhs = (casimir([a] + factors, space, p)
           - casimir([a], space, p)
           - casimir(factors, space, p)) % p
    return np.array_equal(lhs, (2 * tensor_casimir(a, factors, space, p)) % p)


# ---------------------------------------------------------------------------
# generalized eigenspaces against the combinatorial prediction

def rank_mod_p(m: np.ndarray, p: int) -> int:
    """Row-reduction rank over F_p (deterministic pivoting)."""
    require_prime(p)
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if a[rr, c]:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        below = np.nonzero(a[r + 1:, c])[0]
        if below.size:
            idx = below + r + 1
            a[idx] = (a[idx] - np.outer(a[idx, c], a[r])) % p
        r += 1
        if r == rows:
            break
    return r


def generalized_eigenspaces(m: np.ndarray, p: int) -> dict[int, int]:
    """Dimension of the kernel of (m - a)^dim for every a in F_p.

    Raises VerificationError when the dimensions do not exhaust the space,
    which would mean an eigenvalue outside the prime field."""
    require_prime(p)
    m = np.asarray(m, dtype=np.int64) % p
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"matrix must be square, got shape {m.shape}")
    dim = m.shape[0]
    out = {}
    for a in range(p):
        pw = mat_pow((m - a * mat_eye(dim)) % p, dim, p)
        out[a] = dim - rank_mod_p(pw, p)
    if sum(out.values()) != dim:
        raise VerificationError(
            f"generalized eigenspace dimensions sum to {sum(out.values())}, "
            f"expected {dim}: spectrum not inside F_{p}")
    return out


def syt_count(shape) -> int:
    """Number of standard tableaux of the shape, by the hook length product."""
    shape = normalize_partition(shape)
    if not shape:
        return 1
    conj = [sum(1 for part in shape if part > c) for c in range(shape[0])]
    denom = 1
    for r, width in enumerate(shape):
        for c in range(width):
            denom *= (width - c) + (conj[c] - r) - 1
    return factorial(sum(shape)) // denom


def predicted_F_alpha_dims(n: int, d: int, p: int) -> dict[int, int]:
    """Combinatorial prediction for the residue blocks of the tensor-with-V
    operator on V tensor V^(tensor d): sum over partitions of d with at most
    n rows of (standard tableau count) times (tableau dimension of the grown
    shape), keyed by the added box residue."""
    require_prime(p)
    out = {a: 0 for a in range(p)}
    for lam in partitions_of(d, max_rows=n):
        f_lam = syt_count(lam)
        for row, col in addable_boxes(lam, max_rows=n):
            mu = add_box(lam, (row, col))
            padded = mu + (0,) * (n - len(mu))
            out[(col - row) % p] += f_lam * dimension(weyl_character(padded, n))
    return out


def x_on_module_tower(n: int, d: int, p: int) -> np.ndarray:
    """The tensor Casimir pairing one new V slot with a d-fold tensor power
    of V: the operator whose residue blocks predicted_F_alpha_dims predicts."""
    return build_Xi(1, 1, d, n, p)


def matrix_to_json_obj(m: np.ndarray, p: int) -> dict:
    m = np.asarray(m, dtype=np.int64) % p
    return {"p": p, "dims": list(m.shape), "entries": [int(x) for x in m.ravel()]}
