"""Obstructions to 1-perfect Kendall codes via mod-p invertibility.

A 1-perfect code would force linear counting relations on coset (or irrep)
data; when the relevant matrix is invertible over the rationals and n does
not divide the Young subgroup order, no such code exists.  Invertibility is
certified by modular arithmetic: a nonzero determinant mod p is already a
proof of rational invertibility, while singularity mod p says nothing and is
retried with the next prime from the configured list.

Two matrix engines are provided.  Dense elimination (numpy, residues mod p)
gives a deterministic determinant for dimensions up to DENSE_LIMIT.  Above
that, elimination fill is prohibitive, so a Wiedemann-style black-box check
is used instead: Berlekamp-Massey on a projected Krylov sequence yields a
candidate annihilator; when its constant term is nonzero we reconstruct w
with A w = v and verify the product, for several independent right-hand
sides.  Every certificate records the prime and the method that produced it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

import numpy as np
import scipy.sparse as sp

from kendall_codes import young
from kendall_codes.perms import ball, identity
from kendall_codes.young import ActionMatrix, check_partition

VERDICT_INVERTIBLE = "invertible"
VERDICT_SINGULAR = "singular-mod-p"
VERDICT_SKIPPED = "skipped"

CONCLUSION_NO_CODE = "no-1-perfect-code"
CONCLUSION_INCONCLUSIVE = "inconclusive"

#: largest dimension handled by dense elimination
DENSE_LIMIT = 4096
#: default skip threshold for per-matrix checks in the irrep route
IRREP_CHECK_LIMIT = 4096
#: fixed primes just above 10^6; small enough that residue products fit int64
DEFAULT_PRIMES = (1000003, 1000033, 1000037)
#: independent verified solves required by the black-box certificate
WIEDEMANN_SOLVES = 2
WIEDEMANN_SEED = 0x5eed


# ---------------------------------------------------------------------------
# matrices over Z/p

@dataclass(frozen=True)
class ModPMatrix:
    """Square matrix of residues mod a prime, stored sparse."""

    dim: int
    p: int
    entries: sp.csr_matrix  # int64 residues in [0, p)


def _residue(value, p: int) -> int:
    if isinstance(value, Fraction):
        if value.denominator % p == 0:
            raise ValueError(f"denominator {value.denominator} divisible by {p}")
        return value.numerator * pow(value.denominator, -1, p) % p
    return int(value) % p


def modp_from_action(action: ActionMatrix, p: int) -> ModPMatrix:
    ent = action.entries.astype(np.int64).copy()
    ent.data %= p
    return ModPMatrix(dim=action.dim, p=p, entries=ent)


def modp_from_entries(dim: int, entries, p: int, n: int | None = None) -> ModPMatrix:
    """Sparse dict {(i,j): value} -> ModPMatrix; values may be Fractions.

    For seminormal matrices pass n: reduction demands p > n so that no axial
    distance (hence no denominator) vanishes mod p.
    """
    if n is not None and p <= n:
        raise ValueError(f"seminormal reduction mod {p} needs p > n = {n}")
    ii, jj, vv = [], [], []
    for (i, j), value in entries.items():
        r = _residue(value, p)
        if r:
            ii.append(i)
            jj.append(j)
            vv.append(r)
    mat = sp.csr_matrix((np.array(vv, dtype=np.int64),
                         (np.array(ii, dtype=np.intp), np.array(jj, dtype=np.intp))),
                        shape=(dim, dim))
    return ModPMatrix(dim=dim, p=p, entries=mat)


def modp_from_rows(rows, p: int) -> ModPMatrix:
    dim = len(rows)
    entries = {}
    for i, row in enumerate(rows):
        if len(row) != dim:
            raise ValueError("matrix is not square")
        for j, v in enumerate(row):
            entries[(i, j)] = v
    return modp_from_entries(dim, entries, p)


# ---------------------------------------------------------------------------
# determinants

def integer_determinant(rows) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [[int(v) for v in row] for row in rows]
    d = len(a)
    if any(len(row) != d for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(d - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, d) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[d - 1][d - 1]


def _det_mod_dense(matrix: ModPMatrix) -> int:
    p = matrix.p
    a = np.mod(matrix.entries.toarray().astype(np.int64), p)
    d = matrix.dim
    det = 1
    for k in range(d):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            return 0
        i = k + int(nz[0])
        if i != k:
            a[[k, i], k:] = a[[i, k], k:]
            det = p - det
        piv = int(a[k, k])
        det = det * piv % p
        a[k, k:] = a[k, k:] * pow(piv, -1, p) % p
        col = a[k + 1:, k]
        if col.any():
            a[k + 1:, k:] = (a[k + 1:, k:] - col[:, None] * a[k, k:][None, :]) % p
    return det


# ---------------------------------------------------------------------------
# black-box certificate (Wiedemann)

def _berlekamp_massey(seq, p: int) -> list[int]:
    """Shortest LFSR c (c[0] = 1) with sum_i c[i] s[k-i] = 0 mod p.

    Vectorized: the discrepancy is a dot product and the update a scaled
    vector subtraction.  Entries stay below p < 2**20 and lengths below
    2**18, so every int64 intermediate fits comfortably.
    """
    s = np.asarray(seq, dtype=np.int64) % p
    n = len(s)
    c = np.zeros(n + 1, dtype=np.int64)
    b = np.zeros(n + 1, dtype=np.int64)
    c[0] = b[0] = 1
    L = 0
    m = 1
    bb = 1
    for k in range(n):
        if L:
            delta = int((int(s[k]) + int(c[1:L + 1] @ s[k - L:k][::-1])) % p)
        else:
            delta = int(s[k])
        if delta == 0:
            m += 1
            continue
        coef = delta * pow(bb, -1, p) % p
        if 2 * L <= k:
            old_c = c.copy()
            c[m:n + 1] = (c[m:n + 1] - coef * b[:n + 1 - m]) % p
            L = k + 1 - L
            b = old_c
            bb = delta
            m = 1
        else:
            c[m:n + 1] = (c[m:n + 1] - coef * b[:n + 1 - m]) % p
            m += 1
    return [int(v) for v in c[:L + 1]]


def _matvec_mod(entries: sp.csr_matrix, x: np.ndarray, p: int) -> np.ndarray:
    return entries.dot(x) % p


def _krylov_sequence(matrix: ModPMatrix, u, v, length: int):
    """First `length` terms of u . A^k v mod p and the vector A^length v."""
    p = matrix.p
    seq = []
    w = v.copy()
    for _ in range(length):
        seq.append(int(u.dot(w) % p))
        w = _matvec_mod(matrix.entries, w, p)
    return seq, w


def _wiedemann_solve(matrix: ModPMatrix, v: np.ndarray, rng: random.Random):
    """Try to produce w with A w = v mod p; None when the candidate
    annihilator has zero constant term or verification fails."""
    p = matrix.p
    dim = matrix.dim
    for _ in range(3):
        u = np.array([rng.randrange(p) for _ in range(dim)], dtype=np.int64)
        # adaptive sequence length: the minimal polynomial of these action /
        # seminormal matrices is typically far shorter than 2 dim
        length = min(2 * dim + 2, 64)
        seq, tail = _krylov_sequence(matrix, u, v, length)
        while True:
            c = _berlekamp_massey(seq, p)
            deg = len(c) - 1
            if length >= 2 * dim + 2 or length >= 4 * max(deg, 1) + 8:
                break
            grow = min(2 * dim + 2 - length, length)
            more, tail = _krylov_sequence(matrix, u, tail, grow)
            seq.extend(more)
            length += grow
        # recurrence poly g(x) = x^deg + c[1] x^(deg-1) + ... + c[deg]
        if deg == 0 or c[deg] % p == 0:
            continue
        w = v.copy()
        for i in range(1, deg):
            w = (_matvec_mod(matrix.entries, w, p) + c[i] * v) % p
        w = (-pow(c[deg], -1, p)) % p * w % p
        if (_matvec_mod(matrix.entries, w, p) == v % p).all():
            return w
    return None


def _certify_wiedemann(matrix: ModPMatrix) -> str:
    rng = random.Random(WIEDEMANN_SEED * 1000003 + matrix.p * 31 + matrix.dim)
    for _ in range(WIEDEMANN_SOLVES):
        v = np.array([rng.randrange(matrix.p) for _ in range(matrix.dim)],
                     dtype=np.int64)
        if _wiedemann_solve(matrix, v, rng) is None:
            return VERDICT_SINGULAR
    return VERDICT_INVERTIBLE


# ---------------------------------------------------------------------------
# public certificate interface

@dataclass(frozen=True)
class MatrixCheck:
    label: str
    dim: int
    prime: int | None
    verdict: str  # invertible | singular-mod-p | skipped
    method: str   # dense-elimination | wiedemann | skipped

    def to_json_dict(self) -> dict:
        return {"label": self.label, "dim": self.dim, "prime": self.prime,
                "verdict": self.verdict, "method": self.method}


def _as_modp(matrix, p: int, n: int | None = None) -> ModPMatrix:
    if isinstance(matrix, ModPMatrix):
        if matrix.p != p:
            raise ValueError("matrix already reduced at a different prime")
        return matrix
    if isinstance(matrix, ActionMatrix):
        return modp_from_action(matrix, p)
    if isinstance(matrix, dict):
        dim = max(max(i, j) for i, j in matrix) + 1 if matrix else 0
        return modp_from_entries(dim, matrix, p, n=n)
    return modp_from_rows(matrix, p)


def invertible_mod_p(matrix, p: int, n: int | None = None) -> str:
    """'invertible' proves rational invertibility; 'singular-mod-p' proves
    nothing and should be retried at another prime.

    Accepts dense rows (ints or Fractions), a sparse {(i,j): value} dict, an
    ActionMatrix, or a prepared ModPMatrix.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = _as_modp(matrix, p, n=n)
    verdict, _method = _certify(m)
    return verdict


def _certify(matrix: ModPMatrix) -> tuple[str, str]:
    if matrix.dim <= DENSE_LIMIT:
        det = _det_mod_dense(matrix)
        return (VERDICT_INVERTIBLE if det else VERDICT_SINGULAR,
                "dense-elimination")
    return _certify_wiedemann(matrix), "wiedemann"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# obstruction pipelines

@dataclass(frozen=True)
class ObstructionReport:
    n: int
    route: str
    divisibility_ok: bool
    matrices: tuple[MatrixCheck, ...]
    conclusion: str
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "route": self.route,
            "divisibilityOk": self.divisibility_ok,
            "matrices": [m.to_json_dict() for m in self.matrices],
            "conclusion": self.conclusion,
            "notes": list(self.notes),
        }


def divisibility_precondition(n: int, shape) -> bool:
    """True iff n does not divide |S_shape| = prod(part!)."""
    shape = check_partition(shape)
    if young.partition_n(shape) != n:
        raise ValueError("shape is not a partition of n")
    return young.young_subgroup_order(shape) % n != 0


def perfect_counting_condition(n: int, r: int) -> bool:
    """Necessary counting condition for an r-perfect code: |B_r| divides n!."""
    size = len(ball(n, identity(n), r))
    return factorial(n) % size == 0


def _check_one(label: str, build, dim: int, primes, n: int | None = None):
    """Run the certificate at successive primes; one MatrixCheck plus notes."""
    notes = []
    matrix = build()
    for p in primes:
        m = _as_modp(matrix, p, n=n)
        verdict, method = _certify(m)
        if verdict == VERDICT_INVERTIBLE:
            return MatrixCheck(label, dim, p, verdict, method), notes
        notes.append(f"{label}: singular mod {p}, retrying")
    return MatrixCheck(label, dim, primes[-1], VERDICT_SINGULAR, method), notes


def obstruction_coset(n: int, shape, primes=DEFAULT_PRIMES,
                      limit: int = young.SPARSE_TABLOID_LIMIT) -> ObstructionReport:
    """Coset route: invertibility of the action matrix on tabloids of shape."""
    shape = check_partition(shape)
    primes = _checked_primes(primes)
    div_ok = divisibility_precondition(n, shape)
    dim = young.tabloid_count(shape)
    notes = []
    if not div_ok:
        notes.append(f"{n} divides the Young subgroup order "
                     f"{young.young_subgroup_order(shape)}; the counting "
                     "argument does not apply")
        return ObstructionReport(n=n, route=f"coset{shape}", divisibility_ok=False,
                                 matrices=(), conclusion=CONCLUSION_INCONCLUSIVE,
                                 notes=tuple(notes))
    action = young.build_action_matrix(n, shape, limit)
    check, more = _check_one(f"action{shape}", lambda: action, dim, primes)
    notes.extend(more)
    ok = check.verdict == VERDICT_INVERTIBLE
    return ObstructionReport(
        n=n, route=f"coset{shape}", divisibility_ok=True, matrices=(check,),
        conclusion=CONCLUSION_NO_CODE if ok else CONCLUSION_INCONCLUSIVE,
        notes=tuple(notes))


def obstruction_irreps(n: int, mu, use_list: str = "computed",
                       primes=DEFAULT_PRIMES,
                       check_limit: int = IRREP_CHECK_LIMIT) -> ObstructionReport:
    """Irrep route: invertibility of T-hat on every constituent of the
    tabloid module of mu (all partitions dominating mu, by Young's rule)."""
    mu = check_partition(mu)
    if young.partition_n(mu) != n:
        raise ValueError("mu is not a partition of n")
    primes = _checked_primes(primes)
    if use_list == "computed":
        lams = young.constituents_dominating(mu)
    elif use_list == "published":
        if n != 15 or mu != (4, 4, 4, 3):
            raise ValueError("the published list is specific to mu=(4,4,4,3)")
        lams = young.published_s15_list()
    else:
        raise ValueError(f"use_list must be 'computed' or 'published', got {use_list!r}")
    div_ok = divisibility_precondition(n, mu)
    checks = []
    notes = []
    skipped = 0
    for lam in lams:
        dim = young.hook_length_dimension(lam)
        label = f"T-hat{lam}"
        if dim > check_limit:
            checks.append(MatrixCheck(label, dim, None, VERDICT_SKIPPED, "skipped"))
            skipped += 1
            continue
        check, more = _check_one(
            label, lambda lam=lam: young.irrep_T_matrix(lam), dim, primes, n=n)
        checks.append(check)
        notes.extend(more)
    all_inv = all(c.verdict == VERDICT_INVERTIBLE for c in checks)
    complete = set(lams) >= set(young.constituents_dominating(mu))
    if skipped:
        notes.append(f"{skipped} constituents above dimension {check_limit} skipped")
    if use_list == "published" and not complete:
        notes.append("constituent list is a published subset of the computed "
                     "dominance set; conclusion stays inconclusive")
    conclusive = div_ok and all_inv and complete and not skipped
    return ObstructionReport(
        n=n, route=f"irreps({mu}, {use_list})", divisibility_ok=div_ok,
        matrices=tuple(checks),
        conclusion=CONCLUSION_NO_CODE if conclusive else CONCLUSION_INCONCLUSIVE,
        notes=tuple(notes))


def conjecture_check(p: int, primes=DEFAULT_PRIMES,
                     limit: int = young.SPARSE_TABLOID_LIMIT) -> ObstructionReport:
    """Instance check of the (p-1, p-1, 2) family in S_2p for prime p >= 3."""
    if p < 3 or not _is_prime(p):
        raise ValueError(f"need a prime p >= 3, got {p}")
    return obstruction_coset(2 * p, (p - 1, p - 1, 2), primes, limit)


def _checked_primes(primes):
    primes = tuple(primes)
    if not primes:
        raise ValueError("empty prime list")
    for p in primes:
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
    return primes
