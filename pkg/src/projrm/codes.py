"""Linear codes over a field tower: rref, duals, subfield subcodes, traces, weights."""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .fields import arith_for

DEFAULT_BUDGET = 2 ** 28


class BudgetExceeded(RuntimeError):
    pass


# -- linear algebra -----------------------------------------------------------

def _is_binary(F):
    return F.p == 2 and F.Q == 2


def rref(M, F):
    """Reduced row echelon form over F; returns (R, pivot columns)."""
    M = np.array(M, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = M.shape
    binary = _is_binary(F)
    if binary:
        M = M.astype(np.uint8)
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            M[[r, i]] = M[[i, r]]
        if not binary and M[r, c] != 1:
            M[r] = F.vmul(M[r], F.vinv(np.array(M[r, c])))
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if len(hit):
            if binary:
                M[hit] ^= M[r]
            else:
                M[hit] = F.vsub(M[hit], F.vmul(col[hit, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r].astype(np.int64), pivots


def rank(M, F):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, F)[1])


def kernel(M, F):
    """Basis of {v : M v = 0} as rows."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(M, F)
    free = [c for c in range(n) if c not in set(piv)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        if piv:
            K[t, piv] = F.vneg(R[:, f])
    return K


def same_row_space(A, B, F):
    A, B = np.asarray(A), np.asarray(B)
    ra, rb = rank(A, F), rank(B, F)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(np.vstack([A, B]), F) == ra


def in_row_space(A, vecs, F):
    vecs = np.atleast_2d(vecs)
    ra = rank(A, F)
    return rank(np.vstack([np.asarray(A).reshape(-1, vecs.shape[1]), vecs]), F) == ra


# -- codes ---------------------------------------------------------------------

@dataclass
class LinearCode:
    """Row-reduced generator matrix over F_q (level 'q') or F_{q^s} (level 'Q')."""
    ctx: object
    level: str
    gen: np.ndarray
    n: int
    label: str = ""

    @classmethod
    def from_rows(cls, ctx, level, rows, n, label=""):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
        F = arith_for(ctx, level)
        gen = rref(rows, F)[0] if len(rows) else np.zeros((0, n), dtype=np.int64)
        return cls(ctx, level, gen, n, label)

    @property
    def F(self):
        return arith_for(self.ctx, self.level)

    @property
    def k(self):
        return self.gen.shape[0]

    @property
    def size(self):
        """Number of field elements at this level."""
        return self.ctx.q if self.level == "q" else self.ctx.Q

    def dual(self):
        return LinearCode(self.ctx, self.level, rref_or_empty(kernel(self.gen, self.F), self.F, self.n),
                          self.n, "dual(%s)" % self.label)

    def contains(self, vecs):
        return in_row_space(self.gen, vecs, self.F)

    def same_as(self, other):
        return self.level == other.level and same_row_space(self.gen, other.gen, self.F)


def rref_or_empty(M, F, n):
    if len(M) == 0:
        return np.zeros((0, n), dtype=np.int64)
    return rref(M, F)[0]


def dual(code):
    return code.dual()


def _expand_basis(code):
    """Rows a^t G_i for t < s: an F_q-spanning set of the F_{q^s}-row space."""
    ctx = code.ctx
    scal = np.array([ctx.elem(t) for t in range(ctx.s)], dtype=np.int64)
    return ctx.vmul(scal[:, None, None], code.gen[None, :, :]).reshape(-1, code.n)


def subfield_subcode(code):
    """C intersected with F_q^n, via coordinates over the basis {1, a, ..., a^{s-1}}."""
    if code.level != "Q":
        raise ValueError("subfield subcode needs a code over the top field")
    ctx, n = code.ctx, code.n
    Fq = arith_for(ctx, "q")
    if code.k == 0:
        return LinearCode(ctx, "q", np.zeros((0, n), dtype=np.int64), n, "sub(%s)" % code.label)
    if ctx.s == 1:
        return LinearCode(ctx, "q", code.gen.copy(), n, "sub(%s)" % code.label)
    P = _expand_basis(code)
    coords = ctx.subfield_coords[P]
    E0 = coords[:, :, 0]
    rest = coords[:, :, 1:].transpose(0, 2, 1).reshape(len(P), -1)
    K = kernel(rest.T, Fq)
    if len(K) == 0:
        return LinearCode(ctx, "q", np.zeros((0, n), dtype=np.int64), n, "sub(%s)" % code.label)
    rows = _matmul(K, E0, Fq)
    return LinearCode.from_rows(ctx, "q", rows, n, "sub(%s)" % code.label)


def _matmul(A, B, F):
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    if F.Q == F.p:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, j, None], B[j][None, :]))
    return out


def trace_code(code):
    """Componentwise traces Tr(a^t G_i) down to F_q."""
    ctx, n = code.ctx, code.n
    if code.k == 0:
        return LinearCode(ctx, "q", np.zeros((0, n), dtype=np.int64), n, "tr(%s)" % code.label)
    rows = ctx.trace_table[_expand_basis(code)]
    return LinearCode.from_rows(ctx, "q", rows, n, "tr(%s)" % code.label)


def is_galois_invariant(code):
    if code.k == 0:
        return True
    rows = code.ctx.vpow(code.gen, code.ctx.q)
    return code.contains(rows)


# -- weight enumerators ---------------------------------------------------------

@dataclass
class WeightEnumerator:
    counts: list = field(default_factory=list)

    @property
    def n(self):
        return len(self.counts) - 1

    def min_weight(self):
        for i, a in enumerate(self.counts[1:], 1):
            if a:
                return i
        return None

    def total(self):
        return sum(self.counts)


def _span_table(rows, scalars, F):
    """All combinations sum c_i rows_i with c_i in scalars, as an array of rows."""
    n = rows.shape[1] if rows.ndim == 2 else 0
    T = np.zeros((1, n), dtype=rows.dtype)
    for row in rows:
        parts = [T]
        for c in scalars[1:]:
            parts.append(F.vadd(T, F.vmul(c, row)[None, :]).astype(rows.dtype))
        T = np.concatenate(parts)
    return T


def _binary_weights(G, n):
    k = G.shape[0]
    packed = np.packbits(G.astype(np.uint8), axis=1)
    pad = (-packed.shape[1]) % 8
    packed = np.concatenate([packed, np.zeros((k, pad), dtype=np.uint8)], axis=1)
    words = packed.view(np.uint64)
    k1 = min(k, 16)
    low, high = words[:k1], words[k1:]

    def table(rows):
        T = np.zeros((1, words.shape[1]), dtype=np.uint64)
        for r in rows:
            T = np.concatenate([T, T ^ r])
        return T

    T = table(low)
    H = table(high)
    counts = np.zeros(n + 1, dtype=np.int64)
    batch = max(1, (1 << 21) // len(T))
    for start in range(0, len(H), batch):
        block = H[start:start + batch]
        x = block[:, None, :] ^ T[None, :, :]
        w = np.bitwise_count(x).sum(axis=-1, dtype=np.int64).ravel()
        counts += np.bincount(w, minlength=n + 1)
    return counts


def _generic_weights(G, n, F, scalars):
    k = G.shape[0]
    size = len(scalars)
    k1 = 0
    while k1 < k and size ** (k1 + 1) <= 1 << 16:
        k1 += 1
    dt = np.uint8 if F.Q <= 256 else np.int64
    G = G.astype(dt)
    T = _span_table(G[:k1], scalars, F).astype(dt)
    H = _span_table(G[k1:], scalars, F).astype(dt)
    counts = np.zeros(n + 1, dtype=np.int64)
    batch = max(1, (1 << 23) // (len(T) * max(n, 1)))
    prime = F.Q == F.p
    for start in range(0, len(H), batch):
        block = H[start:start + batch]
        if prime and F.p < 128:
            # entries stay below 2p, so a sum is zero mod p iff it is 0 or p
            x = block[:, None, :] + T[None, :, :]
            w = ((x != 0) & (x != F.p)).sum(axis=-1, dtype=np.int32).ravel()
        else:
            x = F.vadd(block[:, None, :].astype(np.int64), T[None, :, :].astype(np.int64))
            w = np.count_nonzero(x, axis=-1).ravel()
        counts += np.bincount(w, minlength=n + 1)
    return counts


def weight_enumerator(code, budget=DEFAULT_BUDGET):
    """Exact weight distribution by enumerating every codeword."""
    n, k, size = code.n, code.k, code.size
    if size ** k > budget:
        raise BudgetExceeded("%d^%d codewords exceed the budget %d" % (size, k, budget))
    if k == 0:
        return WeightEnumerator([1] + [0] * n)
    F = code.F
    if size == 2:
        counts = _binary_weights(code.gen, n)
    else:
        if code.level == "q":
            scalars = np.array(code.ctx.subfield_elements(1) if code.ctx.e > 1 else range(code.ctx.p),
                               dtype=np.int64)
        else:
            scalars = np.array([0] + [code.ctx.elem(i) for i in range(code.ctx.order)], dtype=np.int64)
        counts = _generic_weights(code.gen, n, F, scalars)
    W = WeightEnumerator([int(c) for c in counts])
    assert W.total() == size ** k
    return W


def krawtchouk(j, i, n, q):
    return sum((-1) ** h * (q - 1) ** (j - h) * comb(i, h) * comb(n - i, j - h)
               for h in range(0, min(i, j) + 1))


def macwilliams(W, q, n, k):
    """Weight distribution of the dual code, in exact integers."""
    A = list(W.counts) if isinstance(W, WeightEnumerator) else list(W)
    if len(A) != n + 1 or sum(A) != q ** k or A[0] != 1:
        raise ValueError("weight distribution is inconsistent with q=%d n=%d k=%d" % (q, n, k))
    size = q ** k
    out = []
    for j in range(n + 1):
        s = sum(A[i] * krawtchouk(j, i, n, q) for i in range(n + 1) if A[i])
        if s % size:
            raise ValueError("MacWilliams transform is not integral at weight %d" % j)
        out.append(s // size)
    return WeightEnumerator(out)


@dataclass
class DistancePair:
    delta: object
    method: str
    delta_perp: object
    method_perp: str


def distances(code, budget=DEFAULT_BUDGET, lower_bound=None):
    """Minimum distance of a code and of its dual, enumerating the smaller side."""
    n, k, size = code.n, code.k, code.size
    kp = n - k
    if k == 0:
        return DistancePair(None, "empty", 1 if n else None, "exact")
    if kp == 0:
        return DistancePair(1, "exact", None, "empty")
    if size ** min(k, kp) > budget:
        if lower_bound is not None:
            return DistancePair(lower_bound, "bound", None, "unknown")
        return DistancePair(None, "unknown", None, "unknown")
    if k <= kp:
        W = weight_enumerator(code, budget)
        Wp = macwilliams(W, size, n, k)
    else:
        Wp = weight_enumerator(code.dual(), budget)
        W = macwilliams(Wp, size, n, kp)
    return DistancePair(W.min_weight(), "exact", Wp.min_weight(), "exact")


def min_distance(code, budget=DEFAULT_BUDGET, lower_bound=None):
    """(value, method): exact by enumeration of the smaller side, else bound or unknown."""
    r = distances(code, budget, lower_bound)
    return r.delta, r.method


def hamming_ball(q, n, r):
    return sum(comb(n, i) * (q - 1) ** i for i in range(r + 1))


def varshamov_distance(q, n, k):
    """Largest d with sum_{i=0}^{d-2} C(n-1,i)(q-1)^i < q^(n-k): an [n,k,d] code exists."""
    target = q ** (n - k)
    total = 0
    d = 1
    for i in range(0, n):
        total += comb(n - 1, i) * (q - 1) ** i
        if total >= target:
            break
        d = i + 2
    return d


def gilbert_distance(q, n, k):
    """Largest d with V_q(n, d-1) <= q^(n-k), so the Gilbert bound already guarantees q^k words."""
    target = q ** (n - k)
    ball = term = 1
    d = 1
    while d < n:
        term = term * (n - d + 1) * (q - 1) // d
        ball += term
        if ball > target:
            break
        d += 1
    return d


def gv_exceeds(q, n, k, d):
    """True iff an [n,k,d]_q code beats the Gilbert bound B_q(n,d) >= q^n / V_q(n,d-1)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return d > gilbert_distance(q, n, k)


# -- export ----------------------------------------------------------------------

def format_matrix(code, q, s):
    ctx = code.ctx
    lines = ["q=%d s=%d n=%d k=%d modulus=%s" % (q, s, code.n, code.k,
                                                ",".join(str(c) for c in ctx.modulus))]
    for row in code.gen:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"
