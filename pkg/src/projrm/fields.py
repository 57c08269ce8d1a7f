"""Finite field towers F_p < F_q < F_{q^s} backed by log/antilog/Zech tables.

Elements are plain ints in the polynomial-basis encoding: the residue
c_0 + c_1 x + ... + c_{N-1} x^{N-1} modulo the field modulus is stored as
sum(c_i p^i).  So 0 is zero, 1 is one, and 0..p-1 is the prime field.
"""

from functools import cached_property

import numpy as np

MAX_FIELD_SIZE = 2 ** 20


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n):
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n):
    return [i for i in range(1, n + 1) if n % i == 0]


def _digits(x, p, size):
    out = []
    for _ in range(size):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _powers_of_x(modulus, p):
    """Cycle x^0, x^1, ... modulo `modulus` until it returns to 1.

    Returns the list of encodings seen (without the final repeat), or None
    if the cycle is broken by hitting 0 (modulus divisible by x).
    """
    deg = len(modulus) - 1
    top = modulus[:deg]
    cur = [1] + [0] * (deg - 1)
    seen = []
    base = [p ** i for i in range(deg)]
    limit = p ** deg
    while True:
        enc = sum(c * b for c, b in zip(cur, base))
        if enc == 0:
            return None
        if seen and enc == 1:
            return seen
        seen.append(enc)
        if len(seen) > limit:
            return None
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            cur = [(c - lead * t) % p for c, t in zip(cur, top)]


def find_primitive_modulus(p, degree):
    """Least monic primitive polynomial of the given degree over F_p.

    Candidates are scanned in increasing order of their integer encoding
    sum(c_i p^i), i.e. lexicographically with the highest-degree coefficient
    compared first.  Coefficients are returned low-to-high, leading 1 included.
    """
    order = p ** degree - 1
    for low in range(p ** degree):
        modulus = _digits(low, p, degree) + [1]
        if modulus[0] == 0:
            continue
        cycle = _powers_of_x(modulus, p)
        if cycle is not None and len(cycle) == order:
            return modulus, cycle
    raise FieldError("no primitive polynomial of degree %d over F_%d" % (degree, p))


class FieldCtx:
    """The tower F_p < F_q < F_{q^s} with q = p^e.

    Scalar arithmetic (``add``, ``mul``, ...) goes through the log and Zech
    tables.  The ``v*`` methods are numpy-vectorized versions used by the
    linear algebra.
    """

    def __init__(self, p, e, s):
        if not is_prime(p):
            raise FieldError("characteristic %r is not prime" % (p,))
        if e < 1 or s < 1:
            raise FieldError("extension degrees must be positive")
        if p ** (e * s) > MAX_FIELD_SIZE:
            raise FieldError("field of size %d^%d exceeds the table bound 2^20" % (p, e * s))
        self.p, self.e, self.s = p, e, s
        self.q = p ** e
        self.Q = self.q ** s
        self.degree = e * s
        self.order = self.Q - 1
        self.modulus, cycle = find_primitive_modulus(p, self.degree)

        self.exp = np.array(cycle + cycle, dtype=np.int64)
        log = np.zeros(self.Q, dtype=np.int64)
        log[self.exp[: self.order]] = np.arange(self.order)
        self.log = log
        if len(set(cycle)) != self.order:
            raise FieldError("internal fault: antilog table is not a bijection")

        # zech[i] = log(1 + a^i); -1 marks the single i with 1 + a^i = 0
        self.minus_one_log = 0 if p == 2 else self.order // 2
        zech = np.full(self.order, -1, dtype=np.int64)
        for i in range(self.order):
            if i == self.minus_one_log:
                continue
            zech[i] = log[self._add_digits(1, int(self.exp[i]))]
        self.zech = zech

        self.subfield_step = {l: self.order // (self.q ** l - 1) for l in divisors(s)}

    def __repr__(self):
        return "FieldCtx(p=%d, e=%d, s=%d)" % (self.p, self.e, self.s)

    def _add_digits(self, a, b):
        p, out, scale = self.p, 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    # -- scalar arithmetic -------------------------------------------------

    def elem(self, i):
        """a^i for the fixed primitive element a."""
        return int(self.exp[i % self.order])

    def log_of(self, x):
        if x == 0:
            raise FieldError("zero has no discrete logarithm")
        return int(self.log[x])

    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % self.order]
        if z < 0:
            return 0
        return int(self.exp[(la + z) % self.order])

    def neg(self, a):
        if a == 0 or self.p == 2:
            return a
        return int(self.exp[self.log[a] + self.minus_one_log])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.Q)
        return int(self.exp[(-self.log[a]) % self.order])

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero in F_%d" % self.Q)
            return 1 if k == 0 else 0
        return int(self.exp[(int(self.log[a]) * k) % self.order])

    def frob(self, a, k=1):
        """a^(q^k)."""
        return self.pow(a, self.q ** k)

    def from_int(self, c):
        """Image of the integer c in the prime field."""
        return c % self.p

    # -- subfields and traces ------------------------------------------------

    def _check_divisor(self, l):
        if l not in self.subfield_step:
            raise FieldError("%r does not divide s=%d" % (l, self.s))

    def in_subfield(self, x, l=1):
        self._check_divisor(l)
        return x == 0 or int(self.log[x]) % self.subfield_step[l] == 0

    def subfield_elements(self, l=1):
        """F_{q^l} inside the top field: 0, then generator powers in order."""
        self._check_divisor(l)
        step = self.subfield_step[l]
        return [0] + [int(self.exp[j * step]) for j in range(self.q ** l - 1)]

    def trace_to(self, x, l=1):
        """Tr_{F_{q^s}/F_{q^l}}(x) = x + x^{q^l} + ... + x^{q^{l(s/l - 1)}}."""
        self._check_divisor(l)
        out = 0
        y = x
        for _ in range(self.s // l):
            out = self.add(out, y)
            y = self.pow(y, self.q ** l)
        return out

    def relative_trace(self, x, n):
        """Tr_{F_{q^n}/F_q}(x) for x in F_{q^n}: sum of x^{q^i}, i < n."""
        out = 0
        for i in range(n):
            out = self.add(out, self.frob(x, i))
        return out

    def primitive_with_nonzero_trace(self, n):
        """Least-index primitive element xi of F_{q^n} with Tr_{F_{q^n}/F_q}(xi) != 0."""
        self._check_divisor(n)
        sub_order = self.q ** n - 1
        step = self.subfield_step[n]
        for j in range(sub_order):
            if np.gcd(j, sub_order) != 1 and sub_order > 1:
                continue
            xi = self.elem(j * step)
            if self.relative_trace(xi, n) != 0:
                return xi
        raise FieldError("internal fault: no primitive element with nonzero trace")

    # -- vectorized arithmetic -----------------------------------------------

    def vadd(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.Q <= 1024:
            return self.add_table[a, b]
        a, b = np.broadcast_arrays(a, b)
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % self.order]
        out = np.where(z < 0, 0, self.exp[(la + np.maximum(z, 0)) % self.order])
        return np.where(a == 0, b, np.where(b == 0, a, out))

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self.neg_table[a]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in F_%d" % self.Q)
        return self.exp[(-self.log[a]) % self.order]

    def vpow(self, a, k):
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * k) % self.order]
        if k == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    @cached_property
    def add_table(self):
        t = np.zeros((self.Q, self.Q), dtype=np.int64)
        for a in range(self.Q):
            for b in range(a, self.Q):
                t[a, b] = t[b, a] = self.add(a, b)
        return t

    @cached_property
    def neg_table(self):
        return np.array([self.neg(a) for a in range(self.Q)], dtype=np.int64)

    @cached_property
    def trace_table(self):
        """Tr_{F_{q^s}/F_q} for every element, as an array."""
        return np.array([self.trace_to(x, 1) for x in range(self.Q)], dtype=np.int64)

    @cached_property
    def subfield_coords(self):
        """coords[x] = (c_0..c_{s-1}) in F_q with x = sum c_t a^t.

        The basis {1, a, ..., a^{s-1}} of F_{q^s} over F_q uses the fixed
        primitive element a, whose minimal polynomial over F_q has degree s.
        """
        sub = self.subfield_elements(1)
        coords = np.full((self.Q, self.s), -1, dtype=np.int64)
        basis = [self.elem(t) for t in range(self.s)]
        values = np.zeros(1, dtype=np.int64)
        combos = np.zeros((1, 0), dtype=np.int64)
        for t in range(self.s):
            scaled = np.array([self.mul(c, basis[t]) for c in sub], dtype=np.int64)
            values = self.vadd(values[:, None], scaled[None, :]).ravel()
            combos = np.concatenate(
                [np.repeat(combos, len(sub), axis=0),
                 np.tile(np.array(sub, dtype=np.int64), len(combos))[:, None]], axis=1)
        if len(set(values.tolist())) != self.Q:
            raise FieldError("internal fault: {1, a, ..} is not an F_q-basis")
        coords[values] = combos
        return coords


class PrimeField:
    """Vectorized arithmetic mod p, matching the tower's prime-field encoding."""

    def __init__(self, p):
        self.p = p
        self.Q = p
        self._inv = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def vadd(self, a, b):
        if self.p == 2:
            return np.asarray(a) ^ np.asarray(b)
        return (np.asarray(a) + b) % self.p

    def vsub(self, a, b):
        if self.p == 2:
            return np.asarray(a) ^ np.asarray(b)
        return (np.asarray(a) - b) % self.p

    def vneg(self, a):
        return (-np.asarray(a)) % self.p

    def vmul(self, a, b):
        return (np.asarray(a) * b) % self.p

    def vinv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return self._inv[a]


_CACHE = {}


def make_field(p, e, s):
    """Shared, immutable FieldCtx for F_p < F_{p^e} < F_{p^{es}}."""
    key = (p, e, s)
    if key not in _CACHE:
        _CACHE[key] = FieldCtx(p, e, s)
    return _CACHE[key]


def field_for(q, s):
    """FieldCtx for the extension F_{q^s} / F_q given q as a prime power."""
    for p in prime_factors(q)[:1]:
        e = 0
        r = q
        while r % p == 0:
            r //= p
            e += 1
        if r == 1:
            return make_field(p, e, s)
    raise FieldError("q=%r is not a prime power" % (q,))


def arith_for(ctx, level):
    """Vectorized arithmetic for F_q ('q') or F_{q^s} ('Q')."""
    if level == "q" and ctx.e == 1:
        return PrimeField(ctx.p)
    return ctx
