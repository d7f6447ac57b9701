"""Small finite unital rings with exact operation tables.

Every ring is stored as a pair of ``order x order`` tables over canonical
element indices.  Structural families (``zmod``, ``ut2``, ``s2``,
``product``) build their tables from the family rule; the ``table`` family
takes user tables and checks every ring axiom exhaustively.

Element sets are returned as ``frozenset`` of indices.  Everything derived
from a ring is cached on the (immutable) ring object.
"""

import os
from dataclasses import dataclass, fields

import numpy as np

from .errors import AxiomViolation, InvalidSpec, OrderBoundExceeded, ResourceBoundExceeded

DEFAULT_MAX_ORDER = 256
MAX_IDEALS = 4096
SIDES = ("left", "right", "two-sided")


def max_order():
    """Ring order bound: ``SKEWPBW_MAX_ORDER`` if set, else 256."""
    env = os.environ.get("SKEWPBW_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidSpec(f"SKEWPBW_MAX_ORDER must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ORDER


def _check_order(order, bound):
    bound = max_order() if bound is None else bound
    if order > bound:
        raise OrderBoundExceeded(f"ring of order {order} exceeds bound {bound}")


class FiniteRing:
    """A finite ring with identity given by addition and multiplication tables.

    Parameters
    ----------
    family : str
        One of ``zmod``, ``ut2``, ``s2``, ``product``, ``table``.
    add_table, mul_table : array_like, shape (order, order)
    zero, one : int
        Indices of the additive and multiplicative identities.
    params : dict, optional
        Family parameters (``n``, ``base``, ``factors``).
    check : bool
        Verify all ring axioms exhaustively.  Structural families skip this.
    """

    def __init__(self, family, add_table, mul_table, zero, one, *, params=None,
                 check=True, bound=None):
        add = np.array(add_table, dtype=np.int64)
        mul = np.array(mul_table, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise InvalidSpec("addition and multiplication tables must be square and equal-sized")
        order = add.shape[0]
        if order == 0:
            raise InvalidSpec("a ring needs at least one element")
        _check_order(order, bound)
        if not (0 <= zero < order and 0 <= one < order):
            raise InvalidSpec("zero/one index out of range")
        for name, t in (("add", add), ("mul", mul)):
            if t.min() < 0 or t.max() >= order:
                raise AxiomViolation(f"{name} closure", tuple(np.argwhere((t < 0) | (t >= order))[0]))
        self.family = family
        self.params = dict(params or {})
        self.order = order
        self.zero = int(zero)
        self.one = int(one)
        if check:
            _check_axioms(add, mul, self.zero, self.one)
        add.setflags(write=False)
        mul.setflags(write=False)
        self.add_table = add
        self.mul_table = mul
        self._add = add.tolist()
        self._mul = mul.tolist()
        neg = np.argmax(add == self.zero, axis=1)
        neg.setflags(write=False)
        self.neg_table = neg
        self._neg = neg.tolist()
        self._cache = {}

    # -- scalar arithmetic -------------------------------------------------
    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def power(self, a, k):
        r = self.one
        for _ in range(k):
            r = self._mul[r][a]
        return r

    def elements(self):
        return range(self.order)

    def element(self, index):
        return RingElement(self, index)

    @property
    def characteristic(self):
        """Additive order of the identity."""
        if "char" not in self._cache:
            k, x = 1, self.one
            while x != self.zero:
                x = self._add[x][self.one]
                k += 1
            self._cache["char"] = k
        return self._cache["char"]

    def from_int(self, k):
        k %= self.characteristic
        x = self.zero
        for _ in range(k):
            x = self._add[x][self.one]
        return x

    # -- literals ----------------------------------------------------------
    def coords(self, i):
        """Family coordinates of element ``i`` (base indices for matrices)."""
        if self.family == "ut2":
            k = self.params["base"].order
            return (i // (k * k), (i // k) % k, i % k)
        if self.family == "s2":
            k = self.params["base"].order
            return (i // k, i % k)
        if self.family == "product":
            out = []
            for f in reversed(self.params["factors"]):
                out.append(i % f.order)
                i //= f.order
            return tuple(reversed(out))
        return (i,)

    def from_coords(self, coords):
        if self.family == "ut2":
            k = self.params["base"].order
            a, b, c = coords
            return (a * k + b) * k + c
        if self.family == "s2":
            k = self.params["base"].order
            a, b = coords
            return a * k + b
        if self.family == "product":
            i = 0
            for f, c in zip(self.params["factors"], coords):
                i = i * f.order + c
            return i
        (i,) = coords
        return i

    def format_element(self, i):
        """Canonical literal text for element ``i``; parses back via ``from_literal``."""
        if self.family == "zmod":
            return str(i)
        if self.family == "ut2":
            base = self.params["base"]
            a, b, c = (base.format_element(x) for x in self.coords(i))
            return f"[[{a},{b}],[{base.format_element(base.zero)},{c}]]"
        if self.family == "s2":
            base = self.params["base"]
            a, b = (base.format_element(x) for x in self.coords(i))
            return f"[[{a},{b}],[{base.format_element(base.zero)},{a}]]"
        if self.family == "product":
            parts = (f.format_element(c) for f, c in zip(self.params["factors"], self.coords(i)))
            return "[" + ",".join(parts) + "]"
        return f"#{i}"

    def from_literal(self, lit):
        """Element index from a literal: int, ``'#k'``, or (nested) list form."""
        if isinstance(lit, bool):
            raise InvalidSpec(f"invalid coefficient literal {lit!r}")
        if isinstance(lit, int):
            return self.from_int(lit)
        if isinstance(lit, str):
            s = lit.strip()
            if s.startswith("#"):
                try:
                    k = int(s[1:])
                except ValueError:
                    raise InvalidSpec(f"invalid index literal {lit!r}") from None
                if not 0 <= k < self.order:
                    raise InvalidSpec(f"index literal {lit!r} out of range for order {self.order}")
                return k
            from .expr import parse_literal
            return self.from_literal(parse_literal(s))
        if isinstance(lit, (list, tuple)):
            return self._from_list(list(lit))
        raise InvalidSpec(f"invalid coefficient literal {lit!r}")

    def _from_list(self, lit):
        if self.family in ("ut2", "s2"):
            base = self.params["base"]
            if len(lit) != 2 or not all(isinstance(r, (list, tuple)) and len(r) == 2 for r in lit):
                raise InvalidSpec(f"{self.family} literal must be [[a,b],[0,c]], got {lit!r}")
            (a, b), (z, c) = ((base.from_literal(x) for x in r) for r in lit)
            if z != base.zero:
                raise InvalidSpec(f"lower-left entry must be 0 in {lit!r}")
            if self.family == "s2":
                if a != c:
                    raise InvalidSpec(f"s2 literal needs equal diagonal entries, got {lit!r}")
                return self.from_coords((a, b))
            return self.from_coords((a, b, c))
        if self.family == "product":
            factors = self.params["factors"]
            if len(lit) != len(factors):
                raise InvalidSpec(f"product literal needs {len(factors)} components, got {lit!r}")
            return self.from_coords(tuple(f.from_literal(x) for f, x in zip(factors, lit)))
        raise InvalidSpec(f"list literal not supported for family {self.family!r}")

    # -- description -------------------------------------------------------
    @property
    def description(self):
        if self.family == "zmod":
            return {"family": "zmod", "n": self.params["n"]}
        if self.family in ("ut2", "s2"):
            return {"family": self.family, "base": self.params["base"].description}
        if self.family == "product":
            return {"family": "product", "factors": [f.description for f in self.params["factors"]]}
        return {"family": "table", "order": self.order, "add": self._add, "mul": self._mul,
                "zero": self.zero, "one": self.one}

    @property
    def name(self):
        if self.family == "zmod":
            return f"Z/{self.params['n']}"
        if self.family == "ut2":
            return f"UT2({self.params['base'].name})"
        if self.family == "s2":
            return f"S2({self.params['base'].name})"
        if self.family == "product":
            return " x ".join(f.name for f in self.params["factors"])
        return f"table[{self.order}]"

    def __repr__(self):
        return f"<FiniteRing {self.name} order={self.order}>"

    def __len__(self):
        return self.order


@dataclass(frozen=True)
class RingElement:
    """Convenience wrapper giving operator syntax to ring indices."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.order:
            raise ValueError(f"index {self.index} out of range for {self.ring!r}")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements belong to different rings")
            return other.index
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RingElement(self.ring, self.ring.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RingElement(self.ring, self.ring.sub(self.index, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RingElement(self.ring, self.ring.sub(o, self.index))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RingElement(self.ring, self.ring.mul(self.index, o))

    def __rmul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else RingElement(self.ring, self.ring.mul(o, self.index))

    def __pow__(self, k):
        return RingElement(self.ring, self.ring.power(self.index, k))

    def __str__(self):
        return self.ring.format_element(self.index)


@dataclass(frozen=True)
class IdealDescriptor:
    ring: FiniteRing
    side: str
    elements: frozenset

    def __contains__(self, a):
        return a in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    @property
    def is_proper(self):
        return self.ring.one not in self.elements

    def __repr__(self):
        return f"IdealDescriptor({self.ring.name}, {self.side}, {sorted(self.elements)})"


# -- axiom checking ------------------------------------------------------------

def _first(mask):
    return tuple(int(v) for v in np.argwhere(mask)[0])


def _check_axioms(add, mul, zero, one):
    n = add.shape[0]
    idx = np.arange(n)
    if (bad := add != add.T).any():
        raise AxiomViolation("add commutative", _first(bad))
    if (bad := add[zero] != idx).any():
        raise AxiomViolation("add identity", (zero, *_first(bad)))
    if (bad := ~(add == zero).any(axis=1)).any():
        raise AxiomViolation("add inverse", _first(bad))
    if (bad := mul[one] != idx).any() or (bad := mul[:, one] != idx).any():
        raise AxiomViolation("mul identity", (one, *_first(bad)))
    for a in range(n):
        # (a+b)+c == a+(b+c)
        if (bad := add[add[a]] != add[a][add]).any():
            raise AxiomViolation("add associative", (a, *_first(bad)))
        # (ab)c == a(bc)
        if (bad := mul[mul[a]] != mul[a][mul]).any():
            raise AxiomViolation("mul associative", (a, *_first(bad)))
        # a(b+c) == ab+ac
        row = mul[a]
        if (bad := row[add] != add[np.ix_(row, row)]).any():
            raise AxiomViolation("left distributive", (a, *_first(bad)))
        col = mul[:, a]
        if (bad := col[add] != add[np.ix_(col, col)]).any():
            raise AxiomViolation("right distributive", (a, *_first(bad)))


# -- constructors ----------------------------------------------------------------

def zmod(n, *, bound=None):
    if not isinstance(n, int) or n < 1:
        raise InvalidSpec(f"zmod needs a positive integer n, got {n!r}")
    _check_order(n, bound)
    i = np.arange(n)
    return FiniteRing("zmod", (i[:, None] + i) % n, (i[:, None] * i) % n, 0, 1 % n,
                      params={"n": n}, check=False, bound=bound)


def ut2(base, *, bound=None):
    """Upper-triangular 2x2 matrices ``[[a,b],[0,c]]`` over ``base``."""
    k = base.order
    _check_order(k ** 3, bound)
    idx = np.arange(k ** 3)
    A, B, C = idx // (k * k), (idx // k) % k, idx % k
    ba, bm = base.add_table, base.mul_table
    enc = lambda a, b, c: (a * k + b) * k + c  # noqa: E731
    a1, b1, c1 = A[:, None], B[:, None], C[:, None]
    a2, b2, c2 = A[None, :], B[None, :], C[None, :]
    add = enc(ba[a1, a2], ba[b1, b2], ba[c1, c2])
    mul = enc(bm[a1, a2], ba[bm[a1, b2], bm[b1, c2]], bm[c1, c2])
    return FiniteRing("ut2", add, mul, enc(base.zero, base.zero, base.zero),
                      enc(base.one, base.zero, base.one), params={"base": base},
                      check=False, bound=bound)


def s2(base, *, bound=None):
    """Matrices ``[[a,b],[0,a]]`` over ``base``."""
    k = base.order
    _check_order(k * k, bound)
    A, B = np.arange(k * k) // k, np.arange(k * k) % k
    ba, bm = base.add_table, base.mul_table
    a1, b1, a2, b2 = A[:, None], B[:, None], A[None, :], B[None, :]
    add = ba[a1, a2] * k + ba[b1, b2]
    mul = bm[a1, a2] * k + ba[bm[a1, b2], bm[b1, a2]]
    return FiniteRing("s2", add, mul, base.zero * k + base.zero, base.one * k + base.zero,
                      params={"base": base}, check=False, bound=bound)


def product(factors, *, bound=None):
    factors = list(factors)
    if not factors:
        raise InvalidSpec("product needs at least one factor")
    order = 1
    for f in factors:
        order *= f.order
    _check_order(order, bound)
    add = np.zeros((1, 1), dtype=np.int64)
    mul = np.zeros((1, 1), dtype=np.int64)
    zero = one = 0
    for f in factors:
        k, m = f.order, add.shape[0]
        add = (add[:, None, :, None] * k + f.add_table[None, :, None, :]).reshape(m * k, m * k)
        mul = (mul[:, None, :, None] * k + f.mul_table[None, :, None, :]).reshape(m * k, m * k)
        zero, one = zero * k + f.zero, one * k + f.one
    return FiniteRing("product", add, mul, zero, one, params={"factors": factors},
                      check=False, bound=bound)


def table_ring(add, mul, zero, one, *, bound=None):
    return FiniteRing("table", add, mul, zero, one, check=True, bound=bound)


def build_ring(spec, *, bound=None):
    """Build a ring from its JSON description.

    >>> build_ring({"family": "ut2", "base": {"family": "zmod", "n": 2}}).order
    8
    """
    if not isinstance(spec, dict) or "family" not in spec:
        raise InvalidSpec(f"ring description must be an object with a 'family' key, got {spec!r}")
    fam = spec["family"]
    try:
        if fam == "zmod":
            return zmod(spec["n"], bound=bound)
        if fam == "ut2":
            return ut2(build_ring(spec["base"], bound=bound), bound=bound)
        if fam == "s2":
            return s2(build_ring(spec["base"], bound=bound), bound=bound)
        if fam == "product":
            return product([build_ring(f, bound=bound) for f in spec["factors"]], bound=bound)
        if fam == "table":
            order = spec["order"]
            ring = table_ring(spec["add"], spec["mul"], spec["zero"], spec["one"], bound=bound)
            if ring.order != order:
                raise InvalidSpec(f"table order {order} does not match table size {ring.order}")
            return ring
    except KeyError as exc:
        raise InvalidSpec(f"{fam} ring description is missing key {exc}") from None
    raise InvalidSpec(f"unknown ring family {fam!r}")


# -- element sets ------------------------------------------------------------------

def _cached(ring, key, fn):
    if key not in ring._cache:
        ring._cache[key] = fn()
    return ring._cache[key]


def _mask_to_set(mask):
    return frozenset(int(i) for i in np.flatnonzero(mask))


def power_table(R):
    """``P[k, a] = a**k`` for ``0 <= k <= order``."""
    def build():
        P = np.empty((R.order + 1, R.order), dtype=np.int64)
        P[0] = R.one
        idx = np.arange(R.order)
        for k in range(1, R.order + 1):
            P[k] = R.mul_table[P[k - 1], idx]
        P.setflags(write=False)
        return P
    return _cached(R, "powers", build)


def nilpotents(R):
    return _cached(R, "nil", lambda: _mask_to_set((power_table(R) == R.zero).any(axis=0)))


def nilpotency_index(R, a):
    """Least ``k >= 1`` with ``a**k == 0``, or ``None``."""
    hits = np.flatnonzero(power_table(R)[1:, a] == R.zero)
    return int(hits[0]) + 1 if hits.size else None


def left_invertible(R):
    return _cached(R, "linv", lambda: _mask_to_set((R.mul_table == R.one).any(axis=0)))


def units(R):
    def build():
        M = R.mul_table
        return _mask_to_set((M == R.one).any(axis=0) & (M == R.one).any(axis=1))
    return _cached(R, "units", build)


def inverse(R, u):
    """Two-sided inverse of a unit ``u``."""
    row = np.flatnonzero(R.mul_table[u] == R.one)
    if row.size == 0 or R.mul(int(row[0]), u) != R.one:
        raise ValueError(f"{R.format_element(u)} is not a unit")
    return int(row[0])


def idempotents(R):
    return _cached(R, "idem", lambda: _mask_to_set(np.diag(R.mul_table) == np.arange(R.order)))


def center(R):
    return _cached(R, "center", lambda: _mask_to_set((R.mul_table == R.mul_table.T).all(axis=1)))


def vnr_elements(R):
    """Elements ``a`` with ``a r a == a`` for some ``r``."""
    def build():
        M = R.mul_table
        idx = np.arange(R.order)
        return _mask_to_set((M[M, idx[:, None]] == idx[:, None]).any(axis=1))
    return _cached(R, "vnr", build)


def pi_regular_elements(R):
    """Elements with some power ``a**m`` (``1 <= m <= order``) von Neumann regular."""
    def build():
        vnr = np.zeros(R.order, dtype=bool)
        vnr[list(vnr_elements(R))] = True
        return _mask_to_set(vnr[power_table(R)[1:]].any(axis=0))
    return _cached(R, "pireg", build)


def clean_elements(R):
    def build():
        U, E = sorted(units(R)), sorted(idempotents(R))
        return frozenset(int(x) for x in R.add_table[np.ix_(U, E)].ravel())
    return _cached(R, "clean", build)


def vnl_elements(R):
    def build():
        v = vnr_elements(R)
        return frozenset(a for a in R.elements() if a in v or R.sub(R.one, a) in v)
    return _cached(R, "vnl", build)


# -- ideals ---------------------------------------------------------------------------

def additive_closure(R, gens):
    gens = {R.zero} | set(gens)
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = R._add[s][g]
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return frozenset(seen)


def additive_generators(R):
    """A small additive generating set of ``R`` (greedy, ascending index)."""
    def build():
        gens, span = [], frozenset([R.zero])
        for a in R.elements():
            if a not in span:
                gens.append(a)
                span = additive_closure(R, list(span) + [a])
            if len(span) == R.order:
                break
        return tuple(gens)
    return _cached(R, "addgens", build)


def generated_ideal(R, gens, side="two-sided"):
    """Smallest ideal of the given side containing ``gens``."""
    M = R.mul_table
    gens = sorted(set(gens) | {R.zero})
    if side == "right":
        prods = M[gens].ravel()
    elif side == "left":
        prods = M[:, gens].ravel()
    elif side == "two-sided":
        prods = M[M[:, gens]].ravel()  # r * g * s
    else:
        raise ValueError(f"unknown side {side!r}")
    return IdealDescriptor(R, side, additive_closure(R, set(int(p) for p in prods)))


def is_ideal(R, elements, side="two-sided"):
    S = sorted(set(elements))
    if R.zero not in elements:
        return False
    mask = np.zeros(R.order, dtype=bool)
    mask[S] = True
    if not mask[R.add_table[np.ix_(S, S)]].all():
        return False
    M = R.mul_table
    if side in ("right", "two-sided") and not mask[M[S]].all():
        return False
    if side in ("left", "two-sided") and not mask[M[:, S]].all():
        return False
    return True


def ideal(R, elements, side="two-sided"):
    """Validated ``IdealDescriptor``; raises ``ValueError`` if not closed."""
    elements = frozenset(int(e) for e in elements)
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    if not is_ideal(R, elements, side):
        raise ValueError(f"{sorted(elements)} is not a {side} ideal of {R.name}")
    return IdealDescriptor(R, side, elements)


def ideal_lattice(R, side="two-sided", max_ideals=MAX_IDEALS):
    """All ideals of the given side, closed from principal ones under sums."""
    def build():
        principal = {generated_ideal(R, [a], side).elements for a in R.elements()}
        found = set(principal)
        frontier = list(principal)
        principal = sorted(principal, key=len)
        while frontier:
            nxt = []
            for I in frontier:
                Ilist = sorted(I)
                for P in principal:
                    if P <= I:
                        continue
                    S = frozenset(int(x) for x in R.add_table[np.ix_(Ilist, sorted(P))].ravel())
                    if S not in found:
                        found.add(S)
                        nxt.append(S)
                        if len(found) > max_ideals:
                            raise ResourceBoundExceeded(
                                f"more than {max_ideals} {side} ideals in {R.name}")
            frontier = nxt
        ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
        return tuple(IdealDescriptor(R, side, s) for s in ordered)
    return _cached(R, ("lattice", side, max_ideals), build)


def maximal_ideals(R, side="two-sided"):
    proper = [I for I in ideal_lattice(R, side) if I.is_proper]
    return tuple(I for I in proper if not any(I.elements < J.elements for J in proper))


def prime_witness(R, elements):
    """First ``(a, b)`` with ``a, b`` outside ``elements`` and ``a R b`` inside, else ``None``."""
    inside = np.zeros(R.order, dtype=bool)
    inside[list(elements)] = True
    M = R.mul_table
    outside = np.flatnonzero(~inside)
    for a in outside:
        # rows over r of (a r) * b, for all b
        ok = inside[M[M[a]]].all(axis=0)
        ok &= ~inside
        if ok.any():
            return int(a), int(np.flatnonzero(ok)[0])
    return None


def is_prime_ideal(R, elements):
    return R.one not in elements and prime_witness(R, elements) is None


def jacobson_radical(R):
    def build():
        linv = np.zeros(R.order, dtype=bool)
        linv[list(left_invertible(R))] = True
        one_minus = R.add_table[R.one][R.neg_table]
        # 1 - r a for all r (rows a)
        left = linv[one_minus[R.mul_table.T]].all(axis=1)
        right = linv[one_minus[R.mul_table]].all(axis=1)
        J = _mask_to_set(left)
        if J != _mask_to_set(right) or not is_ideal(R, J):
            raise AssertionError(f"Jacobson radical of {R.name} failed the two-sided check")
        return IdealDescriptor(R, "two-sided", J)
    return _cached(R, "jacobson", build)


def prime_radical(R, max_ideals=MAX_IDEALS):
    def build():
        primes = [I for I in ideal_lattice(R, "two-sided", max_ideals)
                  if is_prime_ideal(R, I.elements)]
        out = frozenset(R.elements())
        for P in primes:
            out &= P.elements
        return IdealDescriptor(R, "two-sided", out)
    return _cached(R, ("prime_radical", max_ideals), build)


def quotient_ring(R, elements):
    """``R/I`` as a table ring plus the projection ``index -> coset index``.

    Cosets are numbered by their least representative.
    """
    I = frozenset(elements)
    if not is_ideal(R, I):
        raise ValueError(f"{sorted(I)} is not a two-sided ideal of {R.name}")
    proj = [-1] * R.order
    reps = []
    Ilist = sorted(I)
    for a in R.elements():
        if proj[a] < 0:
            for x in R.add_table[a, Ilist]:
                proj[int(x)] = len(reps)
            reps.append(a)
    p = np.array(proj)
    rr = np.array(reps)
    add = p[R.add_table[np.ix_(rr, rr)]]
    mul = p[R.mul_table[np.ix_(rr, rr)]]
    Q = FiniteRing("table", add, mul, proj[R.zero], proj[R.one], check=False)
    Q.params["parent"] = R
    return Q, tuple(proj)


# -- ring and element classification -------------------------------------------------

@dataclass(frozen=True)
class RingClassReport:
    reduced: bool
    semicommutative: bool
    NI: bool
    NJ: bool
    abelian: bool
    right_duo: bool
    left_duo: bool
    boolean: bool
    von_neumann_regular: bool
    pi_regular: bool
    clean: bool
    local: bool

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class ElemClass:
    unit: bool
    nilpotent: bool
    idempotent: bool
    vnr: bool
    pi_regular: bool
    vnl: bool
    clean: bool

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def is_semicommutative(R):
    M = R.mul_table
    for a in R.elements():
        kills = M[a] == R.zero
        if not (M[M[a]][:, kills] == R.zero).all():
            return False
    return True


def is_NI(R):
    return is_ideal(R, nilpotents(R))


def _duo(R, side):
    M = R.mul_table
    for a in R.elements():
        left, right = set(M[:, a].tolist()), set(M[a].tolist())
        if side == "right" and not left <= right:
            return False
        if side == "left" and not right <= left:
            return False
    return True


def is_local(R):
    nonunits = sorted(set(R.elements()) - units(R))
    if R.one == R.zero:
        return False
    inside = np.zeros(R.order, dtype=bool)
    inside[nonunits] = True
    return bool(inside[R.add_table[np.ix_(nonunits, nonunits)]].all())


def ring_class_report(R):
    def build():
        N = nilpotents(R)
        everything = frozenset(R.elements())
        return RingClassReport(
            reduced=N == {R.zero},
            semicommutative=is_semicommutative(R),
            NI=is_NI(R),
            NJ=jacobson_radical(R).elements == N,
            abelian=idempotents(R) <= center(R),
            right_duo=_duo(R, "right"),
            left_duo=_duo(R, "left"),
            boolean=idempotents(R) == everything,
            von_neumann_regular=vnr_elements(R) == everything,
            pi_regular=pi_regular_elements(R) == everything,
            clean=clean_elements(R) == everything,
            local=is_local(R),
        )
    return _cached(R, "class_report", build)


def elem_class(R, a):
    v = vnr_elements(R)
    return ElemClass(
        unit=a in units(R),
        nilpotent=a in nilpotents(R),
        idempotent=a in idempotents(R),
        vnr=a in v,
        pi_regular=a in pi_regular_elements(R),
        vnl=a in v or R.sub(R.one, a) in v,
        clean=a in clean_elements(R),
    )
