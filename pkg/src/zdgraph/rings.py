"""Finite commutative rings with unity over explicit small carriers.

Elements are canonical indices 0..order-1 with index 0 the additive
identity.  Residue rings number elements by residue, polynomial quotient
rings by base-p digits (constant coefficient least significant, so the
multiplicative identity is index 1 and x is index p), and products by
big-endian mixed radix over their factors.

Rings are described either programmatically with the spec dataclasses
below or with a small text language::

    Z6                      residues mod 6
    GF(3)[x]/(x^2)          polynomials over Z_3 modulo x^2
    Z2xZ8                   direct product, 'x' separates factors
    Z3xGF(2)[x]/(x^2+x+1)   factors mix freely

Everything is exhaustively computable; orders above ORDER_CAP are
rejected up front.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

ORDER_CAP = 4096
TABLE_ORDER_CAP = 256  # cubic axiom check, keep it desk-scale
_DENSE_TABLE_MAX = 512  # precompute op tables below this order


class RingSpecError(ValueError):
    """Malformed ring description. ``offset`` points into the source text."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class MixedRingError(ValueError):
    """Raised when elements of different rings are combined."""


# ---------------------------------------------------------------------------
# Ring specifications


@dataclass(frozen=True)
class ZnSpec:
    n: int


@dataclass(frozen=True)
class QuotientPolySpec:
    """Z_p[x] modulo a monic polynomial, coefficients ascending by degree."""

    p: int
    modulus: tuple[int, ...]


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple["RingSpec", ...]


@dataclass(frozen=True)
class TableSpec:
    """Explicit operation tables; all ring axioms are verified at build."""

    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]


RingSpec = Union[ZnSpec, QuotientPolySpec, ProductSpec, TableSpec]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Text language


def parse_ring_spec(text: str) -> RingSpec:
    """Parse the ring mini-language; errors carry the offending offset."""

    text = text.strip()
    if not text:
        raise RingSpecError("empty ring spec", 0)
    factors: list[RingSpec] = []
    pos = 0
    while True:
        spec, pos = _parse_atom(text, pos)
        factors.append(spec)
        if pos == len(text):
            break
        if text[pos] != "x":
            raise RingSpecError(f"expected 'x' separator, found {text[pos]!r}", pos)
        pos += 1
        if pos == len(text):
            raise RingSpecError("trailing product separator", pos)
    if len(factors) == 1:
        return factors[0]
    return ProductSpec(tuple(factors))


def _parse_atom(text: str, pos: int) -> tuple[RingSpec, int]:
    if text.startswith("GF(", pos):
        return _parse_gf(text, pos)
    if text[pos] == "Z":
        start = pos + 1
        end = start
        while end < len(text) and text[end].isdigit():
            end += 1
        if end == start:
            raise RingSpecError("expected modulus digits after 'Z'", start)
        n = int(text[start:end])
        if n < 2:
            raise RingSpecError(f"Z{n} is not a ring with unity, need n >= 2", pos)
        return ZnSpec(n), end
    raise RingSpecError(f"expected ring atom, found {text[pos]!r}", pos)


def _parse_gf(text: str, pos: int) -> tuple[RingSpec, int]:
    close = text.find(")", pos + 3)
    if close < 0:
        raise RingSpecError("unterminated GF(", pos)
    digits = text[pos + 3 : close]
    if not digits.isdigit():
        raise RingSpecError(f"GF characteristic must be an integer, got {digits!r}", pos + 3)
    p = int(digits)
    if not _is_prime(p):
        raise RingSpecError(f"GF characteristic {p} is not prime", pos + 3)
    rest = close + 1
    if not text.startswith("[x]/(", rest):
        raise RingSpecError("expected '[x]/(' after GF(p)", rest)
    body_start = rest + 5
    body_end = text.find(")", body_start)
    if body_end < 0:
        raise RingSpecError("unterminated quotient modulus", body_start)
    modulus = _parse_poly_text(text[body_start:body_end], p, body_start)
    return QuotientPolySpec(p, modulus), body_end + 1


def _parse_poly_text(body: str, p: int, base: int) -> tuple[int, ...]:
    """Parse terms like ``x^2+2x+1`` into ascending coefficients mod p."""

    if not body:
        raise RingSpecError("empty quotient modulus", base)
    coeffs: dict[int, int] = {}
    pos = 0
    for term in body.split("+"):
        term = term.strip()
        if not term:
            raise RingSpecError("empty term in modulus", base + pos)
        coef, exp = _parse_term(term, base + pos)
        coeffs[exp] = (coeffs.get(exp, 0) + coef) % p
        pos += len(term) + 1
    degree = max(coeffs)
    if degree < 1:
        raise RingSpecError("quotient modulus must have degree >= 1", base)
    vec = tuple(coeffs.get(i, 0) for i in range(degree + 1))
    if vec[-1] != 1:
        raise RingSpecError("quotient modulus must be monic", base)
    return vec


def _parse_term(term: str, offset: int) -> tuple[int, int]:
    if "x" not in term:
        if not term.isdigit():
            raise RingSpecError(f"bad constant term {term!r}", offset)
        return int(term), 0
    head, _, tail = term.partition("x")
    coef = 1 if head == "" else None
    if coef is None:
        if not head.isdigit():
            raise RingSpecError(f"bad coefficient {head!r}", offset)
        coef = int(head)
    if tail == "":
        return coef, 1
    if not tail.startswith("^") or not tail[1:].isdigit():
        raise RingSpecError(f"bad exponent {tail!r}", offset)
    return coef, int(tail[1:])


def render_ring_spec(spec: RingSpec) -> str:
    if isinstance(spec, ZnSpec):
        return f"Z{spec.n}"
    if isinstance(spec, QuotientPolySpec):
        return f"GF({spec.p})[x]/({_render_poly_text(spec.modulus)})"
    if isinstance(spec, ProductSpec):
        return "x".join(render_ring_spec(f) for f in spec.factors)
    return f"Table<{spec.order}>"


def _render_poly_text(coeffs: tuple[int, ...]) -> str:
    terms = []
    for exp in range(len(coeffs) - 1, -1, -1):
        c = coeffs[exp]
        if c == 0:
            continue
        if exp == 0:
            terms.append(str(c))
        elif exp == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{exp}" if c == 1 else f"{c}x^{exp}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Elements


@dataclass(frozen=True)
class Elem:
    """An element of a specific ring, identified by its canonical index."""

    ring: "FiniteRing"
    index: int

    def _check(self, other: "Elem") -> None:
        if self.ring is not other.ring:
            raise MixedRingError(
                f"cannot combine elements of {self.ring} and {other.ring}"
            )

    def __add__(self, other: "Elem") -> "Elem":
        self._check(other)
        return Elem(self.ring, self.ring.add(self.index, other.index))

    def __mul__(self, other: "Elem") -> "Elem":
        self._check(other)
        return Elem(self.ring, self.ring.mul(self.index, other.index))

    def __neg__(self) -> "Elem":
        return Elem(self.ring, self.ring.neg(self.index))

    def __sub__(self, other: "Elem") -> "Elem":
        return self + (-other)

    def __pow__(self, k: int) -> "Elem":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return self.index == 0

    def __str__(self) -> str:
        return self.ring.render(self.index)

    def __repr__(self) -> str:
        return f"<{self} in {self.ring}>"


class FiniteRing:
    """Immutable finite commutative ring with unity on indices 0..order-1."""

    def __init__(self, spec: RingSpec):
        if isinstance(spec, str):  # convenience, accepted silently
            spec = parse_ring_spec(spec)
        self.spec = spec
        self.text = render_ring_spec(spec)
        self._units: tuple[int, ...] | None = None
        self._zero_divisors: tuple[int, ...] | None = None
        self._local: "LocalStructure | None" = None
        self.factors: tuple[FiniteRing, ...] | None = None
        self._radix: tuple[int, ...] | None = None

        if isinstance(spec, ZnSpec):
            self.order = spec.n
            self._kind = "zn"
        elif isinstance(spec, QuotientPolySpec):
            self._init_quotient(spec)
        elif isinstance(spec, ProductSpec):
            self._init_product(spec)
        elif isinstance(spec, TableSpec):
            self._init_table(spec)
        else:
            raise RingSpecError(f"unknown ring spec {spec!r}")

        if self.order > ORDER_CAP:
            raise RingSpecError(
                f"ring order {self.order} exceeds the exhaustive-operation cap {ORDER_CAP}"
            )

        self.one_index = self._find_one()
        self._add_table: list[list[int]] | None = None
        self._mul_table: list[list[int]] | None = None
        if self.order <= _DENSE_TABLE_MAX and self._kind != "table":
            n = self.order
            self._add_table = [[self._add_raw(a, b) for b in range(n)] for a in range(n)]
            self._mul_table = [[self._mul_raw(a, b) for b in range(n)] for a in range(n)]

    # -- construction helpers

    def _init_quotient(self, spec: QuotientPolySpec) -> None:
        if not _is_prime(spec.p):
            raise RingSpecError(f"quotient coefficient modulus {spec.p} is not prime")
        if len(spec.modulus) < 2:
            raise RingSpecError("quotient modulus must have degree >= 1")
        mod = tuple(c % spec.p for c in spec.modulus)
        if mod[-1] != 1:
            raise RingSpecError("quotient modulus must be monic")
        self._kind = "quotient"
        self.p = spec.p
        self.k = len(mod) - 1
        self.modulus = mod
        self.order = spec.p ** self.k
        # x^e reduced mod the modulus, for e up to 2(k-1)
        reductions: list[tuple[int, ...]] = []
        if self.k >= 1:
            rep_k = tuple((-c) % spec.p for c in mod[: self.k])
            reductions.append(rep_k)
            for _ in range(self.k, 2 * self.k - 1):
                prev = reductions[-1]
                shifted = [0] + list(prev[:-1])
                carry = prev[-1]
                vec = [(shifted[i] + carry * rep_k[i]) % spec.p for i in range(self.k)]
                reductions.append(tuple(vec))
        self._xpow = reductions

    def _init_product(self, spec: ProductSpec) -> None:
        if len(spec.factors) < 2:
            raise RingSpecError("product needs at least two factors")
        self._kind = "product"
        self.factors = tuple(FiniteRing(f) for f in spec.factors)
        self.order = 1
        for f in self.factors:
            self.order *= f.order
        radix = []
        acc = 1
        for f in reversed(self.factors):
            radix.append(acc)
            acc *= f.order
        self._radix = tuple(reversed(radix))

    def _init_table(self, spec: TableSpec) -> None:
        n = spec.order
        if n < 2:
            raise RingSpecError("table ring needs order >= 2")
        if n > TABLE_ORDER_CAP:
            raise RingSpecError(
                f"table ring order {n} exceeds the axiom-check cap {TABLE_ORDER_CAP}"
            )
        add, mul = spec.add, spec.mul
        if len(add) != n or len(mul) != n or any(len(r) != n for r in add + mul):
            raise RingSpecError("operation tables must be order x order")
        rng = range(n)
        for table, name in ((add, "add"), (mul, "mul")):
            for a in rng:
                for b in rng:
                    v = table[a][b]
                    if not 0 <= v < n:
                        raise RingSpecError(f"{name} table entry out of range at ({a},{b})")
                    if v != table[b][a]:
                        raise RingSpecError(f"{name} table is not commutative at ({a},{b})")
        for a in rng:
            if add[a][0] != a:
                raise RingSpecError("index 0 is not the additive identity")
            if not any(add[a][b] == 0 for b in rng):
                raise RingSpecError(f"element {a} has no additive inverse")
        for a in rng:
            for b in rng:
                for c in rng:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise RingSpecError(f"addition not associative at ({a},{b},{c})")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise RingSpecError(f"multiplication not associative at ({a},{b},{c})")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise RingSpecError(f"distributivity fails at ({a},{b},{c})")
        self._kind = "table"
        self.order = n
        self._table_add = add
        self._table_mul = mul

    def _find_one(self) -> int:
        if self._kind == "zn":
            return 1 % self.order if self.order > 1 else 0
        if self._kind == "quotient":
            return 1
        if self._kind == "product":
            assert self.factors is not None
            return self.combine([f.one_index for f in self.factors])
        for e in range(1, self.order):
            if all(self._mul_raw(e, a) == a for a in range(self.order)):
                return e
        raise RingSpecError("table ring has no multiplicative identity")

    # -- raw operations (index arithmetic without dense tables)

    def _add_raw(self, a: int, b: int) -> int:
        if self._kind == "zn":
            return (a + b) % self.order
        if self._kind == "quotient":
            p, k = self.p, self.k
            out = 0
            mult = 1
            for _ in range(k):
                out += ((a % p + b % p) % p) * mult
                a //= p
                b //= p
                mult *= p
            return out
        if self._kind == "product":
            assert self.factors is not None
            return self.combine(
                [f.add(x, y) for f, x, y in zip(self.factors, self.project(a), self.project(b))]
            )
        return self._table_add[a][b]

    def _mul_raw(self, a: int, b: int) -> int:
        if self._kind == "zn":
            return (a * b) % self.order
        if self._kind == "quotient":
            p, k = self.p, self.k
            ca = self._digits(a)
            cb = self._digits(b)
            conv = [0] * (2 * k - 1)
            for i, x in enumerate(ca):
                if x:
                    for j, y in enumerate(cb):
                        conv[i + j] += x * y
            vec = [conv[i] % p for i in range(k)]
            for e in range(k, 2 * k - 1):
                c = conv[e] % p
                if c:
                    red = self._xpow[e - k]
                    for i in range(k):
                        vec[i] = (vec[i] + c * red[i]) % p
            out = 0
            mult = 1
            for c in vec:
                out += c * mult
                mult *= p
            return out
        if self._kind == "product":
            assert self.factors is not None
            return self.combine(
                [f.mul(x, y) for f, x, y in zip(self.factors, self.project(a), self.project(b))]
            )
        return self._table_mul[a][b]

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    # -- public operations

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_raw(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def neg(self, a: int) -> int:
        for b in range(self.order):
            if self.add(a, b) == 0:
                return b
        raise RuntimeError(f"no additive inverse for index {a} in {self}")

    @property
    def zero(self) -> Elem:
        return Elem(self, 0)

    @property
    def one(self) -> Elem:
        return Elem(self, self.one_index)

    def elem(self, index: int) -> Elem:
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for {self}")
        return Elem(self, index)

    def elements(self) -> Iterator[Elem]:
        for i in range(self.order):
            yield Elem(self, i)

    def project(self, index: int) -> tuple[int, ...]:
        """Component indices of a product-ring element."""
        if self.factors is None or self._radix is None:
            raise ValueError(f"{self} is not a product ring")
        return tuple(
            (index // r) % f.order for r, f in zip(self._radix, self.factors)
        )

    def combine(self, components: list[int] | tuple[int, ...]) -> int:
        if self.factors is None or self._radix is None:
            raise ValueError(f"{self} is not a product ring")
        if len(components) != len(self.factors):
            raise ValueError("component count mismatch")
        return sum(c * r for c, r in zip(components, self._radix))

    def render(self, index: int) -> str:
        if self._kind == "zn" or self._kind == "table":
            return str(index)
        if self._kind == "quotient":
            digits = self._digits(index)
            return _render_poly_text(tuple(digits))
        assert self.factors is not None
        parts = [f.render(i) for f, i in zip(self.factors, self.project(index))]
        return "(" + ",".join(parts) + ")"

    def unit_indices(self) -> tuple[int, ...]:
        if self._units is None:
            if self._kind == "product":
                assert self.factors is not None
                combos = itertools.product(*(f.unit_indices() for f in self.factors))
                units = sorted(self.combine(list(c)) for c in combos)
            else:
                units = [
                    a
                    for a in range(1, self.order)
                    if any(self.mul(a, b) == self.one_index for b in range(1, self.order))
                ]
            self._units = tuple(units)
        return self._units

    def is_unit(self, index: int) -> bool:
        return index in set(self.unit_indices())

    def zero_divisor_indices(self, include_zero: bool = False) -> tuple[int, ...]:
        """Indices a != 0 with a*b = 0 for some b != 0, by definition scan."""
        if self._zero_divisors is None:
            units = set(self.unit_indices())
            found = []
            for a in range(1, self.order):
                if a in units:
                    continue
                if any(self.mul(a, b) == 0 for b in range(1, self.order)):
                    found.append(a)
            self._zero_divisors = tuple(found)
        if include_zero:
            return (0,) + self._zero_divisors
        return self._zero_divisors

    def is_domain(self) -> bool:
        return not self.zero_divisor_indices()

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"FiniteRing({self.text}, order={self.order})"


def build_ring(spec: RingSpec | str) -> FiniteRing:
    """Build a ring from a spec object or mini-language text."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    return FiniteRing(spec)


# ---------------------------------------------------------------------------
# Ideals and local structure


@dataclass(frozen=True)
class IdealSet:
    """An explicit ideal: contains 0, closed under + and ring multiples."""

    ring: FiniteRing
    indices: frozenset[int]

    @staticmethod
    def check(ring: FiniteRing, indices: frozenset[int]) -> bool:
        if 0 not in indices:
            return False
        for a in indices:
            for b in indices:
                if ring.add(a, b) not in indices:
                    return False
            for r in range(ring.order):
                if ring.mul(a, r) not in indices:
                    return False
        return True

    def __post_init__(self):
        if not IdealSet.check(self.ring, self.indices):
            raise ValueError("element set is not an ideal")

    def __contains__(self, item: int | Elem) -> bool:
        if isinstance(item, Elem):
            if item.ring is not self.ring:
                raise MixedRingError("ideal membership across rings")
            return item.index in self.indices
        return item in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def elements(self) -> list[Elem]:
        return [self.ring.elem(i) for i in sorted(self.indices)]

    def render(self) -> list[str]:
        return [self.ring.render(i) for i in sorted(self.indices)]

    def __repr__(self) -> str:
        return "Ideal{" + ",".join(self.render()) + "}"


@dataclass(frozen=True)
class LocalStructure:
    """Local-ring data: the maximal ideal, its generator, and unit-power forms.

    ``power_form`` maps each nonzero maximal-ideal index m to (unit rank,
    exponent j) with m = u * a^j, taking the largest j (the a-adic
    valuation) and then the smallest canonical unit.
    """

    is_local: bool
    principal: bool = False
    maximal_ideal: IdealSet | None = None
    generator: Elem | None = None
    nilpotency: int | None = None
    canonical_units: tuple[int, ...] = ()
    power_form: dict[int, tuple[int, int]] | None = None
    reason: str = ""

    def valuation(self, index: int) -> int:
        if self.power_form is None or index not in self.power_form:
            raise ValueError(f"no power form for index {index}")
        return self.power_form[index][1]

    def unit_rank(self, index: int) -> int:
        if self.power_form is None or index not in self.power_form:
            raise ValueError(f"no power form for index {index}")
        return self.power_form[index][0]


def units_of(ring: FiniteRing) -> set[Elem]:
    return {ring.elem(i) for i in ring.unit_indices()}


def zero_divisors_of(ring: FiniteRing, include_zero: bool = False) -> set[Elem]:
    return {ring.elem(i) for i in ring.zero_divisor_indices(include_zero)}


def annihilator(ring: FiniteRing, x: Elem) -> IdealSet:
    """All r with r*x = 0; always an ideal."""
    if x.ring is not ring:
        raise MixedRingError("annihilator of a foreign element")
    members = frozenset(r for r in range(ring.order) if ring.mul(r, x.index) == 0)
    return IdealSet(ring, members)


def is_prime_ideal(ring: FiniteRing, ideal: IdealSet) -> bool:
    """Exhaustive check of: a*b in I implies a in I or b in I."""
    if ideal.ring is not ring:
        raise MixedRingError("ideal of a foreign ring")
    if len(ideal.indices) == ring.order:
        raise ValueError("prime test requires a proper ideal")
    inside = ideal.indices
    for a in range(ring.order):
        if a in inside:
            continue
        for b in range(a, ring.order):
            if b in inside:
                continue
            if ring.mul(a, b) in inside:
                return False
    return True


def associated_primes(ring: FiniteRing) -> list[IdealSet]:
    """Annihilators of nonzero elements that are prime, deduplicated."""
    seen: set[frozenset[int]] = set()
    out: list[IdealSet] = []
    for x in range(1, ring.order):
        ann = frozenset(r for r in range(ring.order) if ring.mul(r, x) == 0)
        if ann in seen or len(ann) == ring.order:
            continue
        seen.add(ann)
        ideal = IdealSet(ring, ann)
        if is_prime_ideal(ring, ideal):
            out.append(ideal)
    out.sort(key=lambda ideal: (len(ideal.indices), sorted(ideal.indices)))
    return out


def is_von_neumann_regular_elem(ring: FiniteRing, a: Elem) -> bool:
    """True iff a = a^2 * b for some b."""
    if a.ring is not ring:
        raise MixedRingError("regularity test on a foreign element")
    a2 = ring.mul(a.index, a.index)
    return any(ring.mul(a2, b) == a.index for b in range(ring.order))


def local_structure(ring: FiniteRing) -> LocalStructure:
    """Decide locality via additive closure of the non-units.

    For local rings with a principal maximal ideal the generator, its
    nilpotency index, and the canonical power form of every nonzero
    maximal-ideal element are computed.
    """
    if ring._local is not None:
        return ring._local
    units = set(ring.unit_indices())
    non_units = [a for a in range(ring.order) if a not in units]
    for a in non_units:
        for b in non_units:
            if ring.add(a, b) in units:
                result = LocalStructure(is_local=False, reason="non-units not additively closed")
                ring._local = result
                return result
    maximal = IdealSet(ring, frozenset(non_units))

    generator = None
    for a in sorted(non_units):
        if a == 0 and len(non_units) > 1:
            continue
        image = {ring.mul(a, r) for r in range(ring.order)}
        if image == set(non_units):
            generator = a
            break
    if generator is None:
        result = LocalStructure(
            is_local=True,
            principal=False,
            maximal_ideal=maximal,
            reason="not a principal maximal ideal",
        )
        ring._local = result
        return result

    nilpotency = 1
    power = generator
    while power != 0:
        power = ring.mul(power, generator)
        nilpotency += 1
        if nilpotency > ring.order:
            raise RuntimeError("generator failed to nilpotate; ring is inconsistent")

    canonical_units = tuple(sorted(units))
    gen_powers = [None, generator]
    for j in range(2, nilpotency):
        gen_powers.append(ring.mul(gen_powers[-1], generator))

    power_form: dict[int, tuple[int, int]] = {}
    for m in non_units:
        if m == 0:
            continue
        found = None
        for j in range(nilpotency - 1, 0, -1):
            aj = gen_powers[j]
            for rank, u in enumerate(canonical_units, start=1):
                if ring.mul(u, aj) == m:
                    found = (rank, j)
                    break
            if found:
                break
        if found is None:
            raise RuntimeError(f"maximal-ideal element {ring.render(m)} has no unit power form")
        power_form[m] = found

    result = LocalStructure(
        is_local=True,
        principal=True,
        maximal_ideal=maximal,
        generator=ring.elem(generator),
        nilpotency=nilpotency,
        canonical_units=canonical_units,
        power_form=power_form,
    )
    ring._local = result
    return result
