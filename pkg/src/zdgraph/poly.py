"""Bounded-degree polynomial arithmetic over finite rings, content
decomposition, and the orientation lift onto zero-divisor fragments.

A polynomial over the ring is a zero divisor of the full polynomial ring
exactly when some nonzero ring constant annihilates it, so membership in
a degree-bounded fragment is decidable by a constant scan. Over a local
principal-ideal ring every nonzero polynomial factors as a^w * f1 with a
the maximal-ideal generator, w the minimum coefficient valuation, and f1
regular; products of zero-divisor polynomials then vanish exactly when
the product of their contents does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .divisor import CapExceededError, Orientation, validate_orientation
from .graphs import Graph
from .rings import Elem, FiniteRing, MixedRingError, local_structure

FRAGMENT_CAP = 4096


@dataclass(frozen=True)
class Poly:
    """Coefficient vector (index = degree) over a ring, no trailing zeros."""

    ring: FiniteRing
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ring: FiniteRing, coeffs: Sequence[int]) -> "Poly":
        vec = list(coeffs)
        while vec and vec[-1] == 0:
            vec.pop()
        for c in vec:
            if not 0 <= c < ring.order:
                raise ValueError(f"coefficient index {c} out of range for {ring}")
        return Poly(ring, tuple(vec))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    def _check(self, other: "Poly") -> None:
        if self.ring is not other.ring:
            raise MixedRingError("cannot combine polynomials over different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        vec = []
        for i in range(size):
            a = self.coeffs[i] if i < len(self.coeffs) else 0
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            vec.append(self.ring.add(a, b))
        return Poly.make(self.ring, vec)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly(self.ring, ())
        vec = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                vec[i + j] = self.ring.add(vec[i + j], self.ring.mul(a, b))
        return Poly.make(self.ring, vec)

    def __neg__(self) -> "Poly":
        return Poly.make(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def scale(self, c: int | Elem) -> "Poly":
        idx = c.index if isinstance(c, Elem) else c
        return Poly.make(self.ring, [self.ring.mul(idx, a) for a in self.coeffs])

    def encode(self) -> int:
        """Canonical integer encoding, mixed radix with the constant last."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.ring.order + c
        return value

    @staticmethod
    def decode(ring: FiniteRing, value: int, degree_bound: int) -> "Poly":
        vec = []
        for _ in range(degree_bound + 1):
            vec.append(value % ring.order)
            value //= ring.order
        if value:
            raise ValueError("encoded value exceeds the degree bound")
        return Poly.make(ring, vec)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            text = self.ring.render(c)
            if exp == 0:
                terms.append(text)
            else:
                power = "x" if exp == 1 else f"x^{exp}"
                terms.append(power if text == "1" else f"{text}{power}")
        return "+".join(terms)

    def __str__(self) -> str:
        return self.render()


def parse_poly(text: str, ring: FiniteRing) -> Poly:
    """Parse ``2x^2+3x+1`` with integer coefficient indices over the ring."""
    body = text.replace(" ", "")
    if not body:
        raise ValueError("empty polynomial text")
    if body == "0":
        return Poly(ring, ())
    coeffs: dict[int, int] = {}
    for term in body.split("+"):
        if not term:
            raise ValueError(f"empty term in {text!r}")
        if "x" in term:
            head, _, tail = term.partition("x")
            coef = 1 if head == "" else int(head)
            if tail == "":
                exp = 1
            elif tail.startswith("^"):
                exp = int(tail[1:])
            else:
                raise ValueError(f"bad exponent in term {term!r}")
        else:
            coef, exp = int(term), 0
        if not 0 <= coef < ring.order:
            raise ValueError(f"coefficient {coef} out of range for {ring}")
        coeffs[exp] = ring.add(coeffs.get(exp, 0), coef)
    vec = [coeffs.get(i, 0) for i in range(max(coeffs) + 1)]
    return Poly.make(ring, vec)


def poly_arithmetic(f: Poly, g: Poly | int | Elem, op: str) -> Poly:
    """Dispatcher over add / mul / scalar, mirroring the operator forms."""
    if op == "add":
        assert isinstance(g, Poly)
        return f + g
    if op == "mul":
        assert isinstance(g, Poly)
        return f * g
    if op == "scalar":
        assert not isinstance(g, Poly)
        return f.scale(g)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Zero-divisor structure


def constant_annihilator(f: Poly) -> Elem | None:
    """Smallest-index nonzero ring constant c with c*f = 0, else None.

    A nonzero polynomial is a zero divisor of the polynomial ring exactly
    when such a constant exists.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial has no annihilator witness")
    ring = f.ring
    for c in range(1, ring.order):
        if all(ring.mul(c, a) == 0 for a in f.coeffs):
            return ring.elem(c)
    return None


@dataclass(frozen=True)
class ContentDecomposition:
    content: Elem
    cofactor: Poly

    def recompose(self) -> Poly:
        return self.cofactor.scale(self.content)


def _local_valuation(ring: FiniteRing, index: int) -> int:
    """a-adic valuation: 0 for units, the power-form exponent otherwise."""
    ls = local_structure(ring)
    assert ls.power_form is not None
    if ring.is_unit(index):
        return 0
    return ls.power_form[index][1]


def _local_divide_by_generator_power(ring: FiniteRing, index: int, w: int) -> int:
    """Exact division of u*a^v by a^w (requires v >= w)."""
    if index == 0:
        return 0
    ls = local_structure(ring)
    assert ls.power_form is not None and ls.generator is not None
    if ring.is_unit(index):
        if w:
            raise ValueError("cannot divide a unit by the generator")
        return index
    rank, v = ls.power_form[index]
    if v < w:
        raise ValueError("valuation too small for exact division")
    unit = ls.canonical_units[rank - 1]
    result = unit
    gen = ls.generator.index
    for _ in range(v - w):
        result = ring.mul(result, gen)
    return result


def content_decompose(f: Poly) -> ContentDecomposition:
    """Factor f = c * f1 with c a canonical generator power and f1 regular.

    Local rings take c = a^w for w the minimum coefficient valuation;
    products decompose componentwise and recombine. The cofactor is
    certified regular by the constant-annihilator scan.
    """
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    ring = f.ring
    ls = local_structure(ring)
    if ls.is_local and ls.principal:
        w = min(_local_valuation(ring, c) for c in f.coeffs if c != 0)
        content = ring.one_index
        for _ in range(w):
            content = ring.mul(content, ls.generator.index)
        cofactor = Poly.make(
            ring,
            [_local_divide_by_generator_power(ring, c, w) if c else 0 for c in f.coeffs],
        )
    elif ring.factors is not None:
        parts = []
        for pos, factor in enumerate(ring.factors):
            component = Poly.make(factor, [ring.project(c)[pos] for c in f.coeffs])
            if component.is_zero:
                parts.append((0, Poly.make(factor, [factor.one_index])))
            else:
                sub = content_decompose(component)
                parts.append((sub.content.index, sub.cofactor))
        content = ring.combine([p[0] for p in parts])
        size = max(len(p[1].coeffs) for p in parts)
        vec = []
        for i in range(size):
            comps = [
                p[1].coeffs[i] if i < len(p[1].coeffs) else 0 for p in parts
            ]
            vec.append(ring.combine(comps))
        cofactor = Poly.make(ring, vec)
    else:
        raise ValueError(
            f"{ring} is neither a local principal-ideal ring nor a product of them"
        )
    result = ContentDecomposition(ring.elem(content), cofactor)
    if result.recompose() != f:
        raise RuntimeError("content decomposition failed to recompose")
    if constant_annihilator(cofactor) is not None:
        raise RuntimeError("content cofactor is not regular")
    return result


# ---------------------------------------------------------------------------
# Fragments


def fragment_polynomials(ring: FiniteRing, degree: int, cap: int = FRAGMENT_CAP) -> list[Poly]:
    """Nonzero zero-divisor polynomials of degree <= the bound, in canonical
    encoding order."""
    total = ring.order ** (degree + 1)
    if total > cap:
        raise CapExceededError(f"fragment size {total} exceeds the cap {cap}")
    out = []
    for value in range(1, total):
        f = Poly.decode(ring, value, degree)
        if constant_annihilator(f) is not None:
            out.append(f)
    return out


def zero_divisor_fragment_graph(ring: FiniteRing, degree: int, cap: int = FRAGMENT_CAP) -> Graph:
    """Induced fragment of the complement graph of the polynomial ring:
    zero-divisor polynomials of bounded degree, adjacent iff the exact
    product is nonzero."""
    polys = fragment_polynomials(ring, degree, cap)
    labels = [f.render() for f in polys]
    edges = []
    for i, f in enumerate(polys):
        for j in range(i + 1, len(polys)):
            if not (f * polys[j]).is_zero:
                edges.append((labels[i], labels[j]))
    return Graph(labels, edges)


@dataclass(frozen=True)
class ContentProductReport:
    holds: bool
    polynomials: int
    pairs_checked: int
    counterexample: tuple[Poly, Poly] | None = None


def content_product_check(
    ring: FiniteRing,
    degree: int,
    budget: str = "exhaustive",
    sample: int = 200,
    seed: int = 0,
    cap: int = FRAGMENT_CAP,
) -> ContentProductReport:
    """Check f*g = 0 iff c_f*c_g = 0 over fragment pairs.

    budget "exhaustive" scans every unordered pair; "sample" draws with a
    seeded generator for fragments too large to scan.
    """
    polys = fragment_polynomials(ring, degree, cap)
    contents = [content_decompose(f).content.index for f in polys]
    pairs: Iterator[tuple[int, int]]
    if budget == "exhaustive":
        pairs = ((i, j) for i in range(len(polys)) for j in range(i, len(polys)))
        expected_count = len(polys) * (len(polys) + 1) // 2
    elif budget == "sample":
        rng = random.Random(seed)
        pairs = (
            (rng.randrange(len(polys)), rng.randrange(len(polys)))
            for _ in range(sample)
        )
        expected_count = sample
    else:
        raise ValueError(f"unknown budget {budget!r}")
    checked = 0
    for i, j in pairs:
        f, g = polys[i], polys[j]
        product_zero = (f * g).is_zero
        content_zero = ring.mul(contents[i], contents[j]) == 0
        checked += 1
        if product_zero != content_zero:
            return ContentProductReport(False, len(polys), checked, (f, g))
    assert checked == expected_count
    return ContentProductReport(True, len(polys), checked)


def lift_orientation(
    ring: FiniteRing,
    base: Orientation,
    degree: int,
    cap: int = FRAGMENT_CAP,
) -> Orientation:
    """Lift a valid orientation of the base complement graph to the fragment.

    Fragment polynomials inherit the direction of their contents; within
    one content class (possible only when the content squares to nonzero)
    edges follow ascending canonical encoding, which preserves closure
    because same-content polynomials share their neighborhoods.
    """
    from .zdg import gamma_complement

    base_graph = gamma_complement(ring)
    if not validate_orientation(base_graph, base):
        raise ValueError("base orientation is invalid")
    direction: dict[tuple[str, str], bool] = {}
    for u, v in base.arcs:
        direction[(u, v)] = True

    polys = fragment_polynomials(ring, degree, cap)
    labels = [f.render() for f in polys]
    contents = [content_decompose(f).content.index for f in polys]
    content_labels = [ring.render(c) for c in contents]
    arcs = []
    for i, f in enumerate(polys):
        for j in range(i + 1, len(polys)):
            if (f * polys[j]).is_zero:
                continue
            ci, cj = content_labels[i], content_labels[j]
            if ci == cj:
                arcs.append((labels[i], labels[j]))  # encoding order: i < j
            elif (ci, cj) in direction:
                arcs.append((labels[i], labels[j]))
            elif (cj, ci) in direction:
                arcs.append((labels[j], labels[i]))
            else:
                raise RuntimeError(
                    f"base orientation misses the edge between {ci} and {cj}"
                )
    return Orientation(tuple(arcs))
