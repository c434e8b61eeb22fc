"""Exact element-order statistics: totient and divisor machinery, the
closed-form spectrum and order counts of Sz(q), the type function, the three
classical divisibility checks, and the prime graph.

Everything runs in arbitrary-precision integers; the counts grow like q^5 and
leave 64-bit range around m = 6.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .group import SuzukiParams


# ---------------------------------------------------------------------------
# Elementary number theory
# ---------------------------------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    phi = 1
    for p, k in factorize(n).items():
        phi *= (p - 1) * p ** (k - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending."""
    divs = [1]
    for p, k in factorize(n).items():
        divs = [d * p ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


def coprime_part(n: int, t: int) -> int:
    """Greatest divisor of n coprime to t."""
    g = gcd(n, t)
    while g > 1:
        n //= g
        g = gcd(n, g)
    return n


def multiplicative_order(a: int, n: int, factorization: dict[int, int] | None = None) -> int:
    """Least d >= 1 with a^d = 1 (mod n); requires gcd(a, n) = 1.

    ``factorization`` may supply the prime factorization of n when the caller
    already knows it (n can be large while its prime factors stay small).
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    fac = factorization if factorization is not None else factorize(n)
    order = 1
    for p, k in fac.items():
        pk = p ** k
        d = (p - 1) * p ** (k - 1)  # phi(p^k), a multiple of the local order
        for r in factorize(d):
            while d % r == 0 and pow(a, d // r, pk) == 1:
                d //= r
        order = order * d // gcd(order, d)
    return order


# ---------------------------------------------------------------------------
# Order statistics containers
# ---------------------------------------------------------------------------

@dataclass
class OrderStats:
    """Map from element order to the exact number of elements of that order.

    Deliberately permissive: perturbed or inconsistent stats are legal inputs
    to the check functions below, which report violations instead of refusing
    to construct.
    """

    counts: dict[int, int]
    total: int

    def to_json_dict(self) -> dict:
        """JSON form with decimal strings, preserving arbitrary precision."""
        return {
            "total": str(self.total),
            "counts": {str(i): str(c) for i, c in sorted(self.counts.items())},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OrderStats":
        return cls(
            counts={int(i): int(c) for i, c in data["counts"].items()},
            total=int(data["total"]),
        )


@dataclass(frozen=True)
class Spectrum:
    """A divisor-closed set of element orders."""

    orders: frozenset[int]

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        closed = set()
        for v in values:
            for d in range(1, v + 1):
                if v % d == 0:
                    closed.add(d)
        return cls(frozenset(closed))

    def __contains__(self, n: int) -> bool:
        return n in self.orders

    def __iter__(self):
        return iter(sorted(self.orders))


def spectrum_closed_form(params: SuzukiParams) -> Spectrum:
    """Element orders of Sz(q): all divisors of 4, q-1, q+s+1 and q-s+1."""
    return Spectrum.from_values((4, params.v, params.u1, params.u2))


def nse_closed_form(params: SuzukiParams) -> OrderStats:
    """Exact order counts for Sz(q).

    Even orders: 1 identity, (q-1)(q^2+1) involutions, q(q-1)(q^2+1) of order
    four.  Odd orders i > 1 live in the cyclic partition classes: divisors of
    q+s+1 count phi(i) q^2 (q-s+1)(q-1)/4, divisors of q-s+1 count
    phi(i) q^2 (q+s+1)(q-1)/4 (note the crossed cofactor), and divisors of
    q-1 count phi(i) q^2 (q^2+1)/2.
    """
    q, s = params.q, params.s
    q2 = q * q
    counts: dict[int, int] = {
        1: 1,
        2: (q - 1) * (q2 + 1),
        4: q * (q - 1) * (q2 + 1),
    }
    for i in divisors(params.u1):
        if i > 1:
            num = euler_phi(i) * q2 * (q - s + 1) * (q - 1)
            assert num % 4 == 0
            counts[i] = num // 4
    for i in divisors(params.u2):
        if i > 1:
            num = euler_phi(i) * q2 * (q + s + 1) * (q - 1)
            assert num % 4 == 0
            counts[i] = num // 4
    for i in divisors(params.v):
        if i > 1:
            num = euler_phi(i) * q2 * (q2 + 1)
            assert num % 2 == 0
            counts[i] = num // 2
    total = sum(counts.values())
    if total != params.group_order:
        raise AssertionError(
            f"order-count transcription bug: sum {total} != |Sz({q})| {params.group_order}")
    return OrderStats(counts=counts, total=params.group_order)


def type_function(stats: OrderStats, n: int) -> int:
    """Number of elements x with x^n = 1: the sum of counts over divisors of n."""
    return sum(stats.counts.get(d, 0) for d in divisors(n))


# ---------------------------------------------------------------------------
# Divisibility checks
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    name: str
    passed: bool
    violations: list[str] = dc_field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "violations": list(self.violations)}


def frobenius_check(stats: OrderStats) -> CheckReport:
    """Every divisor n of the group order must divide |{x : x^n = 1}|."""
    violations = []
    for n in divisors(stats.total):
        g = type_function(stats, n)
        if g % n:
            violations.append(f"n={n}: {g} solutions of x^n=1, not divisible by n")
    return CheckReport("frobenius_divisibility", not violations, violations)


def totient_divisor_check(stats: OrderStats) -> CheckReport:
    """phi(i) divides the count at i; i divides the divisor-sum at i; counts
    above order 2 are even."""
    violations = []
    for i, c in sorted(stats.counts.items()):
        if c % euler_phi(i):
            violations.append(f"i={i}: phi({i})={euler_phi(i)} does not divide {c}")
        partial = type_function(stats, i)
        if partial % i:
            violations.append(f"i={i}: divisor-sum {partial} not divisible by {i}")
        if i > 2 and c % 2:
            violations.append(f"i={i}: count {c} is odd")
    return CheckReport("totient_divisor", not violations, violations)


def weisner_count(stats: OrderStats, t: int) -> tuple[int, CheckReport]:
    """Number f(t) of elements whose order is a multiple of t, with the check
    that f(t) is zero or a multiple of the greatest divisor of the group
    order coprime to t."""
    f_t = sum(c for i, c in stats.counts.items() if i % t == 0)
    cp = coprime_part(stats.total, t)
    ok = f_t == 0 or f_t % cp == 0
    violations = [] if ok else [f"t={t}: f(t)={f_t} is no multiple of coprime part {cp}"]
    return f_t, CheckReport(f"weisner_t{t}", ok, violations)


# ---------------------------------------------------------------------------
# Prime graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeGraph:
    """Primes of the group order, adjacent when their product is an element
    order; components carry the matching chunk of the order's factorization."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    components: tuple[frozenset[int], ...]
    order_components: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
            "components": [sorted(c) for c in self.components],
            "order_components": list(self.order_components),
        }


def prime_graph(spectrum: Spectrum, order: int) -> PrimeGraph:
    """Build the prime graph of a group of the given order and spectrum."""
    fac = factorize(order)
    vertices = set(fac)
    for n in spectrum:
        for p in factorize(n):
            if p not in vertices:
                raise ValueError(f"spectrum order {n} has prime {p} outside the group order")
    edges = set()
    for p in vertices:
        for r in vertices:
            if p < r and p * r in spectrum:
                edges.add((p, r))
    adj: dict[int, set[int]] = {p: set() for p in vertices}
    for p, r in edges:
        adj[p].add(r)
        adj[r].add(p)
    components: list[frozenset[int]] = []
    seen: set[int] = set()
    for start in sorted(vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        components.append(frozenset(comp))
    order_comps = tuple(
        _prod(p ** fac[p] for p in sorted(comp)) for comp in components)
    return PrimeGraph(
        vertices=frozenset(vertices),
        edges=frozenset(edges),
        components=tuple(components),
        order_components=order_comps,
    )


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out
