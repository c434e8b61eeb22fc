"""Brute-force ground truth for desk-scale Suzuki groups.

Enumerates the group from generators by breadth-first closure over canonical
byte encodings, takes empirical order censuses, digs out cyclic subgroups,
normalizers and centralizers by direct scan, and verifies that the conjugates
of the four reference subgroups cover every nontrivial element exactly once.

Everything here is deliberately dumb and exact: this module is the oracle the
closed forms are tested against, so it must not share their shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import Field
from .group import (
    CertificationError,
    PartitionClassCounts,
    SuzukiParams,
    candidate_generators,
    closed_form_subgroup_counts,
    w_elements,
)
from .mat4 import Mat4, element_order
from .orderstats import OrderStats, Spectrum


class ClosureLimitError(RuntimeError):
    """Breadth-first closure outgrew the caller's limit."""


class SubgroupNotFoundError(LookupError):
    """No element of the requested order exists in the table."""


@dataclass
class ElementTable:
    """A fully enumerated matrix group, keyed by canonical encodings."""

    field: Field
    by_key: dict[bytes, Mat4]
    generators: list[Mat4]
    _sorted_keys: list[bytes] | None = dc_field(default=None, repr=False)
    _inverses: dict[bytes, Mat4] | None = dc_field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.by_key)

    def sorted_keys(self) -> list[bytes]:
        """Canonical iteration order: encodings ascending."""
        if self._sorted_keys is None:
            self._sorted_keys = sorted(self.by_key)
        return self._sorted_keys

    def inverses(self) -> dict[bytes, Mat4]:
        """Inverse of every element, computed once and cached."""
        if self._inverses is None:
            self._inverses = {k: g.inv() for k, g in self.by_key.items()}
        return self._inverses

    def __contains__(self, mat: Mat4) -> bool:
        return mat.encode() in self.by_key


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup given by its member encodings inside some ElementTable."""

    members: frozenset[bytes]
    order: int
    cyclic_generator: Mat4 | None = None


def enumerate_group(generators: Sequence[Mat4], limit: int) -> ElementTable:
    """Breadth-first closure of the generators, starting from the identity.

    Raises ClosureLimitError as soon as the element count would exceed
    ``limit`` (wrong generators or wrong limit).
    """
    if not generators:
        raise ValueError("need at least one generator")
    f = generators[0].field
    for g in generators[1:]:
        if g.field != f:
            raise ValueError("generators live in different fields")
    ident = Mat4.identity(f)
    by_key: dict[bytes, Mat4] = {ident.encode(): ident}
    frontier = [ident]
    while frontier:
        new: list[Mat4] = []
        for a in frontier:
            for g in generators:
                b = a * g
                k = b.encode()
                if k not in by_key:
                    if len(by_key) >= limit:
                        raise ClosureLimitError(f"closure exceeds limit {limit}")
                    by_key[k] = b
                    new.append(b)
        frontier = new
    return ElementTable(field=f, by_key=by_key, generators=list(generators))


def build_suzuki_table(params: SuzukiParams, field: Field) -> tuple[list[Mat4], ElementTable]:
    """Enumerate Sz(q) from the candidate generators and certify the size.

    Returns (generators, table).  Any deviation from
    |Sz(q)| = q^2 (q^2 + 1)(q - 1) raises CertificationError: with this exact
    cardinality the candidate set provably generates the group.
    """
    gens = candidate_generators(params, field)
    try:
        table = enumerate_group(gens, limit=params.group_order)
    except ClosureLimitError as e:
        raise CertificationError(
            f"generator closure exceeds |Sz({params.q})| = {params.group_order}") from e
    if table.size != params.group_order:
        raise CertificationError(
            f"generator closure has {table.size} elements, "
            f"expected |Sz({params.q})| = {params.group_order}")
    return gens, table


def empirical_order_stats(table: ElementTable, spec_hint: Spectrum | None = None) -> OrderStats:
    """Census of element orders over the whole table.

    ``spec_hint`` narrows the order search; an element whose order falls
    outside the hinted divisors raises OrderNotFoundError, which is a finding
    (the table is not the group the spectrum belongs to), not a crash to
    swallow.
    """
    hints = tuple(spec_hint.orders) if spec_hint is not None else ()
    counts: dict[int, int] = {}
    for key in table.sorted_keys():
        if hints:
            o = element_order(table.by_key[key], hints)
        else:
            o = element_order(table.by_key[key], bound=table.size)
        counts[o] = counts.get(o, 0) + 1
    return OrderStats(counts=counts, total=table.size)


def streaming_order_census(generators: Sequence[Mat4], limit: int,
                           spec_hint: Spectrum | None = None) -> OrderStats:
    """Order census fused into the closure walk, keeping only encodings.

    Memory stays proportional to the key set plus one frontier layer, which
    is what makes opt-in censuses of Sz(32) feasible; results are identical
    to enumerate + empirical_order_stats (tested at desk scale).
    """
    if not generators:
        raise ValueError("need at least one generator")
    f = generators[0].field
    hints = tuple(spec_hint.orders) if spec_hint is not None else ()
    ident = Mat4.identity(f)
    seen = {ident.encode()}
    counts: dict[int, int] = {1: 1}
    frontier = [ident]
    while frontier:
        new: list[Mat4] = []
        for a in frontier:
            for g in generators:
                b = a * g
                k = b.encode()
                if k not in seen:
                    if len(seen) >= limit:
                        raise ClosureLimitError(f"closure exceeds limit {limit}")
                    seen.add(k)
                    if hints:
                        o = element_order(b, hints)
                    else:
                        o = element_order(b, bound=limit)
                    counts[o] = counts.get(o, 0) + 1
                    new.append(b)
        frontier = new
    return OrderStats(counts=counts, total=len(seen))


# ---------------------------------------------------------------------------
# Subgroup digging
# ---------------------------------------------------------------------------

def cyclic_subgroup(table: ElementTable, generator: Mat4, order: int) -> SubgroupHandle:
    members = []
    cur = Mat4.identity(table.field)
    for _ in range(order):
        members.append(cur.encode())
        cur = cur * generator
    assert cur.is_identity()
    return SubgroupHandle(frozenset(members), order, cyclic_generator=generator)


def find_cyclic_subgroup(table: ElementTable, k: int) -> SubgroupHandle:
    """Cyclic subgroup generated by the first element of order k, scanning
    in sorted-encoding order for determinism."""
    if k == 1:
        ident = Mat4.identity(table.field)
        return SubgroupHandle(frozenset([ident.encode()]), 1, cyclic_generator=ident)
    for key in table.sorted_keys():
        g = table.by_key[key]
        cur = g
        order = 1
        while not cur.is_identity():
            cur = cur * g
            order += 1
            if order > k:
                break
        if order == k:
            return cyclic_subgroup(table, g, k)
    raise SubgroupNotFoundError(f"no element of order {k} in the table")


def _generating_set(table: ElementTable, members: frozenset[bytes]) -> list[Mat4]:
    """Small generating set of a subgroup given by its member encodings."""
    ident_key = Mat4.identity(table.field).encode()
    gens: list[Mat4] = []
    closed = {ident_key}
    for key in sorted(members):
        if key in closed:
            continue
        gens.append(table.by_key[key])
        frontier = list(closed)
        while frontier:
            new = []
            for k0 in frontier:
                for g in gens:
                    nk = (table.by_key[k0] * g).encode()
                    if nk not in closed:
                        closed.add(nk)
                        new.append(nk)
            frontier = new
        if len(closed) == len(members):
            break
    return gens


def normalizer(table: ElementTable, sub: SubgroupHandle) -> SubgroupHandle:
    """All g with g H g^-1 = H, by scanning the whole table.

    Conjugating a generating set of H into H suffices: the conjugate is a
    subgroup of the same order.
    """
    gens = [sub.cyclic_generator] if sub.cyclic_generator is not None else \
        _generating_set(table, sub.members)
    if not gens:  # trivial subgroup
        return SubgroupHandle(frozenset(table.by_key), table.size)
    members = sub.members
    inv = table.inverses()
    found = []
    for key in table.sorted_keys():
        g = table.by_key[key]
        gi = inv[key]
        if all(((g * h) * gi).encode() in members for h in gens):
            found.append(key)
    return SubgroupHandle(frozenset(found), len(found))


def centralizer(table: ElementTable, x: Mat4) -> SubgroupHandle:
    """All g commuting with x."""
    found = []
    for key in table.sorted_keys():
        g = table.by_key[key]
        if g * x == x * g:
            found.append(key)
    return SubgroupHandle(frozenset(found), len(found))


# ---------------------------------------------------------------------------
# Partition verification
# ---------------------------------------------------------------------------

@dataclass
class PartitionReport:
    """Outcome of the conjugate-cover check of the four reference classes."""

    measured: PartitionClassCounts
    expected: PartitionClassCounts
    coverage: int            # nontrivial membership slots filled
    expected_coverage: int   # group order - 1
    multiply_covered: int    # nontrivial elements hit more than once
    missing: int             # nontrivial elements hit zero times

    @property
    def passed(self) -> bool:
        return (self.measured == self.expected
                and self.multiply_covered == 0
                and self.missing == 0
                and self.coverage == self.expected_coverage)

    def to_json_dict(self) -> dict:
        return {
            "n_w": self.measured.n_w,
            "n_u1": self.measured.n_u1,
            "n_u2": self.measured.n_u2,
            "n_v": self.measured.n_v,
            "expected_n_w": self.expected.n_w,
            "expected_n_u1": self.expected.n_u1,
            "expected_n_u2": self.expected.n_u2,
            "expected_n_v": self.expected.n_v,
            "coverage": self.coverage,
            "expected_coverage": self.expected_coverage,
            "multiply_covered": self.multiply_covered,
            "missing": self.missing,
            "passed": int(self.passed),
        }


def conjugate_orbit(table: ElementTable, members: frozenset[bytes]) -> list[frozenset[bytes]]:
    """Orbit of a subgroup (as a member set) under conjugation by the group.

    Walking the table's generators suffices: conjugation is a group action,
    so generator moves alone reach the full orbit.
    """
    inv = [g.inv() for g in table.generators]
    orbit = {members}
    frontier = [members]
    while frontier:
        new = []
        for sub in frontier:
            mats = [table.by_key[k] for k in sub]
            for g, gi in zip(table.generators, inv):
                conj = frozenset(((g * h) * gi).encode() for h in mats)
                if conj not in orbit:
                    orbit.add(conj)
                    new.append(conj)
        frontier = new
    return sorted(orbit, key=sorted)


def verify_partition(table: ElementTable, params: SuzukiParams) -> PartitionReport:
    """Conjugate one representative of each class and check the cover.

    Representatives: the unitriangular subgroup {w(a, b)} of order q^2, and
    cyclic subgroups of orders q+s+1, q-s+1 and q-1 dug out of the table.
    """
    w_keys = frozenset(w.encode() for w in w_elements(table.field))
    if not w_keys <= set(table.by_key):
        raise ValueError("table does not contain the unitriangular subgroup")
    reps = {
        "w": w_keys,
        "u1": find_cyclic_subgroup(table, params.u1).members,
        "u2": find_cyclic_subgroup(table, params.u2).members,
        "v": find_cyclic_subgroup(table, params.v).members,
    }
    ident_key = Mat4.identity(table.field).encode()
    hits: dict[bytes, int] = {}
    orbit_sizes: dict[str, int] = {}
    for name, members in reps.items():
        orbit = conjugate_orbit(table, members)
        orbit_sizes[name] = len(orbit)
        for conj in orbit:
            for k in conj:
                if k != ident_key:
                    hits[k] = hits.get(k, 0) + 1
    measured = PartitionClassCounts(
        n_w=orbit_sizes["w"], n_u1=orbit_sizes["u1"],
        n_u2=orbit_sizes["u2"], n_v=orbit_sizes["v"])
    multiply = sum(1 for c in hits.values() if c > 1)
    missing = table.size - 1 - len(hits)
    return PartitionReport(
        measured=measured,
        expected=closed_form_subgroup_counts(params),
        coverage=sum(hits.values()),
        expected_coverage=params.group_order - 1,
        multiply_covered=multiply,
        missing=missing,
    )
