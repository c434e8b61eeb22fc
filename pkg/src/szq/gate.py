"""Decision gate for (order, nse) profiles against Suzuki groups.

Given a candidate group order and the set (or full map) of its
elements-per-order counts, the gate replays the arithmetic certificates that
pin such a profile to Sz(q): the order must factor as q^2 (q^2+1)(q-1) with
q = 2^(2m+1), the counts must match the closed forms exactly, 2 must be
isolated in the prime graph, and both Frobenius-type splittings of the order
must be arithmetically impossible, leaving a unique simple section size.

ACCEPT certifies consistency with Sz(q); it is not a standalone isomorphism
proof for an arbitrary group handed only as a profile, and the report says
so in its ``note`` field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .group import make_params
from .orderstats import factorize, multiplicative_order, nse_closed_form

GATE_NOTE = ("ACCEPT means the profile is consistent with Sz(q) and passes every "
             "arithmetic certificate; it is not an independent isomorphism proof.")


class ProfileError(ValueError):
    """Malformed candidate profile (bad counts, sum mismatch, bad JSON shape)."""


class InvolutionCountError(ValueError):
    """The nse set does not contain exactly one odd value above 1."""


@dataclass(frozen=True)
class CandidateProfile:
    """External (order, nse) input; ``nse_map`` is optional and stricter."""

    order: int
    nse_set: frozenset[int]
    nse_map: dict[int, int] | None = None

    def validate(self) -> None:
        if self.order < 1:
            raise ProfileError(f"group order must be positive, got {self.order}")
        if not self.nse_set:
            raise ProfileError("nse set is empty")
        if any(v < 1 for v in self.nse_set):
            raise ProfileError("nse values must be positive")
        if self.nse_map is not None:
            if any(i < 1 for i in self.nse_map) or any(c < 1 for c in self.nse_map.values()):
                raise ProfileError("nse map needs positive orders and counts")
            if sum(self.nse_map.values()) != self.order:
                raise ProfileError(
                    f"nse map sums to {sum(self.nse_map.values())}, not the order {self.order}")
            if frozenset(self.nse_map.values()) != self.nse_set:
                raise ProfileError("nse map values disagree with the nse set")

    @classmethod
    def from_json_dict(cls, data: dict) -> "CandidateProfile":
        try:
            order = int(data["order"])
        except (KeyError, TypeError, ValueError) as e:
            raise ProfileError(f"bad or missing 'order' field: {e}") from e
        has_set = "nse_set" in data
        has_map = "nse_map" in data
        if has_set == has_map:
            raise ProfileError("profile needs exactly one of 'nse_set' or 'nse_map'")
        try:
            if has_map:
                nse_map = {int(i): int(c) for i, c in data["nse_map"].items()}
                return cls(order=order, nse_set=frozenset(nse_map.values()), nse_map=nse_map)
            return cls(order=order, nse_set=frozenset(int(v) for v in data["nse_set"]))
        except (TypeError, ValueError, AttributeError) as e:
            raise ProfileError(f"bad nse payload: {e}") from e

    def to_json_dict(self) -> dict:
        out: dict = {"order": str(self.order)}
        if self.nse_map is not None:
            out["nse_map"] = {str(i): str(c) for i, c in sorted(self.nse_map.items())}
        else:
            out["nse_set"] = [str(v) for v in sorted(self.nse_set)]
        return out


@dataclass(frozen=True)
class GateCheck:
    name: str
    passed: bool
    detail: str

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class GateReport:
    verdict: str                      # "ACCEPT" or "REJECT"
    inferred_m: int | None
    checks: list[GateCheck] = dc_field(default_factory=list)
    note: str = GATE_NOTE

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "inferred_m": self.inferred_m,
            "checks": [c.to_json_dict() for c in self.checks],
            "note": self.note,
        }


# ---------------------------------------------------------------------------
# Individual certificates
# ---------------------------------------------------------------------------

def infer_q(order: int) -> int | None:
    """The unique m with order = 2^(4m+2) (2^(4m+2)+1) (2^(2m+1)-1), else None."""
    m = 1
    while 1 << (4 * m + 2) <= order:
        q2 = 1 << (4 * m + 2)
        if q2 * (q2 + 1) * ((1 << (2 * m + 1)) - 1) == order:
            return m
        m += 1
    return None


def identify_m2(nse_set: frozenset[int] | set[int]) -> int:
    """The involution count: the unique odd value above 1.

    In any even-order group the number of involutions is odd, and every
    Suzuki count other than 1 and the involution count is even, so exactly
    one odd value above 1 must be present.
    """
    odd = [v for v in nse_set if v > 1 and v % 2 == 1]
    if len(odd) != 1:
        raise InvolutionCountError(
            f"expected exactly one odd count above 1, found {sorted(odd)}")
    return odd[0]


def nse_match_check(profile: CandidateProfile, m: int) -> GateCheck:
    """Set equality with the closed forms; map profiles must match key-by-key."""
    closed = nse_closed_form(make_params(m))
    want_set = frozenset(closed.counts.values())
    if profile.nse_map is not None:
        ok = profile.nse_map == closed.counts
        detail = "full order->count map matches the closed forms" if ok else (
            "order->count map deviates from the closed forms")
        return GateCheck("nse_match", ok, detail)
    ok = profile.nse_set == want_set
    if ok:
        detail = f"nse set matches all {len(want_set)} closed-form values"
    else:
        missing = sorted(want_set - profile.nse_set)
        extra = sorted(profile.nse_set - want_set)
        detail = f"nse set mismatch: missing {missing}, unexpected {extra}"
    return GateCheck("nse_match", ok, detail)


def isolation_certificate(m: int) -> GateCheck:
    """2 is isolated: q^2 divides every count outside orders {1, 2, 4}, the
    odd part of the group order is (q^2+1)(q-1), and the even-order element
    count is that odd part times an odd multiplier."""
    p = make_params(m)
    stats = nse_closed_form(p)
    q2 = p.q * p.q
    bad = [i for i in stats.counts if i not in (1, 2, 4) and stats.counts[i] % q2]
    odd_part = p.group_order
    while odd_part % 2 == 0:
        odd_part //= 2
    m_odd = (p.q * p.q + 1) * (p.q - 1)
    f2 = stats.counts[2] + stats.counts[4]
    r, rem = divmod(f2, m_odd)
    ok = not bad and odd_part == m_odd and rem == 0 and r % 2 == 1
    detail = (f"q^2 | m_i outside {{1,2,4}}: {'yes' if not bad else f'fails at {bad}'}; "
              f"odd part {odd_part} == (q^2+1)(q-1); f(2) = {f2} = {m_odd} * {r}, r odd")
    return GateCheck("isolated_two", ok, detail)


def frobenius_exclusion(m: int) -> GateCheck:
    """Neither split of the order into kernel/complement {q^2, (q^2+1)(q-1)}
    satisfies the required divisibility |H| | |K| - 1."""
    p = make_params(m)
    a = p.q * p.q
    b = (p.q * p.q + 1) * (p.q - 1)
    case1 = (a - 1) % b == 0   # H = odd part, K = q^2
    case2 = (b - 1) % a == 0   # H = q^2, K = odd part
    ok = not case1 and not case2
    detail = f"{b} | {a - 1}: {case1}; {a} | {b - 1}: {case2} (both must be false)"
    return GateCheck("frobenius_excluded", ok, detail)


def two_frobenius_exclusion(m: int) -> GateCheck:
    """No 2-group of order at most q^2 has (q^2+1)(q-1) dividing 2^alpha - 1:
    the multiplicative order of 2 modulo that odd part exceeds 4m+2."""
    p = make_params(m)
    mod = (p.q * p.q + 1) * (p.q - 1)
    fac: dict[int, int] = {}
    for part in (p.u1, p.u2, p.v):
        for prime, k in factorize(part).items():
            fac[prime] = fac.get(prime, 0) + k
    d = multiplicative_order(2, mod, fac)
    ok = d > 4 * m + 2
    detail = f"ord(2 mod {mod}) = {d} > {4 * m + 2}: {ok}"
    return GateCheck("two_frobenius_excluded", ok, detail)


def simple_section_check(m: int) -> GateCheck:
    """(q^2+1)(q-1) divides no smaller (q'^2+1)(q'-1), so a Suzuki section
    carrying the odd part must have the full parameter."""
    def odd_part_of(mm: int) -> int:
        pp = make_params(mm)
        return (pp.q * pp.q + 1) * (pp.q - 1)

    target = odd_part_of(m)
    offenders = [mp for mp in range(1, m) if odd_part_of(mp) % target == 0]
    ok = not offenders
    if m == 1:
        detail = "no smaller parameter exists; vacuously unique"
    else:
        detail = f"{target} divides none of the {m - 1} smaller odd parts: {ok}"
    return GateCheck("simple_section_unique", ok, detail)


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------

def run_gate(profile: CandidateProfile) -> GateReport:
    """Run every certificate; ACCEPT exactly when all pass.

    Malformed profiles raise ProfileError before any check runs.
    """
    profile.validate()
    checks: list[GateCheck] = []
    m = infer_q(profile.order)
    checks.append(GateCheck(
        "order_form", m is not None,
        f"order {profile.order} " + (f"matches m={m}" if m is not None
                                     else "is not q^2 (q^2+1)(q-1) for any q = 2^(2m+1)")))
    if m is None:
        return GateReport("REJECT", None, checks)

    closed_m2 = nse_closed_form(make_params(m)).counts[2]
    try:
        m2 = identify_m2(profile.nse_set)
        ok = m2 == closed_m2
        detail = f"involution count {m2} == (q-1)(q^2+1) = {closed_m2}: {ok}"
    except InvolutionCountError as e:
        ok, detail = False, str(e)
    checks.append(GateCheck("involution_count", ok, detail))

    checks.append(nse_match_check(profile, m))
    checks.append(isolation_certificate(m))
    checks.append(frobenius_exclusion(m))
    checks.append(two_frobenius_exclusion(m))
    checks.append(simple_section_check(m))
    verdict = "ACCEPT" if all(c.passed for c in checks) else "REJECT"
    return GateReport(verdict, m, checks)


def load_profile(path: str) -> CandidateProfile:
    """Read a profile from a JSON file; raises ProfileError on any defect."""
    try:
        with open(path, "rb") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ProfileError(f"cannot read profile {path!r}: {e}") from e
    if not isinstance(data, dict):
        raise ProfileError("profile JSON must be an object")
    profile = CandidateProfile.from_json_dict(data)
    profile.validate()
    return profile
