"""4x4 matrices over a binary field: the concrete carrier of group elements.

Entries are stored row-major as a flat tuple of 16 raw bit-polynomials, which
makes matrices hashable and comparison cheap; wrapped ``FieldElement`` views
are produced on demand.  The multiply kernel is unrolled and reads straight
from the field's multiplication table when one exists, because closure
enumeration and order censuses push millions of products through it.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import Field, FieldElement, FieldMismatchError


class SingularMatrixError(ValueError):
    """Raised when inverting a matrix without full rank."""


class OrderNotFoundError(LookupError):
    """No power within the hinted divisors (or the bound) equals the identity."""


def _mul_table_kernel(x: Sequence[int], y: Sequence[int], mul: list[list[int]]) -> tuple[int, ...]:
    # Unrolled 4x4 product; mul is the q*q field multiplication table.
    x0, x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14, x15 = x
    y0, y1, y2, y3, y4, y5, y6, y7, y8, y9, y10, y11, y12, y13, y14, y15 = y
    r0, r1, r2, r3 = mul[x0], mul[x1], mul[x2], mul[x3]
    r4, r5, r6, r7 = mul[x4], mul[x5], mul[x6], mul[x7]
    r8, r9, r10, r11 = mul[x8], mul[x9], mul[x10], mul[x11]
    r12, r13, r14, r15 = mul[x12], mul[x13], mul[x14], mul[x15]
    return (
        r0[y0] ^ r1[y4] ^ r2[y8] ^ r3[y12],
        r0[y1] ^ r1[y5] ^ r2[y9] ^ r3[y13],
        r0[y2] ^ r1[y6] ^ r2[y10] ^ r3[y14],
        r0[y3] ^ r1[y7] ^ r2[y11] ^ r3[y15],
        r4[y0] ^ r5[y4] ^ r6[y8] ^ r7[y12],
        r4[y1] ^ r5[y5] ^ r6[y9] ^ r7[y13],
        r4[y2] ^ r5[y6] ^ r6[y10] ^ r7[y14],
        r4[y3] ^ r5[y7] ^ r6[y11] ^ r7[y15],
        r8[y0] ^ r9[y4] ^ r10[y8] ^ r11[y12],
        r8[y1] ^ r9[y5] ^ r10[y9] ^ r11[y13],
        r8[y2] ^ r9[y6] ^ r10[y10] ^ r11[y14],
        r8[y3] ^ r9[y7] ^ r10[y11] ^ r11[y15],
        r12[y0] ^ r13[y4] ^ r14[y8] ^ r15[y12],
        r12[y1] ^ r13[y5] ^ r14[y9] ^ r15[y13],
        r12[y2] ^ r13[y6] ^ r14[y10] ^ r15[y14],
        r12[y3] ^ r13[y7] ^ r14[y11] ^ r15[y15],
    )


def _mul_fn_kernel(x: Sequence[int], y: Sequence[int], mul) -> tuple[int, ...]:
    # Fallback for fields too large for a full multiplication table.
    out = []
    for i in (0, 4, 8, 12):
        a0, a1, a2, a3 = x[i], x[i + 1], x[i + 2], x[i + 3]
        for j in range(4):
            out.append(mul(a0, y[j]) ^ mul(a1, y[4 + j]) ^ mul(a2, y[8 + j]) ^ mul(a3, y[12 + j]))
    return tuple(out)


class Mat4:
    """Immutable 4x4 matrix over a :class:`Field`."""

    __slots__ = ("entries", "field")

    def __init__(self, field: Field, entries: Iterable[int | FieldElement]) -> None:
        vals = []
        for e in entries:
            if isinstance(e, FieldElement):
                if e.field != field:
                    raise FieldMismatchError("entry from a different field")
                vals.append(e.bits)
            else:
                if not 0 <= e < field.q:
                    raise ValueError(f"entry 0x{e:x} out of range for GF(2^{field.degree})")
                vals.append(e)
        if len(vals) != 16:
            raise ValueError(f"need 16 entries, got {len(vals)}")
        object.__setattr__(self, "entries", tuple(vals))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Mat4 is immutable")

    @classmethod
    def _make(cls, field: Field, entries: tuple[int, ...]) -> "Mat4":
        m = object.__new__(cls)
        object.__setattr__(m, "entries", entries)
        object.__setattr__(m, "field", field)
        return m

    @classmethod
    def identity(cls, field: Field) -> "Mat4":
        return cls._make(field, (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1))

    @classmethod
    def diagonal(cls, field: Field, diag: Sequence[int | FieldElement]) -> "Mat4":
        if len(diag) != 4:
            raise ValueError("need 4 diagonal entries")
        e = [0] * 16
        for i, d in enumerate(diag):
            e[5 * i] = d.bits if isinstance(d, FieldElement) else d
        return cls(field, e)

    def entry(self, i: int, j: int) -> FieldElement:
        """Entry in row i, column j (0-based), as a field element."""
        return FieldElement(self.entries[4 * i + j], self.field)

    def __mul__(self, other: "Mat4") -> "Mat4":
        f = self.field
        if other.field is not f and other.field != f:
            raise FieldMismatchError("matrices over different fields")
        table = f._mul_table
        if table is not None:
            return Mat4._make(f, _mul_table_kernel(self.entries, other.entries, table))
        return Mat4._make(f, _mul_fn_kernel(self.entries, other.entries, f._mul))

    def __pow__(self, k: int) -> "Mat4":
        if k < 0:
            return self.inv() ** (-k)
        r = Mat4.identity(self.field)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def inv(self) -> "Mat4":
        """Gauss-Jordan inverse; raises SingularMatrixError below rank 4."""
        f = self.field
        mul, finv = f._mul, f._inv
        aug = []
        for r in range(4):
            row = list(self.entries[4 * r:4 * r + 4]) + [0] * 4
            row[4 + r] = 1
            aug.append(row)
        for col in range(4):
            piv = next((r for r in range(col, 4) if aug[r][col]), None)
            if piv is None:
                raise SingularMatrixError("matrix has rank < 4")
            aug[col], aug[piv] = aug[piv], aug[col]
            scale = finv(aug[col][col])
            if scale != 1:
                aug[col] = [mul(scale, v) for v in aug[col]]
            prow = aug[col]
            for r in range(4):
                if r == col:
                    continue
                factor = aug[r][col]
                if factor:
                    aug[r] = [v ^ mul(factor, p) for v, p in zip(aug[r], prow)]
        out = []
        for r in range(4):
            out.extend(aug[r][4:])
        return Mat4._make(f, tuple(out))

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1)

    # -- canonical byte encoding --

    def encode(self) -> bytes:
        """Row-major, each entry as little-endian fixed-width bytes.

        The encoding is injective and stable; it is the canonical key for
        closure enumeration and for snapshot tests.
        """
        w = self.field.element_bytes
        return b"".join(v.to_bytes(w, "little") for v in self.entries)

    @classmethod
    def decode(cls, field: Field, data: bytes) -> "Mat4":
        w = field.element_bytes
        if len(data) != 16 * w:
            raise ValueError(f"need {16 * w} bytes, got {len(data)}")
        vals = tuple(int.from_bytes(data[i * w:(i + 1) * w], "little") for i in range(16))
        for v in vals:
            if v >= field.q:
                raise ValueError(f"entry 0x{v:x} out of range")
        return cls._make(field, vals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat4):
            return NotImplemented
        return self.entries == other.entries and self.field == other.field

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = [" ".join(f"{v:x}" for v in self.entries[4 * r:4 * r + 4]) for r in range(4)]
        return "Mat4[" + " | ".join(rows) + "]"


def element_order(mat: Mat4, hint_orders: Iterable[int] = (), bound: int | None = None) -> int:
    """Least k >= 1 with mat**k equal to the identity.

    With ``hint_orders`` the true order must divide one of the hints; powers
    are walked once and compared against the identity only at divisors of the
    hints, in increasing order.  Without hints the search runs up to ``bound``
    by iterated multiplication.  Exhausting either search raises
    OrderNotFoundError, which for hinted searches signals an element outside
    the expected spectrum.
    """
    hints = [h for h in hint_orders if h > 0]
    if hints:
        candidates = set()
        for h in hints:
            for d in range(1, h + 1):
                if h % d == 0:
                    candidates.add(d)
        limit = max(candidates)
    else:
        if bound is None:
            raise ValueError("element_order needs hint_orders or a bound")
        candidates = None
        limit = bound
    cur = mat
    for k in range(1, limit + 1):
        if (candidates is None or k in candidates) and cur.is_identity():
            return k
        if k < limit:
            cur = cur * mat
    raise OrderNotFoundError(
        f"no order found within {'hints ' + str(sorted(hints)) if hints else f'bound {bound}'}")
