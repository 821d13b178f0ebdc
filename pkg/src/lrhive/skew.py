"""Skew diagrams and their normal forms: rotation, basic reduction, components."""

from __future__ import annotations

from .partitions import (
    Partition,
    complement,
    conjugate,
    contains,
    format_partition,
    parse_partition,
)


class SkewShape:
    """An outer/inner partition pair with inner contained in outer.

    The cell set is {(r, c) : 1 <= r <= len(outer), inner_r < c <= outer_r},
    rows and columns 1-indexed.
    """

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=None):
        inner = Partition() if inner is None else inner
        if not contains(inner, outer):
            raise ValueError(f"{inner} is not contained in {outer}")
        self.outer = outer
        self.inner = inner

    @property
    def size(self):
        return self.outer.weight - self.inner.weight

    def cells(self):
        ip = self.inner.padded(self.outer.length)
        return [
            (r + 1, c)
            for r, w in enumerate(self.outer.parts)
            for c in range(ip[r] + 1, w + 1)
        ]

    def is_row_basic(self):
        """No empty rows: every row of outer keeps at least one cell."""
        ip = self.inner.padded(self.outer.length)
        return all(ip[r] < w for r, w in enumerate(self.outer.parts))

    def is_basic(self):
        """No empty rows and no empty columns."""
        if not self.is_row_basic():
            return False
        oc = conjugate(self.outer)
        icp = conjugate(self.inner).padded(oc.length)
        return all(icp[c] < w for c, w in enumerate(oc.parts))

    def rotate_pi(self):
        """180-degree rotation inside the len(outer) x outer_1 bounding box."""
        m = self.outer.parts[0] if self.outer else 0
        n = self.outer.length
        return SkewShape(complement(self.inner, m, n), complement(self.outer, m, n))

    def to_basic(self):
        """Delete all empty rows and empty columns; idempotent."""
        out, inn = self.outer, self.inner
        n = out.length
        ip = inn.padded(n)
        rows = [r for r in range(n) if out.parts[r] > ip[r]]
        width = out.parts[0] if out else 0
        oc = conjugate(out).padded(width)
        icp = conjugate(inn).padded(width)
        kept_before = [0] * (width + 1)
        for c in range(width):
            kept_before[c + 1] = kept_before[c] + (1 if oc[c] > icp[c] else 0)
        new_outer = Partition(kept_before[out.parts[r]] for r in rows)
        new_inner = Partition(kept_before[ip[r]] for r in rows)
        return SkewShape(new_outer, new_inner)

    def components(self):
        """Edge-connected components, top to bottom, each normalized to basic.

        Cells touching only at a corner belong to different components, so the
        rows split exactly where consecutive row intervals share no column.
        """
        if not self.is_basic():
            raise ValueError("components requires a basic shape; call to_basic() first")
        n = self.outer.length
        if n == 0:
            return []
        op = self.outer.parts
        ip = self.inner.padded(n)
        groups = [[0]]
        for r in range(1, n):
            if ip[r - 1] < op[r]:
                groups[-1].append(r)
            else:
                groups.append([r])
        out = []
        for rows in groups:
            outer = Partition(op[r] for r in rows)
            inner = Partition(ip[r] for r in rows)
            out.append(SkewShape(outer, inner).to_basic())
        return out

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.outer == other.outer and self.inner == other.inner

    def __hash__(self):
        return hash((self.outer.parts, self.inner.parts))

    def __repr__(self):
        return f"SkewShape({self.outer!r}, {self.inner!r})"

    def __str__(self):
        return format_skew_shape(self)


def parse_skew_shape(text):
    """Parse "OUTER/INNER" (or bare "OUTER") with partition syntax on each side."""
    if "/" in text:
        outer_text, _, inner_text = text.partition("/")
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
    return SkewShape(parse_partition(text))


def format_skew_shape(s):
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"
