"""Integer hives: rhombus-constrained triangular arrays counting LR coefficients.

Vertex labels a[i][j] live on the triangle {0 <= i, j, i+j <= n}.  Boundary
labels are the partial sums of the three boundary partitions; every unit
rhombus (two unit triangles glued along an edge) must satisfy
shared-edge sum >= opposite-vertex sum.  Edge labels are vertex differences,
so the triangle and rhombus *equalities* hold by construction and only the
inequalities need checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition

MAX_WEIGHT = 2**31  # defensive cap on |lambda|; labels stay well inside 64 bits

SCAN_ORDERS = ("row-major", "anti-diagonal")


class Hive:
    """Immutable triangular array of vertex labels; rows[i][j] is a_{i,j}."""

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != n + 1 or any(len(r) != n + 1 - i for i, r in enumerate(rows)):
            raise ValueError("rows must form a triangle of side n")
        self.n = n
        self.rows = rows

    def label(self, i, j):
        return self.rows[i][j]

    def diagonals(self):
        """Vertex labels grouped apex to base; row k lists a_{k,0} .. a_{0,k}."""
        return [[self.rows[k - t][t] for t in range(k + 1)] for k in range(self.n + 1)]

    def __eq__(self, other):
        if not isinstance(other, Hive):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Hive({self.n}, {self.rows!r})"


@dataclass(frozen=True)
class HiveBoundary:
    """Boundary data (lam, mu, nu) padded onto a side-n triangle."""

    n: int
    lam: Partition
    mu: Partition
    nu: Partition

    def __post_init__(self):
        if max(self.lam.length, self.mu.length, self.nu.length) > self.n:
            raise ValueError("partition lengths must not exceed n")
        if self.lam.weight != self.mu.weight + self.nu.weight:
            raise ValueError("|mu| + |nu| must equal |lambda|")

    def vertex_labels(self):
        """Boundary assignments: {(i, j): label} on the three triangle sides."""
        n = self.n
        lp = self.lam.padded(n)
        mp = self.mu.padded(n)
        np_ = self.nu.padded(n)
        labels = {(0, 0): 0}
        s = 0
        for k in range(1, n + 1):
            s += lp[k - 1]
            labels[(k, 0)] = s
        s = 0
        for i in range(1, n + 1):
            s += np_[i - 1]
            labels[(0, i)] = s
        s = self.nu.weight
        for j in range(1, n + 1):
            s += mp[j - 1]
            labels[(j, n - j)] = s
        return labels


def _interior_vertices(n, scan_order):
    pts = [(i, j) for i in range(1, n) for j in range(1, n - i)]
    if scan_order == "row-major":
        pts.sort()
    elif scan_order == "anti-diagonal":
        pts.sort(key=lambda v: (v[0] + v[1], v[0]))
    else:
        raise ValueError(f"unknown scan order {scan_order!r}")
    return pts


def _rhombus_inequalities(n, vid):
    """All (p1, p2, m1, m2) with constraint a[p1] + a[p2] >= a[m1] + a[m2]."""
    ineqs = []
    for i in range(n - 1):
        for j in range(n - 1 - i):
            ineqs.append((vid[i, j + 1], vid[i + 1, j], vid[i, j], vid[i + 1, j + 1]))
            ineqs.append((vid[i + 1, j], vid[i + 1, j + 1], vid[i, j + 1], vid[i + 2, j]))
            ineqs.append((vid[i, j + 1], vid[i + 1, j + 1], vid[i + 1, j], vid[i, j + 2]))
    return ineqs


@dataclass(frozen=True)
class _Step:
    vid: int
    lower_singles: tuple
    upper_singles: tuple
    lower_triples: tuple  # (x, y, z): value >= vals[x] + vals[y] - vals[z]
    upper_triples: tuple  # (x, y, z): value <= vals[x] + vals[y] - vals[z]


@dataclass(frozen=True)
class _Plan:
    n: int
    size: int
    vid: dict
    interior: tuple
    steps: tuple
    boundary_checks: tuple
    all_ineqs: tuple


@lru_cache(maxsize=None)
def _plan(n, scan_order):
    """Precompute the DFS schedule for side n under the given scan order.

    For each interior vertex, collect every rhombus inequality whose other
    three vertices come earlier (boundary vertices count as assigned), split
    into lower/upper bounds on the vertex, plus single-vertex bounds implied
    by the monotonicity of edge labels toward the boundary.
    """
    vid = {}
    k = 0
    for i in range(n + 1):
        for j in range(n + 1 - i):
            vid[(i, j)] = k
            k += 1
    size = k
    interior = _interior_vertices(n, scan_order)
    pos = {vid[p]: t for t, p in enumerate(interior)}

    ineqs = _rhombus_inequalities(n, vid)
    per_vertex_lower = {vid[p]: [] for p in interior}
    per_vertex_upper = {vid[p]: [] for p in interior}
    boundary_checks = []
    for p1, p2, m1, m2 in ineqs:
        members = [v for v in (p1, p2, m1, m2) if v in pos]
        if not members:
            boundary_checks.append((p1, p2, m1, m2))
            continue
        last = max(members, key=pos.__getitem__)
        if last == p1:
            per_vertex_lower[last].append((m1, m2, p2))
        elif last == p2:
            per_vertex_lower[last].append((m1, m2, p1))
        elif last == m1:
            per_vertex_upper[last].append((p1, p2, m2))
        else:
            per_vertex_upper[last].append((p1, p2, m1))

    def earlier(u, v):
        return u not in pos or pos[u] < pos[v]

    steps = []
    for (i, j) in interior:
        v = vid[i, j]
        lower = {vid[i, 0], vid[0, j], vid[0, i + j]}
        upper = {vid[i, n - i], vid[n - j, j], vid[i + j, 0]}
        for u in ((i, j - 1), (i - 1, j), (i - 1, j + 1)):
            uv = vid[u]
            if earlier(uv, v):
                lower.add(uv)
        for u in ((i, j + 1), (i + 1, j), (i + 1, j - 1)):
            uv = vid[u]
            if earlier(uv, v):
                upper.add(uv)
        steps.append(
            _Step(
                v,
                tuple(sorted(lower)),
                tuple(sorted(upper)),
                tuple(per_vertex_lower[v]),
                tuple(per_vertex_upper[v]),
            )
        )
    return _Plan(n, size, vid, tuple(interior), tuple(steps), tuple(boundary_checks), tuple(ineqs))


def _boundary_vals(lam, mu, nu, n, plan):
    vals = [0] * plan.size
    for (i, j), label in HiveBoundary(n, lam, mu, nu).vertex_labels().items():
        vals[plan.vid[i, j]] = label
    return vals


def _search(lam, mu, nu, n, scan_order, collect):
    """Depth-first assignment of interior labels; returns (count, hives)."""
    if max(lam.length, mu.length, nu.length) > n:
        raise ValueError("partition lengths must not exceed n")
    if lam.weight > MAX_WEIGHT:
        raise ValueError(f"|lambda| exceeds supported bound {MAX_WEIGHT}")
    if lam.weight != mu.weight + nu.weight:
        return 0, []
    plan = _plan(n, scan_order)
    vals = _boundary_vals(lam, mu, nu, n, plan)
    for a, b, c, d in plan.boundary_checks:
        if vals[a] + vals[b] < vals[c] + vals[d]:
            return 0, []
    steps = plan.steps
    nsteps = len(steps)
    all_ineqs = plan.all_ineqs
    cap = lam.weight
    out = [] if collect else None
    count = 0

    def rec(idx):
        nonlocal count
        if idx == nsteps:
            # safety net: every leaf re-passes the full inequality system
            for a, b, c, d in all_ineqs:
                if vals[a] + vals[b] < vals[c] + vals[d]:
                    return
            count += 1
            if out is not None:
                out.append(tuple(vals))
            return
        step = steps[idx]
        lo, hi = 0, cap
        for u in step.lower_singles:
            if vals[u] > lo:
                lo = vals[u]
        for x, y, z in step.lower_triples:
            b = vals[x] + vals[y] - vals[z]
            if b > lo:
                lo = b
        for u in step.upper_singles:
            if vals[u] < hi:
                hi = vals[u]
        for x, y, z in step.upper_triples:
            b = vals[x] + vals[y] - vals[z]
            if b < hi:
                hi = b
        v = step.vid
        for val in range(lo, hi + 1):
            vals[v] = val
            rec(idx + 1)

    rec(0)
    hives = []
    if collect:
        vid = plan.vid
        for flat in out:
            rows = [[flat[vid[i, j]] for j in range(n + 1 - i)] for i in range(n + 1)]
            hives.append(Hive(n, rows))
    return count, hives


def default_hive_side(lam, mu, nu):
    """Side length used when none is given."""
    return max(lam.length, mu.length + nu.length)


def enumerate_lr_hives(lam, mu, nu, n=None, *, scan_order="row-major"):
    """All integer LR-hives with the (lam, mu, nu) boundary on a side-n triangle.

    Weight-infeasible input gives an empty list.  Order is deterministic:
    lexicographic in the interior labels along the scan order.
    """
    if n is None:
        n = default_hive_side(lam, mu, nu)
    _, hives = _search(lam, mu, nu, n, scan_order, collect=True)
    return hives


@lru_cache(maxsize=None)
def count_lr_hives(lam, mu, nu, n, scan_order="row-major"):
    count, _ = _search(lam, mu, nu, n, scan_order, collect=False)
    return count


def lr_coefficient_hive(lam, mu, nu):
    """The LR coefficient as the number of LR-hives.

    Weight or length violations of the support conditions short-circuit to 0
    without enumeration.
    """
    if lam.weight != mu.weight + nu.weight:
        return 0
    if lam.length < mu.length or lam.length < nu.length:
        return 0
    if lam.length > mu.length + nu.length:
        return 0
    return count_lr_hives(lam, mu, nu, default_hive_side(lam, mu, nu))


def is_valid_lr_hive(hive, boundary):
    """True iff the hive matches the boundary exactly and all rhombi hold."""
    if hive.n != boundary.n:
        raise ValueError("hive and boundary have different side lengths")
    for (i, j), label in boundary.vertex_labels().items():
        if hive.rows[i][j] != label:
            return False
    plan = _plan(hive.n, "row-major")
    flat = [0] * plan.size
    for (i, j), v in plan.vid.items():
        flat[v] = hive.rows[i][j]
    return all(flat[a] + flat[b] >= flat[c] + flat[d] for a, b, c, d in plan.all_ineqs)


def free_interior_vertices(lam, mu, nu, n):
    """Interior vertices whose label varies across the full hive set.

    Empty exactly when the boundary admits a unique hive; raises when there
    is no hive at all.
    """
    hives = enumerate_lr_hives(lam, mu, nu, n)
    if not hives:
        raise ValueError("no LR-hive exists for this boundary")
    first = hives[0]
    free = set()
    for i in range(1, n):
        for j in range(1, n - i):
            if any(h.rows[i][j] != first.rows[i][j] for h in hives[1:]):
                free.add((i, j))
    return free


def edge_labels(hive):
    """The three families of vertex-difference edge labels, line by line.

    Each family is listed along the straight lines parallel to one boundary;
    in an LR-hive every entry is non-negative and every line weakly decreases.
      - 'nu' lines: a[i][j+1] - a[i][j] along each row i
      - 'lam' lines: a[i+1][j] - a[i][j] down each column j
      - 'mu' lines: a[i+1][j] - a[i][j+1] along each diagonal i + j + 1 = s
    """
    rows = hive.rows
    n = hive.n
    nu_lines = [[rows[i][j + 1] - rows[i][j] for j in range(n - i)] for i in range(n)]
    lam_lines = [[rows[i + 1][j] - rows[i][j] for i in range(n - j)] for j in range(n)]
    mu_lines = [
        [rows[i + 1][s - 1 - i] - rows[i][s - i] for i in range(s)]
        for s in range(1, n + 1)
    ]
    return {"nu": nu_lines, "lam": lam_lines, "mu": mu_lines}
