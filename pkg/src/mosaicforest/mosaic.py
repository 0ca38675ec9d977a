"""Belt-by-belt construction of a regular {p,q} tiling as a combinatorial map.

Belt 0 is a seed vertex; belt i+1 consists of the p-gons touching belt i
(possibly at a single vertex) but not belt i-1.  Level/layer i is the outer
boundary cycle of belt i.  The map is purely combinatorial: each vertex
stores its incident neighbours in counter-clockwise rotation order, so faces
can be recovered by rotation walks and no coordinates are ever needed.

Construction sweeps the current boundary counter-clockwise and fans new
cells around each boundary vertex until its cell count reaches q.  A new
cell shares either one boundary edge ("edge"-attached, the last cell of a
fan) or exactly one boundary vertex ("vertex"-attached, the inner cells of
a fan).  New vertices are numbered in creation order along the sweep, which
makes builds fully deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import SizeLimitError, SphericalSymbolError, StructureError
from .recurrence import Geometry, SchlafliSymbol

DEFAULT_VERTEX_CAP = 10_000_000


class Cell(NamedTuple):
    """One p-gon: belt index, CCW vertex cycle, and how it met the previous belt."""

    belt: int
    vertices: tuple[int, ...]
    attach: str  # "edge" or "vertex"


class Mosaic:
    """A built tiling patch: rotation system, layer annotations, cells."""

    def __init__(self, symbol, belts, rot, layer_of, layers, cells, belt_sizes):
        self.symbol: SchlafliSymbol = symbol
        self.belts: int = belts
        self.rot: list[list[int]] = rot  # CCW neighbour order per vertex
        self.layer_of: list[int] = layer_of
        self.layers: list[list[int]] = layers  # boundary cycle per layer
        self.cells: list[Cell] = cells
        self.belt_sizes: list[int] = belt_sizes  # cells per belt, index 0 = belt 1

    @property
    def vertex_count(self) -> int:
        return len(self.rot)

    @property
    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def layer(self, i: int) -> list[int]:
        """Layer-i boundary cycle in counter-clockwise order (layer 0 = the seed)."""
        if not 0 <= i <= self.belts:
            raise ValueError(f"layer {i} outside built range 0..{self.belts}")
        return list(self.layers[i])

    def neighbors(self, v: int) -> list[int]:
        return list(self.rot[v])

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def down_neighbors(self, v: int) -> list[int]:
        """Neighbours of v on the previous layer, in rotation order."""
        below = self.layer_of[v] - 1
        return [w for w in self.rot[v] if self.layer_of[w] == below]

    def is_interior(self, v: int) -> bool:
        return self.layer_of[v] < self.belts

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as ordered (u, v) pairs with u < v, ascending."""
        for u, nbrs in enumerate(self.rot):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def edge_list_text(self) -> str:
        """Plain text export: a header line, then one 'u v' pair per line."""
        s = self.symbol
        lines = [f"# p={s.p} q={s.q} belts={self.belts} vertices={self.vertex_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


class _Builder:
    def __init__(self, p: int, q: int, cap: int):
        self.p = p
        self.q = q
        self.cap = cap
        # vertex 0 is the seed; per-vertex arrays grow in creation order
        self.layer_of = [0]
        self.downs: list[list[int] | None] = [None]
        self.gap: list[list[int] | None] = [[]]  # radial tips, in fan order
        self.prevv = [-1]
        self.nextv = [-1]
        self.ncells = [0]
        self.cells: list[Cell] = []
        self.layers: list[list[int]] = [[0]]
        self.belt_sizes: list[int] = []

    def close_boundary(self, boundary: list[int]) -> None:
        m = len(boundary)
        prevv, nextv = self.prevv, self.nextv
        grow_to = len(self.layer_of) - len(prevv)
        prevv.extend([-1] * grow_to)
        nextv.extend([-1] * grow_to)
        self.gap.extend(None for _ in range(len(self.layer_of) - len(self.gap)))
        for idx, v in enumerate(boundary):
            prevv[v] = boundary[idx - 1]
            nextv[v] = boundary[(idx + 1) % m]
        self.layers.append(boundary)

    def first_belt(self) -> None:
        """q cells around the seed; the seed's rotation is its q spokes."""
        p, q = self.p, self.q
        self.belt_sizes.append(0)
        boundary: list[int] = []
        layer_of, downs, ncells = self.layer_of, self.downs, self.ncells

        def new_v(dn):
            vid = len(layer_of)
            layer_of.append(1)
            downs.append(dn)
            ncells.append(0)
            boundary.append(vid)
            return vid

        first_tip = new_v([0])
        tip = first_tip
        for j in range(q):
            arcs = [new_v(None) for _ in range(p - 3)]
            nxt = first_tip if j == q - 1 else new_v([0])
            self.add_cell(1, [0, tip, *arcs, nxt], "vertex")
            tip = nxt
        if len(boundary) > self.cap:
            raise SizeLimitError(f"vertex cap {self.cap} exceeded while building belt 1")
        self.gap[0] = [v for v in boundary if downs[v]]
        self.close_boundary(boundary)

    def add_cell(self, belt: int, verts: list[int], attach: str) -> None:
        self.cells.append(Cell(belt, tuple(verts), attach))
        self.belt_sizes[belt - 1] += 1
        ncells = self.ncells
        for v in verts:
            ncells[v] += 1

    def next_belt(self, belt: int) -> None:
        p, q = self.p, self.q
        self.belt_sizes.append(0)
        old = self.layers[-1]
        layer_of, downs, ncells = self.layer_of, self.downs, self.ncells
        gap, cells, belt_sizes = self.gap, self.cells, self.belt_sizes
        cap = self.cap

        # start the sweep at a vertex that will own at least one radial tip
        start = next(i for i, v in enumerate(old) if ncells[v] <= q - 2)
        walk = old[start:] + old[:start]
        m = len(walk)

        new_boundary: list[int] = []
        append_new = new_boundary.append

        def new_v(dn):
            vid = len(layer_of)
            if vid >= cap:
                raise SizeLimitError(
                    f"vertex cap {cap} exceeded while building belt {belt}"
                )
            layer_of.append(belt)
            downs.append(dn)
            ncells.append(0)
            append_new(vid)
            return vid

        def add_cell(verts, attach):
            cells.append(Cell(belt, tuple(verts), attach))
            belt_sizes[belt - 1] += 1
            for v in verts:
                ncells[v] += 1

        v0 = walk[0]
        s0 = new_v([v0])  # tip shared by v0's first own cell and the closing cell
        gap[v0] = [s0]
        carry = s0

        for k in range(m):
            v = walk[k]
            missing = q - ncells[v] - (1 if k == 0 else 0)
            if missing <= 0:
                continue  # already completed by a run cell sweeping past it
            if k > 0:
                g = gap[v]
                if g is None:
                    gap[v] = [carry]
                else:
                    g.append(carry)

            # inner fan cells: share only the vertex v with the old boundary
            for t in range(missing - 1):
                closing_tip = None
                if p == 3 and k == m - 1 and t == missing - 2:
                    closing_tip = s0  # the ring's merged tip already exists
                arcs = [new_v(None) for _ in range(p - 3)]
                if closing_tip is None:
                    closing_tip = new_v([v])
                else:
                    downs[closing_tip].append(v)
                add_cell([v, carry, *arcs, closing_tip], "vertex")
                gap[v].append(closing_tip)
                carry = closing_tip

            # the closing cell of the fan: shares the boundary edge(s) ahead
            inner = [v]
            pos = k + 1
            ring = False
            while True:
                if pos == m:
                    inner.append(walk[0])
                    ring = True
                    break
                u = walk[pos]
                inner.append(u)
                if ncells[u] + 1 == q:
                    pos += 1  # u gets full with this very cell: run through it
                    continue
                break
            end = inner[-1]
            if p == 3:
                # triangle closing cells reuse the carry tip, merging it onto `end`
                if ring:
                    if carry != s0:
                        raise StructureError("triangle ring closure lost its seam tip")
                else:
                    downs[carry].insert(0, end)
                add_cell([v, carry, end], "edge")
            else:
                n_arcs = p - len(inner) - 2
                if n_arcs < 0:
                    raise StructureError(
                        f"belt {belt}: cell run longer than a {p}-gon can cover"
                    )
                arcs = [new_v(None) for _ in range(n_arcs)]
                tip = s0 if ring else new_v([end])
                add_cell([v, carry, *arcs, tip, *reversed(inner[1:])], "edge")
                carry = tip

        self.close_boundary(new_boundary)

    def finish(self, symbol: SchlafliSymbol, belts: int) -> Mosaic:
        prevv, nextv, gap, downs = self.prevv, self.nextv, self.gap, self.downs
        rot: list[list[int]] = [list(gap[0])]
        for v in range(1, len(self.layer_of)):
            g = gap[v]
            dn = downs[v]
            order = [prevv[v]]
            if g:
                order.extend(g)
            order.append(nextv[v])
            if dn:
                order.extend(dn)
            rot.append(order)
        return Mosaic(
            symbol=symbol,
            belts=belts,
            rot=rot,
            layer_of=self.layer_of,
            layers=self.layers,
            cells=self.cells,
            belt_sizes=self.belt_sizes,
        )


def build(symbol: SchlafliSymbol, belts: int, cap: int = DEFAULT_VERTEX_CAP) -> Mosaic:
    """Materialise belts 0..belts of the {p,q} tiling around a seed vertex.

    Spherical symbols are rejected (their belts terminate); Euclidean and
    hyperbolic ones, including p = 3 and q = 3, are supported.  Raises
    SizeLimitError once more than `cap` vertices would be created.
    """
    if symbol.geometry is Geometry.SPHERICAL:
        raise SphericalSymbolError(
            f"{symbol} is spherical; its belt structure terminates after finitely many belts"
        )
    if belts < 1:
        raise ValueError("belts must be >= 1")
    b = _Builder(symbol.p, symbol.q, cap)
    b.first_belt()
    for i in range(2, belts + 1):
        b.next_belt(i)
    return b.finish(symbol, belts)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        return "\n".join(
            f"[{'ok' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
            for c in self.checks
        )


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def validate(mosaic: Mosaic) -> ValidationReport:
    """Run the structural invariant checks and report each outcome.

    Checks: cell sizes, interior degrees and cell counts, rotation-system
    face recovery (stored cells plus exactly one outer walk), outer boundary
    simplicity, and per-edge cell coverage (interior 2, boundary 1).
    """
    p, q = mosaic.symbol.p, mosaic.symbol.q
    checks: list[CheckResult] = []

    bad = [c for c in mosaic.cells if len(c.vertices) != p or len(set(c.vertices)) != p]
    checks.append(
        CheckResult(
            "cell-size",
            not bad,
            "" if not bad else f"cell {bad[0].vertices} is not a {p}-gon",
        )
    )

    cells_at = [0] * mosaic.vertex_count
    for c in mosaic.cells:
        for v in c.vertices:
            cells_at[v] += 1
    bad_deg = [
        v
        for v in range(mosaic.vertex_count)
        if mosaic.is_interior(v) and (mosaic.degree(v) != q or cells_at[v] != q)
    ]
    checks.append(
        CheckResult(
            "interior-degree",
            not bad_deg,
            ""
            if not bad_deg
            else f"vertex {bad_deg[0]} has degree {mosaic.degree(bad_deg[0])} "
            f"and {cells_at[bad_deg[0]]} cells (expected {q})",
        )
    )

    # rotation-system face traversal
    pos: list[dict[int, int]] = [
        {w: i for i, w in enumerate(nbrs)} for nbrs in mosaic.rot
    ]
    ok_rot = all(len(pos[v]) == mosaic.degree(v) for v in range(mosaic.vertex_count))
    faces: list[tuple[int, ...]] = []
    if ok_rot:
        seen: set[tuple[int, int]] = set()
        for u0 in range(mosaic.vertex_count):
            for v0 in mosaic.rot[u0]:
                if (u0, v0) in seen:
                    continue
                walk = []
                u, v = u0, v0
                while (u, v) not in seen:
                    seen.add((u, v))
                    walk.append(u)
                    i = pos[v][u]
                    u, v = v, mosaic.rot[v][(i - 1) % len(mosaic.rot[v])]
                faces.append(tuple(walk))
        stored = sorted(_canonical_cycle(c.vertices) for c in mosaic.cells)
        traced = sorted(_canonical_cycle(f) for f in faces)
        # multiset difference traced - stored
        diff = Counter(traced)
        diff.subtract(Counter(stored))
        extras = [f for f, n in diff.items() if n > 0 for _ in range(n)]
        missing = [f for f, n in diff.items() if n < 0 for _ in range(-n)]
        outer = mosaic.layers[-1]
        face_ok = (
            not missing
            and len(extras) == 1
            and len(extras[0]) == len(outer)
            and set(extras[0]) == set(outer)
        )
        checks.append(
            CheckResult(
                "rotation-faces",
                face_ok,
                ""
                if face_ok
                else f"{len(faces)} traced faces vs {len(stored)} cells; "
                f"{len(missing)} missing, {len(extras)} extra",
            )
        )
    else:
        checks.append(CheckResult("rotation-faces", False, "duplicate neighbour in a rotation"))

    outer = mosaic.layers[-1]
    simple = len(outer) == len(set(outer)) and all(
        outer[(i + 1) % len(outer)] in mosaic.rot[v] for i, v in enumerate(outer)
    )
    checks.append(
        CheckResult(
            "boundary-cycle",
            simple,
            "" if simple else "outer boundary is not a simple adjacent cycle",
        )
    )

    cover: Counter = Counter()
    for c in mosaic.cells:
        verts = c.vertices
        for i, u in enumerate(verts):
            v = verts[(i + 1) % len(verts)]
            cover[(min(u, v), max(u, v))] += 1
    boundary_edges = {
        (min(u, v), max(u, v))
        for u, v in zip(outer, outer[1:] + outer[:1])
    }
    all_edges = set(mosaic.edges())
    bad_edge = None
    for e in all_edges:
        want = 1 if e in boundary_edges else 2
        if cover.get(e, 0) != want:
            bad_edge = (e, cover.get(e, 0), want)
            break
    if bad_edge is None and set(cover) != all_edges:
        bad_edge = (next(iter(set(cover) ^ all_edges)), "-", "-")
    checks.append(
        CheckResult(
            "edge-coverage",
            bad_edge is None,
            "" if bad_edge is None else f"edge {bad_edge[0]}: {bad_edge[1]} cells, expected {bad_edge[2]}",
        )
    )

    v_, e_, f_ = mosaic.vertex_count, len(all_edges), len(mosaic.cells) + 1
    checks.append(
        CheckResult(
            "euler",
            v_ - e_ + f_ == 2,
            "" if v_ - e_ + f_ == 2 else f"V-E+F = {v_}-{e_}+{f_} != 2",
        )
    )

    return ValidationReport(tuple(checks))
