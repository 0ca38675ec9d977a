"""Layered tree forests grown on a built mosaic.

Trees are grown level by level using the maximum number of edges between
consecutive levels: every level-i vertex with a neighbour on level i-1 gets
exactly one such neighbour as its parent (for p >= 4 that neighbour is
forced), no edges are added inside a level, and vertices with no lower
neighbour become roots of new trees.  The seed vertex is the main root.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateForestError, StructureError
from .mosaic import Mosaic
from .recurrence import LayerCounts


class VertexClass(Enum):
    A = "A"  # extends a tree: one parent on the previous level
    B = "B"  # root of a new tree


@dataclass
class Forest:
    """Per-vertex parent/class/root data for the grown levels of a mosaic."""

    mosaic: Mosaic
    levels: int
    parent: list[int | None]
    vclass: list[VertexClass | None]
    root_of: list[int | None]
    root_level: list[int | None]
    level_counts: list[LayerCounts]

    MAIN_ROOT = 0

    def counts(self, i: int) -> tuple[int, int]:
        """Empirical (a_i, b_i) on level i."""
        if not 0 <= i <= self.levels:
            raise ValueError(f"level {i} outside grown range 0..{self.levels}")
        row = self.level_counts[i]
        return (row.a, row.b)

    def counts_table(self) -> list[LayerCounts]:
        return list(self.level_counts)

    def root_level_histogram(self, i: int) -> dict[int, int]:
        """How many level-i vertices have their root on each level j."""
        if not 0 <= i <= self.levels:
            raise ValueError(f"level {i} outside grown range 0..{self.levels}")
        hist: dict[int, int] = {}
        for v in self.mosaic.layers[i]:
            j = self.root_level[v]
            hist[j] = hist.get(j, 0) + 1
        return dict(sorted(hist.items()))

    def main_root_descendants(self, i: int) -> int:
        """Number of level-i vertices whose tree root is the seed vertex."""
        if not 1 <= i <= self.levels:
            raise ValueError(f"level {i} outside grown range 1..{self.levels}")
        return sum(1 for v in self.mosaic.layers[i] if self.root_of[v] == self.MAIN_ROOT)

    def children_of(self, v: int) -> list[int]:
        if not hasattr(self, "_children"):
            index: dict[int, list[int]] = {}
            for i in range(1, self.levels + 1):
                for w in self.mosaic.layers[i]:
                    u = self.parent[w]
                    if u is not None:
                        index.setdefault(u, []).append(w)
            self._children = index
        return self._children.get(v, [])

    def tree_edges(self) -> list[tuple[int, int]]:
        """(parent, child) pairs for every non-root grown vertex, by child id."""
        out = []
        for i in range(1, self.levels + 1):
            for v in self.mosaic.layers[i]:
                u = self.parent[v]
                if u is not None:
                    out.append((u, v))
        return out

    def roots(self) -> list[int]:
        """All roots of the grown region, the main root first."""
        out = [self.MAIN_ROOT]
        for i in range(1, self.levels + 1):
            out.extend(
                v for v in self.mosaic.layers[i] if self.vclass[v] is VertexClass.B
            )
        return out

    def spanning_tree(self) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """Forest edges plus one connector per non-main root.

        Each non-main root is joined to its counter-clockwise neighbour on
        its own boundary cycle, stitching every tree onto the main one.
        Returns (tree_edges, connector_edges); their union spans all grown
        vertices with |E| = |V| - 1.
        """
        connectors = []
        for i in range(1, self.levels + 1):
            layer = self.mosaic.layers[i]
            m = len(layer)
            index = {v: k for k, v in enumerate(layer)}
            for v in layer:
                if self.vclass[v] is VertexClass.B:
                    connectors.append((v, layer[(index[v] + 1) % m]))
        return self.tree_edges(), connectors

    def to_dot(self, title: str | None = None) -> str:
        """Deterministic DOT text: layers annotated, roots boxed, main root doubled."""
        s = self.mosaic.symbol
        name = title or f"forest_{s.p}_{s.q}_{self.levels}"
        lines = [f'digraph "{name}" {{']
        lines.append("  node [fontsize=10];")
        for i in range(self.levels + 1):
            for v in sorted(self.mosaic.layers[i]):
                cls = self.vclass[v].value
                shape = "circle"
                if self.vclass[v] is VertexClass.B:
                    shape = "doublecircle" if v == self.MAIN_ROOT else "box"
                lines.append(f'  v{v} [label="{v} L{i} {cls}" shape={shape}];')
        for u, v in self.tree_edges():
            lines.append(f"  v{u} -> v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def grow(mosaic: Mosaic, levels: int | None = None, allow_triangles: bool = False) -> Forest:
    """Grow the layered forest on `mosaic` up to `levels` (default: all belts).

    q = 3 is rejected (a level vertex has no spare edge toward the next
    level).  p = 3 needs `allow_triangles=True`: there every vertex above
    the seed touches two lower vertices, the parent choice is no longer
    forced, and a deterministic greedy pass (prefer a childless lower
    neighbour, then the smallest id) picks one; no roots appear beyond the
    main one.  For p >= 4 a second lower neighbour is a structural
    impossibility and raises StructureError rather than being tie-broken.
    """
    symbol = mosaic.symbol
    if symbol.q == 3:
        raise DegenerateForestError(
            f"{symbol}: with q = 3 every level vertex spends its whole degree on "
            "its own level and below; there are no trees to grow"
        )
    if symbol.p == 3 and not allow_triangles:
        raise DegenerateForestError(
            f"{symbol}: with p = 3 parents are not forced and no roots appear "
            "beyond the main one; pass allow_triangles=True to grow anyway"
        )
    if levels is None:
        levels = mosaic.belts
    if not 0 <= levels <= mosaic.belts:
        raise ValueError(f"levels must be in 0..{mosaic.belts}, got {levels}")

    n = mosaic.vertex_count
    parent: list[int | None] = [None] * n
    vclass: list[VertexClass | None] = [None] * n
    root_of: list[int | None] = [None] * n
    root_level: list[int | None] = [None] * n

    vclass[0] = VertexClass.B
    root_of[0] = 0
    root_level[0] = 0
    rows = [LayerCounts(0, 0, 1)]

    for i in range(1, levels + 1):
        a = b = 0
        if symbol.p >= 4:
            for v in mosaic.layers[i]:
                below = mosaic.down_neighbors(v)
                if len(below) > 1:
                    raise StructureError(
                        f"vertex {v} on level {i} has {len(below)} lower neighbours; "
                        f"parenthood must be forced for p >= 4"
                    )
                if below:
                    u = below[0]
                    parent[v] = u
                    vclass[v] = VertexClass.A
                    root_of[v] = root_of[u]
                    root_level[v] = root_level[u]
                    a += 1
                else:
                    vclass[v] = VertexClass.B
                    root_of[v] = v
                    root_level[v] = i
                    b += 1
        else:
            child_count = {u: 0 for u in mosaic.layers[i - 1]}
            for v in mosaic.layers[i]:
                below = mosaic.down_neighbors(v)
                if not below:
                    vclass[v] = VertexClass.B
                    root_of[v] = v
                    root_level[v] = i
                    b += 1
                    continue
                childless = [u for u in below if child_count[u] == 0]
                u = min(childless) if childless else min(below)
                child_count[u] += 1
                parent[v] = u
                vclass[v] = VertexClass.A
                root_of[v] = root_of[u]
                root_level[v] = root_level[u]
                a += 1
        rows.append(LayerCounts(i, a, b))

    return Forest(
        mosaic=mosaic,
        levels=levels,
        parent=parent,
        vclass=vclass,
        root_of=root_of,
        root_level=root_level,
        level_counts=rows,
    )
