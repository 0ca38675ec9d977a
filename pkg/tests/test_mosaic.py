import copy

import pytest

from mosaicforest.errors import SizeLimitError, SphericalSymbolError
from mosaicforest.mosaic import build, validate
from mosaicforest.recurrence import SchlafliSymbol, layer_counts, spectral_constants


def test_belt1_45():
    m = build(SchlafliSymbol(4, 5), 1)
    assert m.belt_sizes == [5]
    assert len(m.layer(1)) == 10
    assert m.layer(0) == [0]
    assert m.degree(0) == 5


def test_44_layer_sizes():
    m = build(SchlafliSymbol(4, 4), 3)
    assert m.layer_sizes == [1, 8, 16, 24]


@pytest.mark.parametrize("p,q,belts", [(4, 5, 5), (5, 4, 5), (4, 6, 4), (6, 4, 4), (5, 5, 4), (4, 7, 4), (7, 4, 4), (6, 6, 3)])
def test_layer_sizes_match_recursion(p, q, belts):
    symbol = SchlafliSymbol(p, q)
    m = build(symbol, belts)
    rows = layer_counts(symbol, belts)
    assert m.layer_sizes == [r.total for r in rows]


@pytest.mark.parametrize(
    "p,q,belts",
    [(4, 5, 5), (5, 4, 4), (4, 4, 4), (3, 7, 4), (3, 6, 4), (6, 3, 4), (7, 3, 3), (6, 4, 3), (5, 5, 3)],
)
def test_validate_passes(p, q, belts):
    report = validate(build(SchlafliSymbol(p, q), belts))
    assert report.passed, str(report)


def test_spherical_rejected():
    for p, q in ((3, 3), (3, 4), (4, 3), (3, 5), (5, 3)):
        with pytest.raises(SphericalSymbolError):
            build(SchlafliSymbol(p, q), 2)


def test_vertex_cap():
    with pytest.raises(SizeLimitError):
        build(SchlafliSymbol(4, 5), 10, cap=1000)


def test_determinism():
    a = build(SchlafliSymbol(5, 5), 3)
    b = build(SchlafliSymbol(5, 5), 3)
    assert a.rot == b.rot
    assert a.layers == b.layers
    assert a.cells == b.cells


def test_layer_out_of_range():
    m = build(SchlafliSymbol(4, 5), 2)
    with pytest.raises(ValueError):
        m.layer(3)


def test_interior_degrees():
    m = build(SchlafliSymbol(4, 6), 3)
    for v in range(m.vertex_count):
        if m.is_interior(v):
            assert m.degree(v) == 6


def test_triangle_tiling_has_parents_everywhere():
    # p = 3: every vertex above the seed touches the previous layer
    m = build(SchlafliSymbol(3, 7), 2)
    for i in (1, 2):
        for v in m.layer(i):
            assert len(m.down_neighbors(v)) >= 1


def test_down_neighbors_unique_for_p_ge_4():
    m = build(SchlafliSymbol(5, 5), 3)
    for v in range(m.vertex_count):
        if m.layer_of[v] >= 1:
            assert len(m.down_neighbors(v)) <= 1


def test_belt_growth_approaches_spectral_ratio():
    for p, q in ((4, 5), (5, 4), (4, 6)):
        symbol = SchlafliSymbol(p, q)
        m = build(symbol, 6)
        growth = float(spectral_constants(symbol).growth)
        ratio = m.belt_sizes[5] / m.belt_sizes[4]
        assert abs(ratio - growth) / growth < 0.05


def test_cell_attachment_kinds():
    m = build(SchlafliSymbol(4, 5), 3)
    for cell in m.cells:
        assert cell.attach in ("edge", "vertex")
        if cell.belt >= 2:
            prev_layer = set(m.layers[cell.belt - 1])
            shared = [v for v in cell.vertices if v in prev_layer]
            if cell.attach == "vertex":
                assert len(shared) == 1
            else:
                assert len(shared) >= 2


def test_corrupted_mosaic_fails_validation_naming_vertex():
    m = build(SchlafliSymbol(4, 5), 3)
    broken = copy.deepcopy(m)
    # sever one interior edge from both rotations
    v = broken.layers[1][0]
    w = broken.rot[v][0]
    broken.rot[v].remove(w)
    broken.rot[w].remove(v)
    report = validate(broken)
    assert not report.passed
    degree_fail = [c for c in report.failures() if c.name == "interior-degree"]
    assert degree_fail and (f"vertex {v}" in degree_fail[0].detail or f"vertex {w}" in degree_fail[0].detail)


def test_edge_list_export():
    m = build(SchlafliSymbol(4, 5), 2)
    text = m.edge_list_text()
    lines = text.strip().split("\n")
    assert lines[0] == "# p=4 q=5 belts=2 vertices=51"
    pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert len(pairs) == 80  # handshake: sum(deg)/2
    assert all(u < v for u, v in pairs)
    assert pairs == sorted(pairs)
    # deterministic
    assert text == build(SchlafliSymbol(4, 5), 2).edge_list_text()


def test_edges_cover_rotations():
    m = build(SchlafliSymbol(5, 4), 3)
    edges = set(m.edges())
    assert all((min(u, v), max(u, v)) in edges for u in range(m.vertex_count) for v in m.rot[u])
