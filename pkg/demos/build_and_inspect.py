"""Building tilings belt by belt and validating the combinatorial map.

A mosaic is stored as a rotation system: each vertex lists its neighbours
in counter-clockwise order, so every p-gon can be recovered by walking the
rotations.  The validator re-traces all faces and checks degrees, cell
sizes, edge coverage, boundary simplicity, and the Euler count.
"""

from mosaicforest import SchlafliSymbol, build, layer_counts, spectral_constants, validate

for p, q, belts in ((4, 5, 5), (3, 7, 5), (6, 3, 4), (4, 4, 5)):
    symbol = SchlafliSymbol(p, q)
    m = build(symbol, belts)
    report = validate(m)
    print(f"== {symbol}, {belts} belts: {m.vertex_count} vertices, "
          f"{len(m.cells)} cells ==")
    print(f"  layer sizes: {m.layer_sizes}")
    print(f"  belt sizes:  {m.belt_sizes}")
    print(f"  validation:  {'all checks pass' if report.passed else report}")
    if p >= 4 and q >= 4:
        rows = layer_counts(symbol, belts)
        print(f"  layer sizes == a_i + b_i from the recursion: "
              f"{m.layer_sizes == [r.total for r in rows]}")
        if symbol.trace > 2:
            growth = float(spectral_constants(symbol).growth)
            ratio = m.belt_sizes[-1] / m.belt_sizes[-2]
            print(f"  belt growth {ratio:.4f} vs eigenvalue {growth:.4f}")
    print()

print("edge-list export (first lines):")
text = build(SchlafliSymbol(4, 5), 2).edge_list_text()
print("\n".join(text.split("\n")[:6]))
