"""Exception types shared across the package."""


class UnsupportedSymbolError(ValueError):
    """The {p,q} pair is outside the domain of the requested operation."""


class SphericalSymbolError(UnsupportedSymbolError):
    """(p-2)(q-2) < 4: the tiling closes up into a finite polyhedron."""


class DegenerateForestError(UnsupportedSymbolError):
    """p = 3 or q = 3: the layered tree construction degenerates."""


class RepeatedEigenvalueError(UnsupportedSymbolError):
    """Euclidean symbol: the level recursion has the repeated eigenvalue 1."""


class SizeLimitError(RuntimeError):
    """A build would exceed the configured vertex cap."""


class StructureError(RuntimeError):
    """A built mosaic or forest violates a structural guarantee."""
