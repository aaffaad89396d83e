"""
`tork.simplicial` implements simplicial complexes on the labeled vertex set [m].

Faces are stored as m-bit masks (bit `v-1` stands for vertex `v`). Ghost vertices,
i.e. `v` in [m] with `{v}` not a face, are allowed.

Besides the `SimplicialComplex` model this module provides:
- `enumerate_complexes`: every complex on [m], for small m
- `sample_complexes`: reproducible random complexes
- `simplex`, `boundary_of_simplex`, `cycle`, `void_complex`: common examples
- `ComplexFile`: the JSON schema `{"m": ..., "facets": [[...], ...]}`
"""

import logging
import random
from functools import cached_property
from typing import Iterable,Iterator

import more_itertools as mit
from pydantic import BaseModel,ConfigDict,Field,ValidationError,model_validator

from .config import CONFIG
from .exactla import SparseRationalMatrix
from .exceptions import RejectedInputError,SchemaError


LOGGER = logging.getLogger(__name__)

__all__ = (
    "SimplicialComplex",
    "ComplexFile",
    "enumerate_complexes",
    "sample_complexes",
    "simplex",
    "boundary_of_simplex",
    "cycle",
    "void_complex",
    "mask_to_vertices",
    "vertices_to_mask",
)



def mask_to_vertices(mask:int) -> tuple[int, ...]:
    """1-based sorted vertex tuple of a face mask."""
    vertices = []
    v = 1
    while mask:
        if mask & 1:
            vertices.append(v)
        mask >>= 1
        v += 1
    return tuple(vertices)


def vertices_to_mask(vertices:Iterable[int], m:int) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
            raise RejectedInputError(f"vertex `{v}` is out of range 1..{m}")
        mask |= 1 << (v-1)
    return mask


def _boundary_masks(mask:int) -> Iterator[int]:
    bits = mask
    while bits:
        low = bits & -bits
        yield mask ^ low
        bits ^= low


def _face_order(mask:int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), mask_to_vertices(mask))



class SimplicialComplex(BaseModel):
    """
    Simplicial complex on the vertex set [m] = {1, ..., m}.

    `faces` is a downward-closed set of bitmasks containing the empty face `0`.
    Build complexes with `from_facets` rather than by listing every face.

    Example:
    --------
    ```python
    >>> square = SimplicialComplex.from_facets(4, [{1,2},{2,3},{3,4},{1,4}])
    >>> len(square.faces)
    9
    >>> square.minimal_non_faces()
    [(1, 3), (2, 4)]
    ```
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=0)
    faces: frozenset[int]

    @model_validator(mode="after")
    def _validate_faces(self):
        if self.m > CONFIG["mask_cap"]:
            raise ValueError(f"m = {self.m} exceeds the bitmask cap {CONFIG['mask_cap']}")
        if 0 not in self.faces:
            raise ValueError("a simplicial complex must contain the empty face")
        limit = 1 << self.m
        for face in self.faces:
            if not 0 <= face < limit:
                raise ValueError(f"face mask {face} is not a subset of [{self.m}]")
            for sub in _boundary_masks(face):
                if sub not in self.faces:
                    raise ValueError(
                        f"faces are not downward closed: {mask_to_vertices(face)} is a face "
                        f"but {mask_to_vertices(sub)} is not"
                    )
        return self

    @classmethod
    def from_facets(cls, m:int, facets:Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of `facets` (1-based vertex collections) plus the empty face.

        Raises:
            RejectedInputError: if a vertex is outside 1..m
        """
        if m < 0 or m > CONFIG["mask_cap"]:
            raise RejectedInputError(f"m must be in 0..{CONFIG['mask_cap']}, got {m}")
        faces = {0}
        for facet in facets:
            vertices = sorted(set(facet))
            vertices_to_mask(vertices, m)
            for subset in mit.powerset(vertices):
                faces.add(vertices_to_mask(subset, m))
        return cls.model_construct(m=m, faces=frozenset(faces))

    @classmethod
    def from_masks(cls, m:int, faces:Iterable[int]) -> "SimplicialComplex":
        """Validated construction from an explicit face-mask set."""
        try:
            return cls(m=m, faces=frozenset(faces))
        except ValidationError as e:
            raise RejectedInputError(str(e)) from None


    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets={self.facets})"
    def __str__(self) -> str:
        return repr(self)

    # cached properties live in __dict__ too, so compare the fields only
    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.m, self.faces))


    @cached_property
    def dimension(self) -> int:
        return max(face.bit_count() for face in self.faces) - 1

    @property
    def n(self) -> int:
        """`dim K + 1`, the Krull dimension of the Stanley-Reisner ring."""
        return self.dimension + 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.m+1) if (1 << (v-1)) in self.faces)

    @property
    def ghost_vertices(self) -> tuple[int, ...]:
        present = set(self.vertices)
        return tuple(v for v in range(1, self.m+1) if v not in present)

    def is_face(self, vertices:Iterable[int]) -> bool:
        return vertices_to_mask(vertices, self.m) in self.faces

    @cached_property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Maximal faces, sorted by size then lexicographically. `{∅}` has the facet `()`."""
        maximal = [
            face for face in self.faces
            if not any((face | (1 << v)) in self.faces for v in range(self.m) if not face >> v & 1)
        ]
        return tuple(mask_to_vertices(face) for face in sorted(maximal, key=_face_order))

    def faces_of_size(self, size:int) -> list[int]:
        """Face masks with `size` vertices in lexicographic order of their vertex tuples."""
        return sorted((face for face in self.faces if face.bit_count() == size), key=_face_order)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts by size, starting with the empty face."""
        counts = [0] * (self.dimension + 2)
        for face in self.faces:
            counts[face.bit_count()] += 1
        return tuple(counts)

    def reduced_euler_characteristic(self) -> int:
        """`Σ_{q ≥ -1} (-1)^q f_q` where `f_q` counts q-dimensional faces."""
        return sum((-1)**(size-1) * count for size,count in enumerate(self.f_vector))


    def minimal_non_faces(self) -> list[tuple[int, ...]]:
        """Inclusion-minimal non-faces: the supports of the minimal generators of `I_SR`."""
        found = set()
        for face in self.faces:
            for v in range(self.m):
                candidate = face | (1 << v)
                if candidate == face or candidate in self.faces or candidate in found:
                    continue
                if all(sub in self.faces for sub in _boundary_masks(candidate)):
                    found.add(candidate)
        return [mask_to_vertices(mask) for mask in sorted(found, key=_face_order)]

    def full_subcomplex(self, W:Iterable[int]) -> "SimplicialComplex":
        """`K_W = {σ ∈ K : σ ⊆ W}` re-indexed onto 1..|W| in increasing vertex order."""
        chosen = sorted(set(W))
        w_mask = vertices_to_mask(chosen, self.m)
        positions = [v-1 for v in chosen]
        faces = set()
        for face in self.faces:
            if face & ~w_mask:
                continue
            faces.add(sum(1 << k for k,p in enumerate(positions) if face >> p & 1))
        return SimplicialComplex.model_construct(m=len(chosen), faces=frozenset(faces))

    def coboundary(self, size:int) -> SparseRationalMatrix:
        """Augmented coboundary from faces with `size` vertices to faces with `size+1`.

        Bases are `faces_of_size`; a face `[w_0 < ... < w_k]` has the incidence
        sign `(-1)^r` with the facet obtained by deleting `w_r`.
        """
        sources = self.faces_of_size(size)
        targets = self.faces_of_size(size+1)
        source_index = {face:k for k,face in enumerate(sources)}
        entries = []
        for row,face in enumerate(targets):
            for r,v in enumerate(mask_to_vertices(face)):
                entries.append((row, source_index[face ^ (1 << (v-1))], (-1)**r))
        return SparseRationalMatrix(len(targets), len(sources), entries)

    def reduced_cohomology_dims(self) -> dict[int, int]:
        """`dim H̃^q(K; Q)` for `q = -1, ..., dim K`.

        `{∅}` has `H̃^{-1} = Q`; any complex with a vertex has `H̃^{-1} = 0`.
        """
        top = self.dimension + 1
        ranks = {size:self.coboundary(size).rank() for size in range(top)}
        dims = {}
        for size in range(top+1):
            dims[size-1] = self.f_vector[size] - ranks.get(size, 0) - ranks.get(size-1, 0)
        return dims


    def canonical_key(self) -> dict:
        return {"m": self.m, "facets": [list(facet) for facet in self.facets]}

    def to_json(self) -> dict:
        return self.canonical_key()

    @classmethod
    def from_json(cls, data:dict) -> "SimplicialComplex":
        try:
            parsed = ComplexFile.model_validate(data)
        except ValidationError as e:
            raise SchemaError(f"invalid complex file: {e}") from None
        try:
            return cls.from_facets(parsed.m, parsed.facets)
        except RejectedInputError as e:
            raise SchemaError(f"invalid complex file: {e}") from None



class ComplexFile(BaseModel):
    """`{"m": <int>, "facets": [[<int>...], ...]}` with 1-based vertices."""
    model_config = ConfigDict(extra="forbid", strict=True)

    m: int = Field(ge=0)
    facets: list[list[int]]



def simplex(m:int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(m, [range(1, m+1)])


def boundary_of_simplex(m:int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(m, [[v for v in range(1, m+1) if v != skip] for skip in range(1, m+1)])


def cycle(m:int) -> SimplicialComplex:
    """Boundary of an m-gon, vertices in cyclic order."""
    if m < 3:
        raise RejectedInputError(f"a cycle needs at least 3 vertices, got {m}")
    return SimplicialComplex.from_facets(m, [(v, v % m + 1) for v in range(1, m+1)])


def void_complex(m:int) -> SimplicialComplex:
    """`{∅}` on m (ghost) vertices."""
    return SimplicialComplex.from_facets(m, [])



def enumerate_complexes(m:int, cap:int|None=None) -> Iterator[SimplicialComplex]:
    """Yields every simplicial complex on the labeled set [m] exactly once.

    Nonempty subsets are visited by increasing size, then by mask value; at each
    subset the branch without it comes before the branch with it. The first
    complex yielded is therefore `{∅}` and the last one is the full simplex.

    Raises:
        RejectedInputError: if m exceeds `cap` (default `exhaustive_cap`)
    """
    cap = CONFIG["exhaustive_cap"] if cap is None else cap
    if m < 0:
        raise RejectedInputError(f"m must be non-negative, got {m}")
    if m > cap:
        raise RejectedInputError(
            f"exhaustive enumeration is capped at m = {cap} (got m = {m}); "
            "use sampled mode (`sample_complexes`, `enum --sample`) instead"
        )
    order = sorted(range(1, 1 << m), key=lambda mask: (mask.bit_count(), mask))
    faces = {0}

    def extend(k:int) -> Iterator[SimplicialComplex]:
        if k == len(order):
            yield SimplicialComplex.model_construct(m=m, faces=frozenset(faces))
            return
        yield from extend(k+1)
        mask = order[k]
        if all(sub in faces for sub in _boundary_masks(mask)):
            faces.add(mask)
            yield from extend(k+1)
            faces.remove(mask)

    yield from extend(0)


def sample_complexes(m:int, count:int, seed:int) -> Iterator[SimplicialComplex]:
    """Yields `count` pseudorandom complexes on [m], fully determined by `seed`.

    Each complex is the closure of 1..m random facets of random sizes 0..m.
    """
    if m < 1 or m > CONFIG["mask_cap"]:
        raise RejectedInputError(f"m must be in 1..{CONFIG['mask_cap']}, got {m}")
    rng = random.Random(seed)
    for _ in range(count):
        facets = []
        for _ in range(rng.randint(1, m)):
            size = rng.randint(0, m)
            facets.append(rng.sample(range(1, m+1), size))
        yield SimplicialComplex.from_facets(m, facets)
