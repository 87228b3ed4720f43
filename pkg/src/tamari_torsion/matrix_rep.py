"""Explicit representations of A_n by matrices over a prime field.

Vertices are 1-based in the public API; ``dims`` and ``maps`` are stored as
0-based sequences, with ``maps[v]`` the matrix of the arrow from vertex
``v+1`` to ``v+2`` (shape ``dims[v+1] x dims[v]``).  Everything here is
plain linear algebra and serves as an independent check on
:mod:`tamari_torsion.intervals`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import gfp
from .gfp import PrimeField
from .intervals import Interval, Rep


@dataclass(frozen=True, eq=False)
class MatrixRep:
    n: int
    field: PrimeField
    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if self.n < 1 or len(dims) != self.n:
            raise ValueError(f"need {self.n} dimensions, got {len(dims)}")
        if any(d < 0 for d in dims):
            raise ValueError(f"negative dimension in {dims}")
        if len(self.maps) != self.n - 1:
            raise ValueError(f"need {self.n - 1} arrow matrices, got {len(self.maps)}")
        maps = []
        for v, m in enumerate(self.maps):
            shape = (dims[v + 1], dims[v])
            m = np.asarray(m, dtype=np.int64)
            if m.size == 0:
                m = m.reshape(shape)
            if m.shape != shape:
                raise ValueError(f"arrow {v + 1}->{v + 2}: expected shape {shape}, got {m.shape}")
            maps.append(m % self.field.p)
        object.__setattr__(self, "maps", tuple(maps))

    @property
    def p(self) -> int:
        return self.field.p

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def path_map(self, a: int, b: int) -> np.ndarray:
        """Composite of the arrow maps from vertex ``a`` to vertex ``b`` (1-based, a <= b)."""
        out = np.eye(self.dims[a - 1], dtype=np.int64)
        for v in range(a - 1, b - 1):
            out = gfp.matmul(self.maps[v], out, self.p)
        return out

    def to_dict(self) -> dict:
        return {
            "rank": self.n,
            "prime": self.p,
            "dims": list(self.dims),
            "maps": [m.flatten().tolist() for m in self.maps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "MatrixRep":
        fld = PrimeField(int(data["prime"]))
        dims = [int(d) for d in data["dims"]]
        maps = [
            np.array(entries, dtype=np.int64).reshape(dims[v + 1], dims[v])
            for v, entries in enumerate(data["maps"])
        ]
        return cls(int(data["rank"]), fld, tuple(dims), tuple(maps))

    @classmethod
    def from_json(cls, text: str) -> "MatrixRep":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"MatrixRep(n={self.n}, p={self.p}, dims={self.dims})"


@dataclass(frozen=True, eq=False)
class Morphism:
    source: MatrixRep
    target: MatrixRep
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        src, tgt = self.source, self.target
        if src.n != tgt.n or src.field != tgt.field:
            raise ValueError("morphism between representations of different rank or field")
        if len(self.blocks) != src.n:
            raise ValueError(f"need {src.n} blocks, got {len(self.blocks)}")
        blocks = []
        for v, b in enumerate(self.blocks):
            shape = (tgt.dims[v], src.dims[v])
            b = np.asarray(b, dtype=np.int64)
            if b.size == 0:
                b = b.reshape(shape)
            if b.shape != shape:
                raise ValueError(f"vertex {v + 1}: expected block shape {shape}, got {b.shape}")
            blocks.append(b % src.p)
        object.__setattr__(self, "blocks", tuple(blocks))

    def commutes(self) -> bool:
        p = self.source.p
        for v in range(self.source.n - 1):
            lhs = gfp.matmul(self.target.maps[v], self.blocks[v], p)
            rhs = gfp.matmul(self.blocks[v + 1], self.source.maps[v], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def is_injective(self) -> bool:
        return all(gfp.rank(b, self.source.p) == d for b, d in zip(self.blocks, self.source.dims))

    def is_surjective(self) -> bool:
        return all(gfp.rank(b, self.source.p) == d for b, d in zip(self.blocks, self.target.dims))

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """Composition ``self o other``."""
        p = self.source.p
        return Morphism(
            other.source,
            self.target,
            tuple(gfp.matmul(a, b, p) for a, b in zip(self.blocks, other.blocks)),
        )


def identity(x: MatrixRep) -> Morphism:
    return Morphism(x, x, tuple(np.eye(d, dtype=np.int64) for d in x.dims))


def zero_rep(n: int, fld: PrimeField) -> MatrixRep:
    return MatrixRep(n, fld, (0,) * n, tuple(np.zeros((0, 0), dtype=np.int64) for _ in range(n - 1)))


def build_interval(n: int, i: int, j: int, fld: PrimeField | None = None) -> MatrixRep:
    """The interval representation E^{ij} as explicit matrices."""
    fld = fld or PrimeField()
    Interval(i, j).check_rank(n)
    dims = tuple(1 if i <= v <= j else 0 for v in range(1, n + 1))
    maps = tuple(np.eye(dims[v + 1], dims[v], dtype=np.int64) for v in range(n - 1))
    return MatrixRep(n, fld, dims, maps)


def from_rep(rep: Rep, fld: PrimeField | None = None) -> MatrixRep:
    out = zero_rep(rep.rank, fld or PrimeField())
    for x in rep:
        out = direct_sum(out, build_interval(rep.rank, x.i, x.j, out.field))
    return out


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=np.int64)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    if a.n != b.n or a.field != b.field:
        raise ValueError("direct sum of representations of different rank or field")
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    maps = tuple(_block_diag(x, y) for x, y in zip(a.maps, b.maps))
    return MatrixRep(a.n, a.field, dims, maps)


def _hom_system(src: MatrixRep, dst: MatrixRep) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Linear constraints on the stacked row-major blocks of a morphism src -> dst.

    Returns the constraint matrix and, per vertex, the slice of unknowns
    belonging to that vertex's block.
    """
    offsets = []
    start = 0
    for v in range(src.n):
        size = dst.dims[v] * src.dims[v]
        offsets.append((start, start + size))
        start += size
    rows = []
    for v in range(src.n - 1):
        # dst.maps[v] F_v - F_{v+1} src.maps[v] = 0, with vec(A X B) = (A kron B^T) vec(X)
        block = np.zeros((dst.dims[v + 1] * src.dims[v], start), dtype=np.int64)
        a0, a1 = offsets[v]
        b0, b1 = offsets[v + 1]
        block[:, a0:a1] = np.kron(dst.maps[v], np.eye(src.dims[v], dtype=np.int64))
        block[:, b0:b1] -= np.kron(np.eye(dst.dims[v + 1], dtype=np.int64), src.maps[v].T)
        rows.append(block)
    system = np.concatenate(rows, axis=0) if rows else np.zeros((0, start), dtype=np.int64)
    return system % src.p, offsets


def _unpack(vec: np.ndarray, src: MatrixRep, dst: MatrixRep, offsets) -> tuple[np.ndarray, ...]:
    return tuple(
        vec[a:b].reshape(dst.dims[v], src.dims[v]) for v, (a, b) in enumerate(offsets)
    )


def hom_space_dim(src: MatrixRep, dst: MatrixRep) -> int:
    """Dimension of Hom(src, dst), by exact elimination on the commutativity system."""
    if src.n != dst.n or src.field != dst.field:
        raise ValueError("Hom between representations of different rank or field")
    system, offsets = _hom_system(src, dst)
    return system.shape[1] - gfp.rank(system, src.p)


def hom_basis(src: MatrixRep, dst: MatrixRep) -> list[Morphism]:
    system, offsets = _hom_system(src, dst)
    basis = gfp.nullspace(system, src.p)
    return [Morphism(src, dst, _unpack(basis[:, k], src, dst, offsets)) for k in range(basis.shape[1])]


def subrep_generated(y: MatrixRep, vertex: int, vector: Sequence[int]) -> tuple[MatrixRep, Morphism]:
    """Smallest subrepresentation of ``y`` containing ``vector`` at ``vertex``.

    Walks in A_n only run rightward, so the subrepresentation is spanned by the
    images of the vector at ``vertex, vertex+1, ...`` and is zero to the left.
    """
    if not 1 <= vertex <= y.n:
        raise ValueError(f"vertex {vertex} out of range 1..{y.n}")
    w = np.asarray(vector, dtype=np.int64).reshape(-1) % y.p
    if w.shape[0] != y.dims[vertex - 1]:
        raise ValueError(f"vector has length {w.shape[0]}, space at vertex {vertex} has dim {y.dims[vertex - 1]}")
    images: list[np.ndarray | None] = [None] * y.n
    for v in range(vertex - 1, y.n):
        if not w.any():
            break
        images[v] = w
        if v < y.n - 1:
            w = gfp.matmul(y.maps[v], w, y.p)
    dims = tuple(0 if w is None else 1 for w in images)
    maps = tuple(np.eye(dims[v + 1], dims[v], dtype=np.int64) for v in range(y.n - 1))
    sub = MatrixRep(y.n, y.field, dims, maps)
    blocks = tuple(
        np.zeros((y.dims[v], 0), dtype=np.int64) if w is None else w.reshape(-1, 1)
        for v, w in enumerate(images)
    )
    return sub, Morphism(sub, y, blocks)


def split_exists(y: MatrixRep, inclusion: Morphism) -> bool:
    """Whether some morphism ``s: y -> x`` satisfies ``s o inclusion = id_x``."""
    x = inclusion.source
    if inclusion.target is not y and inclusion.target.dims != y.dims:
        raise ValueError("inclusion does not land in y")
    if not inclusion.is_injective():
        raise ValueError("inclusion is not injective at every vertex")
    system, offsets = _hom_system(y, x)
    rows = [system]
    rhs = [np.zeros(system.shape[0], dtype=np.int64)]
    nvars = system.shape[1]
    for v in range(y.n):
        # s_v iota_v = I
        a0, a1 = offsets[v]
        block = np.zeros((x.dims[v] * x.dims[v], nvars), dtype=np.int64)
        block[:, a0:a1] = np.kron(np.eye(x.dims[v], dtype=np.int64), inclusion.blocks[v].T)
        rows.append(block)
        rhs.append(np.eye(x.dims[v], dtype=np.int64).reshape(-1))
    return gfp.solve(np.concatenate(rows) % y.p, np.concatenate(rhs), y.p) is not None


def quotient(y: MatrixRep, inclusion: Morphism) -> tuple[MatrixRep, Morphism]:
    """The quotient ``y / x`` together with the projection ``y -> y / x``."""
    if not inclusion.is_injective():
        raise ValueError("inclusion is not injective at every vertex")
    p = y.p
    complements, projections = [], []
    for v in range(y.n):
        basis = gfp.complete_basis(inclusion.blocks[v], p)
        k = inclusion.source.dims[v]
        complements.append(basis[:, k:])
        projections.append(gfp.inverse(basis, p)[k:, :])
    maps = tuple(
        gfp.matmul(projections[v + 1], gfp.matmul(y.maps[v], complements[v], p), p)
        for v in range(y.n - 1)
    )
    dims = tuple(c.shape[1] for c in complements)
    z = MatrixRep(y.n, y.field, dims, maps)
    return z, Morphism(y, z, tuple(projections))


def kernel(g: Morphism) -> tuple[MatrixRep, Morphism]:
    """The kernel subrepresentation of ``g`` with its inclusion."""
    y, p = g.source, g.source.p
    bases = [gfp.nullspace(b, p) if b.shape[0] else np.eye(b.shape[1], dtype=np.int64) for b in g.blocks]
    maps = []
    for v in range(y.n - 1):
        image = gfp.matmul(y.maps[v], bases[v], p)
        coords = gfp.solve(bases[v + 1], image, p)
        if coords is None:
            raise ValueError("g is not a morphism: kernel not preserved")
        maps.append(coords)
    dims = tuple(b.shape[1] for b in bases)
    x = MatrixRep(y.n, y.field, dims, tuple(maps))
    return x, Morphism(x, y, tuple(bases))


def extension(z: MatrixRep, x: MatrixRep, couplings: Sequence[np.ndarray]) -> tuple[MatrixRep, Morphism, Morphism]:
    """The extension of ``z`` by ``x`` glued along ``couplings``.

    At each vertex the middle term is ``x_v + z_v``; the arrow ``v -> v+1``
    acts by ``[[x_map, c_v], [0, z_map]]`` with ``c_v: z_v -> x_{v+1}``.
    Every extension of ``z`` by ``x`` is isomorphic to one of this form.
    Returns the middle term, the inclusion of ``x`` and the projection to ``z``.
    """
    if z.n != x.n or z.field != x.field:
        raise ValueError("extension of representations of different rank or field")
    p = z.p
    maps = []
    for v in range(z.n - 1):
        c = np.asarray(couplings[v], dtype=np.int64).reshape(x.dims[v + 1], z.dims[v]) % p
        top = np.concatenate([x.maps[v], c], axis=1)
        bottom = np.concatenate([np.zeros((z.dims[v + 1], x.dims[v]), dtype=np.int64), z.maps[v]], axis=1)
        maps.append(np.concatenate([top, bottom], axis=0))
    dims = tuple(a + b for a, b in zip(x.dims, z.dims))
    y = MatrixRep(z.n, z.field, dims, tuple(maps))
    inc = Morphism(x, y, tuple(np.eye(dims[v], x.dims[v], dtype=np.int64) for v in range(z.n)))
    proj = Morphism(
        y, z, tuple(np.eye(z.dims[v], dims[v], k=x.dims[v], dtype=np.int64) for v in range(z.n))
    )
    return y, inc, proj


def coupling_shapes(z: MatrixRep, x: MatrixRep) -> list[tuple[int, int]]:
    return [(x.dims[v + 1], z.dims[v]) for v in range(z.n - 1)]


def all_couplings(z: MatrixRep, x: MatrixRep, limit: int = 100_000) -> Iterable[list[np.ndarray]]:
    """Every coupling datum for :func:`extension`, enumerated over the field."""
    shapes = coupling_shapes(z, x)
    sizes = [r * c for r, c in shapes]
    total = sum(sizes)
    if z.p ** total > limit:
        raise ValueError(f"{z.p}^{total} couplings exceeds enumeration limit {limit}")
    for flat in itertools.product(range(z.p), repeat=total):
        out, pos = [], 0
        for (r, c), size in zip(shapes, sizes):
            out.append(np.array(flat[pos:pos + size], dtype=np.int64).reshape(r, c))
            pos += size
        yield out


def nonsplit_middle_terms(z: MatrixRep, x: MatrixRep) -> set[Rep]:
    """Decompositions of every non-split extension of ``z`` by ``x``.

    Enumerates all extensions over the (finite) field and keeps those whose
    inclusion of ``x`` has no retraction.  Empty iff every extension splits.
    """
    found = set()
    for c in all_couplings(z, x):
        y, inc, _ = extension(z, x, c)
        if not split_exists(y, inc):
            found.add(decompose(y))
    return found


def canonical_inclusion(z: Interval, x: Interval, n: int, fld: PrimeField | None = None) -> tuple[MatrixRep, Morphism]:
    """Middle term ``E^{il} + E^{kj}`` of a non-split extension, with ``x`` embedded.

    ``x = E^{kl}`` is embedded by sending its basis vector at vertex ``q`` to the
    sum of the basis vectors of the summands supported at ``q``.  Requires
    ``i+1 <= k <= j+1 <= l`` for ``z = E^{ij}``.
    """
    fld = fld or PrimeField()
    i, j, k, l = z.i, z.j, x.i, x.j
    if not (i + 1 <= k <= j + 1 <= l):
        raise ValueError(f"no non-split extension of {z} by {x}")
    y = build_interval(n, i, l, fld)
    if k <= j:
        y = direct_sum(y, build_interval(n, k, j, fld))
    xr = build_interval(n, k, l, fld)
    blocks = []
    for q in range(1, n + 1):
        col = np.zeros((y.dims[q - 1], xr.dims[q - 1]), dtype=np.int64)
        if xr.dims[q - 1]:
            col[:, 0] = 1
        blocks.append(col)
    return y, Morphism(xr, y, tuple(blocks))


def trivial_inclusion(z: Interval, x: Interval, n: int, fld: PrimeField | None = None) -> tuple[MatrixRep, Morphism]:
    """``x + z`` with ``x`` included as the first summand."""
    fld = fld or PrimeField()
    zr = build_interval(n, z.i, z.j, fld)
    xr = build_interval(n, x.i, x.j, fld)
    y, inc, _ = extension(zr, xr, [np.zeros(s, dtype=np.int64) for s in coupling_shapes(zr, xr)])
    return y, inc


def decompose(x: MatrixRep) -> Rep:
    """Interval multiplicities of ``x`` from ranks of composite maps.

    mult(i, j) = r(i, j) - r(i-1, j) - r(i, j+1) + r(i-1, j+1), where r(a, b)
    is the rank of the composite map from vertex a to vertex b.
    """
    n, p = x.n, x.p

    def r(a: int, b: int) -> int:
        if a < 1 or b > n:
            return 0
        return gfp.rank(x.path_map(a, b), p)

    summands = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1)
            summands.extend([Interval(i, j)] * mult)
    return Rep(n, summands)


@dataclass(frozen=True, eq=False)
class Pullback:
    rep: MatrixRep
    inclusion: Morphism  # X -> Y'
    to_cover: Morphism  # Y' -> Z'
    to_middle: Morphism  # Y' -> Y
    basis: tuple[np.ndarray, ...] = field(repr=False)


def pullback(y: MatrixRep, g: Morphism, h: Morphism, inclusion: Morphism | None = None) -> Pullback:
    """Pull the extension ``X -> y -g-> Z`` back along a surjection ``h: Z' -> Z``.

    At each vertex ``Y'_v`` is the kernel of ``(g_v, -h_v)`` on ``Y_v + Z'_v``.
    ``inclusion`` defaults to the kernel of ``g``.
    """
    if g.source is not y and g.source.dims != y.dims:
        raise ValueError("g must start at y")
    if not g.is_surjective():
        raise ValueError("g is not surjective")
    if not h.is_surjective():
        raise ValueError("h is not surjective")
    if h.target.dims != g.target.dims:
        raise ValueError("g and h must share their target")
    if inclusion is None:
        _, inclusion = kernel(g)
    zc, p = h.source, y.p
    bases = []
    for v in range(y.n):
        stacked = np.concatenate([g.blocks[v], (-h.blocks[v]) % p], axis=1)
        if stacked.shape[0]:
            bases.append(gfp.nullspace(stacked, p))
        else:
            bases.append(np.eye(stacked.shape[1], dtype=np.int64))
    maps = []
    for v in range(y.n - 1):
        moved = gfp.matmul(_block_diag(y.maps[v], zc.maps[v]), bases[v], p)
        coords = gfp.solve(bases[v + 1], moved, p)
        if coords is None:
            raise ValueError(f"pullback not closed under arrow {v + 1}->{v + 2}; are g and h morphisms?")
        maps.append(coords)
    dims = tuple(b.shape[1] for b in bases)
    yp = MatrixRep(y.n, y.field, dims, tuple(maps))
    x = inclusion.source
    inc_blocks = []
    for v in range(y.n):
        pair = np.concatenate([inclusion.blocks[v], np.zeros((zc.dims[v], x.dims[v]), dtype=np.int64)], axis=0)
        coords = gfp.solve(bases[v], pair, p)
        if coords is None:
            raise ValueError("inclusion does not land in the kernel of g")
        inc_blocks.append(coords)
    ydim = y.dims
    to_middle = tuple(b[: ydim[v], :] for v, b in enumerate(bases))
    to_cover = tuple(b[ydim[v]:, :] for v, b in enumerate(bases))
    return Pullback(
        rep=yp,
        inclusion=Morphism(x, yp, tuple(inc_blocks)),
        to_cover=Morphism(yp, zc, to_cover),
        to_middle=Morphism(yp, y, to_middle),
        basis=tuple(bases),
    )


def pullback_postconditions(pb: Pullback) -> dict[str, bool]:
    """Check the properties guaranteed by the pullback construction."""
    p = pb.rep.p
    kernel_ok = all(
        gfp.same_column_space(
            gfp.nullspace(b, p) if b.shape[0] else np.eye(b.shape[1], dtype=np.int64),
            inc,
            p,
        )
        for b, inc in zip(pb.to_cover.blocks, pb.inclusion.blocks)
    )
    return {
        "morphisms": pb.inclusion.commutes() and pb.to_cover.commutes() and pb.to_middle.commutes(),
        "inclusion_injective": pb.inclusion.is_injective(),
        "cover_surjective": pb.to_cover.is_surjective(),
        "kernel_is_image": kernel_ok,
        "middle_surjective": pb.to_middle.is_surjective(),
    }
