"""Bounded cochain complexes of rational coordinate spaces.

A complex here is a finite family of coordinate spaces ``C^i`` for
degrees in a bounded interval, with differentials ``d^i : C^i ->
C^{i+1}`` squaring to zero.  On top of that this module provides chain
maps, chain homotopies, the boundary/harmonic/lift decomposition of
each degree, invertible replacement of homotopy equivalences, and the
Berezinian (graded determinant), which is well defined on homotopy
classes of homotopy equivalences precisely because of the replacement
construction.

Fibers are coordinate spaces, so the graded determinant line always has
a standard trivializing element (the one determined by the standard
bases); a normalization is therefore just a nonzero scale per fiber,
and the functions below take it as a plain scalar.

Everything is exact and deterministic.  The decomposition of a degree
is canonical given the pivoting convention of :mod:`modclass.linalg`:
the boundary block is spanned by the pivot columns of the incoming
differential, the harmonic block completes it inside the kernel by a
greedy scan over the canonical kernel basis, and the lift block is the
set of standard basis vectors sitting at the pivot columns of the
outgoing differential.  With these choices the differential carries the
lift block of degree ``i`` to the boundary basis of degree ``i+1`` by
the identity matrix, which makes the bookkeeping in the replacement
construction exact rather than merely up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import (
    Matrix,
    det,
    det_and_inverse,
    extend_to_basis,
    kernel_basis,
    rref,
    solve,
)


class GradedDimensionMismatch(ValueError):
    """Source and target complexes do not have equal dimension in every degree."""


class NotHomotopyEquivalence(ValueError):
    """The chain map does not induce isomorphisms on cohomology."""


@dataclass
class ValidationReport:
    """Outcome of a structural law check; falsy iff something failed."""

    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def add(self, message: str) -> None:
        self.problems.append(message)


class ComplexFiber:
    """A bounded cochain complex of coordinate spaces.

    ``dims`` maps a degree to the dimension of that coordinate space and
    ``differentials`` maps degree ``i`` to the matrix of ``d^i``, of
    shape ``dims(i+1) x dims(i)``.  Outside ``[d_min, d_max]`` all
    dimensions are zero.  Construction does not enforce ``d o d = 0``;
    use :func:`verify_complex` to check it.
    """

    __slots__ = ("d_min", "d_max", "dims", "differentials")

    def __init__(
        self,
        d_min: int,
        d_max: int,
        dims: Mapping[int, int],
        differentials: Mapping[int, Matrix],
    ):
        if d_min > d_max:
            raise ValueError("empty degree range")
        self.d_min = d_min
        self.d_max = d_max
        self.dims = {i: int(dims.get(i, 0)) for i in range(d_min, d_max + 1)}
        self.differentials = dict(differentials)

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    def differential(self, i: int) -> Matrix:
        d = self.differentials.get(i)
        if d is None:
            return Matrix.zeros(self.dim(i + 1), self.dim(i))
        return d

    def degrees(self) -> range:
        return range(self.d_min, self.d_max + 1)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexFiber):
            return NotImplemented
        return (
            self.d_min == other.d_min
            and self.d_max == other.d_max
            and self.dims == other.dims
            and all(
                self.differential(i) == other.differential(i) for i in self.degrees()
            )
        )

    def __hash__(self):
        return hash((self.d_min, self.d_max, tuple(sorted(self.dims.items()))))

    def __repr__(self) -> str:
        return f"ComplexFiber(degrees=[{self.d_min},{self.d_max}], dims={self.dims})"


class ChainMap:
    """A degree-preserving map of complexes commuting with differentials."""

    __slots__ = ("source", "target", "components")

    def __init__(
        self,
        source: ComplexFiber,
        target: ComplexFiber,
        components: Mapping[int, Matrix],
    ):
        self.source = source
        self.target = target
        self.components = dict(components)

    def component(self, i: int) -> Matrix:
        c = self.components.get(i)
        if c is None:
            return Matrix.zeros(self.target.dim(i), self.source.dim(i))
        return c

    @classmethod
    def identity(cls, fiber: ComplexFiber) -> "ChainMap":
        return cls(
            fiber,
            fiber,
            {i: Matrix.identity(fiber.dim(i)) for i in fiber.degrees()},
        )

    @classmethod
    def zero(cls, source: ComplexFiber, target: ComplexFiber) -> "ChainMap":
        return cls(source, target, {})

    def degrees(self) -> range:
        lo = min(self.source.d_min, self.target.d_min)
        hi = max(self.source.d_max, self.target.d_max)
        return range(lo, hi + 1)

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise ValueError("chain maps are not composable")
        return ChainMap(
            other.source,
            self.target,
            {
                i: self.component(i) * other.component(i)
                for i in self.degrees()
                if self.target.dim(i) and other.source.dim(i)
            },
        )

    def __add__(self, other: "ChainMap") -> "ChainMap":
        self._require_parallel(other)
        return ChainMap(
            self.source,
            self.target,
            {i: self.component(i) + other.component(i) for i in self.degrees()},
        )

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        self._require_parallel(other)
        return ChainMap(
            self.source,
            self.target,
            {i: self.component(i) - other.component(i) for i in self.degrees()},
        )

    def scale(self, scalar) -> "ChainMap":
        return ChainMap(
            self.source,
            self.target,
            {i: self.component(i).scale(scalar) for i in self.degrees()},
        )

    def _require_parallel(self, other: "ChainMap") -> None:
        if self.source != other.source or self.target != other.target:
            raise ValueError("chain maps do not share source and target")

    def is_invertible(self) -> bool:
        return all(
            self.source.dim(i) == self.target.dim(i)
            and det(self.component(i)) != 0
            for i in self.degrees()
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and all(self.component(i) == other.component(i) for i in self.degrees())
        )

    def __hash__(self):
        return hash((self.source, self.target))

    def __repr__(self) -> str:
        return f"ChainMap({self.source!r} -> {self.target!r})"


class Homotopy:
    """A degree -1 map: component ``i`` goes from source degree ``i`` to
    target degree ``i-1``."""

    __slots__ = ("source", "target", "components")

    def __init__(
        self,
        source: ComplexFiber,
        target: ComplexFiber,
        components: Mapping[int, Matrix],
    ):
        self.source = source
        self.target = target
        self.components = dict(components)

    def component(self, i: int) -> Matrix:
        c = self.components.get(i)
        if c is None:
            return Matrix.zeros(self.target.dim(i - 1), self.source.dim(i))
        return c

    @classmethod
    def zero(cls, source: ComplexFiber, target: ComplexFiber) -> "Homotopy":
        return cls(source, target, {})

    def boundary_conjugate(self) -> ChainMap:
        """The chain map ``d o H + H o d`` induced by this homotopy."""
        src, tgt = self.source, self.target
        comps = {}
        lo = min(src.d_min, tgt.d_min)
        hi = max(src.d_max, tgt.d_max)
        for i in range(lo, hi + 1):
            if tgt.dim(i) == 0 or src.dim(i) == 0:
                continue
            comps[i] = tgt.differential(i - 1) * self.component(i) + self.component(
                i + 1
            ) * src.differential(i)
        return ChainMap(src, tgt, comps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Homotopy):
            return NotImplemented
        degrees = range(
            min(self.source.d_min, self.target.d_min),
            max(self.source.d_max, self.target.d_max) + 2,
        )
        return (
            self.source == other.source
            and self.target == other.target
            and all(self.component(i) == other.component(i) for i in degrees)
        )

    def __repr__(self) -> str:
        return f"Homotopy({self.source!r} -> {self.target!r})"


def verify_complex(c: ComplexFiber) -> ValidationReport:
    """Check shapes and ``d^{i+1} o d^i = 0`` in every degree."""
    report = ValidationReport()
    for i in c.degrees():
        d = c.differential(i)
        if (d.rows, d.cols) != (c.dim(i + 1), c.dim(i)):
            report.add(
                f"differential at degree {i} has shape {d.rows}x{d.cols},"
                f" expected {c.dim(i + 1)}x{c.dim(i)}"
            )
    if report.ok:
        for i in c.degrees():
            if not (c.differential(i + 1) * c.differential(i)).is_zero():
                report.add(f"d o d is nonzero starting at degree {i}")
    for i in c.dims:
        if c.dims[i] < 0:
            report.add(f"negative dimension at degree {i}")
    return report


def verify_chain_map(t: ChainMap) -> ValidationReport:
    """Check shapes and ``d o T = T o d`` in every degree."""
    report = ValidationReport()
    for i in t.degrees():
        comp = t.component(i)
        if (comp.rows, comp.cols) != (t.target.dim(i), t.source.dim(i)):
            report.add(
                f"component at degree {i} has shape {comp.rows}x{comp.cols},"
                f" expected {t.target.dim(i)}x{t.source.dim(i)}"
            )
    if report.ok:
        for i in t.degrees():
            lhs = t.target.differential(i) * t.component(i)
            rhs = t.component(i + 1) * t.source.differential(i)
            if lhs != rhs:
                report.add(f"does not commute with the differential at degree {i}")
    return report


@dataclass(frozen=True)
class Decomposition:
    """Per-degree splitting into boundaries, harmonics, and a lift.

    ``basis[i]`` is invertible with columns grouped as ``[B | H | L]``:
    the boundary block B spans the image of the incoming differential,
    the harmonic block H completes it to a basis of the kernel of the
    outgoing differential, and the lift block L is a complement of that
    kernel which the differential carries isomorphically onto the
    boundary block of the next degree (by the identity matrix, in these
    bases).
    """

    fiber: ComplexFiber
    basis: dict[int, Matrix]
    basis_inv: dict[int, Matrix]
    boundary_dims: dict[int, int]
    harmonic_dims: dict[int, int]

    def widths(self, i: int) -> tuple[int, int, int]:
        return (
            self.boundary_dims.get(i, 0),
            self.harmonic_dims.get(i, 0),
            self.boundary_dims.get(i + 1, 0),
        )

    def basis_at(self, i: int) -> Matrix:
        return self.basis.get(i, Matrix.identity(self.fiber.dim(i)))

    def basis_inv_at(self, i: int) -> Matrix:
        return self.basis_inv.get(i, Matrix.identity(self.fiber.dim(i)))

    def blocks(self, i: int) -> tuple[Matrix, Matrix, Matrix]:
        """The (boundary, harmonic, lift) column groups at degree ``i``."""
        b, h, l = self.widths(i)
        m = self.basis[i]
        return (
            m.take_columns(range(b)),
            m.take_columns(range(b, b + h)),
            m.take_columns(range(b + h, b + h + l)),
        )


def decompose(c: ComplexFiber, permutations: Mapping[int, Iterable[int]] | None = None) -> Decomposition:
    """Split every degree as boundaries + harmonics + lift of boundaries.

    ``permutations`` optionally relabels the coordinates of each degree
    before the greedy choices are made, giving a different (equally
    valid) decomposition; downstream quantities that are claimed to be
    choice independent can be re-run against such a variant.
    """
    perms: dict[int, list[int]] = {}
    if permutations:
        for i, p in permutations.items():
            p = list(p)
            if sorted(p) != list(range(c.dim(i))):
                raise ValueError(f"not a permutation of degree {i} coordinates")
            perms[i] = p

    def perm_matrix(i: int) -> Matrix:
        n = c.dim(i)
        p = perms.get(i)
        if p is None:
            return Matrix.identity(n)
        # column j of the result is the standard vector at p[j]
        return Matrix.from_columns(
            [[Fraction(int(r == p[j])) for r in range(n)] for j in range(n)], rows=n
        )

    # Work in permuted coordinates, then pull the bases back.
    q = {i: perm_matrix(i) for i in range(c.d_min - 1, c.d_max + 2)}
    q_inv = {i: q[i].transpose() for i in q}  # permutation matrices are orthogonal

    diffs = {
        i: q_inv[i + 1] * c.differential(i) * q[i]
        for i in range(c.d_min - 1, c.d_max + 1)
        if c.dim(i) or c.dim(i + 1)
    }

    def diff(i: int) -> Matrix:
        return diffs.get(i, Matrix.zeros(c.dim(i + 1), c.dim(i)))

    pivot_cols = {i: rref(diff(i))[1] for i in range(c.d_min - 1, c.d_max + 1)}

    basis: dict[int, Matrix] = {}
    basis_inv: dict[int, Matrix] = {}
    boundary_dims: dict[int, int] = {}
    harmonic_dims: dict[int, int] = {}
    for i in c.degrees():
        n = c.dim(i)
        boundary = diff(i - 1).take_columns(pivot_cols.get(i - 1, []))
        kernel = kernel_basis(diff(i))
        kernel_full = extend_to_basis(boundary, kernel)
        lift_cols = [
            [Fraction(int(r == j)) for r in range(n)] for j in pivot_cols.get(i, [])
        ]
        lift = Matrix.from_columns(lift_cols, rows=n)
        full = Matrix.hstack(kernel_full, lift) if lift.cols else kernel_full
        if full.cols != n:
            raise ValueError(f"degree {i} does not split; complex is invalid")
        full = q[i] * full
        d, inv = det_and_inverse(full)
        if inv is None:
            raise ValueError(f"degree {i} basis is singular; complex is invalid")
        basis[i] = full
        basis_inv[i] = inv
        boundary_dims[i] = boundary.cols
        harmonic_dims[i] = kernel_full.cols - boundary.cols
    boundary_dims[c.d_max + 1] = len(pivot_cols.get(c.d_max, []))
    return Decomposition(c, basis, basis_inv, boundary_dims, harmonic_dims)


def cohomology_dims(c: ComplexFiber) -> dict[int, int]:
    """Dimension of kernel mod image in each degree."""
    dec = decompose(c)
    return {i: dec.harmonic_dims[i] for i in c.degrees()}


@dataclass(frozen=True)
class BlockForm:
    """A chain map written in decomposition coordinates.

    The full matrix at each degree is block upper-triangular for the
    (boundary, harmonic, lift) grouping; ``diagonal_blocks[i]`` holds
    the three diagonal blocks.
    """

    source_dec: Decomposition
    target_dec: Decomposition
    matrices: dict[int, Matrix]
    diagonal_blocks: dict[int, tuple[Matrix, Matrix, Matrix]]

    def boundary_block(self, i: int) -> Matrix:
        return self.diagonal_blocks[i][0]

    def harmonic_block(self, i: int) -> Matrix:
        return self.diagonal_blocks[i][1]

    def lift_block(self, i: int) -> Matrix:
        return self.diagonal_blocks[i][2]


def block_form(
    t: ChainMap,
    source_dec: Decomposition | None = None,
    target_dec: Decomposition | None = None,
) -> BlockForm:
    """Express a chain map in decomposition coordinates of both ends.

    Raises ValueError if the transformed matrices are not block
    upper-triangular, which happens exactly when ``t`` is not a chain
    map for the claimed complexes.
    """
    src_dec = source_dec or decompose(t.source)
    tgt_dec = target_dec or decompose(t.target)
    matrices: dict[int, Matrix] = {}
    diag: dict[int, tuple[Matrix, Matrix, Matrix]] = {}
    for i in t.degrees():
        m = tgt_dec.basis_inv_at(i) * t.component(i) * src_dec.basis_at(i)
        sw = src_dec.widths(i)
        tw = tgt_dec.widths(i)
        col_edges = (0, sw[0], sw[0] + sw[1], sum(sw))
        row_edges = (0, tw[0], tw[0] + tw[1], sum(tw))
        for bi in range(3):
            for bj in range(bi):
                block = m.submatrix(
                    row_edges[bi], row_edges[bi + 1], col_edges[bj], col_edges[bj + 1]
                )
                if not block.is_zero():
                    raise ValueError(
                        f"not block upper-triangular at degree {i}; not a chain map"
                    )
        matrices[i] = m
        diag[i] = tuple(
            m.submatrix(row_edges[k], row_edges[k + 1], col_edges[k], col_edges[k + 1])
            for k in range(3)
        )
    return BlockForm(src_dec, tgt_dec, matrices, diag)


def null_homotopy(t: ChainMap) -> Homotopy | None:
    """A homotopy ``H`` with ``T^i = d^{i-1} H^i + H^{i+1} d^i``, or None.

    All degrees are assembled into one linear system, solved exactly; a
    missing return value means that system is inconsistent, so no such
    homotopy exists at all.
    """
    src, tgt = t.source, t.target
    lo = min(src.d_min, tgt.d_min)
    hi = max(src.d_max, tgt.d_max)

    # Unknown blocks H^i, with their offsets into the global vector.
    shapes: dict[int, tuple[int, int]] = {}
    offsets: dict[int, int] = {}
    total = 0
    for i in range(lo, hi + 2):
        r, c = tgt.dim(i - 1), src.dim(i)
        if r and c:
            shapes[i] = (r, c)
            offsets[i] = total
            total += r * c

    rows: list[list[Fraction]] = []
    rhs: list[list[Fraction]] = []
    for i in range(lo, hi + 1):
        m, n = tgt.dim(i), src.dim(i)
        if m == 0 or n == 0:
            if not t.component(i).is_zero():
                return None
            continue
        d_out = tgt.differential(i - 1)  # tgt.dim(i) x tgt.dim(i-1)
        d_in = src.differential(i)  # src.dim(i+1) x src.dim(i)
        comp = t.component(i)
        for r in range(m):
            for c in range(n):
                coeff = [Fraction(0)] * total
                if i in shapes:
                    h_rows, h_cols = shapes[i]
                    for k in range(h_rows):
                        if d_out[r, k] != 0:
                            coeff[offsets[i] + k * h_cols + c] += d_out[r, k]
                if i + 1 in shapes:
                    h_rows, h_cols = shapes[i + 1]
                    for k in range(h_cols):
                        if d_in[k, c] != 0:
                            coeff[offsets[i + 1] + r * h_cols + k] += d_in[k, c]
                rows.append(coeff)
                rhs.append([comp[r, c]])

    if not rows:
        return Homotopy.zero(src, tgt)
    x = solve(Matrix(rows, cols=total), Matrix(rhs, cols=1))
    if x is None:
        return None
    comps = {}
    for i, (r, c) in shapes.items():
        off = offsets[i]
        comps[i] = Matrix([[x[off + a * c + b, 0] for b in range(c)] for a in range(r)], cols=c)
    result = Homotopy(src, tgt, comps)
    assert result.boundary_conjugate() == t, "homotopy solver produced a bad certificate"
    return result


def are_homotopic(f: ChainMap, g: ChainMap) -> Homotopy | None:
    """A homotopy from ``g`` to ``f`` (witnessing ``f - g = dH + Hd``), or None."""
    if f.source != g.source or f.target != g.target:
        raise ValueError("chain maps do not share source and target")
    return null_homotopy(f - g)


@dataclass(frozen=True)
class HomotopyEquivalenceCheck:
    """Truthy iff the map induces isomorphisms on cohomology.

    ``cohomology_maps`` holds the induced matrix in every degree, in the
    harmonic bases of the two decompositions.
    """

    ok: bool
    cohomology_maps: dict[int, Matrix]

    def __bool__(self) -> bool:
        return self.ok


def is_homotopy_equivalence(f: ChainMap) -> HomotopyEquivalenceCheck:
    """Decide homotopy equivalence via invertibility of the harmonic blocks."""
    form = block_form(f)
    maps: dict[int, Matrix] = {}
    ok = True
    for i in f.degrees():
        h = form.harmonic_block(i)
        maps[i] = h
        if not h.is_square or (h.rows and det(h) == 0):
            ok = False
    return HomotopyEquivalenceCheck(ok, maps)


def invertible_replacement(
    f: ChainMap,
    source_dec: Decomposition | None = None,
    target_dec: Decomposition | None = None,
) -> tuple[ChainMap, Homotopy]:
    """Replace a homotopy equivalence by a homotopic chain isomorphism.

    Requires equal dimensions in every degree.  In decomposition
    coordinates a chain map is block upper-triangular with diagonal
    blocks (boundary, harmonic, lift); adding ``d o H + H o d`` for a
    homotopy concentrated in the (lift row, boundary column) corner
    shifts the boundary and lift diagonal blocks without touching the
    harmonic ones.  Choosing the corner map ``identity - boundary
    block`` in each degree turns every non-harmonic diagonal block into
    the identity, hence the output is invertible degreewise.  Returns
    the replacement ``g`` together with the homotopy ``H`` satisfying
    ``g = f + d o H + H o d`` exactly.

    Maps that are already invertible still go through the same
    canonicalization, so the output may differ from the input (but is
    homotopic to it).
    """
    src, tgt = f.source, f.target
    for i in f.degrees():
        if src.dim(i) != tgt.dim(i):
            raise GradedDimensionMismatch(
                f"source has dimension {src.dim(i)} and target {tgt.dim(i)}"
                f" in degree {i}"
            )
    src_dec = source_dec or decompose(src)
    tgt_dec = target_dec or decompose(tgt)
    form = block_form(f, src_dec, tgt_dec)
    for i in f.degrees():
        h = form.harmonic_block(i)
        if not h.is_square or (h.rows and det(h) == 0):
            raise NotHomotopyEquivalence(
                f"harmonic block at degree {i} is not invertible"
            )
        sb, tb = src_dec.widths(i)[0], tgt_dec.widths(i)[0]
        if sb != tb:
            raise GradedDimensionMismatch(
                f"boundary dimensions differ in degree {i}: {sb} vs {tb}"
            )

    # Corner corrections phi^i = I - (boundary block of f at degree i).
    phi = {
        i: Matrix.identity(form.diagonal_blocks[i][0].rows)
        - form.diagonal_blocks[i][0]
        for i in f.degrees()
    }

    homotopy_comps: dict[int, Matrix] = {}
    for i in f.degrees():
        b_i = phi[i]
        if b_i.rows == 0:
            continue
        # In decomposition coordinates: rows are the blocks of target
        # degree i-1, columns the blocks of source degree i; phi sits in
        # the (lift row, boundary column) corner.
        tw = tgt_dec.widths(i - 1)
        sw = src_dec.widths(i)
        if sum(tw) == 0:
            continue
        block = [[Fraction(0)] * sum(sw) for _ in range(sum(tw))]
        row0 = tw[0] + tw[1]
        for r in range(b_i.rows):
            for c in range(b_i.cols):
                block[row0 + r][c] = b_i[r, c]
        homotopy_comps[i] = (
            tgt_dec.basis_at(i - 1) * Matrix(block, cols=sum(sw)) * src_dec.basis_inv_at(i)
        )
    homotopy = Homotopy(src, tgt, homotopy_comps)
    g = f + homotopy.boundary_conjugate()

    assert verify_chain_map(g).ok
    assert g.is_invertible(), "replacement failed to be invertible"
    return g, homotopy


def berezinian(
    t: ChainMap,
    sigma_source: Fraction | int = 1,
    sigma_target: Fraction | int = 1,
) -> Fraction:
    """Graded determinant of a degreewise invertible chain map.

    Degrees are reduced mod 2: the result is the product of the even
    component determinants divided by the odd ones, rescaled by
    ``sigma_source / sigma_target`` to account for the chosen
    normalizations of the two graded determinant lines.  The empty
    complex has Berezinian 1.
    """
    sigma_source = Fraction(sigma_source)
    sigma_target = Fraction(sigma_target)
    if sigma_source == 0 or sigma_target == 0:
        raise ValueError("trivialization scales must be nonzero")
    value = Fraction(1)
    for i in t.degrees():
        if t.source.dim(i) != t.target.dim(i):
            raise ValueError(f"component at degree {i} is not square")
        d = det(t.component(i))
        if d == 0:
            raise ValueError(f"component at degree {i} is not invertible")
        value = value * d if i % 2 == 0 else value / d
    return value * sigma_source / sigma_target


def berezinian_class(
    t: ChainMap,
    sigma_source: Fraction | int = 1,
    sigma_target: Fraction | int = 1,
    source_dec: Decomposition | None = None,
    target_dec: Decomposition | None = None,
) -> Fraction:
    """Berezinian of the homotopy class of a homotopy equivalence.

    Computed on an invertible replacement; homotopic replacements give
    the same value, so this does not depend on any of the noncanonical
    choices (and agrees with :func:`berezinian` on maps that are
    already invertible).
    """
    g, _ = invertible_replacement(t, source_dec, target_dec)
    return berezinian(g, sigma_source, sigma_target)
