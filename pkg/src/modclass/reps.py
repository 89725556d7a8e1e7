"""Representations of finite groupoids and their modular classes.

Three levels of structure live here.  A line representation assigns an
invertible scalar to every arrow, functorially.  A vector
representation assigns an invertible matrix; its top exterior power is
a line representation whose characteristic class is the modular class.
A representation up to weak homotopy assigns a chain map of per-object
complexes to every arrow, unital, with composition respected only up to
existence of a chain homotopy; the Berezinian of (an invertible
replacement of) each chain map is again a strictly functorial line
representation, and its class is the modular class of the homotopy
representation.

A trivialization fixes a nonzero scale per object (of the determinant
line for vector representations, of the Berezinian line for homotopy
representations).  Classes never depend on it; concrete cocycles do.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complexes import (
    ChainMap,
    ComplexFiber,
    GradedDimensionMismatch,
    Homotopy,
    ValidationReport,
    are_homotopic,
    berezinian_class,
    block_form,
    decompose,
    verify_chain_map,
)
from .groupoid import (
    ClassReport,
    Cochain,
    FiniteGroupoid,
    coboundary_solve_1,
    class_equal,
)
from .linalg import Matrix, det


@dataclass(frozen=True)
class LineRep:
    """An invertible scalar per arrow, functorial under composition."""

    groupoid: FiniteGroupoid
    action: Mapping[str, Fraction]

    def __call__(self, arrow: str) -> Fraction:
        return self.action[arrow]


@dataclass(frozen=True)
class VectorRep:
    """An invertible matrix per arrow, functorial under composition."""

    groupoid: FiniteGroupoid
    dims: Mapping[str, int]
    action: Mapping[str, Matrix]

    def __call__(self, arrow: str) -> Matrix:
        return self.action[arrow]


@dataclass(frozen=True)
class RepUpToWeakHomotopy:
    """A chain map per arrow, functorial up to chain homotopy."""

    groupoid: FiniteGroupoid
    complexes: Mapping[str, ComplexFiber]
    action: Mapping[str, ChainMap]

    def __call__(self, arrow: str) -> ChainMap:
        return self.action[arrow]


class Trivialization:
    """A nonzero scale per object; defaults to 1 everywhere."""

    __slots__ = ("scales",)

    def __init__(self, scales: Mapping[str, Fraction] | None = None):
        self.scales = {k: Fraction(v) for k, v in (scales or {}).items()}
        for obj, value in self.scales.items():
            if value == 0:
                raise ValueError(f"trivialization scale at '{obj}' is zero")

    def __call__(self, obj: str) -> Fraction:
        return self.scales.get(obj, Fraction(1))

    @classmethod
    def ones(cls) -> "Trivialization":
        return cls()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trivialization):
            return NotImplemented
        return self.scales == other.scales

    def __repr__(self) -> str:
        return f"Trivialization({self.scales!r})"

    def rescale(self, f: Cochain) -> "Trivialization":
        """Divide by a degree-0 cochain (defined on every scaled object)."""
        if f.degree != 0:
            raise ValueError("expected a degree-0 cochain")
        return Trivialization({x: self(x) / v for x, v in f.values.items()})


def verify_line_rep(r: LineRep) -> ValidationReport:
    """Functoriality, unitality, and invertibility, over all pairs."""
    report = ValidationReport()
    gpd = r.groupoid
    for a in gpd.arrow_ids():
        value = r.action.get(a)
        if value is None:
            report.add(f"arrow '{a}' has no action")
        elif value == 0:
            report.add(f"action of arrow '{a}' is zero")
    if not report.ok:
        return report
    for x in gpd.objects:
        if r(gpd.unit(x)) != 1:
            report.add(f"unit of object '{x}' does not act by 1")
    for g, h in gpd.composable_pairs():
        if r(g) * r(h) != r(gpd.compose(g, h)):
            report.add(f"functoriality fails on ('{g}', '{h}')")
    return report


def verify_vector_rep(r: VectorRep) -> ValidationReport:
    """Shapes, invertibility, unitality, and functoriality, over all pairs."""
    report = ValidationReport()
    gpd = r.groupoid
    for a in gpd.arrow_ids():
        m = r.action.get(a)
        if m is None:
            report.add(f"arrow '{a}' has no action")
            continue
        expected = (r.dims[gpd.tgt(a)], r.dims[gpd.src(a)])
        if (m.rows, m.cols) != expected:
            report.add(
                f"action of arrow '{a}' has shape {m.rows}x{m.cols},"
                f" expected {expected[0]}x{expected[1]}"
            )
        elif m.is_square and det(m) == 0:
            report.add(f"action of arrow '{a}' is singular")
    if not report.ok:
        return report
    for x in gpd.objects:
        if not r(gpd.unit(x)).is_identity():
            report.add(f"unit of object '{x}' does not act by the identity")
    for g, h in gpd.composable_pairs():
        if r(g) * r(h) != r(gpd.compose(g, h)):
            report.add(f"functoriality fails on ('{g}', '{h}')")
    return report


def characteristic_function(
    r: LineRep, sigma: Trivialization | None = None
) -> Cochain:
    """The cocycle measuring how the action moves the chosen sections.

    With sections scaled by ``sigma``, the arrow ``g`` contributes
    ``action(g) * sigma(src g) / sigma(tgt g)``.
    """
    sigma = sigma or Trivialization.ones()
    gpd = r.groupoid
    return Cochain(
        1,
        {
            (a,): r(a) * sigma(gpd.src(a)) / sigma(gpd.tgt(a))
            for a in gpd.arrow_ids()
        },
    )


def tensor(r1: LineRep, r2: LineRep) -> LineRep:
    """Tensor product of line representations: actions multiply."""
    if r1.groupoid != r2.groupoid:
        raise ValueError("tensor factors live over different groupoids")
    return LineRep(
        r1.groupoid, {a: r1(a) * r2(a) for a in r1.groupoid.arrow_ids()}
    )


def abs_plus_function(r: LineRep, sigma: Trivialization | None = None) -> Cochain:
    """The positive cocycle |phi|, insensitive to section signs."""
    phi = characteristic_function(r, sigma)
    return Cochain(1, {k: abs(v) for k, v in phi.values.items()})


def det_representation(r: VectorRep) -> LineRep:
    """The induced action on top exterior powers: each arrow acts by det."""
    action = {}
    for a in r.groupoid.arrow_ids():
        d = det(r(a))
        if d == 0:
            raise ValueError(f"action of arrow '{a}' is singular")
        action[a] = d
    return LineRep(r.groupoid, action)


def strict_as_homotopy(r: VectorRep, degree: int = 0) -> RepUpToWeakHomotopy:
    """View a strict representation as concentrated in one degree."""
    gpd = r.groupoid
    fibers = {
        x: ComplexFiber(degree, degree, {degree: r.dims[x]}, {}) for x in gpd.objects
    }
    action = {
        a: ChainMap(
            fibers[gpd.src(a)], fibers[gpd.tgt(a)], {degree: r(a)}
        )
        for a in gpd.arrow_ids()
    }
    return RepUpToWeakHomotopy(gpd, fibers, action)


def modular_class_vector(
    r: VectorRep, sigma: Trivialization | None = None
) -> ClassReport:
    """Triviality decision for the determinant cocycle of a vector rep.

    Trivial exactly when an invariant determinant element exists; the
    witness f recovers one by rescaling: sigma/f is invariant.
    """
    phi = characteristic_function(det_representation(r), sigma)
    return coboundary_solve_1(r.groupoid, phi)


class RuthReport(ValidationReport):
    """Validation outcome for a representation up to weak homotopy.

    ``certificates`` maps each composable pair to the found chain
    homotopy witnessing that composing the two actions is homotopic to
    the action of the composite.
    """

    def __init__(self):
        super().__init__()
        self.certificates: dict[tuple[str, str], Homotopy] = {}


def verify_ruth(
    r: RepUpToWeakHomotopy,
    certificates: Mapping[tuple[str, str], Homotopy] | None = None,
) -> RuthReport:
    """Check chain maps, unitality, and homotopy functoriality.

    Reports the first failing law per arrow or pair; certificates for
    the passing pairs are retained.  Caller-supplied ``certificates``
    are verified rather than trusted: a correct one is kept, anything
    else is replaced by solving.
    """
    report = RuthReport()
    gpd = r.groupoid
    for a in gpd.arrow_ids():
        t = r.action.get(a)
        if t is None:
            report.add(f"arrow '{a}' has no action")
            continue
        if t.source != r.complexes[gpd.src(a)] or t.target != r.complexes[gpd.tgt(a)]:
            report.add(f"action of arrow '{a}' joins the wrong fibers")
            continue
        check = verify_chain_map(t)
        if not check.ok:
            report.add(f"action of arrow '{a}' is not a chain map: {check.problems[0]}")
    if not report.ok:
        return report
    for x in gpd.objects:
        if r(gpd.unit(x)) != ChainMap.identity(r.complexes[x]):
            report.add(f"unit of object '{x}' does not act by the identity")
    if not report.ok:
        return report
    for g, h in gpd.composable_pairs():
        composite = r(g).compose(r(h))
        difference = composite - r(gpd.compose(g, h))
        certificate = None
        if certificates and (g, h) in certificates:
            supplied = certificates[(g, h)]
            try:
                if supplied.boundary_conjugate() == difference:
                    certificate = supplied
            except ValueError:
                pass
        if certificate is None:
            certificate = are_homotopic(composite, r(gpd.compose(g, h)))
        if certificate is None:
            report.add(
                f"no homotopy between the composed actions of ('{g}', '{h}')"
                f" and the action of their composite"
            )
        else:
            report.certificates[(g, h)] = certificate
    return report


def induced_ber_rep(
    r: RepUpToWeakHomotopy, sigma: Trivialization | None = None
) -> LineRep:
    """The strictly functorial action on Berezinian lines.

    Each arrow acts by the Berezinian of an invertible replacement of
    its chain map, scaled by the trivialization at its endpoints.
    Requires equal graded dimensions along every arrow.  The weak
    homotopy laws force the result to be strictly functorial; that is
    re-checked here, and a failure means the input was not a valid
    representation up to weak homotopy.
    """
    sigma = sigma or Trivialization.ones()
    gpd = r.groupoid
    decs = {x: decompose(r.complexes[x]) for x in gpd.objects}
    action = {}
    for a in gpd.arrow_ids():
        t = r(a)
        s_obj, t_obj = gpd.src(a), gpd.tgt(a)
        for i in t.degrees():
            if t.source.dim(i) != t.target.dim(i):
                raise GradedDimensionMismatch(
                    f"arrow '{a}' joins fibers of different dimension"
                    f" in degree {i} ({t.source.dim(i)} vs {t.target.dim(i)})"
                )
        action[a] = berezinian_class(
            t, sigma(s_obj), sigma(t_obj), decs[s_obj], decs[t_obj]
        )
    rep = LineRep(gpd, action)
    check = verify_line_rep(rep)
    if not check.ok:
        raise ValueError(
            "induced Berezinian action is not functorial, so the input does"
            f" not satisfy the weak homotopy laws: {check.problems[0]}"
        )
    return rep


def modular_class_ruth(
    r: RepUpToWeakHomotopy, sigma: Trivialization | None = None
) -> ClassReport:
    """Triviality decision for the Berezinian cocycle of a homotopy rep.

    The report's cocycle holds the per-arrow Berezinian values (the
    trivialization is already folded in).  Trivial exactly when an
    invariant Berezinian element exists; the witness f recovers one by
    rescaling: sigma/f is invariant.
    """
    rep = induced_ber_rep(r, sigma)
    phi = characteristic_function(rep)
    return coboundary_solve_1(r.groupoid, phi)


def cohomology_representation(r: RepUpToWeakHomotopy, degree: int) -> VectorRep:
    """The strict representation induced on degree-``degree`` cohomology.

    Bases are the harmonic blocks of the per-object decompositions;
    each arrow acts by the harmonic diagonal block of its chain map.
    Homotopy functoriality of the input makes this strictly functorial
    and invertible.
    """
    gpd = r.groupoid
    decs = {x: decompose(r.complexes[x]) for x in gpd.objects}
    dims = {x: decs[x].harmonic_dims.get(degree, 0) for x in gpd.objects}
    action = {}
    for a in gpd.arrow_ids():
        form = block_form(r(a), decs[gpd.src(a)], decs[gpd.tgt(a)])
        h = (
            form.harmonic_block(degree)
            if degree in form.diagonal_blocks
            else Matrix.zeros(dims[gpd.tgt(a)], dims[gpd.src(a)])
        )
        if (h.rows, h.cols) != (dims[gpd.tgt(a)], dims[gpd.src(a)]):
            raise ValueError(
                f"cohomology dimension jumps along arrow '{a}' in degree {degree}"
            )
        action[a] = h
    return VectorRep(gpd, dims, action)


def regular_factorization_check(
    r: RepUpToWeakHomotopy, sigma: Trivialization | None = None
) -> bool:
    """Compare the modular cocycle with its cohomology factorization.

    The Berezinian cocycle of the whole representation should be
    cohomologous to the alternating product, over degrees, of the
    determinant cocycles of the induced cohomology representations.
    Both sides are computed through their own pipeline.
    """
    gpd = r.groupoid
    total = characteristic_function(induced_ber_rep(r, sigma))
    degrees = sorted(
        {i for x in gpd.objects for i in r.complexes[x].degrees()}
    )
    product = Cochain.constant(1, [(a,) for a in gpd.arrow_ids()])
    for i in degrees:
        rep_i = cohomology_representation(r, i)
        phi_i = characteristic_function(det_representation(rep_i))
        product = product * phi_i if i % 2 == 0 else product / phi_i
    return class_equal(gpd, total, product)
