"""Finite groupoids and their multiplicative cochain complex.

A finite groupoid is stored by its tables: objects, arrows with source
and target, the unit arrow of each object, the inverse of each arrow,
and the composition table (defined exactly on composable pairs; the
composite ``g * h`` requires ``src(g) == tgt(h)``, so ``h`` acts
first).

Cochains take values in the multiplicative group of nonzero rationals:
a degree-k cochain assigns a nonzero scalar to every composable k-tuple
(to every object when k = 0), the coboundary uses products and
quotients, and "vanishing" means being identically 1.  Degree-1 classes
are handled concretely, as a cocycle plus a triviality decision with a
witness or an obstruction list; triviality is decided by propagating a
potential along a spanning forest of the object graph and checking the
leftover arrows, which over a single object reduces to checking that
the cocycle is identically 1 on the isotropy group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .complexes import ValidationReport


class FiniteGroupoid:
    """Objects, arrows, and the unit/inverse/composition tables."""

    __slots__ = ("objects", "arrows", "identity", "inverse", "composition",
                 "_src", "_tgt", "_arrow_ids")

    def __init__(
        self,
        objects: Sequence[str],
        arrows: Sequence[tuple[str, str, str]],
        identity: Mapping[str, str],
        inverse: Mapping[str, str],
        composition: Mapping[tuple[str, str], str],
    ):
        self.objects = list(objects)
        self.arrows = [(a, s, t) for a, s, t in arrows]
        self.identity = dict(identity)
        self.inverse = dict(inverse)
        self.composition = dict(composition)
        self._src = {a: s for a, s, t in self.arrows}
        self._tgt = {a: t for a, s, t in self.arrows}
        self._arrow_ids = [a for a, _, _ in self.arrows]

    def arrow_ids(self) -> list[str]:
        return list(self._arrow_ids)

    def src(self, arrow: str) -> str:
        return self._src[arrow]

    def tgt(self, arrow: str) -> str:
        return self._tgt[arrow]

    def unit(self, obj: str) -> str:
        return self.identity[obj]

    def inv(self, arrow: str) -> str:
        return self.inverse[arrow]

    def compose(self, g: str, h: str) -> str:
        """The composite ``g * h`` (h first); KeyError if not composable."""
        return self.composition[(g, h)]

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [
            (g, h)
            for g in self._arrow_ids
            for h in self._arrow_ids
            if self._src[g] == self._tgt[h]
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.identity == other.identity
            and self.inverse == other.inverse
            and self.composition == other.composition
        )

    def __repr__(self) -> str:
        return (
            f"FiniteGroupoid({len(self.objects)} objects,"
            f" {len(self.arrows)} arrows)"
        )


@dataclass(frozen=True)
class Cochain:
    """A nonzero-rational valued function on composable tuples.

    Keys are object identifiers in degree 0 and k-tuples of arrow
    identifiers in degree k >= 1.
    """

    degree: int
    values: dict

    def __post_init__(self):
        coerced = {}
        for key, value in self.values.items():
            if isinstance(value, float):
                raise TypeError("cochain values must be exact rationals")
            value = Fraction(value)
            if value == 0:
                raise ValueError(f"cochain value at {key!r} is zero")
            coerced[key] = value
        object.__setattr__(self, "values", coerced)

    def __call__(self, *args) -> Fraction:
        if self.degree == 0:
            (obj,) = args
            return self.values[obj]
        if len(args) == 1 and isinstance(args[0], tuple):
            return self.values[args[0]]
        return self.values[tuple(args)]

    def pointwise(self, other: "Cochain", op) -> "Cochain":
        if self.degree != other.degree or set(self.values) != set(other.values):
            raise ValueError("cochains live on different domains")
        return Cochain(
            self.degree, {k: op(v, other.values[k]) for k, v in self.values.items()}
        )

    def __mul__(self, other: "Cochain") -> "Cochain":
        return self.pointwise(other, lambda a, b: a * b)

    def __truediv__(self, other: "Cochain") -> "Cochain":
        return self.pointwise(other, lambda a, b: a / b)

    def power(self, exponent: int) -> "Cochain":
        return Cochain(self.degree, {k: v**exponent for k, v in self.values.items()})

    def is_one(self) -> bool:
        return all(v == 1 for v in self.values.values())

    @classmethod
    def constant(cls, degree: int, keys: Iterable, value=1) -> "Cochain":
        v = Fraction(value)
        if v == 0:
            raise ValueError("cochain values must be nonzero")
        return cls(degree, {k: v for k in keys})


@dataclass
class ClassReport:
    """A degree-1 cocycle together with its triviality decision.

    When ``is_coboundary`` holds, ``witness`` is a degree-0 cochain f
    with (delta f)(g) = f(src g)/f(tgt g) equal to the cocycle on every
    arrow.  Otherwise ``obstructions`` lists the arrows where the
    spanning-forest potential fails, with the defect ratio at each.
    """

    cocycle: Cochain
    is_coboundary: bool
    witness: Cochain | None = None
    obstructions: list[tuple[str, Fraction]] = field(default_factory=list)


def validate(gpd: FiniteGroupoid) -> ValidationReport:
    """Exhaustively check the groupoid laws, reporting each violation."""
    report = ValidationReport()
    ids = gpd.arrow_ids()
    id_set = set(ids)
    if len(id_set) != len(ids):
        report.add("duplicate arrow identifiers")
        return report
    obj_set = set(gpd.objects)
    for a, s, t in gpd.arrows:
        if s not in obj_set or t not in obj_set:
            report.add(f"arrow '{a}' has unknown endpoint")
    for x in gpd.objects:
        u = gpd.identity.get(x)
        if u is None or u not in id_set:
            report.add(f"object '{x}' has no unit arrow")
        elif not (gpd.src(u) == x and gpd.tgt(u) == x):
            report.add(f"unit '{u}' of object '{x}' is not an endomorphism of it")
    for a in ids:
        if gpd.inverse.get(a) not in id_set:
            report.add(f"arrow '{a}' has no inverse")
    if not report.ok:
        return report

    pairs = set(gpd.composable_pairs())
    table = set(gpd.composition)
    for g, h in table - pairs:
        report.add(f"composition table defines non-composable pair ('{g}', '{h}')")
    for g, h in pairs - table:
        report.add(f"composable pair ('{g}', '{h}') missing from composition table")
    if not report.ok:
        return report

    for g, h in sorted(pairs):
        gh = gpd.compose(g, h)
        if gh not in id_set:
            report.add(f"composite of ('{g}', '{h}') is an unknown arrow")
        elif gpd.src(gh) != gpd.src(h) or gpd.tgt(gh) != gpd.tgt(g):
            report.add(f"composite '{gh}' of ('{g}', '{h}') has wrong endpoints")
    if not report.ok:
        return report

    for a in ids:
        if gpd.compose(gpd.unit(gpd.tgt(a)), a) != a:
            report.add(f"left unit law fails for arrow '{a}'")
        if gpd.compose(a, gpd.unit(gpd.src(a))) != a:
            report.add(f"right unit law fails for arrow '{a}'")
        b = gpd.inv(a)
        if gpd.src(b) != gpd.tgt(a) or gpd.tgt(b) != gpd.src(a):
            report.add(f"inverse of '{a}' has wrong endpoints")
        else:
            if gpd.compose(a, b) != gpd.unit(gpd.tgt(a)):
                report.add(f"inverse law fails: '{a}' * '{b}' is not a unit")
            if gpd.compose(b, a) != gpd.unit(gpd.src(a)):
                report.add(f"inverse law fails: '{b}' * '{a}' is not a unit")

    for g in ids:
        for h in ids:
            if gpd.src(g) != gpd.tgt(h):
                continue
            gh = gpd.compose(g, h)
            for k in ids:
                if gpd.src(h) != gpd.tgt(k):
                    continue
                if gpd.compose(gh, k) != gpd.compose(g, gpd.compose(h, k)):
                    report.add(
                        f"associativity fails on ('{g}', '{h}', '{k}')"
                    )
    return report


def composable_tuples(gpd: FiniteGroupoid, k: int) -> list:
    """All chains of ``k`` arrows with matching endpoints (objects for k=0)."""
    if k < 0:
        raise ValueError("tuple length must be nonnegative")
    if k == 0:
        return list(gpd.objects)
    tuples: list[tuple[str, ...]] = [(a,) for a in gpd.arrow_ids()]
    for _ in range(k - 1):
        tuples = [
            t + (a,)
            for t in tuples
            for a in gpd.arrow_ids()
            if gpd.src(t[-1]) == gpd.tgt(a)
        ]
    return tuples


def coboundary(gpd: FiniteGroupoid, f: Cochain) -> Cochain:
    """Multiplicative coboundary, one degree up.

    In degree 0 this is (delta f)(g) = f(src g) / f(tgt g).  In degree
    k >= 1 the value on (g_1, ..., g_{k+1}) is the alternating product
    of f over the front face, the k merged-composite faces, and the
    back face.
    """
    k = f.degree
    if k == 0:
        return Cochain(
            1,
            {
                (a,): f(gpd.src(a)) / f(gpd.tgt(a))
                for a in gpd.arrow_ids()
            },
        )
    values = {}
    for chain in composable_tuples(gpd, k + 1):
        v = f(chain[1:])
        for i in range(1, k + 1):
            merged = chain[: i - 1] + (gpd.compose(chain[i - 1], chain[i]),) + chain[i + 1 :]
            v = v / f(merged) if i % 2 else v * f(merged)
        v = v * f(chain[:k]) if (k + 1) % 2 == 0 else v / f(chain[:k])
        values[chain] = v
    return Cochain(k + 1, values)


def is_cocycle_1(gpd: FiniteGroupoid, phi: Cochain) -> bool:
    """True iff phi(g) * phi(h) = phi(g*h) on every composable pair."""
    if phi.degree != 1:
        raise ValueError("expected a degree-1 cochain")
    return all(
        phi(g) * phi(h) == phi(gpd.compose(g, h))
        for g, h in gpd.composable_pairs()
    )


def _components(gpd: FiniteGroupoid) -> list[list[str]]:
    # Connected components of the object graph, each listed in object order.
    neighbours: dict[str, set[str]] = {x: set() for x in gpd.objects}
    for a, s, t in gpd.arrows:
        neighbours[s].add(t)
        neighbours[t].add(s)
    seen: set[str] = set()
    components = []
    for root in gpd.objects:
        if root in seen:
            continue
        comp = []
        queue = [root]
        seen.add(root)
        while queue:
            x = queue.pop(0)
            comp.append(x)
            for y in sorted(neighbours[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        components.append(comp)
    return components


def coboundary_solve_1(gpd: FiniteGroupoid, phi: Cochain) -> ClassReport:
    """Decide whether a degree-1 cocycle is a coboundary.

    A potential f is propagated breadth-first along a spanning forest of
    the object graph (arrows usable in both directions, roots at the
    first object of each component, f = 1 there) using f(src g) =
    phi(g) f(tgt g); every arrow is then re-checked against the
    potential.  Arrows that fail are returned as obstructions together
    with the defect ratio phi(g) f(tgt g) / f(src g); the cocycle is a
    coboundary exactly when there are none.
    """
    if not is_cocycle_1(gpd, phi):
        raise ValueError("input cochain is not a cocycle")
    f: dict[str, Fraction] = {}
    for component in _components(gpd):
        root = component[0]
        f[root] = Fraction(1)
        frontier = [root]
        while frontier:
            u = frontier.pop(0)
            for a, s, t in gpd.arrows:
                if t == u and s not in f:
                    f[s] = phi((a,)) * f[u]
                    frontier.append(s)
                elif s == u and t not in f:
                    f[t] = f[u] / phi((a,))
                    frontier.append(t)
    obstructions = []
    for a in gpd.arrow_ids():
        defect = phi((a,)) * f[gpd.tgt(a)] / f[gpd.src(a)]
        if defect != 1:
            obstructions.append((a, defect))
    if obstructions:
        return ClassReport(phi, False, None, obstructions)
    return ClassReport(phi, True, Cochain(0, f), [])


def class_equal(gpd: FiniteGroupoid, phi1: Cochain, phi2: Cochain) -> bool:
    """Whether two degree-1 cocycles differ by a coboundary."""
    for phi in (phi1, phi2):
        if not is_cocycle_1(gpd, phi):
            raise ValueError("input cochain is not a cocycle")
    return coboundary_solve_1(gpd, phi1 / phi2).is_coboundary


# ---------------------------------------------------------------------------
# Builders.  A connected finite groupoid is a pair groupoid over its objects
# twisted by an isotropy group, so these cover everything up to isomorphism.


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by explicit tables."""

    elements: tuple[str, ...]
    unit: str
    multiply: dict[tuple[str, str], str]
    invert: dict[str, str]

    @classmethod
    def cyclic(cls, n: int) -> "GroupTable":
        elements = tuple(f"r{k}" if k else "e" for k in range(n))
        mul = {
            (elements[a], elements[b]): elements[(a + b) % n]
            for a in range(n)
            for b in range(n)
        }
        inv = {elements[a]: elements[(-a) % n] for a in range(n)}
        return cls(elements, "e", mul, inv)

    @classmethod
    def symmetric_3(cls) -> "GroupTable":
        from itertools import permutations

        perms = sorted(permutations(range(3)))
        name = {p: "s" + "".join(str(v) for v in p) for p in perms}
        mul = {}
        inv = {}
        for p in perms:
            for q in perms:
                composite = tuple(p[q[i]] for i in range(3))
                mul[(name[p], name[q])] = name[composite]
            inv[name[p]] = name[tuple(sorted(range(3), key=lambda i: p[i]))]
        return cls(tuple(name[p] for p in perms), name[(0, 1, 2)], mul, inv)


def connected_groupoid(objects: Sequence[str], group: GroupTable) -> FiniteGroupoid:
    """The groupoid with the given objects and isotropy group.

    Arrows are ``(element, source, target)`` triples named
    ``"{element}:{source}>{target}"``; composition multiplies the group
    parts and chains the endpoints.
    """
    def name(k: str, s: str, t: str) -> str:
        return f"{k}:{s}>{t}"

    arrows = [
        (name(k, s, t), s, t) for s in objects for t in objects for k in group.elements
    ]
    identity = {x: name(group.unit, x, x) for x in objects}
    inverse = {
        name(k, s, t): name(group.invert[k], t, s)
        for s in objects
        for t in objects
        for k in group.elements
    }
    composition = {}
    for s in objects:
        for mid in objects:
            for t in objects:
                for k1 in group.elements:
                    for k2 in group.elements:
                        g = name(k2, mid, t)
                        h = name(k1, s, mid)
                        composition[(g, h)] = name(group.multiply[(k2, k1)], s, t)
    return FiniteGroupoid(list(objects), arrows, identity, inverse, composition)


def cyclic_groupoid(n: int, obj: str = "*") -> FiniteGroupoid:
    """The cyclic group of order n viewed as a one-object groupoid."""
    return connected_groupoid([obj], GroupTable.cyclic(n))


def pair_groupoid(objects: Sequence[str]) -> FiniteGroupoid:
    """Exactly one arrow between any two objects."""
    gpd = connected_groupoid(objects, GroupTable.cyclic(1))
    return gpd


def action_groupoid(perms: Iterable[tuple[int, ...]], n_points: int) -> FiniteGroupoid:
    """The action groupoid of a permutation group on ``{0, ..., n-1}``.

    ``perms`` must be closed under composition and inverses.  The arrow
    for (p, x) goes from x to p(x) and is named ``"p{digits}@{x}"``.
    """
    perms = sorted(set(perms))
    objects = [str(x) for x in range(n_points)]

    def name(p: tuple[int, ...], x: int) -> str:
        return "p" + "".join(str(v) for v in p) + f"@{x}"

    arrows = [(name(p, x), str(x), str(p[x])) for p in perms for x in range(n_points)]
    unit = tuple(range(n_points))
    identity = {str(x): name(unit, x) for x in range(n_points)}
    inverse = {}
    composition = {}
    for p in perms:
        p_inv = tuple(sorted(range(n_points), key=lambda i: p[i]))
        for x in range(n_points):
            inverse[name(p, x)] = name(p_inv, p[x])
    for p in perms:
        for q in perms:
            pq = tuple(p[q[i]] for i in range(n_points))
            for x in range(n_points):
                # g = (p, q(x)) after h = (q, x)
                composition[(name(p, q[x]), name(q, x))] = name(pq, x)
    return FiniteGroupoid(objects, arrows, identity, inverse, composition)


def disjoint_union(*groupoids: FiniteGroupoid) -> FiniteGroupoid:
    """Disjoint union, with identifiers prefixed by the piece index."""
    objects: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    identity: dict[str, str] = {}
    inverse: dict[str, str] = {}
    composition: dict[tuple[str, str], str] = {}
    for idx, gpd in enumerate(groupoids):
        tag = f"c{idx}."
        objects.extend(tag + x for x in gpd.objects)
        arrows.extend((tag + a, tag + s, tag + t) for a, s, t in gpd.arrows)
        identity.update({tag + x: tag + a for x, a in gpd.identity.items()})
        inverse.update({tag + a: tag + b for a, b in gpd.inverse.items()})
        composition.update(
            {(tag + g, tag + h): tag + k for (g, h), k in gpd.composition.items()}
        )
    return FiniteGroupoid(objects, arrows, identity, inverse, composition)
