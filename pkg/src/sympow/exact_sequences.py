"""Homomorphisms between presentations and degree-wise exactness checks.

A :class:`HomDescriptor` sends each ambient generator of the source piece in
degree ``k`` to a vector in the ambient of the target piece in degree
``k + shift``.  Ring maps are built from generator images; the boundary maps
are built on the ``z``-power basis and extended by module linearity.  Either
way, well-definedness (relations go to relations) is checked degree-wise and
never assumed.

Images and kernels are compared as subgroups of the ambient lattice with a
canonical Hermite (or row-echelon) basis, so torsion is handled exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .algebra.polynomial import Polynomial
from .algebra.quotient import Span, kernel_span
from .fibonacci import delta
from .presentations import SpaceId, catalog
from .presentations.base import GradedPiece, Presentation, render_combination, zero_piece
from .presentations.lattice import lattice_vector
from .presentations.rings import p3_images
from .verdict import Verdict, combine

KeyMap = Callable[[Hashable], dict]


@dataclass(frozen=True)
class Node:
    """A presentation used as a term of an exact sequence.

    ``reduced`` drops the degree-0 unit, i.e. uses reduced cohomology.
    """

    pres: Presentation
    reduced: bool = False

    def piece(self, degree: int) -> GradedPiece:
        if degree < 0 or (self.reduced and degree == 0):
            return zero_piece(self.pres.space, self.pres.coeff, max(degree, 0))
        return self.pres.piece(degree)

    @property
    def label(self) -> str:
        return f"{self.pres.space.label}[{self.pres.coeff}]"


@dataclass
class HomDescriptor:
    name: str
    source: Node
    target: Node
    key_map: KeyMap
    shift: int = 0
    images: dict[str, Polynomial] = field(default_factory=dict)

    def matrix(self, degree: int) -> tuple[list[list[int]], GradedPiece, GradedPiece]:
        """Image columns of the source ambient generators in ``degree``."""
        src = self.source.piece(degree)
        tgt = self.target.piece(degree + self.shift)
        cols = []
        for key in src.keys:
            vec = self.key_map(key) if tgt.keys else {}
            cols.append(tgt.dense(vec))
        return cols, src, tgt

    def respects_relations(self, degree: int) -> Verdict:
        cols, src, tgt = self.matrix(degree)
        target_rel = Span(len(tgt.keys), tgt.relations, tgt.modulus)
        for r in src.relations:
            img = _combine(cols, r, len(tgt.keys), tgt.modulus)
            if not target_rel.contains(img):
                rel = render_combination((src.names[k], c) for k, c in zip(src.keys, r))
                return Verdict(False, self.name, f"degree {degree}: relation {rel} is not sent to 0")
        return Verdict(True, self.name, f"degree {degree}: well defined")


def _combine(cols: Sequence[Sequence[int]], coeffs: Sequence[int], m: int, modulus) -> list[int]:
    out = [0] * m
    for c, col in zip(coeffs, cols):
        if c:
            for p, x in enumerate(col):
                out[p] += c * x
    if modulus:
        out = [x % modulus for x in out]
    return out


def hom_apply(h: HomDescriptor, element, degree: int):
    """Image of ``element`` (an ambient vector or basis element) as an expansion."""
    src = h.source.piece(degree)
    if hasattr(element, "vector"):
        vec = dict(element.vector)
    elif isinstance(element, dict):
        vec = element
    else:
        d, vec = h.source.pres.to_vector(element)
        if d is not None and d != degree:
            raise ValueError(f"element has degree {d}, not {degree}")
    cols, src, tgt = h.matrix(degree)
    img = _combine(cols, src.dense(vec), len(tgt.keys), tgt.modulus)
    return tgt.expand(dict(zip(tgt.keys, img)))


def compose(g: HomDescriptor, f: HomDescriptor) -> HomDescriptor:
    """``g o f``, on ambient keys."""

    def key_map(key):
        out: dict = {}
        for k2, c in f.key_map(key).items():
            for k3, c3 in g.key_map(k2).items():
                out[k3] = out.get(k3, 0) + c * c3
        return out

    return HomDescriptor(f"{g.name}.{f.name}", f.source, g.target, key_map, f.shift + g.shift)


# -- images, kernels, cokernels --------------------------------------------------

def image_of(h: HomDescriptor, degree: int) -> Span:
    cols, _, tgt = h.matrix(degree)
    return Span(len(tgt.keys), cols + tgt.relations, tgt.modulus)


def kernel_of(h: HomDescriptor, degree: int) -> Span:
    cols, src, tgt = h.matrix(degree)
    n = len(src.keys)
    K = kernel_span(cols, tgt.relations, n, len(tgt.keys), src.modulus)
    return K + Span(n, src.relations, src.modulus)


def relations_span(node: Node, degree: int) -> Span:
    p = node.piece(degree)
    return Span(len(p.keys), p.relations, p.modulus)


def full_span(node: Node, degree: int) -> Span:
    p = node.piece(degree)
    n = len(p.keys)
    return Span(n, [[int(i == j) for j in range(n)] for i in range(n)], p.modulus)


def kernel_cokernel(h: HomDescriptor, degree: int) -> tuple[GradedPiece, GradedPiece]:
    """Kernel in the source degree and cokernel in the target degree."""
    cols, src, tgt = h.matrix(degree)
    K = kernel_of(h, degree)
    basis = K.basis
    names = {}
    for i, vec in enumerate(basis):
        red = src.quotient.reduce(vec)
        names[i] = render_combination((src.names[k], c) for k, c in zip(src.keys, red) if c)
    rels = [dict(enumerate(K.coordinates(r))) for r in src.relations]
    kernel = GradedPiece(src.space, src.coeff, degree, list(range(len(basis))), names, rels)
    crel = [dict(zip(tgt.keys, r)) for r in tgt.relations + cols]
    cok = GradedPiece(tgt.space, tgt.coeff, degree + h.shift, tgt.keys, tgt.names, crel)
    return kernel, cok


def ideal_span(node: Node, generators: Sequence[Polynomial], degree: int) -> Span:
    """Degree-wise span of ``generators`` times all ambient monomials."""
    pres = node.pres
    p = node.piece(degree)
    n = len(p.keys)
    rows = [list(r) for r in p.relations]
    ring = pres.ring
    for g in generators:
        gd = g.degree()
        if gd is None or gd > degree:
            continue
        for mu in ring.monomials(degree - gd):
            _, vec = pres.to_vector(g * ring.monomial(mu))
            if vec and n:
                rows.append(p.dense(vec))
    return Span(n, rows, p.modulus)


def ideal_kernel_compare(h: HomDescriptor, generators: Sequence[Polynomial],
                         degrees: Sequence[int], name: str | None = None) -> Verdict:
    """Degree-wise ``Ker h == (generators)`` by double inclusion."""
    name = name or f"ker {h.name}"
    for k in degrees:
        K = kernel_of(h, k)
        I = ideal_span(h.source, generators, k)
        if not I.contains_span(K):
            return Verdict(False, name, f"degree {k}: kernel is larger than the ideal")
        if not K.contains_span(I):
            return Verdict(False, name, f"degree {k}: ideal is not in the kernel")
    return Verdict(True, name, f"equal in degrees {_range_text(degrees)}")


def _range_text(degrees: Sequence[int]) -> str:
    degrees = list(degrees)
    return f"{degrees[0]}..{degrees[-1]}" if degrees else "(none)"


# -- ladders ------------------------------------------------------------------------

@dataclass
class LadderSpec:
    """A sequence of maps; ``cyclic`` closes it into a long exact sequence.

    For ``short`` sequences ``0 -> A -> B -> C -> 0`` the first map must be
    monic and the last epic as well.
    """

    name: str
    maps: list[HomDescriptor]
    cyclic: bool = False
    short: bool = False


def _exact_at(f: HomDescriptor, g: HomDescriptor, degree: int) -> bool:
    """``Im f == Ker g`` in the middle node at ``degree``."""
    return image_of(f, degree - f.shift) == kernel_of(g, degree)


def check_exactness(ladder: LadderSpec, degrees: Sequence[int]) -> Verdict:
    maps = ladder.maps
    pairs = list(zip(maps, maps[1:]))
    if ladder.cyclic:
        pairs.append((maps[-1], maps[0]))
    # a degree in the pair list refers to the degree of the middle node
    offsets = [0]
    for f in maps[:-1]:
        offsets.append(offsets[-1] + f.shift)
    for k in degrees:
        for idx, (f, g) in enumerate(pairs):
            mid = offsets[(idx + 1) % len(maps)] + k
            if not _exact_at(f, g, mid):
                return Verdict(False, ladder.name,
                               f"degree {mid} at {g.source.label}: image of {f.name} != kernel of {g.name}")
        if ladder.short:
            f, g = maps[0], maps[-1]
            if kernel_of(f, k) != relations_span(f.source, k):
                return Verdict(False, ladder.name, f"degree {k}: {f.name} is not monic")
            kk = offsets[-1] + k
            if image_of(g, kk) != full_span(g.target, kk + g.shift):
                return Verdict(False, ladder.name, f"degree {kk + g.shift}: {g.name} is not epic")
    return Verdict(True, ladder.name, f"exact in degrees {_range_text(degrees)}")


def is_monic(h: HomDescriptor, degrees: Sequence[int]) -> Verdict:
    for k in degrees:
        if kernel_of(h, k) != relations_span(h.source, k):
            return Verdict(False, f"{h.name} monic", f"degree {k}: nonzero kernel")
    return Verdict(True, f"{h.name} monic", f"degrees {_range_text(degrees)}")


# -- the catalog of maps --------------------------------------------------------------

def _space(kind: str, field: str, n: int | None = None) -> SpaceId:
    return SpaceId(kind, field, n)


def ring_map(name: str, source: Node, target: Node, images: dict[str, Polynomial]) -> HomDescriptor:
    """Ring homomorphism between polynomial presentations given on generators."""
    sring, tpres = source.pres.ring, target.pres
    tring = tpres.ring

    def key_map(key):
        img = sring.monomial(key).substitute(images, tring)
        return tpres.to_vector(img)[1]

    return HomDescriptor(name, source, target, key_map, 0, dict(images))


def restriction(field: str, coeff: str, n: int | None = None, kind: str = "Borel") -> HomDescriptor:
    """``i*`` (or ``p3*``) from the classifying ring to ``RK``."""
    d = _space(kind, field).d
    src = Node(catalog(_space(kind, field, n), coeff))
    tgt = Node(catalog(_space("RK", field, n), coeff))
    name = "p3*" if kind == "Gamma" else "i*"
    if n is not None:
        name = f"{name}_{n}"
    return ring_map(name, src, tgt, p3_images(d, coeff))


def _reduced_mp(field: str, coeff: str, n: int | None) -> Node:
    return Node(catalog(_space("MP", field, n), coeff), reduced=True)


def thom_to_base(field: str, coeff: str, n: int | None = None) -> HomDescriptor:
    """``b*``: Thom space to the classifying ring (``t -> m``, ``s -> m^2 - 4y``)."""
    kind = "Gamma" if coeff == "F2" else "Borel"
    src = _reduced_mp(field, coeff, n)
    tgt = Node(catalog(_space(kind, field, n), coeff))
    G = tgt.pres.ring
    if coeff == "F2":
        def key_map(key):
            i, j, k, _ = key
            return tgt.pres.to_vector(G.monomial((i, j + 1, k)))[1]
    else:
        if n is not None:
            raise NotImplementedError("the truncated integral Thom space is additive only")
        m, y = G.gen("m"), G.gen("y")
        euler = m * m - 4 * y

        def key_map(key):
            if key[0] != "s":
                return {}
            return tgt.pres.to_vector(G.monomial({"m": key[1], "y": key[2]}) * euler)[1]
    return HomDescriptor("b*", src, tgt, key_map)


def boundary_upper(field: str, coeff: str, n: int | None = None) -> HomDescriptor:
    """``delta: RK -> MP`` raising degree by one, ``c^i z^j -> c^i delta[j]``."""
    src = Node(catalog(_space("RK", field, n), coeff))
    tgt = _reduced_mp(field, coeff, n)
    d = src.pres.space.d
    if coeff == "F2":
        T = tgt.pres.ring

        def key_map(key):
            i, j = key
            if j == 0:
                return {}
            return tgt.pres.to_vector(T.monomial({"a": i}) * delta(j, d))[1]
    else:
        def key_map(key):
            i, j = key
            return {} if j == 0 else {("d", i, j): 1}
    return HomDescriptor("delta", src, tgt, key_map, shift=1)


def boundary_lower(field: str, coeff: str, n: int | None = None) -> HomDescriptor:
    """``delta: KP -> MP`` (reduced), ``z^j -> delta[j]``."""
    src = Node(catalog(_space("KP", field, n), coeff), reduced=True)
    tgt = _reduced_mp(field, coeff, n)
    d = src.pres.space.d
    if coeff == "F2":
        def key_map(key):
            return tgt.pres.to_vector(delta(key[0], d))[1]
    else:
        if n is not None:
            raise NotImplementedError("the truncated integral Thom space is additive only")

        def key_map(key):
            return {("d", 0, key[0]): 1}
    return HomDescriptor("delta", src, tgt, key_map, shift=1)


def thom_to_square(field: str, coeff: str, n: int | None = None) -> HomDescriptor:
    """``b_Delta*``: Thom space to the symmetric square."""
    src = _reduced_mp(field, coeff, n)
    tgt = Node(catalog(_space("SP2", field, n), coeff), reduced=True)
    if coeff == "F2":
        def key_map(key):
            return {key: 1}
    else:
        if n is not None:
            raise NotImplementedError("the truncated integral Thom space is additive only")
        R = tgt.pres.ring
        g, w = R.gen("g"), R.gen("w")
        euler = g * g - 4 * w

        def key_map(key):
            if key[0] == "d":
                return {("u", key[1], key[2]): 1}
            return lattice_vector(R.monomial((key[1], key[2])) * euler)
    return HomDescriptor("b_Delta*", src, tgt, key_map)


def square_to_diagonal(field: str, n: int | None = None) -> HomDescriptor:
    """Integral ``i_Delta*``: ``g -> 2z``, ``h/2 -> z^2``, ``u -> 0``."""
    src = Node(catalog(_space("SP2", field, n), "Z"), reduced=True)
    tgt = Node(catalog(_space("KP", field, n), "Z"), reduced=True)

    def key_map(key):
        if key[0] == "u":
            return {}
        if key[0] == "g":
            _, q, s = key
            return {(q + 2 * s,): 2 ** q}
        return {(2 * key[1],): 2}
    return HomDescriptor("i_Delta*", src, tgt, key_map)


def projection_to_factor(field: str, coeff: str) -> HomDescriptor:
    """``pi2*``: the inclusion ``KP -> RK`` of the second factor (reduced)."""
    src = Node(catalog(_space("KP", field), coeff), reduced=True)
    tgt = Node(catalog(_space("RK", field), coeff))

    def key_map(key):
        return {(0, key[0]): 1}
    return HomDescriptor("pi2*", src, tgt, key_map)


# -- the ladders ------------------------------------------------------------------------

def gysin_ladder(field: str) -> LadderSpec:
    """Mod 2 ``MP -> G* -> RK -> MP[+1]``.

    There is no truncated analogue: for finite ``n`` the base of the Thom
    space is the configuration space, which is not the Borel space.
    """
    maps = [thom_to_base(field, "F2"), restriction(field, "F2", kind="Gamma"),
            boundary_upper(field, "F2")]
    return LadderSpec(f"gysin [{field}]", maps, cyclic=True)


def integral_upper_ladder(field: str) -> LadderSpec:
    maps = [thom_to_base(field, "Z"), restriction(field, "Z"), boundary_upper(field, "Z")]
    return LadderSpec(f"integral upper [{field}]", maps, cyclic=True)


def integral_lower_ladder(field: str) -> LadderSpec:
    maps = [thom_to_square(field, "Z"), square_to_diagonal(field), boundary_lower(field, "Z")]
    return LadderSpec(f"integral lower [{field}]", maps, cyclic=True)


def nakaoka_ladder(field: str, n: int | None = None) -> LadderSpec:
    """``0 -> KP[-1] -> MP -> SP2 -> 0`` mod 2, or its truncation."""
    maps = [boundary_lower(field, "F2", n), thom_to_square(field, "F2", n)]
    label = "nakaoka" if n is None else f"nakaoka n={n}"
    return LadderSpec(f"{label} [{field}]", maps, short=True)


def all_descriptors(field: str) -> list[HomDescriptor]:
    out = []
    out.append(restriction(field, "F2", kind="Gamma"))
    for n in (None, 1, 2, 3):
        out += [thom_to_base(field, "F2", n), boundary_upper(field, "F2", n),
                boundary_lower(field, "F2", n), thom_to_square(field, "F2", n)]
    out += [restriction(field, "Z"), thom_to_base(field, "Z"), boundary_upper(field, "Z"),
            thom_to_square(field, "Z"), square_to_diagonal(field), boundary_lower(field, "Z")]
    out += [restriction(field, "Z", n) for n in (1, 2, 3, 4)]
    return out


def check_well_defined(field: str, max_degree: int) -> Verdict:
    return combine(f"maps well defined [{field}]",
                   [h.respects_relations(k) for h in all_descriptors(field)
                    for k in range(max_degree + 1)])


# -- named checks ------------------------------------------------------------------------

def nakaoka_dimensions(field: str, max_degree: int, n: int | None = None) -> Verdict:
    """``dim SP2^k = dim MP^k - dim KP^(k-1)`` (mod 2, unreduced tables)."""
    sp = catalog(_space("SP2", field, n), "F2")
    mp = catalog(_space("MP", field, n), "F2")
    kp = catalog(_space("KP", field, n), "F2")
    name = "nakaoka dimensions" + ("" if n is None else f" n={n}") + f" [{field}]"
    for k in range(max_degree + 1):
        kp_dim = kp.piece(k - 1).dimension if k >= 2 else 0
        lhs = sp.piece(k).dimension
        rhs = mp.piece(k).dimension - kp_dim
        if lhs != rhs:
            return Verdict(False, name, f"degree {k}: {lhs} != {rhs}")
    return Verdict(True, name, f"degrees 0..{max_degree}")


def _shape(piece: GradedPiece) -> tuple[int, tuple[int, ...]]:
    return (piece.quotient.free_rank, tuple(sorted(piece.quotient.torsion)))


def thom_splitting(field: str, max_degree: int) -> Verdict:
    """Even integral MP pieces match ``Ker i*``; odd ones match ``Cok i*`` shifted."""
    mp = catalog(_space("MP", field), "Z")
    h = restriction(field, "Z")
    name = f"even/odd splitting [{field}]"
    for k in range(1, max_degree + 1):
        if k % 2 == 0:
            other, _ = kernel_cokernel(h, k)
        else:
            _, other = kernel_cokernel(h, k - 1)
        if _shape(mp.piece(k)) != _shape(other):
            return Verdict(False, name, f"degree {k}: {_shape(mp.piece(k))} != {_shape(other)}")
    return Verdict(True, name, f"degrees 1..{max_degree}")


def restriction_kernel_check(field: str, max_degree: int) -> Verdict:
    h = restriction(field, "Z")
    G = h.source.pres.ring
    m, y = G.gen("m"), G.gen("y")
    return ideal_kernel_compare(h, [m * m - 4 * y], range(max_degree + 1), f"Ker i* = (m^2-4y) [{field}]")


def restriction_kernel_n1_check(field: str, max_degree: int) -> Verdict:
    h = restriction(field, "Z", 1)
    G = h.source.pres.ring
    return ideal_kernel_compare(h, [2 * G.gen("y")], range(max_degree + 1), f"Ker i_1* = (2y) [{field}]")


def boundary_kernel_check(field: str, max_degree: int) -> Verdict:
    h = boundary_lower(field, "Z")
    R = h.source.pres.ring
    return ideal_kernel_compare(h, [2 * R.gen("z")], range(max_degree + 1), f"Ker delta = (2z) [{field}]")


def truncated_kernel_basis(n: int) -> set[tuple[int, int, int]]:
    """``(coefficient, i, j)`` for ``m^i y^j`` and ``2 y^k`` spanning ``Ker i_n*`` above ``nd``."""
    out = set()
    for i in range(1, n + 1):
        for j in range(0, n + 1):
            if i + j <= n < i + 2 * j:
                out.add((1, i, j))
    for k in range(1, n + 1):
        if 2 * k > n:
            out.add((2, 0, k))
    return out


def truncated_kernel_check(field: str, n: int, max_degree: int) -> Verdict:
    """Above ``nd``, ``Ker i_n*`` is spanned by ``m^i y^j`` and ``2y^k``."""
    h = restriction(field, "Z", n)
    d = h.source.pres.space.d
    G = h.source.pres.ring
    name = f"Ker i_{n}* basis [{field}]"
    expected = truncated_kernel_basis(n)
    for k in range(n * d + 1, max_degree + 1):
        gens = [c * G.monomial({"m": i, "y": j}) for (c, i, j) in expected if i * d + 2 * j * d == k]
        K = kernel_of(h, k)
        src = h.source.piece(k)
        rows = [src.dense(h.source.pres.to_vector(p)[1]) for p in gens] + src.relations
        if Span(len(src.keys), rows) != K:
            return Verdict(False, name, f"degree {k}: kernel differs from the closed-form span")
    return Verdict(True, name, f"degrees {n * d + 1}..{max_degree}")


def exactness_checks(field: str, max_degree: int, truncations: Sequence[int] = (1, 2, 3)) -> list[Verdict]:
    degrees = range(max_degree + 1)
    out = [check_exactness(gysin_ladder(field), degrees),
           check_exactness(nakaoka_ladder(field), degrees)]
    for n in truncations:
        out.append(check_exactness(nakaoka_ladder(field, n), degrees))
        out.append(nakaoka_dimensions(field, max_degree, n))
    out.append(check_exactness(integral_upper_ladder(field), degrees))
    out.append(check_exactness(integral_lower_ladder(field), degrees))
    out.append(thom_splitting(field, max_degree))
    out.append(nakaoka_dimensions(field, max_degree))
    out.append(is_monic(compose(boundary_upper(field, "F2"), projection_to_factor(field, "F2")), degrees))
    return out
