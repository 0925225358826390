"""Additive integral cohomology of the truncated Thom space.

Even degrees are the kernel and odd degrees the (shifted) cokernel of the
restriction ``Z*_n -> Z[c, z]/(2c, z^(n+1))``.  No products are defined.
"""

from __future__ import annotations

from ..algebra.quotient import Span, kernel_span
from .base import GradedPiece, Presentation, SpaceId, render_combination
from .mp_integral import boundary_name
from .rings import p3_images


class ThNIntegral(Presentation):
    additive_only = True

    def __init__(self, space: SpaceId, source: Presentation, target: Presentation):
        super().__init__(space, "Z")
        self.source = source  # Z*_n
        self.target = target  # RK_n
        self.images = p3_images(space.d, "Z")
        self.product_rules = ()

    def restriction_matrix(self, degree: int) -> tuple[list[list[int]], GradedPiece, GradedPiece]:
        """Columns are the images of the source ambient monomials."""
        src = self.source.piece(degree)
        tgt = self.target.piece(degree)
        ring = self.target.ring
        cols = []
        for key in src.keys:
            img = self.source.ring.monomial(key).substitute(self.images, ring)
            cols.append(tgt.dense(self.target._reduce(img)))
        return cols, src, tgt

    def _build_piece(self, degree: int) -> GradedPiece:
        if degree == 0:
            # the unit, as in every other presentation
            return GradedPiece(self.space, "Z", 0, ["1"], {"1": "1"}, [])
        if degree % 2 == 0:
            return self._kernel_piece(degree)
        return self._cokernel_piece(degree - 1)

    def _kernel_piece(self, degree: int) -> GradedPiece:
        cols, src, tgt = self.restriction_matrix(degree)
        n, m = len(src.keys), len(tgt.keys)
        K = kernel_span(cols, tgt.relations, n, m) + Span(n, src.relations)
        basis = K.basis
        names = {}
        for i, vec in enumerate(basis):
            red = src.quotient.reduce(vec)
            names[i] = render_combination(
                (src.names[k], c) for k, c in zip(src.keys, red) if c
            )
        rels = []
        for r in src.relations:
            row = K.coordinates(r)
            rels.append({i: c for i, c in enumerate(row) if c})
        return GradedPiece(self.space, "Z", degree, list(range(len(basis))), names, rels)

    def _cokernel_piece(self, degree: int) -> GradedPiece:
        cols, src, tgt = self.restriction_matrix(degree)
        rels = [dict(zip(tgt.keys, r)) for r in tgt.relations]
        rels += [dict(zip(tgt.keys, c)) for c in cols]
        names = {}
        ring = self.target.ring
        ci, zi = ring.index("c"), ring.index("z")
        for key in tgt.keys:
            names[key] = boundary_name(key[ci], key[zi])
        return GradedPiece(self.space, "Z", degree + 1, tgt.keys, names, rels,
                           display_key=lambda k: k[zi])
