"""Cohomology of symmetric squares of projective spaces, degree by degree."""

__version__ = "0.1.0"
