"""hyperlab: exact computations with Krasner hyperfields, finite projective
geometries and non-Archimedean local numbers."""

__version__ = "0.1.0"
