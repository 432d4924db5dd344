"""Exact computer algebra for weighted power-series normal forms.

Subpackages cover the coefficient field (scalars), weighted truncated
series and map germs (series, germs), graphed CR hypersurfaces and their
residual transformations and symmetry algebras (hypersurfaces,
transformations, symmetries), parabolic affine surfaces (affine), the
tangency linear solver (solver) and the CLI / JSON report layer (cli,
serialize, reports).
"""

__version__ = "0.1.0"
