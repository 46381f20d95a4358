"""Weyl group invariants of generalized Cartan matrices

This package works with generalized Cartan matrices A and the Weyl groups
they generate, in exact rational arithmetic throughout. For an
indecomposable matrix of indefinite type it computes the polynomial
invariants of the Weyl group acting on the weight lattice, and from them
the rational cohomology and homotopy data of the associated Kac-Moody
group G(A) and its flag manifold F(A).

Up to a chosen degree, the invariants of an indefinite matrix are either
the polynomials in the invariant quadratic form ψ (when A is
symmetrizable) or the constants (when it is not).

Functions:
    `read_matrix()`: Read a matrix file, or a bundled fixture.
    `invariant_space()`: A basis of the degree-l invariants.
    `bilinear_form()`: The invariant quadratic form of a symmetrizable matrix.
    `verify_main_theorem()`: Check the invariant dimensions degree by degree.
    `enumerate_by_length()`: Count Weyl group elements by length.
    `build_regular_chain()`: The regular subalgebra of a non-symmetrizable
        hyperbolic matrix with a cyclic Dynkin diagram.
    `homotopy_report()`, `cohomology_presentation()`: Poincaré series,
        generator counts and cohomology presentations.

Classes:
    `CartanMatrix()`: A validated matrix, with methods for classification,
        symmetrization and principal submatrices.
    `WeightPolynomial()`: An exact polynomial in the fundamental weights.

Errors raised by the package all derive from `KacMoodyError`; see
`kacmoody.errors`.
"""

import logging

from .cartan      import CartanMatrix, MatrixKind, as_cartan_matrix, random_cartan_matrix
from .errors      import KacMoodyError
from .invariants  import bilinear_form, invariant_space, is_invariant, verify_main_theorem
from .matrix_io   import read_matrix
from .polyring    import WeightPolynomial
from .subalgebra  import build_regular_chain
from .topology    import cohomology_presentation, homotopy_report
from .weyl        import enumerate_by_length

logging.basicConfig(level=logging.INFO, format='%(message)s')

__all__ = [
    'CartanMatrix',
    'KacMoodyError',
    'MatrixKind',
    'WeightPolynomial',
    'as_cartan_matrix',
    'bilinear_form',
    'build_regular_chain',
    'cohomology_presentation',
    'enumerate_by_length',
    'homotopy_report',
    'invariant_space',
    'is_invariant',
    'random_cartan_matrix',
    'read_matrix',
    'verify_main_theorem',
]
