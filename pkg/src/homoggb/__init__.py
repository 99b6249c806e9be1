"""Exact Gröbner bases across central and non-central (de)homogenization.

Commutative rings ``K[x]`` are related to ``K[x, t]`` by ``f -> f*`` and
``t = 1``; free algebras ``K<X>`` to ``K<X, T>`` by ``f -> f~`` (left powers
of ``T``) and deleting ``T``.  The pipelines compute a basis of an ideal and
of its homogenization by completing homogenized generators first.
"""

from .basis import CheckResult, GroebnerBasis
from .central import CentralHomogenizer, central_dehomogenize, central_homogenize, homogenize_set
from .groebner import buchberger, divide, is_groebner, reduce_basis, spoly
from .ncgroebner import (
    Obstruction,
    find_obstructions,
    is_nc_groebner,
    nc_complete,
    nc_divide,
    reduce_nc_basis,
)
from .noncentral import (
    NoncentralHomogenizer,
    commutators,
    nc_dehomogenize,
    nc_homogenize,
    nc_homogenize_set,
)
from .orderings import Cmp, OrderingSpec, compare, compare_gr, compare_t_gr, compare_T_gr
from .pipeline import (
    check_normal_correspondence,
    dehomogenize_gb_central,
    dehomogenize_gb_noncentral,
    gb_via_central_homogenization,
    gb_via_nc_homogenization,
    homogenize_gb_central,
    homogenize_gb_noncentral,
    normal_monomials,
)
from .polynomial import Polynomial, add, homogeneous_components, lh, mul
from .rings import RingDescriptor, free_algebra, polynomial_ring
from .scalars import GF, QQ, Field
from .syntax import format_polynomial, parse_polynomial, parse_system

__version__ = "0.1.0"
