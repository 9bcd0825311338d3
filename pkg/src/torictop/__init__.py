"""torictop: exact combinatorial machinery from toric topology.

The package converts between fans, multi-fans, face rings and
face-number vectors, counts lattice points in (multi-)polytopes with
winding multiplicities, and computes the integral homology of
moment-angle complexes.  Every computation is exact: arbitrary
precision integers, rational arithmetic and Smith normal forms
throughout.
"""

from .simplicial import (
    SimplicialComplex, SimplicialPoset, FVector, HVector,
    f_vector, h_from_f, f_from_h, euler_relation_check,
    binomial_decomposition, pseudopower, check_g_conditions,
    check_cell_sphere, check_generalized_ds, standard_complex,
    minimal_nonfaces, vertex_count_lower_bound_ok,
)
from .fans import (
    RaySet, MultiFan, Fan, validate, cone_contains, degree_at,
    todd_genus, is_complete, battery_vectors, standard_fan, cp_fan,
    hirzebruch_fan, bott_fan, sphere_fan, winding2_demo_fan,
    fans_isomorphic, verify_fan_isomorphism, cox_kernel,
)
from .facering import (
    Polynomial, RingPresentation, GradedDims, face_ring_presentation,
    dj_presentation, betti_numbers, standard_monomial_count,
    poset_face_ring, hirzebruch_ring_class, substitution_isomorphism_exists,
)
from .polytopes import (
    MultiPolytope, OrientedLoop, EhrhartPolynomial, LaurentSum,
    boundary_loop, winding_number, is_simple_polygon, count_lattice_points,
    ehrhart, pick_check, solid_angle_count, equivariant_index,
    dual_polygon_twelve, enumerate_reflexive_polygons, shoelace_area,
    convex_hull,
)
from .momentangle import (
    ZkCell, ChainComplexZ, HomologyResult, zk_cells, zk_chain_complex,
    homology, uk_wedge_prediction, verify_wedge,
)
from .svgfig import render_svg

__version__ = "0.1.0"
