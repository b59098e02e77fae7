"""Contact: broad phase, primitive distances, log barrier, CCD and friction."""
from .barrier import PenetrationError, barrier, barrier_pair, initial_barrier_stiffness
from .broad_phase import SurfacePrimitives, broad_phase, brute_force_pairs, ground_candidates
from .ccd import ccd_max_step, pair_toi
from .distance import EE, PG, PT, classify_ee, classify_pt, pair_distance, region_name
from .friction import FrictionPair, friction_energy, friction_pairs_update, mollifier
from .pairs import ContactPair, ContactSet, find_contacts, stencils

__all__ = [
    "PT", "EE", "PG", "pair_distance", "classify_pt", "classify_ee", "region_name", "barrier",
    "barrier_pair", "initial_barrier_stiffness", "PenetrationError", "SurfacePrimitives", "broad_phase",
    "brute_force_pairs", "ground_candidates", "ccd_max_step", "pair_toi", "FrictionPair",
    "friction_pairs_update", "friction_energy", "mollifier", "ContactPair", "ContactSet",
    "find_contacts", "stencils",
]
