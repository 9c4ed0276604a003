"""Exact computations in right-angled Coxeter groups and their Hecke
algebras: canonical words, Kazhdan-Lusztig polynomials, cell classification
for the hyperbolic polygon groups, distinguished involutions, W-graphs, and
a Poincare-disk tessellation renderer."""

from .coxeter import (
    CoxeterSystem,
    Element,
    IDENTITY,
    ResourceLimitError,
    Word,
    make_polygon_group,
    make_right_angled,
    sort_key,
)
from .laurent import LaurentPoly, PolyQ
from .wordgeom import (
    BlockDecomposition,
    CommutingBlock,
    Precell,
    Segment,
    decompose,
    is_line,
    is_segment_at,
    precell_rep,
    same_precell,
)
from .klpoly import KLTable
from .hecke import (
    BoundednessReport,
    HeckeElement,
    StructureRow,
    a_lower_bound,
    bar,
    bound_N,
    boundedness_check,
    delta,
    distinguished_involutions,
    f_consts,
    g_consts,
    h_consts,
    t_mul,
)
from .cells import (
    CellLabel,
    MoveBInstance,
    MoveTrace,
    PartitionReport,
    classify_left,
    classify_right,
    classify_two_sided,
    le_left_step,
    move_a,
    move_b,
    mu_witness_move_b,
    verify_partition,
)
from .wgraph import WGraph, build_wgraph, check_relations, cycle_census, export, is_tree, tau_action
from .tessellate import Chamber, base_polygon, tessellate

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BoundednessReport",
    "CellLabel",
    "Chamber",
    "CommutingBlock",
    "CoxeterSystem",
    "Element",
    "HeckeElement",
    "IDENTITY",
    "KLTable",
    "LaurentPoly",
    "MoveBInstance",
    "MoveTrace",
    "PartitionReport",
    "PolyQ",
    "Precell",
    "ResourceLimitError",
    "Segment",
    "StructureRow",
    "WGraph",
    "Word",
    "a_lower_bound",
    "bar",
    "base_polygon",
    "bound_N",
    "boundedness_check",
    "build_wgraph",
    "check_relations",
    "classify_left",
    "classify_right",
    "classify_two_sided",
    "cycle_census",
    "decompose",
    "delta",
    "distinguished_involutions",
    "export",
    "f_consts",
    "g_consts",
    "h_consts",
    "is_line",
    "is_segment_at",
    "is_tree",
    "le_left_step",
    "make_polygon_group",
    "make_right_angled",
    "move_a",
    "move_b",
    "mu_witness_move_b",
    "precell_rep",
    "same_precell",
    "sort_key",
    "t_mul",
    "tau_action",
    "tessellate",
    "verify_partition",
]
