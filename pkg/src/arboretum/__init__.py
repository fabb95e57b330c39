"""Rotation correspondence between planar reduced trees and planar rooted
hypertrees, with the Hopf, pre-Lie and operad structures on both sides."""

from .trees import (
    HYPER,
    LEAF,
    REDUCED,
    VERTEX,
    DecorationScheme,
    Forest,
    HyperEdge,
    HyperTree,
    Leaf,
    Node,
    ParseError,
    beta,
    bplus,
    butcher,
    grade,
    leaf_count,
    parse,
    to_text,
    vee,
    vertex_count,
    weight,
)
from .rotation import omega, phi, phi_decorated, phi_inv, vertex_leaf_map
from .linear import LinComb

__version__ = "0.1.0"
