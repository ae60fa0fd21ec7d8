"""Generalized K4-hypercube reliability toolkit.

Construct family members, evaluate the exact closed-form reliability
parameters, and verify them against brute-force search at desk scale.
"""

from . import closed_form, cube_graph, oracle

__all__ = ["closed_form", "cube_graph", "oracle"]
