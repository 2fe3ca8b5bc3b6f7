"""Chord diagrams, framings, interlace graphs, split decomposition, and
enumeration of curve shadows on surfaces."""

from __future__ import annotations

from .chords import (
    ChordDiagram,
    all_framings,
    all_unframed_diagrams,
    canonical_form,
    equivalent,
    interlace_graph,
    komposition,
    parse_line,
    parse_unframed,
    parse_word,
    plumbing,
    smoothing,
    spheric_sum,
    to_line,
)
from .errors import (
    FiloopError,
    FramingError,
    LetterCountError,
    NotBicolourable,
    NotCircleGraph,
    NotCL2,
    NotGaussian,
    NotPrime,
)
from .forms import (
    check_CL2,
    check_CL12,
    check_EN1,
    check_EN2,
    check_RC,
    genus0_framings,
    is_gaussian,
    min_genus,
    rosenstiehl,
    solve_CL2,
)
from .generate import (
    brute_force_gaussian,
    construct_gaussian_from_CL2,
    generate_gaussian,
    tabulate_spheriloops,
)
from .glt import (
    GraphLabelledTree,
    accessibility_graph,
    compute_weights,
    cunningham,
    gaussian_via_glt,
    glt_canonical_form,
    glt_from_json,
    glt_to_dot,
    glt_to_json,
)
from .graphs import (
    SimpleGraph,
    connected_graphs,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)
from .realize import (
    enumerate_realizations,
    enumerate_spheriloops,
    is_circle_graph,
    min_genus_framings,
    realize_prime,
)
from .render import diagram_to_svg
from .ribbon import face_count, genus, intersection_form

__version__ = "0.1.0"

__all__ = [
    "ChordDiagram",
    "FiloopError",
    "FramingError",
    "GraphLabelledTree",
    "LetterCountError",
    "NotBicolourable",
    "NotCL2",
    "NotCircleGraph",
    "NotGaussian",
    "NotPrime",
    "SimpleGraph",
    "accessibility_graph",
    "all_framings",
    "all_unframed_diagrams",
    "brute_force_gaussian",
    "canonical_form",
    "check_CL12",
    "check_CL2",
    "check_EN1",
    "check_EN2",
    "check_RC",
    "compute_weights",
    "connected_graphs",
    "construct_gaussian_from_CL2",
    "cunningham",
    "diagram_to_svg",
    "enumerate_realizations",
    "enumerate_spheriloops",
    "equivalent",
    "face_count",
    "gaussian_via_glt",
    "generate_gaussian",
    "genus",
    "genus0_framings",
    "glt_canonical_form",
    "glt_from_json",
    "glt_to_dot",
    "glt_to_json",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "interlace_graph",
    "intersection_form",
    "is_circle_graph",
    "is_gaussian",
    "komposition",
    "min_genus",
    "min_genus_framings",
    "parse_line",
    "parse_unframed",
    "parse_word",
    "plumbing",
    "realize_prime",
    "rosenstiehl",
    "smoothing",
    "solve_CL2",
    "spheric_sum",
    "tabulate_spheriloops",
    "to_line",
    "__version__",
]
