"""Tree-pair calculus for the Higman-Thompson groups V_n."""

from .words import Point, tail_equivalent
from .elements import (
    Element,
    apply_point,
    compose,
    conjugate,
    commutes,
    expand_at,
    identity,
    invert,
    order,
    parse_element,
    random_element,
    serialize_element,
)
from .revealing import (
    Chain,
    DiffComponent,
    RevealingPair,
    RollingMove,
    build_pair,
    difference_components,
    is_revealing,
    make_revealing,
    partition_periodic_moving,
    rolling,
    slope_exponent_at,
    spine_and_periodic_orbit,
    trace_iac,
)
from .flowgraph import (
    FlowGraph,
    build_flow_graph,
    component_signature,
    component_support,
    signature_multiset,
)
from .traintrack import TrainTrack, build_train_track

__all__ = [name for name in dir() if not name.startswith("_")]
