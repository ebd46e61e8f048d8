"""Discrete Euler calculus on finite posets, with an application to
noise-immune target counting on acyclic sensor networks."""

from .calculus import (
    FilterLinearForm,
    PosetFunction,
    PosetMap,
    indicator,
    integrate,
    integrate_excursion,
    is_ascending_closure_operator,
    is_chi_distinguished,
    mobius_coefficients,
    pullback,
    pushforward,
)
from .document import PosetDocument, to_dot
from .errors import (
    CycleDetected,
    EulerScanError,
    ImpossibleShape,
    NegativeValues,
    NotMonotone,
    NotOrderPreserving,
    ParseError,
    SizeLimitExceeded,
    UnknownFunction,
)
from .network import (
    NoiseSpec,
    ReducedEnumeration,
    SensorNetwork,
    TargetPosition,
    TargetSet,
    corrupt,
    counting_function,
    enumerate_reduced,
    enumerate_targets,
    random_network,
    sensor_placement_plan,
)
from .poset import ElementSet, MobiusTable, Poset, are_isomorphic
from .reduction import (
    PointClass,
    ReductionReport,
    chi_minimal_model,
    classify_points,
    core,
    is_contractible,
)

__version__ = "0.1.0"

__all__ = [
    "CycleDetected",
    "ElementSet",
    "EulerScanError",
    "FilterLinearForm",
    "ImpossibleShape",
    "MobiusTable",
    "NegativeValues",
    "NoiseSpec",
    "NotMonotone",
    "NotOrderPreserving",
    "ParseError",
    "PointClass",
    "Poset",
    "PosetDocument",
    "PosetFunction",
    "PosetMap",
    "ReducedEnumeration",
    "ReductionReport",
    "SensorNetwork",
    "SizeLimitExceeded",
    "TargetPosition",
    "TargetSet",
    "UnknownFunction",
    "are_isomorphic",
    "chi_minimal_model",
    "classify_points",
    "core",
    "corrupt",
    "counting_function",
    "enumerate_reduced",
    "enumerate_targets",
    "indicator",
    "integrate",
    "integrate_excursion",
    "is_ascending_closure_operator",
    "is_chi_distinguished",
    "is_contractible",
    "mobius_coefficients",
    "pullback",
    "pushforward",
    "random_network",
    "sensor_placement_plan",
    "to_dot",
]
