"""Plane-based geometric algebra for euclidean plane geometry.

Products and duality live in :mod:`pga2d.multivector`; typed line/point
views in :mod:`pga2d.elements`; norms and classification in
:mod:`pga2d.metric`; measurements and projections in :mod:`pga2d.geometry`;
reflections, motors and the transport solver in :mod:`pga2d.isometry`; the
construction-script interpreter in :mod:`pga2d.script`.
"""

from .elements import IdealPoint, Line, Point, Pseudoscalar
from .errors import (
    AlgebraError,
    ClassificationError,
    ConstructionError,
    DomainError,
    EvaluationError,
    IncidenceError,
    OrientationError,
    ParseError,
    RenderError,
    ScriptError,
)
from .geometry import (
    Decomposition,
    Measurement,
    MeasurementKind,
    angle,
    distance,
    midline,
    midpoint,
    perp_line_through,
    project,
    symmetric_line,
    triple_lines,
    triple_points,
)
from .isometry import (
    IDENTITY_MOTOR,
    GlideDecomposition,
    Motor,
    OddVersor,
    exp_bivector,
    factor_motor,
    glide_decompose,
    glide_recompose,
    interpolate,
    log_motor,
    reflect,
    rotator,
    rotor_from_lines,
    sandwich,
    solve_point_line_transport,
    translator,
    translator_by,
)
from .metric import (
    NormTag,
    classify,
    factor_point,
    ideal_inner,
    ideal_norm,
    ideal_point_of,
    is_ideal,
    norm,
    normalize,
    polar,
)
from .multivector import (
    DEFAULT_TOL,
    Multivector,
    commutator,
    dot,
    dual,
    gp,
    grade,
    join,
    outer,
    reverse,
)

__version__ = "0.1.0"
