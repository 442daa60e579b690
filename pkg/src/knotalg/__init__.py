"""knotalg: a crossing-algebra toolkit for arborescent knots and links.

Expressions over crossings, integral twists, mirror rotation and tangle
addition are evaluated to connectivity classes with loop counters, giving
component counts, rational knot/link classification and enumeration,
bracket state sums, state cubes with merge/split edges, and checkerboard
mod-2 Laplacian nullity, all cross-checkable against an independent
strand-tracing oracle.
"""

from .algebra import (
    ConnClass,
    ConnValue,
    EvalTrace,
    OpacityReport,
    annotated_text,
    closure_components,
    closure_count,
    cross,
    eval_conn,
    eval_smoothed,
    mul,
    opacity,
    trace,
)
from .bracket import (
    LaurentPoly,
    RawBracket,
    bracket,
    crossing_count,
    expand_crossings,
    raw_bracket,
)
from .enumeration import (
    TableEntry,
    canonical,
    compositions_with_big_ends,
    rational_table,
)
from .errors import CapacityError, ConsistencyError
from .expr import (
    Concat,
    Cross,
    CrossingNeg,
    CrossingPos,
    Expr,
    ExprSyntaxError,
    IntTangle,
    concat,
    continued_fraction,
    leaves,
    mirror,
    parse,
    pretzel,
    replace_leaf,
    to_text,
)
from .graph import (
    GF2Matrix,
    PlaneGraph,
    closure_nullity,
    conductance,
    dualize,
    mod2_laplacian,
    nullity_gf2,
    sp_network,
    to_multigraph,
)
from .oracle import Diagram, build_diagram, trace_components, trace_state_loops
from .rational import (
    Frac,
    INF,
    ParityClass,
    cf_of_fraction,
    cf_value,
    classify_fraction,
    parse_fraction,
    schubert_equivalent,
)
from .tensor import (
    DeltaTerm,
    LoopStructure,
    StateCube,
    build_cube,
    classify_site_by_toggle,
    contract,
    crossing_tensor,
    smoothing_tensor,
    state_structure,
)

__version__ = "0.1.0"
