"""Rational Bezier curves: evaluation, closed-form first derivatives,
derivative-magnitude bounds, and bound-violation experiments."""

from ._kernels import BACKEND, USING_NUMBA
from .bounds import (
    BoundReport,
    bound_profile,
    conjecture_bound,
    elevation_bound,
    weight_ratio,
)
from .curve import (
    BernsteinCoefficients,
    RationalBezierCurve,
    bernstein,
    binomial,
    curve_from_json_obj,
    curve_to_json_obj,
    decasteljau,
    elevate_once,
    eval_point,
    eval_weight,
    load_curve,
    require_valid,
    save_curve,
    validate,
)
from .derivative import (
    DerivativeForm,
    SederbergNumerator,
    build_derivative_form,
    derivative_weights,
    eval_derivative_explicit,
    eval_derivative_explicit_many,
    eval_derivative_sederberg,
    finite_difference,
    intermediate_points,
    sederberg_terms,
)
from .experiments import (
    Table1Row,
    VerdictRecord,
    conjecture_verdict,
    counterexample_family,
    read_table1_csv,
    run_table1,
    table1_row,
    write_table1_csv,
)
from .maximize import MaximizerResult, maximize_derivative_norm
from .svgplot import PlotSpec, render_plot, write_plot

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "USING_NUMBA",
    "BernsteinCoefficients",
    "BoundReport",
    "DerivativeForm",
    "MaximizerResult",
    "PlotSpec",
    "RationalBezierCurve",
    "SederbergNumerator",
    "Table1Row",
    "VerdictRecord",
    "bernstein",
    "binomial",
    "bound_profile",
    "build_derivative_form",
    "conjecture_bound",
    "conjecture_verdict",
    "counterexample_family",
    "curve_from_json_obj",
    "curve_to_json_obj",
    "decasteljau",
    "derivative_weights",
    "elevate_once",
    "elevation_bound",
    "eval_derivative_explicit",
    "eval_derivative_explicit_many",
    "eval_derivative_sederberg",
    "eval_point",
    "eval_weight",
    "finite_difference",
    "intermediate_points",
    "load_curve",
    "maximize_derivative_norm",
    "read_table1_csv",
    "render_plot",
    "require_valid",
    "run_table1",
    "save_curve",
    "sederberg_terms",
    "table1_row",
    "validate",
    "weight_ratio",
    "write_plot",
    "write_table1_csv",
    "__version__",
]
