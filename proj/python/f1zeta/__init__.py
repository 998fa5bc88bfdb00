"""Class polynomials, F1-zeta and Ihara zeta functions of loose graphs."""

from ._f1zeta import (
    BudgetExceeded,
    Graph,
    GraphError,
    IharaDomainError,
    ParseError,
    class_polynomial,
    class_string,
    count_points,
    edge_matrix_inverse,
    ihara_inverse,
    run_cli,
    trace,
    verify,
    zeta_factors,
    zeta_string,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphError",
    "IharaDomainError",
    "ParseError",
    "class_polynomial",
    "class_string",
    "count_points",
    "edge_matrix_inverse",
    "ihara_inverse",
    "run_cli",
    "trace",
    "verify",
    "zeta_factors",
    "zeta_string",
]
