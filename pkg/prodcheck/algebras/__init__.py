from .builtin import (
    cayley_dickson, cd_multiply, cross_vpa, expected_failing_suites, list_builtins,
    resolve_builtin, zero_wedge_control,
)

__all__ = [
    "cayley_dickson", "cd_multiply", "cross_vpa", "expected_failing_suites", "list_builtins",
    "resolve_builtin", "zero_wedge_control",
]
