from .evaluator import apply, basis_vector, dimension, evaluate, evaluate_recursive

__all__ = ["apply", "basis_vector", "dimension", "evaluate", "evaluate_recursive"]
