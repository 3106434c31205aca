from dataclasses import dataclass

from .errors import BudgetExceeded


@dataclass(frozen=True)
class Budgets:
    """Size limits guarding every exhaustive computation.

    The defaults match the CLI flag defaults and keep the full verification
    run within a few minutes.
    """

    max_oracle_degree: int = 8
    max_backtrack_degree: int = 16
    max_k: int = 4
    tuple_budget: int = 10**7
    max_elements: int = 10**6

    def check_tuples(self, n, k):
        if k < 1:
            raise ValueError(f"arity must be positive, got {k}")
        if k > self.max_k:
            raise BudgetExceeded(f"arity {k} exceeds max_k={self.max_k}")
        if n**k > self.tuple_budget:
            raise BudgetExceeded(
                f"{n}^{k} tuples exceed tuple budget {self.tuple_budget}")

    def check_elements(self, count):
        if count > self.max_elements:
            raise BudgetExceeded(
                f"{count} elements exceed element budget {self.max_elements}")


DEFAULT_BUDGETS = Budgets()
