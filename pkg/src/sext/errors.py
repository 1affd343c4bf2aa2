class SextError(ValueError):
    """Base class for input and contract errors raised by this package."""


class NotAssociativeError(SextError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        i, j, k = self.triple
        super().__init__(f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class CapExceededError(SextError):
    pass


class ClosureError(RuntimeError):
    """An extension product left its class. Always an implementation bug."""
