"""Exception types shared across the library.

Two families: ``ValidationError`` subclasses signal bad *input* (the CLI maps
them to exit code 2), while ``InternalError`` subclasses signal that an
algorithm reached a state its own invariants rule out — always a bug.
"""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class NotWeaklyDecreasing(ValidationError):
    def __init__(self, index, detail=""):
        self.index = index
        msg = f"not weakly decreasing at index {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class BadStep(ValidationError):
    def __init__(self, index, detail=""):
        self.index = index
        msg = f"shapes {index - 1} and {index} do not differ by one unit in one part"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class BadStart(ValidationError):
    def __init__(self, detail="sequence must start with the zero vector"):
        super().__init__(detail)


class LeavesChamber(ValidationError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"path leaves the dominant chamber at step {index}")


class NotBalanced(ValidationError):
    pass


class NotLatticeWord(ValidationError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"prefix counts go out of order at position {index}")


class NotDominant(ValidationError):
    pass


class NotAllBlack(ValidationError):
    pass


class NotBoundaryVertex(ValidationError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not a boundary vertex")


class ContainsIdentityWeb(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class InternalError(RuntimeError):
    """An invariant the algorithms guarantee was violated; indicates a bug."""


class NoRuleApplicable(InternalError):
    def __init__(self, frontier):
        self.frontier = tuple(frontier)
        super().__init__(f"no growth rule applies to frontier {self.frontier}")


class NoMatch(InternalError):
    pass


class NoReturn(InternalError):
    pass


class InexactDivision(InternalError):
    pass
