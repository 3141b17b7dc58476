"""Exception taxonomy shared by every module."""


class PoscertError(Exception):
    pass


class CycleError(PoscertError):
    """A cover relation generates a directed cycle (antisymmetry fails)."""


class UnknownLabel(PoscertError):
    pass


class SizeLimit(PoscertError):
    pass


class CompositionMismatch(PoscertError):
    pass


class IndexOutOfRange(PoscertError):
    pass


class NotAPoset(PoscertError):
    """A pushout produced a preorder with a nontrivial cycle."""


class NotACocone(PoscertError):
    pass


class NotMonotone(PoscertError):
    pass


class NotASemilattice(PoscertError):
    pass


class NotAChain(PoscertError):
    pass


class NotAZigzag(PoscertError):
    pass


class NotATree(PoscertError):
    pass


class NoRetraction(PoscertError):
    """Exhaustive search found no monotone retraction."""


class IllFormedQuery(PoscertError):
    pass


class NotInCatalog(PoscertError):
    pass


class NoWitnessRoute(PoscertError):
    """No constructive route is known for the requested certificate."""


class InvalidCertificate(PoscertError):
    """Well-formed certificate file whose stored data cannot certify anything
    (for example a stored map that is not even monotone)."""


class ParseError(PoscertError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
