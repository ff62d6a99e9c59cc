"""Exception types shared across the toolkit."""


class CatStrictError(Exception):
    """Base class for every error raised by this package."""


class DanglingIdError(CatStrictError):
    def __init__(self, where, ident):
        super().__init__(f"{where}: unknown id {ident!r}")
        self.where = where
        self.ident = ident


class BoundaryMismatchError(CatStrictError):
    pass


class ClassViolationError(CatStrictError):
    pass


class HypothesisError(CatStrictError):
    pass


class ResourceGuardError(CatStrictError):
    pass


class TruncationError(CatStrictError):
    pass


class IncompleteTableError(CatStrictError):
    pass


class ArityError(CatStrictError):
    pass


class WellDefinednessError(CatStrictError):
    pass


class NotInvertibleError(CatStrictError):
    def __init__(self, obj, component):
        super().__init__(f"component at {obj!r} ({component!r}) is not invertible")
        self.obj = obj
        self.component = component


class TheoremCheckError(CatStrictError):
    """A property that holds by theory failed; this always points at a bug."""


class FormatError(CatStrictError):
    pass
