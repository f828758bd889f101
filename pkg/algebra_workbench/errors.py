class WorkbenchError(Exception):
    """Base class of every error raised by the workbench."""


class UnknownSymbol(WorkbenchError):
    pass


class UnboundVariable(WorkbenchError):
    pass


class NotAPartialOrder(WorkbenchError):
    def __init__(self, message: str, pair: tuple[int, int]) -> None:
        super().__init__(f"{message} at {pair}")
        self.pair = pair


class SignatureMismatch(WorkbenchError):
    pass


class NotCompatible(WorkbenchError):
    pass


class FormulaSyntaxError(WorkbenchError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


class AmbiguousResidual(FormulaSyntaxError):
    pass


class IndexOutOfBound(WorkbenchError):
    pass


class UnknownInstantiation(WorkbenchError):
    pass


class InvalidParameter(WorkbenchError):
    pass


class InvalidPartition(WorkbenchError):
    pass


class CapExceeded(WorkbenchError):
    pass


class MalformedAlgebraFile(WorkbenchError):
    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownClass(WorkbenchError):
    pass


class UnknownFamily(WorkbenchError):
    pass


class UnboundedFamily(WorkbenchError):
    pass
