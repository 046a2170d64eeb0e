"""Exception types shared across the package."""


class GentleOrderError(Exception):
    """Base class for all input errors (CLI exit code 2)."""


class FormatError(GentleOrderError):
    """Malformed ``.gq`` or ``.hep`` text."""

    def __init__(self, message, line=0, column=0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class PresentationError(GentleOrderError):
    """Structurally invalid presentation: unknown reference, duplicate id,
    non-composable relation, empty quiver."""

    def __init__(self, message, line=0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class NotGentle(GentleOrderError):
    def __init__(self, vertex, reason):
        self.vertex = vertex
        self.reason = reason
        super().__init__(f"not gentle at vertex {vertex!r}: {reason}")


class NotGentleOrder(GentleOrderError):
    """A permitted thread exists. ``thread`` is its arrow sequence in path
    order (first arrow first); it is empty for a stationary thread at an
    isolated ``vertex``."""

    def __init__(self, thread, vertex=None):
        self.thread = tuple(thread)
        self.vertex = vertex
        if self.thread:
            shown = " ".join(self.thread)
            super().__init__(f"not a gentle order: permitted thread {shown}")
        else:
            super().__init__(f"not a gentle order: stationary permitted thread at vertex {vertex!r}")


class DisconnectedInput(GentleOrderError):
    def __init__(self, n_components, what="this operation"):
        self.n_components = n_components
        super().__init__(f"{what} needs a connected quiver; input has {n_components} components")


class NotTransitionVertex(GentleOrderError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"{vertex!r} is not a transition vertex")


class NotKappaStable(GentleOrderError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"vertex set is not kappa-stable: kappa({witness!r}) leaves it")


class InstanceTooLarge(GentleOrderError):
    pass


class GenerationFailed(GentleOrderError):
    pass
