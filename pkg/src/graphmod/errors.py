"""Exception types shared across the solvers."""


class GraphModError(Exception):
    pass


class ComponentTooSmallError(GraphModError, ValueError):
    pass


class InvalidSolutionError(GraphModError, ValueError):
    """A seed solution handed to a local-search routine fails its predicate."""


class ResourceLimitError(GraphModError):
    """An exact routine refused an instance above its configured size cap."""


class ParseError(GraphModError, ValueError):
    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
