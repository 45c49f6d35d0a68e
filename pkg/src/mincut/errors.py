"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: bad vertex ids, unreadable files, invalid options."""


class ContractError(RuntimeError):
    """A caller broke an operation's precondition (e.g. duplicate insert)."""


class WeightOverflowError(OverflowError):
    """An edge weight or weight sum does not fit into an unsigned 64-bit integer."""
