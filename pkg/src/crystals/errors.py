"""Exception types shared across the package."""


class CrystalError(Exception):
    """Base class for all package errors."""


class InputError(CrystalError, ValueError):
    """Invalid caller-supplied input (bad type string, non-dominant weight, ...)."""


class StructureError(CrystalError):
    """A structural invariant failed; indicates corrupt data or a bug."""


class BudgetError(CrystalError):
    """A generation budget was exceeded."""
