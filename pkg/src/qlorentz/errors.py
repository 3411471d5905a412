"""Exception types shared across the package."""


class ContractError(ValueError):
    """A numeric contract was violated (non-Hermitian input, bad determinant, ...)."""


class PositivityError(ContractError):
    """A matrix required to be positive semidefinite has a genuinely negative eigenvalue."""


class SizeError(ValueError):
    """A requested dimension exceeds the configured maximum."""
