"""Exceptions and enumeration caps shared by every module."""

# Hard caps. Callers may lower them per call (``bound=``) but never raise them.
COVECTOR_CAP = 14
SUBSET_CAP = 20


class InputError(ValueError):
    """Malformed or contract-violating input."""


class CapacityError(RuntimeError):
    """An enumeration would exceed its size bound."""


def check_capacity(n, bound, cap, what):
    """Raise CapacityError if ``n`` exceeds the effective bound for ``what``."""
    if bound is None:
        bound = cap
    elif bound > cap:
        raise InputError(f"bound {bound} for {what} exceeds the cap {cap}")
    if n > bound:
        raise CapacityError(
            f"{what} needs ground size <= {bound}, got {n}"
        )
