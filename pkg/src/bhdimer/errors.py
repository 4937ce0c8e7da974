"""Exception types shared across the package."""


class DomainError(ValueError):
    """Physically invalid input: singular couplings, nonpositive temperature."""


class ScatteringSingularityError(DomainError):
    """A scattering-channel denominator (u0 + u2 or u0 - 2*u2) vanishes."""


class NonpositiveTemperatureError(DomainError):
    """Thermal quantities require temperature > 0."""


class NoCrossingInRangeError(Exception):
    """The ground-state label never changes inside the scanned interval."""
