"""Error types raised by the chemistry core."""


class ChemError(ValueError):
    """Base class for molecule parsing and perception failures."""


class SmilesSyntaxError(ChemError):
    """Malformed SMILES text: bad token, unbalanced ring bond or parenthesis."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ValenceError(ChemError):
    """An atom's bond order total is not satisfiable by any allowed valence."""


class KekulizationError(ChemError):
    """No alternating double-bond assignment exists for an aromatic system."""


class InvalidStereoError(ChemError):
    """Contradictory or uninterpretable stereochemistry markers."""
