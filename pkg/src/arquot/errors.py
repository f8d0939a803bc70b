"""Exception hierarchy.

Everything derives from :class:`ArquotError` so callers (the CLI in
particular) can catch library failures in one place.
"""


class ArquotError(Exception):
    pass


class InvalidRank(ArquotError, ValueError):
    pass


class NoSuchAutomorphism(ArquotError, ValueError):
    pass


class DiagramMismatch(ArquotError, ValueError):
    pass


class NotAnAutomorphism(ArquotError, ValueError):
    """An affine map (g, s) that does not preserve the arrows of ZΔ."""


class NotRightward(ArquotError, ValueError):
    pass


class MeshViolation(ArquotError):
    pass


class InvalidQuiver(ArquotError, ValueError):
    pass


class NotTauStable(ArquotError):
    def __init__(self, vertex, image):
        self.vertex = vertex
        self.image = image
        super().__init__(
            f"deletion set is not tau-stable: vertex {vertex} is in the set "
            f"but tau({vertex}) = {image} is not"
        )


class SpecMismatch(ArquotError):
    pass


class MissingCoveringData(ArquotError):
    pass


class WindowTooSmall(ArquotError):
    pass


class HypothesisViolated(ArquotError):
    def __init__(self, name, detail=""):
        self.name = name
        msg = f"hypothesis violated: {name}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class RankTooSmall(ArquotError, ValueError):
    pass
