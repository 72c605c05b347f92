"""Error types shared across the package."""


class UnsupportedType(ValueError):
    """Simply-laced family or rank out of the supported range."""


class NotASublattice(ValueError):
    """Change of basis between the two lattices is not integral."""


class NotDivisible(ValueError):
    """The lacety does not divide the requested denominator u."""


class NonTermination(RuntimeError):
    """Alcove reduction exceeded its iteration cap (should never fire)."""


class NotConvergent(ValueError):
    """Evaluation point outside the convergence domain (Im tau <= 0, z too large)."""


class CutoffOverflow(RuntimeError):
    """Lattice-sum energy cutoff exceeded the configured ceiling."""


class NotDominant(ValueError):
    """Weight restriction is not dominant integral where required."""


class ZeroDenominator(ValueError):
    """Denominator vanishes at the evaluation point."""


class IndexMismatch(ValueError):
    """Weights come from different enumerations / levels."""


class DegeneratePoint(ValueError):
    """z too close to a Weyl wall for a relative residual to make sense."""
