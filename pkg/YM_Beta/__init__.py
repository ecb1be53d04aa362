"""YM_Beta: one-loop beta function of first-order Yang-Mills by heat-kernel counterterms."""

__version__ = "1.0.0"
