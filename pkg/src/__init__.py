"""polyflag: combinatorial invariants of polyhedral products over flag complexes."""

__version__ = "0.1.0"
