"""Regular affine subgroups over F_2 and their code automorphism lifts."""

__version__ = "0.1.0"
