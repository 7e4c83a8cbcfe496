"""Hodge numbers of blown-up projective bundles and Lefschetz-type verdicts for elliptic fibrations."""

from .motive import EPolynomial, HodgeDiamond, diamond_from_e, e_blowup, e_curve, e_projective, e_projective_bundle, euler_char
from .ltp import LtpVerdict, table1_sweep, table3_render, verdict

__version__ = "0.1.0"
