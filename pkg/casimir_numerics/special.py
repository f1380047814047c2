# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import numpy as np
from scipy import special


def erf_std(x):
    """Standard error function 2/sqrt(pi) * int_0^x exp(-t^2) dt.

    Scalars give a float, arrays give an array.
    """
    res = special.erf(x)
    if np.ndim(res) == 0:
        return float(res)
    return res
