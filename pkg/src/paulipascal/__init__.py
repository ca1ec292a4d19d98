"""Exact Pascal and Pauli Pascal structures and the sequences built from them."""
from .graded import (
    GradedElement,
    Laurent,
    Mode,
    inverse_series,
    multiply,
    normal_order_sign,
    power,
    power_series,
)
from .hyperpyramid import (
    CoefficientTable,
    LayerSpec,
    gamma_multinomial,
    layer,
    multinomial,
    negative_layer,
    pauli_binomial,
)
from .quadratic import QuadraticNumber
from .sequences import (
    binet_k,
    fib_from_diagonals,
    fib_k,
    friendly_squares,
    pauli_fib,
    pauli_jacobsthal,
)
from .summation import RationalGF, abel_sum, euler_transform_sum

__version__ = "0.1.0"
