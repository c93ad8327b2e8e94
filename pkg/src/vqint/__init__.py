"""Definite integration by training variational quantum circuits as antiderivatives.

The circuit output Q(x; theta) is trained so that its input derivative
q(x; theta) = dQ/dx matches a target integrand; definite integrals are then
endpoint differences Q(b) - Q(a) of the trained antiderivative.
"""

__version__ = "0.1.0"
