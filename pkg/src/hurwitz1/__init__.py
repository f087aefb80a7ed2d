"""Numerical toolkit for deformed Frobenius structures on two-fold
genus-one coverings (tori with lambda = wp(s) + c).

Modules
-------
numkit      finite differences, Richardson extrapolation, contour quadrature
jets        truncated multivariate Taylor arithmetic (exact 3rd derivatives)
theta       Jacobi theta functions with characteristics, eta, Chazy machinery
torus       Weierstrass data of a covering: branch points, Thomae, Jacobians
kernels     canonical/deformed bidifferentials and their variational formulas
frobenius3  the 3-dimensional (deformed Chazy) Frobenius manifold
isomono     the Omega-system, rotation coefficients, Darboux-Egoroff checks
tau         Bergman tau-functions and G-function assembly
realdouble  the 6-dimensional real double of the deformed structure
cli         batch verification suites (`hurwitz1 verify ...`, `... sweep ...`)
"""

__version__ = "0.1.0"
