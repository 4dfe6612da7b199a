"""
Bicomplex disk toolkit.

Bicomplex algebra, polynomial and point-evaluable fields, disk integral
operators, Schwarz and Dirichlet solvers for the Beltrami equation, higher
order iterated Beltrami bundles, the conjugate-Beltrami / Vekua transforms and
Hardy-norm profiling on the unit disk.
"""
