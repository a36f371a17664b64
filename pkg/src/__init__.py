"""
Weylham - Weyl groupoid Cayley graphs of finite generalized root systems
Hamiltonian cycles, adjacency spectra and Alt(n) Cayley graphs
"""

__version__ = "1.0.0"
