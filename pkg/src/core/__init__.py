"""
Weylham - Computational Core
Version: 1.0.0
"""
