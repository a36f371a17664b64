"""
Weylham - Knowledge
Purpose: Embedded root systems, cycle words and spectral tables
"""
