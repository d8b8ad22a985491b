"""
chainforge: weighted chain decompositions and k-Sperner certification
"""
__version__ = "1.0.0"
