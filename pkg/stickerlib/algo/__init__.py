"""
Algorithms: automaton construction and acceptance, classical oracle,
sticker encoding, hybridization simulation and model checking.
"""
