"""
Shared domain types: propositional letters, system models, formula
automata, CTL constructs, DNA strands and code tables.
"""
