"""
Synthetic market simulation: customers, fairness, state encoding and reward
"""
