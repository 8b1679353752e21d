"""
Q-learning: linear Q-value approximator and the pricing agent loop
"""
