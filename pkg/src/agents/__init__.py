"""
Runner workflow nodes
"""
