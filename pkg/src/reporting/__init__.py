"""
Per-epoch metrics, CSV artifacts and multi-seed summaries
"""
