"""Exact tools for RAAGs, curve graphs of punctured surfaces and their finite subgraphs."""

__version__ = "0.1.0"
