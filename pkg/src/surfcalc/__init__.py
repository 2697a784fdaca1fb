"""Surface terms, the surface operad and cobordism category, and simplicial rectification tools."""

__version__ = "0.1.0"
