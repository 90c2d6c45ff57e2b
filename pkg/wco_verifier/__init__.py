"""
Command-line verifier for weighted composition operators on H²(β).

Builds truncated operator matrices, classifies symbols and runs the
verification suite over the ``hardy.wco`` library.
"""
