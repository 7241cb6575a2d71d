import os
import sys

# run against the checkout even when the package is not installed
_src = os.path.join(os.path.dirname(__file__), "..", "src")
if os.path.isdir(_src):
    sys.path.insert(0, os.path.abspath(_src))
