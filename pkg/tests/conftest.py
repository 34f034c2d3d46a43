import os
import sys

# Tests import shared helpers as a top-level module (``from test_utils import ...``).
sys.path.insert(0, os.path.dirname(__file__))
