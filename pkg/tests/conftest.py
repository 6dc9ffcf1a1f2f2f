import sys
from pathlib import Path

TESTS_DIR = Path(__file__).resolve().parent
DATA_DIR = TESTS_DIR / "data"

# make the grammar-level generator (tests/genmol.py) importable
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))
