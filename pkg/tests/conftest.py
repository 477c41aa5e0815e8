import sys
from pathlib import Path

# Make the oracle module importable from any test without packaging it.
sys.path.insert(0, str(Path(__file__).parent))
