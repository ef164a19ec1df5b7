import sys
from pathlib import Path

# let test modules import the shared brute-force oracles
sys.path.insert(0, str(Path(__file__).resolve().parent))
