"""
Entry point: python main.py census cubic --trace 6
"""

import sys

from cli import run

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
