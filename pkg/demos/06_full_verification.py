"""
Driving the whole verification suite
====================================

Everything the previous scripts demonstrated piecemeal is bundled into
the `cascade` command.  `verify` replays every identity for a range of
ranks, `count` emits one census as a table, `print-array` renders the
labelled triangles.  This script drives the same entry point the
console command uses; pass arguments of your own to replace the default
tour, e.g.

    python3 demos/06_full_verification.py verify --n 1..3 --format json
"""

import sys

from cascade.cli import main

if len(sys.argv) > 1:
    # Hand the word straight to the CLI, exit code and all.
    sys.exit(main(sys.argv[1:]))

# The default tour: the labelled array, one census table, then the
# complete identity suite over the first two ranks.
print("=== cascade print-array --n 1 ===")
main(["print-array", "--n", "1", "--coords"])

print("\n=== cascade count --n 1 ===")
main(["count", "--n", "1"])

print("\n=== cascade verify --n 1..2 ===")
code = main(["verify", "--n", "1..2"])
print(f"\nverify exit code: {code}")
sys.exit(code)
