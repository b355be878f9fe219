# coding: utf-8

# # The command-line tool
#
# The `oddcut` command reads plain-text files: an instance, a point, or a weighted graph.
# This script writes a few files to a temporary directory and runs the tool on them.

import subprocess
import sys
import tempfile
from pathlib import Path

work = Path(tempfile.mkdtemp())

# Instance files start with `p bmatch n m mode`.  In `tsp` mode every b is 2 and every u
# is 1, so the vertex lines may be left out.  Edge ids are arbitrary tokens.

(work / "six.txt").write_text("""c triangle with pendant edges
p bmatch 6 6 tsp
e 12 1 2
e 13 1 3
e 23 2 3
e 14 1 4
e 25 2 5
e 36 3 6
""")
(work / "six.x").write_text("x 12 1/2\nx 13 1/2\nx 23 1/2\nx 14 1\nx 25 1\nx 36 1\n")


def oddcut(*args):
    proc = subprocess.run([sys.executable, "-m", "oddcut", *map(str, args)], capture_output=True, text=True)
    print("$ oddcut", *args, f"   (exit {proc.returncode})")
    print(proc.stdout + proc.stderr)


# Exit status 1 means a violated inequality was found.  --oracle-check repeats the work
# by brute force on small inputs.

oddcut("separate", work / "six.txt", work / "six.x", "--count-maxflows", "--oracle-check")

# Graph files hold `e id a b weight` lines.

(work / "g.txt").write_text("e 0 a b 3\ne 1 b c 1\ne 2 c d 3\ne 3 d a 1/2\n")
oddcut("gomory-hu", work / "g.txt")
oddcut("tcut", work / "g.txt", "-T", "a,c")

# Malformed input gives exit status 2 and names the offending line.

(work / "bad.x").write_text("x 12 1/2\nx 13 half\n")
oddcut("separate", work / "six.txt", work / "bad.x")
