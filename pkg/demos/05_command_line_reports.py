"""
Command-line reports
====================

The ``ppl`` command reads a product description and prints one record per
line.  Here it is driven in-process on the bundled inputs.
"""

import io
from pathlib import Path

from periodic_products import cli

data = Path(__file__).resolve().parent / "data"


def ppl(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], stdout=out, stderr=err)
    shown = " ".join(a.name if isinstance(a, Path) else repr(a) if " " in str(a) else str(a) for a in argv)
    print(f"$ ppl {shown}   [exit {code}]")
    print(out.getvalue() + err.getvalue())


print((data / "corollary3.ppl").read_text())
ppl("analyze", data / "corollary3.ppl")
ppl("classify", data / "z3_z3.ppl", "--word", "g1:a g2:b")
ppl("lemma1-scan", data / "z2_s3.ppl", "--max-conj", 4, "--samples", 10000, "--seed", 7)
ppl("proof-suite", data / "v4_z2.ppl", "--bind", "a=a", "--bind", "g=g", "--bind", "b=b")

# n = 663 is rejected unless the run is lenient; then every verdict is labelled.
ppl("analyze", data / "lenient663.ppl", "--format", "json")
