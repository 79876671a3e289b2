"""Write and re-read the English / Picture file pair for a tiny program.

The English file is a lossless textual gate program with nestable
LOOP/NEXT groups; the Picture file is an ASCII diagram, one column per
qubit with the highest qubit on the left.
"""

import tempfile
from pathlib import Path

from nandfruit import (
    FruitSpec,
    compile_fruit,
    count_elementary_ops,
    expand,
    parse_english,
    write_english,
    write_picture,
)

spec = FruitSpec(
    file_prefix="demo", nb_line=2, nb_tree=2, g=0.5, door=1,
    bands_text="0,0", nt_meta=3,
)
program, report = compile_fruit(spec)

with tempfile.TemporaryDirectory() as d:
    eng = Path(d) / "demo_qfru_eng.txt"
    pic = Path(d) / "demo_qfru_pic.txt"
    write_english(program, eng)
    write_picture(program, pic)

    print("English file (first 12 lines):")
    for line in eng.read_text().splitlines()[:12]:
        print(" ", line)

    print("\nPicture file (same lines, drawn):")
    for line in pic.read_text().splitlines()[:12]:
        print(" ", line)

    back = parse_english(eng)
    print("\nround trip preserves the expansion:",
          expand(back) == expand(program))
    print("loop-aware op count:", count_elementary_ops(program),
          "(flat expansion length:", len(expand(program)), ")")
