"""Compile exp(iH) into elementary gates and measure the Frobenius error.

Shows the two knobs that trade gate count against accuracy: the product
formula order and the number of trots (Trotter repetitions, rendered as
LOOP/NEXT groups in the output files).
"""

from nandfruit import FruitSpec, assemble_fruit, compile_fruit, verify_compile


def run(nt_meta, r_meta):
    spec = FruitSpec(
        file_prefix="demo", nb_line=3, nb_tree=3, g=0.2, door=2,
        bands_text="0,1;3,3", nt_line=4, r_line=2, nt_tree=2,
        nt_meta=nt_meta, r_meta=r_meta,
    )
    program, report = compile_fruit(spec)
    _, blocks = assemble_fruit(spec)
    error = verify_compile(blocks.fruit, program)
    return report.num_elementary_ops, error


print("meta order 2, doubling the trot count (expect ~4x error drop):")
prev = None
for nt in (1, 2, 4, 8):
    ops, err = run(nt, 2)
    ratio = f"  ratio {prev / err:.2f}" if prev else ""
    print(f"  nt_meta={nt}: {ops:6d} ops, error {err:.3e}{ratio}")
    prev = err

print("\nraising the meta order instead (more gates per trot):")
for r in (2, 4):
    ops, err = run(2, r)
    print(f"  order {r}: {ops:6d} ops, error {err:.3e}")
