"""Hamiltonians for the NAND-formula evolution operator.

The full Hamiltonian glues a line graph (the "runway") to a balanced binary
tree whose leaves are connected, via an oracle, to extra marker states for
every NAND input bit that is 1.  All blocks share one real coupling constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np


class InputError(ValueError):
    """Bad user input.  The message is shown verbatim as the CLI Message."""


def gray_code(n: int) -> list[int]:
    """Binary-reflected Gray sequence of length 2**n, starting at 0.

    Consecutive entries differ in exactly one bit.
    """
    if n < 1:
        raise ValueError("gray_code needs n >= 1")
    return [i ^ (i >> 1) for i in range(2 ** n)]


@dataclass
class SparseSymmetric:
    """Real symmetric matrix stored as weighted index pairs plus a diagonal.

    Each off-diagonal entry (i, j, w) with i < j stands for both H[i][j]
    and H[j][i].
    """

    dim: int
    off_diagonal: dict[tuple[int, int], float] = field(default_factory=dict)
    diagonal: dict[int, float] = field(default_factory=dict)

    def set_pair(self, i: int, j: int, w: float) -> None:
        if i == j:
            raise ValueError("diagonal entries go in .diagonal")
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise ValueError(f"index pair ({i}, {j}) out of range for dim {self.dim}")
        key = (min(i, j), max(i, j))
        if key in self.off_diagonal:
            raise ValueError(f"duplicate pair {key}")
        self.off_diagonal[key] = w

    def pairs(self) -> list[tuple[int, int, float]]:
        return [(i, j, w) for (i, j), w in sorted(self.off_diagonal.items())]

    def to_dense(self) -> np.ndarray:
        h = np.zeros((self.dim, self.dim))
        for (i, j), w in self.off_diagonal.items():
            h[i, j] = h[j, i] = w
        for k, w in self.diagonal.items():
            h[k, k] = w
        return h

    def embedded(self, dim: int, offset: int = 0) -> "SparseSymmetric":
        """Copy with every index moved up by `offset`, inside a larger matrix."""
        if offset + self.dim > dim:
            raise ValueError("embedding does not fit")
        out = SparseSymmetric(dim)
        for (i, j), w in self.off_diagonal.items():
            out.off_diagonal[(i + offset, j + offset)] = w
        for k, w in self.diagonal.items():
            out.diagonal[k + offset] = w
        return out

    def __add__(self, other: "SparseSymmetric") -> "SparseSymmetric":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out = SparseSymmetric(self.dim, dict(self.off_diagonal), dict(self.diagonal))
        for key, w in other.off_diagonal.items():
            out.off_diagonal[key] = out.off_diagonal.get(key, 0.0) + w
        for k, w in other.diagonal.items():
            out.diagonal[k] = out.diagonal.get(k, 0.0) + w
        return out


@dataclass
class NandInputs:
    """The boolean inputs of the NAND formula, one per tree leaf."""

    x: list[bool]


@dataclass
class FruitSpec:
    """Complete user input for one compilation run."""

    file_prefix: str
    nb_line: int
    nb_tree: int
    g: float
    door: int
    bands_text: str
    nt_line: int = 1
    r_line: int = 2
    nt_tree: int = 1
    nt_meta: int = 1
    r_meta: int = 2

    def validate(self) -> None:
        if self.nb_line < 1:
            raise InputError("line qubit count must be at least 1")
        if self.nb_tree < 2:
            raise InputError(
                "tree qubit count must be at least 2 (a one-qubit tree has no leaves)"
            )
        ns_line = 2 ** self.nb_line
        if not 0 <= self.door <= ns_line - 1:
            raise InputError(
                f"line door must lie in [0, {ns_line - 1}], got {self.door}"
            )
        for name, value in (("line", self.r_line), ("meta", self.r_meta)):
            if value < 2 or value % 2 != 0:
                raise InputError(f"{name} order must be even and positive, got {value}")
        for name, value in (
            ("line", self.nt_line),
            ("tree", self.nt_tree),
            ("meta", self.nt_meta),
        ):
            if value < 1:
                raise InputError(f"{name} trot count must be positive, got {value}")
        if not np.isfinite(self.g):
            raise InputError("coupling constant must be finite")


@dataclass(frozen=True)
class FruitLayout:
    """Derived index geometry of the assembled Hamiltonian.

    Global state indices: the line occupies [0, ns_line); the tree occupies
    [ns_line, ns_line + ns_tree) in heap order with the dud at local 0 and
    the root at local 1; leaf k sits at ns_line + ns_lvs + k and its oracle
    marker state at ns_line + ns_tree + k.
    """

    nb_line: int
    nb_tree: int
    ns_line: int
    ns_tree: int
    ns_lvs: int
    nb_lvs: int
    tree_offset: int
    oracle_block_offset: int
    extra_offset: int
    nb_total: int
    ns_total: int

    @classmethod
    def from_counts(cls, nb_line: int, nb_tree: int) -> "FruitLayout":
        ns_line = 2 ** nb_line
        ns_tree = 2 ** nb_tree
        nb_total = num_qubits_required(nb_line, nb_tree)
        return cls(
            nb_line=nb_line,
            nb_tree=nb_tree,
            ns_line=ns_line,
            ns_tree=ns_tree,
            ns_lvs=ns_tree // 2,
            nb_lvs=nb_tree - 1,
            tree_offset=ns_line,
            oracle_block_offset=ns_line + ns_tree // 2,
            extra_offset=ns_line + ns_tree,
            nb_total=nb_total,
            ns_total=2 ** nb_total,
        )

    @property
    def dud_index(self) -> int:
        return self.ns_line

    @property
    def root_index(self) -> int:
        return self.ns_line + 1

    def leaf_index(self, k: int) -> int:
        return self.oracle_block_offset + k

    def extra_index(self, k: int) -> int:
        return self.extra_offset + k


def num_qubits_required(nb_line: int, nb_tree: int) -> int:
    """Smallest N with 2^nb_line + (3/2) 2^nb_tree <= 2^N."""
    if nb_line < 1 or nb_tree < 2:
        raise ValueError("need nb_line >= 1 and nb_tree >= 2")
    need = 2 ** nb_line + 3 * 2 ** (nb_tree - 1)
    return (need - 1).bit_length()


def build_line_hamiltonian(nb_line: int, g: float) -> SparseSymmetric:
    """Weighted incidence matrix of the line graph in Gray order.

    Edge j connects the j-th and (j+1)-th states of the Gray sequence, so
    every edge joins states differing in a single bit.
    """
    if nb_line < 1:
        raise ValueError("nb_line must be >= 1")
    seq = gray_code(nb_line)
    h = SparseSymmetric(2 ** nb_line)
    for u, v in zip(seq, seq[1:]):
        h.set_pair(u, v, g)
    return h


def build_tree_hamiltonian(nb_tree: int, g: float) -> SparseSymmetric:
    """Weighted incidence matrix of a balanced binary tree in heap order.

    Node 0 is the isolated dud; node 1 is the root; children of node j are
    2j and 2j+1.  Leaves are local indices [2^(nb_tree-1), 2^nb_tree).
    """
    if nb_tree < 2:
        raise ValueError("nb_tree must be >= 2")
    h = SparseSymmetric(2 ** nb_tree)
    for j in range(1, 2 ** (nb_tree - 1)):
        h.set_pair(j, 2 * j, g)
        h.set_pair(j, 2 * j + 1, g)
    return h


def tree_edges(nb_tree: int) -> list[tuple[int, int]]:
    """Parent-child pairs (j, 2j) and (j, 2j+1) in heap order."""
    out = []
    for j in range(1, 2 ** (nb_tree - 1)):
        out.append((j, 2 * j))
        out.append((j, 2 * j + 1))
    return out


_INT_RE = re.compile(r"-?\d+")


def parse_bands(bands_text: str, ns_lvs: int) -> NandInputs:
    """Decode band notation "a1,b1 a2,b2 ..." into NAND input bits.

    Integers may be separated by any non-digit symbols.  x_k = 1 iff k lies
    in some closed interval [a_i, b_i].  Bands must be sorted, in range,
    non-decreasing, and separated by at least one unset index.
    """
    values = [int(tok) for tok in _INT_RE.findall(bands_text)]
    if len(values) % 2 != 0:
        raise InputError(
            f"bands must contain an even number of integers, got {len(values)}"
        )
    for v in values:
        if v < 0:
            raise InputError(f"band endpoint {v} is negative")
    bands = [(values[i], values[i + 1]) for i in range(0, len(values), 2)]
    for a, b in bands:
        if b < a:
            raise InputError(f"band ({a}, {b}) is decreasing")
    for (a1, b1), (a2, b2) in zip(bands, bands[1:]):
        gap = a2 - b1
        if gap == 1:
            raise InputError(
                f"bands ({a1}, {b1}) and ({a2}, {b2}) are adjacent and can be merged"
            )
        if gap <= 0:
            raise InputError(f"bands ({a1}, {b1}) and ({a2}, {b2}) overlap")
    if bands and bands[-1][1] > ns_lvs - 1:
        raise InputError(
            f"band endpoint {bands[-1][1]} exceeds the last leaf index {ns_lvs - 1}"
        )
    x = [False] * ns_lvs
    for a, b in bands:
        for k in range(a, b + 1):
            x[k] = True
    return NandInputs(x)


@dataclass
class FruitHamiltonians:
    """All Hamiltonian blocks, each embedded at global indices in dim ns_total."""

    line: SparseSymmetric
    tree: SparseSymmetric
    glue: SparseSymmetric
    ora: SparseSymmetric
    bulk: SparseSymmetric
    corr: SparseSymmetric
    fruit: SparseSymmetric


def assemble_fruit(spec: FruitSpec) -> tuple[FruitLayout, FruitHamiltonians]:
    """Build the layout and every Hamiltonian block from a validated spec.

    The glue couples the line door to the tree root; the oracle couples leaf
    k to its marker state whenever the NAND input x_k is 1.  The full
    Hamiltonian is the entrywise sum of all blocks, padded with zeros up to
    the power-of-two dimension ns_total.
    """
    spec.validate()
    layout = FruitLayout.from_counts(spec.nb_line, spec.nb_tree)
    x = parse_bands(spec.bands_text, layout.ns_lvs)
    dim = layout.ns_total

    line = build_line_hamiltonian(spec.nb_line, spec.g).embedded(dim)
    tree = build_tree_hamiltonian(spec.nb_tree, spec.g).embedded(
        dim, layout.tree_offset
    )

    glue = SparseSymmetric(dim)
    glue.set_pair(spec.door, layout.root_index, spec.g)

    ora = SparseSymmetric(dim)
    for k, bit in enumerate(x.x):
        if bit:
            ora.set_pair(layout.leaf_index(k), layout.extra_index(k), spec.g)

    bulk = line + tree
    corr = glue + ora
    return layout, FruitHamiltonians(
        line=line, tree=tree, glue=glue, ora=ora,
        bulk=bulk, corr=corr, fruit=bulk + corr,
    )
