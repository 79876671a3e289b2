"""Dense ground truth: matrix exponentials by eigendecomposition, gate
products for whole programs, and the norms behind the reported error.
"""

from __future__ import annotations

import numpy as np

from .hamiltonian import SparseSymmetric
from .seo import Gate, SeoProgram, expand

# largest register the dense verifier handles by default (dim 1024)
DEFAULT_MAX_VERIFY_QUBITS = 10


def _as_dense(h) -> np.ndarray:
    if isinstance(h, SparseSymmetric):
        return h.to_dense()
    return np.asarray(h, dtype=float)


def expi_hermitian(h) -> np.ndarray:
    """exp(i*H) for a real symmetric H, via eigendecomposition.

    Accepts a SparseSymmetric or a dense array.
    """
    dense = _as_dense(h)
    if not np.all(np.isfinite(dense)):
        raise ValueError("Hamiltonian has non-finite entries")
    w, v = np.linalg.eigh(dense)
    return (v * np.exp(1j * w)) @ v.conj().T


def _rotation_block(kind: str, angle: float) -> np.ndarray:
    c, s = np.cos(angle / 2), np.sin(angle / 2)
    if kind == "ROTX":
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind == "ROTY":
        return np.array([[c, -s], [s, c]])
    if kind == "ROTZ":
        return np.array([[c - 1j * s, 0], [0, c + 1j * s]])
    raise ValueError(kind)


def apply_gate(u: np.ndarray, gate: Gate, num_qubits: int) -> np.ndarray:
    """Left-multiply u by the dense matrix of one (multiply-controlled) gate."""
    dim = 2 ** num_qubits
    states = np.arange(dim)
    satisfied = np.ones(dim, dtype=bool)
    for q, pol in gate.controls:
        bit = (states >> q) & 1
        satisfied &= bit == (1 if pol else 0)

    if gate.kind == "PHAS":
        # phase on the control-satisfied subspace; target, if any, is inert
        u = u.copy()
        u[satisfied, :] *= np.exp(1j * gate.angle)
        return u

    block = (
        np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
        if gate.kind == "SIGX"
        else _rotation_block(gate.kind, gate.angle)
    )
    t = gate.target
    lo = states[satisfied & (((states >> t) & 1) == 0)]
    hi = lo | (1 << t)
    u = u.copy()
    row_lo, row_hi = u[lo, :], u[hi, :]
    u[lo, :] = block[0, 0] * row_lo + block[0, 1] * row_hi
    u[hi, :] = block[1, 0] * row_lo + block[1, 1] * row_hi
    return u


def program_unitary(program: SeoProgram) -> np.ndarray:
    """Multiply out all gates; the first listed gate acts first on states."""
    dim = 2 ** program.num_qubits
    u = np.eye(dim, dtype=complex)
    for gate in expand(program):
        u = apply_gate(u, gate, program.num_qubits)
    return u


def frobenius_distance(u: np.ndarray, v: np.ndarray) -> float:
    """sqrt(sum_jk |U_jk - V_jk|^2)."""
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"shape mismatch {u.shape} vs {v.shape}")
    return float(np.linalg.norm(u - v, "fro"))


def spectral_norm(a: np.ndarray) -> float:
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(a), 2))


def verify_compile(h_fruit, program: SeoProgram) -> float:
    """Frobenius distance between exp(i*H) and the program's unitary.

    h_fruit must already be padded to the program's power-of-two dimension;
    exp(i*diag(H, 0)) = diag(exp(i*H), I), so the target is the identity on
    all padding states.
    """
    dense = _as_dense(h_fruit)
    dim = 2 ** program.num_qubits
    if dense.shape != (dim, dim):
        raise ValueError(
            f"Hamiltonian dim {dense.shape[0]} does not match "
            f"{program.num_qubits}-qubit program"
        )
    return frobenius_distance(expi_hermitian(dense), program_unitary(program))
