"""Spectral decomposition recovered from a walk matrix.

Two exact branches, depending on r = rank(W):

* r < n: the column A^r e is a unique rational combination of the first r
  columns; negating those coefficients gives the monic main polynomial.
* r = n: the characteristic polynomial is recovered from the Hankel walk
  numbers by solving (W_[0,n-2]^T W_[0,n-2]) c^T = -w^T with the x^{n-1}
  coefficient pinned to 0 (trace of an adjacency matrix).

The exact layer never represents irrational eigenvalues: it carries the main
polynomial.  Numeric eigenvalues, the Vandermonde eigenvalue matrix M and the
eigenvector matrix E form a derived floating-point view with an explicit
tolerance; every consumer that needs exactness re-verifies rationally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import EmptySet, RootsNotSeparated
from .exact import ExactMatrix, IntPolynomial, QQ, inverse, rank, solve
from .graphs import Graph, VertexSet
from .walk import WalkMatrix, walk_matrix, walk_slice

# root polishing happens at the caller-supplied tolerance (default below);
# E*M = W and related float identities are checked at REALIZE_CHECK_TOL
ROOT_TOL = 1e-10
REALIZE_CHECK_TOL = 1e-8


@dataclass(frozen=True)
class SpectralSummary:
    """Rank, main polynomial and (at full rank) the characteristic polynomial."""

    r: int
    main_poly: IntPolynomial
    full_rank: bool
    char_poly: IntPolynomial | None = None


@dataclass(frozen=True)
class NumericRealization:
    """Floating-point view of the decomposition: W ~ E * M at `tolerance`."""

    mu: tuple[float, ...]          # ascending main eigenvalues
    eig_matrix: np.ndarray         # r x n Vandermonde rows (mu_i^k)
    vec_matrix: np.ndarray         # n x r main eigenvector columns
    tolerance: float


@dataclass(frozen=True)
class Restriction:
    """The part of A visible through the column space of W."""

    a_w: ExactMatrix


# --- exact core, from the walk matrix alone ---

def _char_from_hankel(w: WalkMatrix) -> IntPolynomial:
    """Full-rank branch: characteristic polynomial from walk numbers."""
    n = w.n
    h = w.w.transpose() * w.w
    # walk numbers n_n .. n_{2n-2} sit on the trailing anti-diagonals of H
    w_vec = [h[n - 1, k + 1] for k in range(n - 1)]
    gram = h.take_rows(range(n - 1)).take_cols(range(n - 1))
    c = solve(gram, [-x for x in w_vec])
    if any(x.denominator != 1 for x in c):
        raise ValueError("recovered polynomial is not integral; "
                         "input is not a genuine walk matrix")
    coeffs = [int(x) for x in c] + [0, 1]  # c_{n-1} = trace(A) = 0
    return IntPolynomial(coeffs)


def summary_from_walk(w: WalkMatrix) -> SpectralSummary:
    """Spectral summary computed from W alone (no graph needed)."""
    r = rank(w.w)
    n = w.n
    if r == n:
        char = _char_from_hankel(w)
        return SpectralSummary(r, char, True, char)
    w0 = w.w.take_cols(range(r))
    f = solve(w0, w.w.col(r))
    if any(x.denominator != 1 for x in f):
        raise ValueError("main polynomial is not integral; "
                         "input is not a genuine walk matrix")
    coeffs = [-int(x) for x in f] + [1]
    return SpectralSummary(r, IntPolynomial(coeffs), False, None)


def spectral_summary(g: Graph, s: VertexSet) -> SpectralSummary:
    if s.is_empty():
        raise EmptySet("spectral summary needs a non-empty vertex set")
    return summary_from_walk(walk_matrix(g, s))


def main_poly_via_dependence(g: Graph, s: VertexSet) -> IntPolynomial:
    """Main polynomial from the A^r e dependence, for any rank.

    At full rank this uses the extra column A^n e from the graph, giving an
    independent route to cross-check the Hankel branch.
    """
    w = walk_matrix(g, s)
    r = rank(w.w)
    sl = walk_slice(g, s, 0, r).m
    f = solve(sl.take_cols(range(r)), sl.col(r))
    return IntPolynomial([-int(x) for x in f] + [1])


def _w0_and_dagger(w: WalkMatrix, r: int) -> tuple[ExactMatrix, ExactMatrix]:
    """W_[0,r-1] and W^+ = (W_[0,r-1]^T W_[0,r-1])^{-1} W_[0,r-1]^T, exact."""
    w0 = w.w.take_cols(range(r))
    gram = w0.transpose() * w0
    return w0, inverse(gram) * w0.transpose()


def _column_power_full_rank(w: WalkMatrix, char: IntPolynomial) -> list[QQ]:
    """A^n e for a full-rank walk matrix, via the characteristic recurrence."""
    n = w.n
    cs = char.coeffs  # ascending, degree n, monic
    col = [QQ(0)] * n
    for i in range(n):
        ci = cs[i]
        if ci == 0:
            continue
        wi = w.w.col(i)
        col = [acc - ci * x for acc, x in zip(col, wi)]
    return col


def _w_upper(w: WalkMatrix, r: int,
             summary: SpectralSummary | None = None) -> ExactMatrix:
    """W_[1,r]: columns Ae .. A^r e (extends past W when r = n)."""
    n = w.n
    if r < n:
        return w.w.take_cols(range(1, r + 1))
    if summary is None or summary.char_poly is None:
        summary = summary_from_walk(w)
    last = _column_power_full_rank(w, summary.char_poly)
    cols = [list(w.w.col(k)) for k in range(1, n)] + [last]
    return ExactMatrix.from_columns(cols)


def restriction_from_walk(w: WalkMatrix) -> Restriction:
    """A_W = W_[1,r] (W_[0,r-1]^T W_[0,r-1])^{-1} W_[0,r-1]^T, exact."""
    r = rank(w.w)
    _, wdag = _w0_and_dagger(w, r)
    return Restriction(_w_upper(w, r) * wdag)


def restriction(g: Graph, s: VertexSet) -> Restriction:
    if s.is_empty():
        raise EmptySet("restriction needs a non-empty vertex set")
    return restriction_from_walk(walk_matrix(g, s))


def kernel_projector_from_walk(w: WalkMatrix) -> ExactMatrix:
    """I - W_[0,r-1] W^+: exact orthogonal projector onto ker(W^T)."""
    r = rank(w.w)
    w0, wdag = _w0_and_dagger(w, r)
    return ExactMatrix.identity(w.n) - w0 * wdag


def kernel_projector(g: Graph, s: VertexSet) -> ExactMatrix:
    if s.is_empty():
        raise EmptySet("kernel projector needs a non-empty vertex set")
    return kernel_projector_from_walk(walk_matrix(g, s))


# --- numeric realization ---

def _polished_roots(poly: IntPolynomial, tol: float) -> list[float]:
    """Real roots of a real-rooted polynomial, Newton-polished to |p| <= tol."""
    desc = [float(c) for c in reversed(poly.coeffs)]
    roots = [z.real for z in np.roots(desc)]
    deriv = poly.derivative()
    out = []
    for x in roots:
        for _ in range(60):
            px = float(poly(x))
            if abs(px) <= tol:
                break
            dpx = float(deriv(x))
            if dpx == 0.0:
                break
            step = px / dpx
            x -= step
            if abs(step) < 1e-300:
                break
        out.append(x)
    out.sort()
    return out


def realize_from_walk(w: WalkMatrix, tol: float = ROOT_TOL) -> NumericRealization:
    """Numeric (mu, M, E) with W = E*M checked at REALIZE_CHECK_TOL."""
    summary = summary_from_walk(w)
    r, n = summary.r, w.n
    mu = _polished_roots(summary.main_poly, tol)
    if len(mu) != r:
        raise RootsNotSeparated("lost a root while polishing")
    for a, b in zip(mu, mu[1:]):
        if b - a <= tol:
            raise RootsNotSeparated(f"roots {a} and {b} coincide within {tol}")
    # scale column k by s^-k before the float solve so entries stay O(1)
    s = max(1.0, max(abs(x) for x in mu))
    ws = np.array([[float(w.w[v, k]) / s**k for k in range(r)]
                   for v in range(n)])
    ms = np.array([[(x / s)**k for k in range(r)] for x in mu])
    vec = np.linalg.solve(ms.T, ws.T).T
    eig = np.array([[x**k for k in range(n)] for x in mu])
    check = REALIZE_CHECK_TOL
    wf = np.array(w.w.to_float_rows())
    scale = max(1.0, np.max(np.abs(wf)))
    assert np.max(np.abs(vec @ eig - wf)) <= check * scale, \
        "realization failed the E*M = W check"
    e_char = np.array([float(x) for x in w.vertex_set.characteristic])
    assert np.max(np.abs(vec.sum(axis=1) - e_char)) <= check, \
        "eigenvector columns do not sum to e"
    return NumericRealization(tuple(mu), eig, vec, check)


def main_eigen_realize(g: Graph, s: VertexSet,
                       tol: float = ROOT_TOL) -> NumericRealization:
    if s.is_empty():
        raise EmptySet("realization needs a non-empty vertex set")
    return realize_from_walk(walk_matrix(g, s), tol)


# --- serialization ---

def summary_to_json(summary: SpectralSummary,
                    realization: NumericRealization | None = None) -> str:
    obj = {"rank": summary.r, "main_poly": list(summary.main_poly.coeffs)}
    if summary.char_poly is not None:
        obj["char_poly"] = list(summary.char_poly.coeffs)
    if realization is not None:
        obj["mu"] = list(realization.mu)
    return json.dumps(obj)
