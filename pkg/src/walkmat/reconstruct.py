"""Adjacency matrix recovery from a walk matrix of rank >= n-2.

Dispatch on r = rank(W):

* r = n: exact.  The characteristic recurrence gives A^n e, so A W = W_[1,n]
  can be solved rationally (no eigenvalue extraction needed).
* r = n-1: exact.  The single non-main eigenvalue is the integer a_1 read off
  the main polynomial, its projector is I - W_[0,r-1] W^+, and A follows.
* r = n-2: the two non-main eigenvalues come from the discriminant
  d = 4(a_2 + m) - 3 a_1^2 (m = edge count).  For d = 0 the path stays exact;
  for d > 0 candidate kernel vectors are generated in floating point and every
  candidate adjacency matrix is re-verified exactly, so float arithmetic can
  only lose candidates, never produce a wrong graph.
* r < n-2: undetermined (the theory provides counterexamples).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (CandidateNotGraph, MissingEdgeCount,
                     NegativeDiscriminant, NoSolution, NonUnique, Singular,
                     WalkmatError)
from .exact import ExactMatrix, kernel_basis, rank, solve_matrix
from .graphs import Graph, emit_graph6
from .spectral import _w0_and_dagger, _w_upper, summary_from_walk
from .walk import WalkMatrix, walk_matrix

RANK_TOO_LOW = "rank_too_low"
NO_VALID_CANDIDATE = "no_valid_candidate"
MISSING_EDGE_COUNT = "missing_edge_count"

# coordinate filtering and entry rounding tolerance for the float path
CANDIDATE_TOL = 1e-6


@dataclass(frozen=True)
class ReconstructionResult:
    """Unique(graph) | Pair(graph, graph) | Undetermined(reason)."""

    status: str                      # "unique" | "pair" | "undetermined"
    graphs: tuple[Graph, ...] = ()
    reason: str | None = None

    @classmethod
    def unique(cls, g: Graph) -> "ReconstructionResult":
        return cls("unique", (g,))

    @classmethod
    def pair(cls, g1: Graph, g2: Graph) -> "ReconstructionResult":
        return cls("pair", (g1, g2))

    @classmethod
    def undetermined(cls, reason: str) -> "ReconstructionResult":
        return cls("undetermined", (), reason)


@dataclass(frozen=True)
class ReconstructionInput:
    w: WalkMatrix
    edge_count_hint: int | None = None


def _validate_adjacency(a: ExactMatrix) -> Graph:
    """0/1, symmetric, zero diagonal -- or CandidateNotGraph."""
    if not a.is_square():
        raise CandidateNotGraph("candidate is not square")
    n = a.rows
    grid = []
    for i in range(n):
        row = a.row(i)
        for j, x in enumerate(row):
            if x != 0 and x != 1:
                raise CandidateNotGraph(f"entry ({i},{j}) = {x} is not 0/1")
        if row[i] != 0:
            raise CandidateNotGraph(f"diagonal entry {i} is non-zero")
        grid.append(tuple(int(x) for x in row))
    for i in range(n):
        for j in range(i):
            if grid[i][j] != grid[j][i]:
                raise CandidateNotGraph("candidate is not symmetric")
    return Graph(n, tuple(grid))


def verify_candidate(a: ExactMatrix, w: WalkMatrix) -> bool:
    """True iff a is a valid adjacency matrix that regenerates w exactly."""
    try:
        g = _validate_adjacency(a)
    except CandidateNotGraph:
        return False
    return walk_matrix(g, w.vertex_set).w == w.w


def rank_n(w: WalkMatrix) -> Graph:
    """Full-rank reconstruction: A = W_[1,n] W^{-1}, all rational."""
    summary = summary_from_walk(w)
    if not summary.full_rank:
        raise ValueError("rank_n needs a full-rank walk matrix")
    w1n = _w_upper(w, w.n, summary)
    # A W = W_[1,n]  <=>  W^T A^T = W_[1,n]^T
    at = solve_matrix(w.w.transpose(), w1n.transpose())
    return _validate_adjacency(at.transpose())


def rank_n1(w: WalkMatrix) -> Graph:
    """Rank n-1: A = W_[1,r] W^+ + lambda_n (f f^T) with everything rational."""
    n = w.n
    summary = summary_from_walk(w)
    r = summary.r
    if r != n - 1:
        raise ValueError("rank_n1 needs rank exactly n-1")
    # main = x^r + a_1 x^{r-1} + ...; trace zero makes lambda_n = a_1
    a1 = summary.main_poly.coeffs[r - 1]
    w0, wdag = _w0_and_dagger(w, r)
    proj = ExactMatrix.identity(n) - w0 * wdag
    a = w.w.take_cols(range(1, r + 1)) * wdag + a1 * proj
    return _validate_adjacency(a)


def _orthonormal_kernel_pair(w: WalkMatrix) -> tuple[np.ndarray, np.ndarray]:
    basis = kernel_basis(w.w.transpose())
    if len(basis) != 2:
        raise ValueError("rank n-2 kernel should be two-dimensional")
    k = np.array([[float(x) for x in vec] for vec in basis]).T
    q, _ = np.linalg.qr(k)
    return q[:, 0], q[:, 1]


def _pick_coordinates(u: np.ndarray, v: np.ndarray,
                      usable: list[int]) -> tuple[int, int, float]:
    best = (usable[0], usable[0], 0.0)
    for a in range(len(usable)):
        for b in range(a + 1, len(usable)):
            i, j = usable[a], usable[b]
            det = abs(u[i] * v[j] - u[j] * v[i])
            if det > best[2]:
                best = (i, j, det)
    return best


def rank_n2(w: WalkMatrix, m: int | None = None) -> ReconstructionResult:
    """Rank n-2: at most two graphs share W; both are found and verified.

    m is the edge count; when omitted it is derived from column 1 of W for
    S = V, otherwise MissingEdgeCount is raised.
    """
    n = w.n
    if m is None:
        m = derive_edge_count(w)
        if m is None:
            raise MissingEdgeCount(
                "rank n-2 with a proper subset S needs the edge count")
    summary = summary_from_walk(w)
    r = summary.r
    if r != n - 2:
        raise ValueError("rank_n2 needs rank exactly n-2")
    coeffs = summary.main_poly.coeffs
    a1 = coeffs[r - 1] if r >= 1 else 0
    a2 = coeffs[r - 2] if r >= 2 else 0
    d = 4 * (a2 + m) - 3 * a1 * a1
    if d < 0:
        raise NegativeDiscriminant(
            f"discriminant {d} < 0; not a genuine walk matrix")

    w0, wdag = _w0_and_dagger(w, r)
    proj = ExactMatrix.identity(n) - w0 * wdag
    base = w.w.take_cols(range(1, r + 1)) * wdag

    if d == 0:
        # repeated non-main eigenvalue a_1 / 2 must be an integer
        if a1 % 2 != 0:
            return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
        a = base + (a1 // 2) * proj
        try:
            g = _validate_adjacency(a)
        except CandidateNotGraph:
            return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
        if not verify_candidate(a, w):
            return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
        return ReconstructionResult.unique(g)

    sqrt_d = math.sqrt(d)
    lam1 = (a1 - sqrt_d) / 2.0
    b = (np.array(base.to_float_rows())
         + lam1 * np.array(proj.to_float_rows()))
    b = (b + b.T) / 2.0
    q = -np.diag(b) / sqrt_d

    u, v = _orthonormal_kernel_pair(w)
    usable = [i for i in range(n) if q[i] > CANDIDATE_TOL]
    if not usable:
        return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)

    fs: list[np.ndarray] = []
    i, j, det = (0, 0, 0.0)
    if len(usable) >= 2:
        i, j, det = _pick_coordinates(u, v, usable)
    if len(usable) < 2 or det < 1e-12:
        # q concentrates on one coordinate: f is the normalized kernel
        # projection of that coordinate vector (sign is irrelevant)
        i = int(np.argmax(q))
        f = u[i] * u + v[i] * v
        norm = np.linalg.norm(f)
        if norm > 0:
            fs.append(f / norm)
    else:
        mat = np.array([[u[i], v[i]], [u[j], v[j]]])
        for sj in (1.0, -1.0):
            rhs = np.array([math.sqrt(q[i]), sj * math.sqrt(q[j])])
            alpha, beta = np.linalg.solve(mat, rhs)
            if abs(alpha * alpha + beta * beta - 1.0) > CANDIDATE_TOL:
                continue
            f = alpha * u + beta * v
            if np.max(np.abs(f * f - q)) > CANDIDATE_TOL:
                continue
            fs.append(f)

    seen: set[tuple[tuple[int, ...], ...]] = set()
    verified: list[Graph] = []
    for f in fs:
        af = b + sqrt_d * np.outer(f, f)
        rounded = np.rint(af)
        if np.max(np.abs(af - rounded)) > CANDIDATE_TOL:
            continue
        grid = tuple(tuple(int(x) for x in row) for row in rounded)
        if grid in seen:
            continue
        seen.add(grid)
        cand = ExactMatrix(grid)
        if verify_candidate(cand, w):
            verified.append(_validate_adjacency(cand))
    if not verified:
        return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
    if len(verified) == 1:
        return ReconstructionResult.unique(verified[0])
    assert len(verified) == 2, "more than two graphs share a rank n-2 walk matrix"
    return ReconstructionResult.pair(verified[0], verified[1])


def derive_edge_count(w: WalkMatrix) -> int | None:
    """Edge count from column 1 when S = V (that column is the degree
    sequence); None when S is a proper subset."""
    if not w.vertex_set.is_full():
        return None
    total = sum(int(x) for x in w.w.col(1)) if w.n > 1 else 0
    if total % 2 != 0:
        raise CandidateNotGraph("degree sum is odd; not a walk matrix")
    return total // 2


def reconstruct(inp: ReconstructionInput) -> ReconstructionResult:
    """Dispatch on rank; every returned graph regenerates W exactly."""
    w = inp.w
    n = w.n
    r = rank(w.w)
    if r == n:
        return _checked_unique(rank_n, w)
    if r == n - 1:
        return _checked_unique(rank_n1, w)
    if r == n - 2:
        try:
            return rank_n2(w, inp.edge_count_hint)
        except MissingEdgeCount:
            return ReconstructionResult.undetermined(MISSING_EDGE_COUNT)
        except (WalkmatError, ValueError):
            return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
    return ReconstructionResult.undetermined(RANK_TOO_LOW)


def _checked_unique(builder, w: WalkMatrix) -> ReconstructionResult:
    try:
        g = builder(w)
    except (CandidateNotGraph, NoSolution, NonUnique, Singular, ValueError):
        return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
    if walk_matrix(g, w.vertex_set).w != w.w:
        return ReconstructionResult.undetermined(NO_VALID_CANDIDATE)
    return ReconstructionResult.unique(g)


def result_to_json(result: ReconstructionResult) -> str:
    obj: dict = {"status": result.status,
                 "graphs": [emit_graph6(g) for g in result.graphs]}
    if result.reason is not None:
        obj["reason"] = result.reason
    return json.dumps(obj)
