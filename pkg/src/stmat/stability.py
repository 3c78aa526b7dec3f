"""Asymptotics of matrix powers.

Semi-idempotence (A^2 = beta*A), stable and tangibly stable block
triangular form, the stability index, ghostpotence with its ghost index,
semisimplicity witnesses, the verified Jordan decomposition, and the
periodicity checks for core submatrices of high powers.
"""

import math
from dataclasses import dataclass

from .errors import BoundExhaustedError, JordanDecompositionError, NoCyclesError
from .graph import cores, leading_data, scc_block_form
from .matrix import Matrix, _check_cap
from .semiring import Element, ONE, ZERO, tangible


@dataclass(frozen=True)
class SemiIdempotentWitness:
    beta: Element  # tangible, with A @ A == beta * A


def semi_idempotent_coeff(A):
    """The tangible beta with A^2 = beta*A, if one exists.

    beta is pinned by the value shift at any non-ZERO entry and then
    verified globally; the zero matrix gets the vacuous witness beta = ONE.
    """
    sq = A @ A
    probe = None
    for i in range(A.n):
        for j in range(A.n):
            if not A.entry(i, j).is_zero:
                probe = (i, j)
                break
        if probe:
            break
    if probe is None:
        return SemiIdempotentWitness(ONE)
    i, j = probe
    if sq.entry(i, j).is_zero:
        return None
    beta = tangible(sq.entry(i, j).value - A.entry(i, j).value)
    if sq == A.scale(beta):
        return SemiIdempotentWitness(beta)
    return None


def is_quasi_identity(A):
    """Nonsingular idempotent with ONE diagonal and ghost off-diagonal."""
    if any(A.entry(i, i) != ONE for i in range(A.n)):
        return False
    if any(not A.entry(i, j).in_ghost_ideal
           for i in range(A.n) for j in range(A.n) if i != j):
        return False
    return A @ A == A and A.is_nonsingular()


@dataclass(frozen=True)
class StableFormReport:
    """Witness that a matrix is in stable block triangular form.

    ``betas[i]`` is the semi-idempotent coefficient of diagonal block i;
    ``cross[(i, j)]`` scales block (i, j) of the square (None for zero
    blocks, which are vacuously compatible).
    """

    form: object   # BlockForm
    betas: tuple
    cross: dict
    tangibly_stable: bool


def is_stable_block_form(A):
    """Check the stable-form pattern on A's own SCC block triangularization.

    Every diagonal block must be semi-idempotent, and each block of A^2
    must be a beta-scaled copy of the corresponding block of A, with the
    scalar drawn from the diagonal coefficients between the two blocks
    (tangible or ghost).  Returns None when the pattern fails.
    """
    form = scc_block_form(A)
    betas = []
    for i in range(form.eta):
        w = semi_idempotent_coeff(form.block(i))
        if w is None:
            return None
        betas.append(w.beta)
    P = form.permuted
    sq = P @ P
    cross = {}
    tangibly = True
    for i in range(form.eta):
        for j in range(i + 1, form.eta):
            (rlo, rhi), (clo, chi) = form.ranges[i], form.ranges[j]
            block = [[P.entry(r, c) for c in range(clo, chi)] for r in range(rlo, rhi)]
            sq_block = [[sq.entry(r, c) for c in range(clo, chi)] for r in range(rlo, rhi)]
            if all(e.is_zero for row in block for e in row):
                if any(not e.is_zero for row in sq_block for e in row):
                    return None
                cross[(i, j)] = None
                continue
            found = None
            for k in range(i, j + 1):
                for cand in (betas[k], betas[k].nu()):
                    if all(sq_block[r][c] == cand * block[r][c]
                           for r in range(len(block)) for c in range(len(block[0]))):
                        found = cand
                        break
                if found is not None:
                    break
            if found is None:
                return None
            cross[(i, j)] = found
            if not found.is_tangible:
                tangibly = False
    return StableFormReport(form, tuple(betas), cross, tangibly)


def stability_index(A, m_max=64):
    """Least m <= m_max with A^m in tangibly stable block triangular form."""
    if m_max < 1:
        raise BoundExhaustedError("m_max must be at least 1")
    power = A
    for m in range(1, m_max + 1):
        report = is_stable_block_form(power)
        if report is not None and report.tangibly_stable:
            return m, report
        power = power @ A
    raise BoundExhaustedError(
        f"no tangibly stable power found within m_max = {m_max}")


@dataclass(frozen=True)
class BlockGhostInfo:
    vertices: tuple        # 1-based, in the original matrix
    has_cycles: bool
    tcore_empty: bool
    ghost_index: object    # int or None


@dataclass(frozen=True)
class GhostpotenceVerdict:
    ghostpotent: bool
    ghost_index: object    # int or None
    blocks: tuple          # of BlockGhostInfo
    index_bound: object    # int or None; eta * max block index
    bound_respected: object


def _block_ghost_index(B, cap):
    power = B
    for k in range(1, cap + 1):
        if power.is_ghost_matrix:
            return k
        power = power @ B
    raise BoundExhaustedError(f"ghost index of a block not found within {cap} steps")


def ghostpotence(A, max_n=None, iter_cap=None):
    """Ghostpotence criterion and, when it holds, the exact ghost index.

    A is ghostpotent iff every SCC block has an empty tangible core
    (cycle-free blocks count as trivially ghostpotent).  The index is found
    by direct power iteration and compared with the block-count times
    max-block-index bound.
    """
    _check_cap(A.n, max_n, "ghostpotence")
    form = scc_block_form(A)
    infos = []
    all_empty = True
    for i in range(form.eta):
        B = form.block(i)
        try:
            data = leading_data(B, max_n)
        except NoCyclesError:
            infos.append((B, BlockGhostInfo(form.block_vertices(i), False, True, None)))
            continue
        tcore_empty = not cores(B, data, max_n).tcore
        if not tcore_empty:
            all_empty = False
        infos.append((B, BlockGhostInfo(form.block_vertices(i), True, tcore_empty, None)))

    if not all_empty:
        return GhostpotenceVerdict(False, None,
                                   tuple(info for _, info in infos), None, None)

    cap = max(4 * A.n * A.n, iter_cap or 0)
    blocks = []
    block_indices = []
    for B, info in infos:
        k = _block_ghost_index(B, max(4 * B.n * B.n, iter_cap or 0))
        block_indices.append(k)
        blocks.append(BlockGhostInfo(info.vertices, info.has_cycles, info.tcore_empty, k))
    bound = form.eta * max(block_indices)
    index = _block_ghost_index(A, max(cap, bound))
    return GhostpotenceVerdict(True, index, tuple(blocks), bound, index <= bound)


@dataclass(frozen=True)
class SemisimpleWitness:
    k: int
    D: object  # diagonal Matrix with tangible diagonal, S^(2k) = D @ S^k


def semisimple_witness(S, k_max=16):
    """Smallest k <= k_max admitting a tangible diagonal D with S^(2k) = D S^k."""
    power = S
    for k in range(1, k_max + 1):
        sq = power @ power  # S^(2k)
        diag = _solve_row_scaling(power, sq)
        if diag is not None:
            return SemisimpleWitness(k, Matrix.diagonal(diag))
        power = power @ S
    return None


def _solve_row_scaling(base, target):
    """Tangible d_i with d_i * base[i] = target[i] rowwise, or None."""
    diag = []
    for i in range(base.n):
        d = None
        for j in range(base.n):
            b, t = base.entry(i, j), target.entry(i, j)
            if b.is_zero != t.is_zero:
                return None
            if b.is_zero:
                continue
            if b.tag is not t.tag:
                return None
            cand = tangible(t.value - b.value)
            if d is None:
                d = cand
            elif d != cand:
                return None
        diag.append(d if d is not None else ONE)
    return diag


@dataclass(frozen=True)
class JordanPair:
    S: object
    N: object
    strategy: str
    semisimple: SemisimpleWitness
    ghost: GhostpotenceVerdict


def _verify_jordan(A, S, N, k_max, max_n):
    checks = {}
    witness = semisimple_witness(S, k_max)
    checks["semisimple"] = witness is not None
    try:
        verdict = ghostpotence(N, max_n)
        checks["ghostpotent"] = verdict.ghostpotent
    except BoundExhaustedError:
        verdict = None
        checks["ghostpotent"] = False
    checks["entry_partition"] = all(
        (S.entry(i, j) == A.entry(i, j) and N.entry(i, j).is_zero)
        or (N.entry(i, j) == A.entry(i, j) and S.entry(i, j).is_zero)
        for i in range(A.n) for j in range(A.n))
    checks["determinant"] = S.permanent(max_n) == A.permanent(max_n)
    return all(checks.values()), checks, witness, verdict


def _peel_block(B, max_n):
    """Move tangible-core entries of the residual into S until the residual
    meets the ghostpotence criterion or no tangible core remains."""
    moved = Matrix.zeros(B.n)
    residual = B
    for _ in range(B.n * B.n + 1):
        form = scc_block_form(residual)
        progress = False
        for b in range(form.eta):
            sub = form.block(b)
            verts = form.block_vertices(b)  # 1-based in residual coords
            try:
                data = leading_data(sub, max_n)
            except NoCyclesError:
                continue
            cd = cores(sub, data, max_n)
            if not cd.tcore_vertices:
                continue
            owners = [verts[v - 1] - 1 for v in sorted(cd.tcore_vertices)]
            for p in owners:
                for q in owners:
                    e = residual.entry(p, q)
                    if not e.is_zero:
                        moved = moved.with_entry(p, q, e)
                        residual = residual.with_entry(p, q, ZERO)
                        progress = True
        if not progress:
            break
    return moved, residual


def jordan_decompose(A, k_max=16, max_n=None):
    """Verified search for A = S + N with S semisimple and N ghostpotent.

    Candidates, in order: the whole matrix as S; block-diagonal S over the
    SCC triangularization; blockwise tcore peeling for blocks that are not
    semisimple on their own.  Each candidate must pass all four verifier
    checks (semisimplicity, ghostpotence, exact entry partition, equal
    determinants); the first verified pair is returned.
    """
    _check_cap(A.n, max_n, "jordan_decompose")
    form = scc_block_form(A)
    candidates = [("identity", A, Matrix.zeros(A.n))]

    def assemble(block_parts):
        n = A.n
        s_rows = [[ZERO] * n for _ in range(n)]
        for i, part in enumerate(block_parts):
            lo, _ = form.ranges[i]
            for r in range(part.n):
                for c in range(part.n):
                    s_rows[lo + r][lo + c] = part.entry(r, c)
        S_perm = Matrix(s_rows)
        P = form.permuted
        N_perm = Matrix([[P.entry(r, c) if S_perm.entry(r, c).is_zero else ZERO
                          for c in range(n)] for r in range(n)])
        inv = [0] * n
        for pos, orig in enumerate(form.perm):
            inv[orig] = pos
        unperm = lambda M: M.permuted(inv)
        return unperm(S_perm), unperm(N_perm)

    if form.eta > 1:
        candidates.append(("block-diagonal",
                           *assemble([form.block(i) for i in range(form.eta)])))

    peeled_parts = []
    for i in range(form.eta):
        B = form.block(i)
        if semisimple_witness(B, k_max) is not None:
            peeled_parts.append(B)
        else:
            peeled_parts.append(_peel_block(B, max_n)[0])
    candidates.append(("tcore-peeling", *assemble(peeled_parts)))

    diagnostics = []
    for name, S, N in candidates:
        ok, checks, witness, verdict = _verify_jordan(A, S, N, k_max, max_n)
        if ok:
            return JordanPair(S, N, name, witness, verdict)
        diagnostics.append({"candidate": name,
                            "failed": sorted(c for c, passed in checks.items() if not passed)})
    raise JordanDecompositionError("no Jordan candidate verified", diagnostics)


def dupl_power_bound(n, mu):
    """Default power cap for corepower searches."""
    return (math.comb(n + 1, 2) - mu) * (mu - 1) + 2 * (n - 1) + 1


@dataclass(frozen=True)
class CorepowerReport:
    m: object              # common witness power, or None if nothing applicable
    mu_tilde: int
    omega_power: object    # Element: omega ** (m * mu_tilde)
    core_checked: bool
    tcore_checked: bool
    cyclicity_applicable: bool
    cyclicity_nu_ok: object     # bool or None
    cyclicity_exact_ok: object  # bool or None


def verify_corepower(A, m_max=None, max_n=None):
    """Find one power m at which the core submatrices stabilize.

    The search requires the core submatrix of A^(m*mu_tilde) to be
    semi-idempotent with coefficient omega^(m*mu_tilde), and the tcore
    submatrix to additionally scale down to a quasi-identity.  For
    irreducible A with nonempty core, the power relations
    A^(m*mu_tilde + 1) nu-equiv omega^(m*mu_tilde) A and
    A^(k*m*mu_tilde + 1) = omega^((k-1)*m*mu_tilde) A^(m*mu_tilde + 1)
    (k = 2, 3) are evaluated at the found m and reported, not gated: the
    first relation fails on matrices with a heavy non-leading odd cycle.

    The vertex sets are the cores of A itself, applied to the powers.
    """
    data = leading_data(A, max_n)
    cd = cores(A, data, max_n)
    form = scc_block_form(A)
    do_core = bool(cd.core)
    do_tcore = bool(cd.tcore)
    do_cyc = form.eta == 1 and do_core
    if not do_core:
        return CorepowerReport(None, data.mu_tilde, None, False, False,
                               False, None, None)
    if m_max is None:
        m_max = dupl_power_bound(A.n, data.mu)
    omega = tangible(data.omega)
    mt = data.mu_tilde
    core_idx = [v - 1 for v in sorted(cd.core_vertices)]
    tcore_idx = [v - 1 for v in sorted(cd.tcore_vertices)]

    for m in range(1, m_max + 1):
        beta = omega ** (m * mt)
        power = A ** (m * mt)
        sub = power.submatrix(core_idx, core_idx)
        w = semi_idempotent_coeff(sub)
        if w is None or w.beta != beta:
            continue
        if do_tcore:
            tsub = power.submatrix(tcore_idx, tcore_idx)
            tw = semi_idempotent_coeff(tsub)
            if tw is None or tw.beta != beta:
                continue
            if not is_quasi_identity(tsub.scale(beta ** -1)):
                continue
        nu_ok = exact_ok = None
        if do_cyc:
            step = power @ A  # A^(m*mu_tilde + 1)
            nu_ok = step.nu_equiv(A.scale(beta))
            exact_ok = all(A ** (k * m * mt + 1) == step.scale(omega ** ((k - 1) * m * mt))
                           for k in (2, 3))
        return CorepowerReport(m, mt, beta, do_core, do_tcore,
                               do_cyc, nu_ok, exact_ok)
    raise BoundExhaustedError(f"corepower relations not reached within m_max = {m_max}")
