"""Supertropical eigenvalues, eigenvectors, and generalized eigenspaces.

Eigenvalues are the corner roots of the characteristic polynomial.
Eigenvector search is candidates-then-verify: hatted adjoint columns of
A + beta*I are proposed, and only vectors passing the defining relation
(A v = beta v exactly, or A v ghost-surpassing beta v) are kept.  The
eigendecomposition works on a tangibly stable power, builds one vector per
tangible-core column of each diagonal block by routing through the
off-diagonal blocks, and certifies tropical independence with a rank
computation; every claim is re-verified on the instance and failures are
reported, not patched.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graph import cores, leading_data, scc_block_form, NoCyclesError
from .matrix import Matrix, Vector, _check_cap
from .semiring import Element, ONE, ZERO, ssum, tangible
from .stability import semi_idempotent_coeff, stability_index

STRICT = "strict"
SUPERTROPICAL = "supertropical"


def g_kernel_member(A, v):
    """True iff A v lands entirely in the ghost ideal."""
    if A.n != v.n:
        raise PreconditionError("dimension mismatch")
    return (A @ v).is_ghost


def g_annihilators_from_adjoint(A, max_n=None):
    """Tangible non-ZERO hatted adjoint columns that g-annihilate A."""
    if A.permanent(max_n).is_tangible:
        raise PreconditionError("matrix is nonsingular; no g-annihilators from the adjoint")
    adj = A.adjoint(max_n)
    out = []
    for j in range(A.n):
        v = adj.column(j).hat()
        if v.is_zero or not v.is_tangible:
            continue
        if g_kernel_member(A, v):
            out.append(v)
    return out


def eigenvalues(A, max_n=None):
    """Corner roots of the characteristic polynomial as tangible Elements
    (value None becomes the ZERO eigenvalue), with multiplicities."""
    roots = A.char_poly(max_n).corner_roots()
    return [(ZERO if value is None else tangible(value), mult)
            for value, mult in roots]


@dataclass(frozen=True)
class EigenPair:
    beta: Element
    vector: Vector
    kind: str
    multiplicity: int = 1


def eigenvector_for(A, beta, max_n=None):
    """Eigenpairs for a given tangible (or ZERO) eigenvalue candidate.

    Forms B = A + beta*I (nu-equal diagonal collisions go ghost), proposes
    the hatted columns of adj(B), keeps v with B v fully ghost and
    A v ghost-surpassing beta v; STRICT marks exact equality.
    """
    B = A + Matrix.identity(A.n).scale(beta)
    adj = B.adjoint(max_n)
    seen = set()
    out = []
    for j in range(A.n):
        v = adj.column(j).hat()
        if v.is_zero or v in seen:
            continue
        seen.add(v)
        if not (B @ v).is_ghost:
            continue
        av = A @ v
        bv = v.scale(beta)
        if av == bv:
            out.append(EigenPair(beta, v, STRICT))
        elif av.ghost_surpasses(bv):
            out.append(EigenPair(beta, v, SUPERTROPICAL))
    return out


def is_generalized_eigenvector(A, v, beta, m):
    """A^m v ghost-surpasses beta^m v (or is ghost-dependent with it)."""
    if m < 1:
        raise PreconditionError("multiplicity m must be at least 1")
    lhs = (A ** m) @ v
    rhs = v.scale(beta ** m)
    return lhs.ghost_surpasses(rhs) or (lhs + rhs).is_ghost


def weak_membership(A, v, beta, m, k_max=16):
    """Least k <= k_max with (A^m + beta^m I)^k v fully ghost, else None."""
    if v.is_zero:
        raise PreconditionError("weak membership needs a non-ZERO vector")
    if m < 1:
        raise PreconditionError("m must be at least 1")
    B = (A ** m) + Matrix.identity(A.n).scale(beta ** m)
    w = v
    for k in range(1, k_max + 1):
        w = B @ w
        if w.is_ghost:
            return k
    return None


@dataclass(frozen=True)
class WeakToGeneralizedReport:
    stability_power: int
    ghost_sum: Vector
    fully_ghost: bool
    scaled_fully_ghost: bool
    generalized_multiplicity: object  # int or None


def weak_to_generalized(A, v, beta, m_max=64, multiplicity_cap=4):
    """Sum (A + beta I)^j v over j = 0..2*m' for the stability index m'.

    Reports whether that sum is fully ghost, whether the degree-balanced
    variant sum_j beta^(2m'-j) (A + beta I)^j v is fully ghost (the plain
    sum is dominated by the j = 0 term whenever beta sits below unity, so
    only the balanced form can go ghost for every verified eigenpair), and
    whether v verifies as a generalized eigenvector of A^m' at some small
    multiplicity for the transported eigenvalue beta^m'.
    """
    m_prime, _ = stability_index(A, m_max)
    q = 2 * m_prime
    B = A + Matrix.identity(A.n).scale(beta)
    total = v
    scaled_total = v.scale(beta ** q)
    w = v
    for j in range(1, q + 1):
        w = B @ w
        total = total + w
        weight = ONE if j == q else beta ** (q - j)
        scaled_total = scaled_total + w.scale(weight)
    stable = A ** m_prime
    gen = None
    for m in range(1, multiplicity_cap + 1):
        if is_generalized_eigenvector(stable, v, beta ** m_prime, m):
            gen = m
            break
    return WeakToGeneralizedReport(m_prime, total, total.is_ghost,
                                   scaled_total.is_ghost, gen)


@dataclass(frozen=True)
class EigenRecord:
    block: int            # 0-based block index in the stable form
    column: int           # 1-based column within the block's tcore
    beta: Element         # block eigenvalue of the stable power
    beta_root: Element    # matching eigenvalue of A itself
    vector: Vector        # original coordinates
    kind: object          # "strict" / "supertropical" / None when unverified
    verified: bool


@dataclass(frozen=True)
class AnnihilatorRecord:
    block: int
    vector: Vector        # original coordinates


@dataclass(frozen=True)
class EigenDecomposition:
    power: int            # stability index m; vectors live on A^m
    form: object          # BlockForm of the stable power
    block_eigenvalues: tuple
    pairs: tuple          # of EigenRecord
    annihilators: tuple   # of AnnihilatorRecord
    rank: int
    rank_target: int
    rank_ok: bool
    all_verified: bool
    diagnostics: tuple


def _rank_of_vectors(vectors, n, max_n=None):
    cols = list(vectors) + [Vector([ZERO] * n)] * (n - len(vectors))
    assembled = Matrix([[cols[j].entries[i] for j in range(n)] for i in range(n)])
    return assembled.rank(max_n)


def eigendecomposition(A, m_max=64, max_n=None):
    """Generalized eigenvectors of the first tangibly stable power of A.

    For each diagonal block j with eigenvalue beta_j, the block component is
    a tangible-core column of beta_j^(-1) B_j, and components for earlier
    blocks i < j are routed: v_i = beta_i^(-1) * sum_k B_(i,k) v_k.  Each
    built vector is checked against A^m v >= beta_j v (ghost-surpassing);
    singular blocks contribute adjoint g-annihilators instead of missing
    core columns, and the assembled set gets a rank certificate.
    """
    _check_cap(A.n, max_n, "eigendecomposition")
    m, report = stability_index(A, m_max)
    form = report.form
    M = form.permuted
    n = A.n
    betas = report.betas
    inv = [0] * n
    for pos, orig in enumerate(form.perm):
        inv[orig] = pos

    def unpermute(entries):
        out = [ZERO] * n
        for pos, e in enumerate(entries):
            out[form.perm[pos]] = e
        return Vector(out)

    pairs = []
    annihilators = []
    diagnostics = []
    total_s = 0

    for j in range(form.eta):
        B = form.block(j)
        beta_j = betas[j]
        scaled = B.scale(beta_j ** -1)
        try:
            cd = cores(B, leading_data(B, max_n), max_n)
            tcore_pos = sorted(cd.tcore_vertices)  # 1-based within the block
        except NoCyclesError:
            tcore_pos = []
        total_s += len(tcore_pos)
        tcore_set = set(tcore_pos)

        for c in tcore_pos:
            parts = [None] * form.eta
            parts[j] = [scaled.entry(r, c - 1) if (r + 1) in tcore_set else ZERO
                        for r in range(B.n)]
            for i in range(j - 1, -1, -1):
                size_i = form.ranges[i][1] - form.ranges[i][0]
                acc = [ZERO] * size_i
                for k in range(i + 1, j + 1):
                    blk = form.off_block(i, k)
                    for r in range(size_i):
                        acc[r] = acc[r] + ssum(blk[r][cc] * parts[k][cc]
                                               for cc in range(len(parts[k])))
                scale_back = betas[i] ** -1
                parts[i] = [scale_back * e for e in acc]
            entries = []
            for b in range(form.eta):
                if parts[b] is None:
                    entries.extend([ZERO] * (form.ranges[b][1] - form.ranges[b][0]))
                else:
                    entries.extend(parts[b])
            vec = Vector(entries)
            lhs = M @ vec
            rhs = vec.scale(beta_j)
            if lhs == rhs:
                kind, verified = STRICT, True
            elif lhs.ghost_surpasses(rhs):
                kind, verified = SUPERTROPICAL, True
            else:
                kind, verified = None, False
                failing = [form.perm[pos] + 1 for pos in range(n)
                           if not lhs.entries[pos].ghost_surpasses(rhs.entries[pos])]
                diagnostics.append({"block": j, "column": c,
                                    "failing_components": failing})
            pairs.append(EigenRecord(j, c, beta_j, beta_j ** Fraction(1, m),
                                     unpermute(entries), kind, verified))

        size_j = B.n
        if len(tcore_pos) < size_j and not B.permanent(max_n).is_tangible:
            if size_j == 1:
                candidates = [Vector([ONE])]
            else:
                candidates = g_annihilators_from_adjoint(B, max_n)
            lo = form.ranges[j][0]
            for v in candidates[: size_j - len(tcore_pos)]:
                entries = [ZERO] * n
                for r in range(size_j):
                    entries[lo + r] = v.entries[r]
                annihilators.append(AnnihilatorRecord(j, unpermute(entries)))

    vectors = [p.vector for p in pairs] + [a.vector for a in annihilators]
    rank = _rank_of_vectors(vectors, n, max_n) if vectors else 0
    if M.is_nonsingular(max_n):
        target = n
    else:
        target = total_s + len(annihilators)
    return EigenDecomposition(m, form, tuple(betas), tuple(pairs),
                              tuple(annihilators), rank, target, rank >= target,
                              all(p.verified for p in pairs), tuple(diagnostics))


@dataclass(frozen=True)
class TcoreEigenReport:
    beta: Element
    block_pairs: tuple    # strict eigenpairs of the tcore submatrix
    pairs: tuple          # of EigenRecord on the full matrix (embedded columns)
    annihilators: tuple   # of Vector, tangible g-annihilators of A
    rank: int
    rank_ok: bool


def tcore_strict_eigenvectors(A, max_n=None):
    """Tcore columns of an irreducible semi-idempotent matrix as eigenpairs.

    The s columns of the tcore submatrix are strict eigenvectors of that
    submatrix; embedded into full coordinates they are checked against the
    supertropical relation on A, and the set is extended by tangible
    g-annihilators toward a rank-n certificate.
    """
    form = scc_block_form(A)
    if form.eta != 1:
        raise PreconditionError("tcore eigenvectors need an irreducible matrix")
    w = semi_idempotent_coeff(A)
    if w is None:
        raise PreconditionError("tcore eigenvectors need a semi-idempotent matrix")
    beta = w.beta
    cd = cores(A, leading_data(A, max_n), max_n)
    if not cd.tcore_vertices:
        raise PreconditionError("tangible core is empty")
    idx = sorted(cd.tcore_vertices)
    sub = A.submatrix([v - 1 for v in idx], [v - 1 for v in idx])

    block_pairs = []
    pairs = []
    for c in range(len(idx)):
        col = sub.column(c)
        assert (sub @ col) == col.scale(beta), "tcore column is not strict on the submatrix"
        block_pairs.append(EigenPair(beta, col, STRICT))
        entries = [ZERO] * A.n
        for r, v in enumerate(idx):
            entries[v - 1] = col.entries[r]
        emb = Vector(entries)
        av = A @ emb
        bv = emb.scale(beta)
        if av == bv:
            kind, verified = STRICT, True
        elif av.ghost_surpasses(bv):
            kind, verified = SUPERTROPICAL, True
        else:
            kind, verified = None, False
        pairs.append(EigenRecord(0, idx[c], beta, beta, emb, kind, verified))

    vectors = [p.vector for p in pairs]
    annihilators = []
    if len(idx) < A.n:
        for v in g_annihilators_from_adjoint(A, max_n):
            if len(vectors) == A.n:
                break
            if _rank_of_vectors(vectors + [v], A.n, max_n) > _rank_of_vectors(vectors, A.n, max_n):
                vectors.append(v)
                annihilators.append(v)
    rank = _rank_of_vectors(vectors, A.n, max_n)
    return TcoreEigenReport(beta, tuple(block_pairs), tuple(pairs),
                            tuple(annihilators), rank, rank == A.n)
