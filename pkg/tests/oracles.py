"""Brute-force cross-checks used by the test suite.

Everything here is deliberately naive — explicit monomial enumeration,
sparse Gaussian elimination over a prime field, raw subset enumeration —
so that it shares no code path with the library engines it checks.
"""

from itertools import combinations, combinations_with_replacement


def monomials_of_degree(nvars: int, degree: int) -> list:
    """All exponent tuples of the given total degree, as tuples of ints."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def rank_mod_p(rows, p: int) -> int:
    """Rank of a sparse integer matrix over GF(p).

    Rows are {column_key: coeff} dicts; column keys need only be hashable
    and mutually comparable.
    """
    pivots = {}
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: (v * inv) % p for c, v in row.items()}
                rank += 1
                break
            factor = row[col]
            merged = {}
            for c in set(row) | set(piv):
                v = (row.get(c, 0) - factor * piv.get(c, 0)) % p
                if v:
                    merged[c] = v
            row = merged
    return rank


def ideal_component_dim(gens, degree: int, p: int) -> int:
    """dim of the degree-`degree` graded piece of the ideal the gens generate.

    Builds every monomial multiple of every generator landing in that degree
    and row-reduces.  Generators must be homogeneous with int coefficients
    (a prime-field ring).
    """
    rows = []
    for g in gens:
        shift = degree - g.degree()
        if shift < 0:
            continue
        for m in monomials_of_degree(g.ring.nvars, shift):
            row = {}
            for mon, c in g.terms:
                key = tuple(a + b for a, b in zip(m, mon))
                row[key] = row.get(key, 0) + c
            rows.append(row)
    return rank_mod_p(rows, p)


def syzygy_space_dim(gens, coeff_degree: int, p: int) -> int:
    """dim of the space of degree-`coeff_degree` syzygy vectors of the gens.

    Kernel dimension of (a_1..a_r) -> sum a_i g_i restricted to coefficient
    vectors of the given degree, computed as domain dim minus image rank.
    """
    if not gens:
        return 0
    nvars = gens[0].ring.nvars
    degs = {g.degree() for g in gens}
    assert len(degs) == 1, "oracle wants equigenerated input"
    domain = len(gens) * len(monomials_of_degree(nvars, coeff_degree))
    target = coeff_degree + degs.pop()
    return domain - ideal_component_dim(gens, target, p)


def count_monomials_outside(leads, nvars: int, degree: int) -> int:
    """Number of degree-`degree` monomials divisible by no lead exponent."""
    leads = [tuple(g) for g in leads]
    count = 0
    for mon in monomials_of_degree(nvars, degree):
        if not any(all(e >= f for e, f in zip(mon, lead)) for lead in leads):
            count += 1
    return count


def selection_bidegrees_brute(n: int, cutoff=None) -> dict:
    """Raw subset enumeration behind the row-profile recurrence.

    Selections are n distinct cells (i, j) with i + j <= n - 1 that include
    (0, 0), capped at total degree `cutoff` (default n(n-1)/2, the largest
    degree the predictions concern); returns {total degree: set of
    componentwise bidegree sums}.
    """
    if cutoff is None:
        cutoff = n * (n - 1) // 2
    cells = [
        (i, j)
        for i in range(n)
        for j in range(n - i)
        if (i, j) != (0, 0)
    ]
    out: dict = {}
    for combo in combinations(cells, n - 1):
        dx = sum(i for i, _ in combo)
        dy = sum(j for _, j in combo)
        if dx + dy <= cutoff:
            out.setdefault(dx + dy, set()).add((dx, dy))
    return dict(sorted(out.items()))


def rotations_brute(w: str) -> set:
    return {w[k:] + w[:k] for k in range(max(len(w), 1))}
