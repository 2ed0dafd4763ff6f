"""Pure-Python closure and enumeration kernels.

Literal sets are int bitmasks. Literal ``i`` sits at bit ``2*i`` for the
positive form of atom ``i`` and ``2*i + 1`` for its classical negation, so a
complementary pair is two adjacent bits starting at an even position.

A rule is ``(head, pos, neg)``; ``head`` is a bit index or ``-1`` for a
constraint. The compiled kernel exposes the same functions.
"""

from itertools import combinations

CONSISTENT = 0
INCONSISTENT = 1
VIOLATED = 2


def even_mask(n_atoms):
    return (4 ** n_atoms - 1) // 3


def closure(rules, n_atoms, block, erase):
    """Least fixpoint of the rules left after the two filters.

    A rule is dropped when its naf part meets ``block``; of the rest, naf
    literals inside ``erase`` are removed and a rule with any remaining naf
    literal never fires. Returns ``(status, mask)``.
    """
    pending = []
    constraints = []
    for head, pos, neg in rules:
        if neg & block or neg & ~erase:
            continue
        if head < 0:
            constraints.append(pos)
        else:
            pending.append((1 << head, pos))
    s = 0
    changed = True
    while changed and pending:
        changed = False
        rest = []
        for bit, pos in pending:
            if pos & s == pos:
                if not s & bit:
                    s |= bit
                    changed = True
            else:
                rest.append((bit, pos))
        pending = rest
    if s & (s >> 1) & even_mask(n_atoms):
        return INCONSISTENT, s
    for pos in constraints:
        if pos & s == pos:
            return VIOLATED, s
    return CONSISTENT, s


def answer_sets(rules, n_atoms, naf, limit=0):
    """Answer sets as masks.

    Returns ``(lattice, masks)``; ``lattice`` is true when the inconsistent set
    is the (sole) answer set. Candidates are guesses ``g`` over ``naf``, the
    literals that occur weakly negated: ``g`` is accepted when the closure of
    the reduct by ``g`` is consistent and meets ``naf`` exactly in ``g``.
    """
    full = (1 << (2 * n_atoms)) - 1
    status, _ = closure(rules, n_atoms, full, full)
    if status == INCONSISTENT:
        return True, []
    if status == VIOLATED:
        return False, []
    out = []
    g = 0
    while True:
        status, s = closure(rules, n_atoms, g, full)
        if status == CONSISTENT and s & naf == g:
            out.append(s)
            if limit and len(out) >= limit:
                break
        if g == naf:
            break
        g = (g - naf) & naf
    return False, out


def minimal_erasures(rules, n_atoms, plus, base):
    """All subset-minimal ``m`` within ``base`` whose min-reduct closes to ``plus``.

    Subsets are tried by increasing size; supersets of accepted ones are skipped,
    so every accepted set has only failing strict subsets.
    """
    bits = [1 << i for i in range(2 * n_atoms) if base >> i & 1]
    accepted = []
    for k in range(len(bits) + 1):
        for combo in combinations(bits, k):
            m = sum(combo)
            if any(a & m == a for a in accepted):
                continue
            status, s = closure(rules, n_atoms, plus, m)
            if status == CONSISTENT and s == plus:
                accepted.append(m)
    return accepted
