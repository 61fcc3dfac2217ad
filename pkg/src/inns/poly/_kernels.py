"""Pure-Python term kernels.

Twin of the compiled module ``inns.poly._speedups``; both expose the same
five functions and must stay behaviourally identical (``tests/test_backends``
pins them against each other).  Exponent vectors are plain tuples of ints,
term maps are ``dict[tuple, Fraction]``.
"""

DP = 0  # global degree reverse lexicographic
DS = 1  # local (negative) degree reverse lexicographic


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_divides(a, b):
    """True iff x^a divides x^b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def sort_key(blocks, exps):
    """Monotone key for a block ordering: bigger key = bigger monomial.

    ``blocks`` is a tuple of ``(code, start, stop)`` with code DP or DS.
    Within a block, ties are broken reverse-lexicographically (the last
    variable with a differing exponent decides, smaller exponent wins).
    """
    key = []
    for code, start, stop in blocks:
        deg = 0
        for i in range(start, stop):
            deg += exps[i]
        key.append(deg if code == DP else -deg)
        for i in range(stop - 1, start - 1, -1):
            key.append(-exps[i])
    return tuple(key)


def merge_scaled(terms, coeff, shift, gterms):
    """In place: terms += coeff * x^shift * gterms.  Zeros are pruned."""
    for exps, c in gterms.items():
        m = exp_add(exps, shift)
        v = terms.get(m)
        if v is None:
            terms[m] = coeff * c
        else:
            v = v + coeff * c
            if v:
                terms[m] = v
            else:
                del terms[m]
