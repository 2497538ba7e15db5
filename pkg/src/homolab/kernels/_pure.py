"""Pure-Python reduction kernel (reference implementation and fallback)."""


def reduce_packed(f, rep, eng, full):
    """Reduce packed vector ``f`` by the engine basis.

    Returns (remainder, rep), where rep accumulates -Σ q_b·rep_b when cofactor
    tracking is on.  With ``full`` false only the leading term is reduced and
    the loop stops at the first irreducible leading term.
    """
    p = eng.p
    basis = eng.basis
    find = eng.find_divisor
    track = rep is not None and eng.track
    rshift = eng._rep_shift
    rem = {}
    while f:
        lead = max(f)
        k = find(lead)
        if k is None:
            if not full:
                return f, rep
            rem[lead] = f.pop(lead)
            continue
        el = basis[k]
        c = f[lead]
        shift = lead - el.lead
        for key, v in el.poly.items():
            kk = key + shift
            nv = (f.get(kk, 0) - c * v) % p
            if nv:
                f[kk] = nv
            else:
                f.pop(kk, None)
        if track and el.rep:
            rs = rshift(shift)
            for key, v in el.rep.items():
                kk = key + rs
                nv = (rep.get(kk, 0) - c * v) % p
                if nv:
                    rep[kk] = nv
                else:
                    rep.pop(kk, None)
    return rem, rep
