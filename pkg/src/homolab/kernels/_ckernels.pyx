# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; same contract as the pure-Python version."""


def reduce_packed(dict f, rep, eng, bint full):
    cdef long long p = eng.p
    cdef long long c, v, nv
    cdef list basis = eng.basis
    cdef dict rem = {}
    cdef dict poly
    cdef dict rdict
    cdef bint track = rep is not None and eng.track
    find = eng.find_divisor
    rshift = eng._rep_shift
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
        poly = el.poly
        for key, val in poly.items():
            kk = key + shift
            v = val
            nv = (<long long>f.get(kk, 0) - c * v) % p
            if nv < 0:
                nv += p
            if nv:
                f[kk] = nv
            else:
                f.pop(kk, None)
        if track and el.rep:
            rdict = rep
            rs = rshift(shift)
            for key, val in (<dict>el.rep).items():
                kk = key + rs
                v = val
                nv = (<long long>rdict.get(kk, 0) - c * v) % p
                if nv < 0:
                    nv += p
                if nv:
                    rdict[kk] = nv
                else:
                    rdict.pop(kk, None)
    return rem, rep
