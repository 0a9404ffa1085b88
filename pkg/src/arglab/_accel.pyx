# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; same contract as the pure module.

Masks are machine words, so callers must keep graphs at 63 arguments or
fewer; the dispatcher in ``core`` falls back to the pure kernels above that.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef u64 _attacked_by(u64 mask, u64 *tgt_of) noexcept:
    cdef u64 out = 0
    cdef u64 m = mask
    cdef int i
    while m:
        i = _lowest_bit(m)
        out |= tgt_of[i]
        m &= m - 1
    return out


cdef inline int _lowest_bit(u64 m) noexcept:
    cdef int i = 0
    while not (m >> i) & 1:
        i += 1
    return i


cdef u64 *_to_array(int n, masks) except NULL:
    cdef u64 *arr = <u64 *> malloc((n if n > 0 else 1) * sizeof(u64))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        arr[i] = masks[i]
    return arr


def attacked_by(mask, tgt_of):
    cdef int n = len(tgt_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    try:
        return _attacked_by(<u64> mask, tgt)
    finally:
        free(tgt)


cdef void _cf_extend(int i, int n, u64 mask, u64 *att, u64 *tgt, list found):
    if i == n:
        found.append(mask)
        return
    _cf_extend(i + 1, n, mask, att, tgt, found)
    cdef u64 bit = (<u64> 1) << i
    if not ((att[i] | tgt[i]) & mask) and not (att[i] & bit):
        _cf_extend(i + 1, n, mask | bit, att, tgt, found)


def cf_masks(n, att_of, tgt_of):
    cdef u64 *att = _to_array(n, att_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    found: list = []
    try:
        _cf_extend(0, n, 0, att, tgt, found)
    finally:
        free(att)
        free(tgt)
    return found


cdef void _adm_extend(int i, int n, u64 mask, u64 attacked, u64 needed,
                      u64 *att, u64 *tgt, list found):
    if i == n:
        if needed & ~attacked == 0:
            found.append(mask)
        return
    _adm_extend(i + 1, n, mask, attacked, needed, att, tgt, found)
    cdef u64 bit = (<u64> 1) << i
    if not ((att[i] | tgt[i]) & mask) and not (att[i] & bit):
        _adm_extend(i + 1, n, mask | bit, attacked | tgt[i], needed | att[i], att, tgt, found)


def admissible_masks(n, att_of, tgt_of):
    cdef u64 *att = _to_array(n, att_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    found: list = []
    try:
        _adm_extend(0, n, 0, 0, 0, att, tgt, found)
    finally:
        free(att)
        free(tgt)
    return found


def complete_masks(n, att_of, tgt_of):
    cdef u64 *att = _to_array(n, att_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    cdef u64 mask, attacked
    cdef int j
    cdef bint ok
    result: list = []
    try:
        for m in admissible_masks(n, att_of, tgt_of):
            mask = <u64> m
            attacked = _attacked_by(mask, tgt)
            ok = True
            for j in range(n):
                if not (mask >> j) & 1 and att[j] & ~attacked == 0:
                    ok = False
                    break
            if ok:
                result.append(m)
    finally:
        free(att)
        free(tgt)
    return result


def stable_masks(n, att_of, tgt_of):
    cdef u64 *tgt = _to_array(n, tgt_of)
    cdef u64 full = ((<u64> 1) << n) - 1 if n < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    cdef u64 mask
    result: list = []
    try:
        for m in cf_masks(n, att_of, tgt_of):
            mask = <u64> m
            if mask | _attacked_by(mask, tgt) == full:
                result.append(m)
    finally:
        free(tgt)
    return result


cdef int _popcount(u64 m) noexcept:
    cdef int c = 0
    while m:
        m &= m - 1
        c += 1
    return c


def preferred_masks(n, att_of, tgt_of):
    candidates = admissible_masks(n, att_of, tgt_of)
    candidates.sort(key=_mask_popcount, reverse=True)
    cdef u64 mask, kept_mask
    cdef bint subsumed
    maximal: list = []
    for m in candidates:
        mask = <u64> m
        subsumed = False
        for k in maximal:
            kept_mask = <u64> k
            if mask & kept_mask == mask:
                subsumed = True
                break
        if not subsumed:
            maximal.append(m)
    return maximal


def _mask_popcount(m):
    return _popcount(<u64> m)


def grounded_mask(n, att_of, tgt_of):
    cdef u64 *att = _to_array(n, att_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    cdef u64 mask = 0, attacked, nxt
    cdef int j
    try:
        while True:
            attacked = _attacked_by(mask, tgt)
            nxt = 0
            for j in range(n):
                if att[j] & ~attacked == 0:
                    nxt |= (<u64> 1) << j
            if nxt == mask:
                return mask
            mask = nxt
    finally:
        free(att)
        free(tgt)


cdef bint _labeling_ok(int n, u64 *att, u64 *tgt, u64 in_mask, u64 out_mask, int mode) noexcept:
    cdef u64 m = out_mask
    cdef u64 full = ((<u64> 1) << n) - 1 if n < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    cdef u64 a
    cdef int i
    while m:
        i = _lowest_bit(m)
        if not att[i] & in_mask:
            return False
        m &= m - 1
    if mode == 0:
        m = in_mask
        while m:
            i = _lowest_bit(m)
            if tgt[i] & in_mask:
                return False
            m &= m - 1
        return True
    m = in_mask
    while m:
        i = _lowest_bit(m)
        if att[i] & ~out_mask:
            return False
        m &= m - 1
    if mode == 1:
        return True
    m = ~(in_mask | out_mask) & full
    while m:
        i = _lowest_bit(m)
        a = att[i]
        if a & in_mask or a & ~out_mask == 0:
            return False
        m &= m - 1
    return True


def labeling_ok(n, att_of, tgt_of, in_mask, out_mask, mode):
    cdef u64 *att = _to_array(n, att_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    try:
        return bool(_labeling_ok(n, att, tgt, <u64> in_mask, <u64> out_mask, <int> mode))
    finally:
        free(att)
        free(tgt)


cdef void _assign(int i, int n, u64 in_mask, u64 out_mask, u64 *att, u64 *tgt,
                  int mode, list found):
    if i == n:
        if _labeling_ok(n, att, tgt, in_mask, out_mask, mode):
            found.append((in_mask, out_mask))
        return
    cdef u64 bit = (<u64> 1) << i
    cdef u64 assigned = bit - 1
    cdef u64 undec_assigned = assigned & ~(in_mask | out_mask)
    cdef u64 a = att[i]
    if not ((a | tgt[i]) & in_mask) and (mode == 0 or not a & undec_assigned):
        _assign(i + 1, n, in_mask | bit, out_mask, att, tgt, mode, found)
    if a & ~assigned or a & in_mask:
        _assign(i + 1, n, in_mask, out_mask | bit, att, tgt, mode, found)
    if mode == 0:
        _assign(i + 1, n, in_mask, out_mask, att, tgt, mode, found)
    elif not (mode == 2 and a & in_mask) and not tgt[i] & in_mask:
        _assign(i + 1, n, in_mask, out_mask, att, tgt, mode, found)


def labelings(n, att_of, tgt_of, mode):
    cdef u64 *att = _to_array(n, att_of)
    cdef u64 *tgt = _to_array(n, tgt_of)
    found: list = []
    try:
        _assign(0, n, 0, 0, att, tgt, <int> mode, found)
    finally:
        free(att)
        free(tgt)
    return found
