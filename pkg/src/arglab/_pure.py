"""Pure-Python enumeration kernels over bitmask-encoded attack graphs.

Arguments are encoded as bit positions; ``att_of[i]`` is the bitmask of the
attackers of argument ``i`` and ``tgt_of[i]`` the bitmask of its targets.
The compiled module ``_accel`` implements the same functions for graphs of at
most 63 arguments; these versions work for any size via big integers.
"""

from __future__ import annotations

__all__ = [
    "attacked_by",
    "cf_masks",
    "admissible_masks",
    "complete_masks",
    "stable_masks",
    "preferred_masks",
    "grounded_mask",
    "labelings",
    "labeling_ok",
]


def attacked_by(mask: int, tgt_of: list[int]) -> int:
    """Bitmask of everything attacked by some member of ``mask``."""
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= tgt_of[low.bit_length() - 1]
        m &= m - 1
    return out


def cf_masks(n: int, att_of: list[int], tgt_of: list[int]) -> list[int]:
    found: list[int] = []

    def extend(i: int, mask: int) -> None:
        if i == n:
            found.append(mask)
            return
        extend(i + 1, mask)
        bit = 1 << i
        if not ((att_of[i] | tgt_of[i]) & mask) and not (att_of[i] & bit):
            extend(i + 1, mask | bit)

    extend(0, 0)
    return found


def admissible_masks(n: int, att_of: list[int], tgt_of: list[int]) -> list[int]:
    found: list[int] = []

    def extend(i: int, mask: int, attacked: int, needed: int) -> None:
        if i == n:
            if needed & ~attacked == 0:
                found.append(mask)
            return
        extend(i + 1, mask, attacked, needed)
        bit = 1 << i
        if not ((att_of[i] | tgt_of[i]) & mask) and not (att_of[i] & bit):
            extend(i + 1, mask | bit, attacked | tgt_of[i], needed | att_of[i])

    extend(0, 0, 0, 0)
    return found


def complete_masks(n: int, att_of: list[int], tgt_of: list[int]) -> list[int]:
    result = []
    for mask in admissible_masks(n, att_of, tgt_of):
        attacked = attacked_by(mask, tgt_of)
        complete = True
        for j in range(n):
            if not mask >> j & 1 and att_of[j] & ~attacked == 0:
                complete = False
                break
        if complete:
            result.append(mask)
    return result


def stable_masks(n: int, att_of: list[int], tgt_of: list[int]) -> list[int]:
    full = (1 << n) - 1
    return [m for m in cf_masks(n, att_of, tgt_of) if m | attacked_by(m, tgt_of) == full]


def preferred_masks(n: int, att_of: list[int], tgt_of: list[int]) -> list[int]:
    candidates = admissible_masks(n, att_of, tgt_of)
    candidates.sort(key=lambda m: bin(m).count("1"), reverse=True)
    maximal: list[int] = []
    for m in candidates:
        if not any(m & kept == m for kept in maximal):
            maximal.append(m)
    return maximal


def grounded_mask(n: int, att_of: list[int], tgt_of: list[int]) -> int:
    mask = 0
    while True:
        attacked = attacked_by(mask, tgt_of)
        nxt = 0
        for j in range(n):
            if att_of[j] & ~attacked == 0:
                nxt |= 1 << j
        if nxt == mask:
            return mask
        mask = nxt


def labeling_ok(n: int, att_of: list[int], tgt_of: list[int], in_mask: int, out_mask: int, mode: int) -> bool:
    """Check a complete assignment.  Mode 0: conflict-free, 1: admissible, 2: complete.

    Every OUT argument must have an IN attacker (all modes).  Mode 0 forbids
    attacks between IN arguments; modes 1 and 2 require every IN argument's
    attackers to be OUT; mode 2 additionally requires every UNDEC argument to
    have no IN attacker and at least one attacker not labeled OUT.
    """
    m = out_mask
    while m:
        low = m & -m
        if not att_of[low.bit_length() - 1] & in_mask:
            return False
        m &= m - 1
    if mode == 0:
        m = in_mask
        while m:
            low = m & -m
            if tgt_of[low.bit_length() - 1] & in_mask:
                return False
            m &= m - 1
        return True
    m = in_mask
    while m:
        low = m & -m
        if att_of[low.bit_length() - 1] & ~out_mask:
            return False
        m &= m - 1
    if mode == 1:
        return True
    undec = ~(in_mask | out_mask) & ((1 << n) - 1)
    m = undec
    while m:
        low = m & -m
        att = att_of[low.bit_length() - 1]
        if att & in_mask or att & ~out_mask == 0:
            return False
        m &= m - 1
    return True


def labelings(n: int, att_of: list[int], tgt_of: list[int], mode: int) -> list[tuple[int, int]]:
    """All (in_mask, out_mask) pairs passing :func:`labeling_ok` for ``mode``."""
    found: list[tuple[int, int]] = []

    def assign(i: int, in_mask: int, out_mask: int) -> None:
        if i == n:
            if labeling_ok(n, att_of, tgt_of, in_mask, out_mask, mode):
                found.append((in_mask, out_mask))
            return
        bit = 1 << i
        assigned = bit - 1
        undec_assigned = assigned & ~(in_mask | out_mask)
        att = att_of[i]
        # IN: prune attacks to or from an already-IN argument, and (for
        # admissibility) attackers already left UNDEC.
        if not ((att | tgt_of[i]) & in_mask) and (mode == 0 or not att & undec_assigned):
            assign(i + 1, in_mask | bit, out_mask)
        # OUT: prune only when every attacker is already assigned and none is IN.
        if att & ~assigned or att & in_mask:
            assign(i + 1, in_mask, out_mask | bit)
        # UNDEC: in mode 2 an IN attacker makes the label illegal; leaving an
        # IN argument with an UNDEC attacker breaks modes 1 and 2.
        if mode == 0:
            assign(i + 1, in_mask, out_mask)
        else:
            if not (mode == 2 and att & in_mask) and not tgt_of[i] & in_mask:
                assign(i + 1, in_mask, out_mask)

    assign(0, 0, 0)
    return found
