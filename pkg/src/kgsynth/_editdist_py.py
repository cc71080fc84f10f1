"""Pure-Python Levenshtein kernels.

Fallback implementation used when the compiled extension is unavailable.
Semantics are identical to ``kgsynth._editdist_c``; the deduplication sweep
and tests treat the two as interchangeable.
"""


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance (insert/delete/substitute) between two strings."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la < lb:  # iterate over the shorter string's rows
        a, b, la, lb = b, a, lb, la
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        ca = a[i - 1]
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if ca == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev = cur
    return prev[lb]


def levenshtein_capped(a: str, b: str, cap: int) -> int:
    """Edit distance if it is <= cap, else cap + 1.

    Banded dynamic program: only cells with |i - j| <= cap are evaluated, so
    a rejected pair costs O(cap * len) instead of O(len^2). ``cap < 0`` is a
    domain error; ``cap >= max(len)`` degenerates to the exact distance.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if abs(la - lb) > cap:
        return cap + 1
    if la == 0 or lb == 0:
        return max(la, lb)  # <= cap by the check above
    big = cap + 1
    prev = [j if j <= cap else big for j in range(lb + 1)]
    for i in range(1, la + 1):
        ca = a[i - 1]
        lo = i - cap if i - cap > 1 else 1
        hi = i + cap if i + cap < lb else lb
        cur = [big] * (lb + 1)
        if lo == 1:
            cur[0] = i if i <= cap else big
        best = big
        for j in range(lo, hi + 1):
            cost = 0 if ca == b[j - 1] else 1
            d = prev[j - 1] + cost
            if prev[j] + 1 < d:
                d = prev[j] + 1
            if cur[j - 1] + 1 < d:
                d = cur[j - 1] + 1
            if d > big:
                d = big
            cur[j] = d
            if d < best:
                best = d
        if best > cap:
            return big
        prev = cur
    return prev[lb] if prev[lb] <= cap else big
