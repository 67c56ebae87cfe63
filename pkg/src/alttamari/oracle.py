"""Brute-force reference implementations used only to cross-check results.

Everything here works on raw step words and dense relation matrices, and
deliberately shares no code with the tree and vector machinery it
validates: rotations are recomputed from scratch off an altitude profile,
path sets are enumerated by a plain recursion, reachability is a Warshall
sweep, and censuses come from scanning every comparable pair for the
chain property.
"""

from __future__ import annotations

NORTH = "N"
EAST = "E"


def count_paths_above(nu_word: str) -> int:
    """Ballot-style count of the paths weakly above nu, by dynamic programming."""
    reach = _east_reach(nu_word)
    ways = [1] * (reach[0] + 1)
    for y in range(1, len(reach)):
        prev = ways
        ways = []
        total = 0
        for x in range(reach[y] + 1):
            if x < len(prev):
                total += prev[x]
            ways.append(total)
    return ways[-1]


def _east_reach(word: str) -> list[int]:
    """Largest x allowed at each height: the east prefix sums of the word."""
    reach = [0]
    for ch in word:
        if ch == NORTH:
            reach.append(reach[-1])
        else:
            reach[-1] += 1
    return reach


def enumerate_words_above(nu_word: str) -> list[str]:
    """All step words weakly above nu with the same endpoints."""
    reach = _east_reach(nu_word)
    n = len(reach) - 1
    m = reach[-1]
    out: list[str] = []

    def walk(prefix: list[str], x: int, y: int) -> None:
        if x == m and y == n:
            out.append("".join(prefix))
            return
        if y < n:
            prefix.append(NORTH)
            walk(prefix, x, y + 1)
            prefix.pop()
        if x < reach[y]:
            prefix.append(EAST)
            walk(prefix, x + 1, y)
            prefix.pop()

    walk([], 0, 0)
    return out


def altitude_profile(word: str, increments: tuple[int, ...]) -> list[int]:
    profile = [0]
    seen = 0
    for ch in word:
        if ch == NORTH:
            profile.append(profile[-1] + increments[seen])
            seen += 1
        else:
            profile.append(profile[-1] - 1)
    return profile


def naive_rotations(word: str, increments: tuple[int, ...]) -> list[tuple[int, str]]:
    """Every (valley ordinal, rotated word) pair, recomputed from scratch."""
    profile = altitude_profile(word, increments)
    results = []
    ordinal = 0
    for i in range(len(word) - 1):
        if word[i] == EAST and word[i + 1] == NORTH:
            target = profile[i + 1]
            stop = None
            for j in range(i + 2, len(word) + 1):
                if profile[j] == target:
                    stop = j
                    break
            if stop is None:
                raise ValueError(f"no altitude return after valley at step {i} of {word!r}")
            rotated = word[:i] + word[i + 1 : stop] + EAST + word[stop:]
            results.append((ordinal, rotated))
            ordinal += 1
    return results


def closure_from_covers(size: int, covers: list[tuple[int, int]]) -> list[int]:
    """Reflexive-transitive closure as bitset rows, Warshall style."""
    matrix = [1 << i for i in range(size)]
    for low, high in covers:
        matrix[low] |= 1 << high
    for k in range(size):
        row_k = matrix[k]
        bit_k = 1 << k
        for i in range(size):
            if matrix[i] & bit_k:
                matrix[i] |= row_k
    for i in range(size):
        for j in range(size):
            if i != j and matrix[i] >> j & 1 and matrix[j] >> i & 1:
                raise ValueError(f"cycle through elements {i} and {j}")
    return matrix


def oracle_is_linear(matrix: list[int], bottom: int, top: int) -> tuple[bool, int]:
    """Chain test over the dense relation matrix; also returns the length."""
    members = [z for z in range(len(matrix)) if matrix[bottom] >> z & 1 and matrix[z] >> top & 1]
    for a in members:
        for b in members:
            if not (matrix[a] >> b & 1 or matrix[b] >> a & 1):
                return False, len(members) - 1
    return True, len(members) - 1


def oracle_census(matrix: list[int]) -> tuple[int, ...]:
    """Linear interval counts by length, scanning all comparable pairs."""
    counts: list[int] = []
    size = len(matrix)
    for bottom in range(size):
        for top in range(size):
            if matrix[bottom] >> top & 1:
                linear, length = oracle_is_linear(matrix, bottom, top)
                if linear:
                    while len(counts) <= length:
                        counts.append(0)
                    counts[length] += 1
    return tuple(counts)


def oracle_meet(matrix: list[int], a: int, b: int) -> int | None:
    candidates = [z for z in range(len(matrix)) if matrix[z] >> a & 1 and matrix[z] >> b & 1]
    for z in candidates:
        if all(matrix[w] >> z & 1 for w in candidates):
            return z
    return None


def oracle_join(matrix: list[int], a: int, b: int) -> int | None:
    candidates = [z for z in range(len(matrix)) if matrix[a] >> z & 1 and matrix[b] >> z & 1]
    for z in candidates:
        if all(matrix[z] >> w & 1 for w in candidates):
            return z
    return None


def dyck_marked_counts(nu_word: str, length: int) -> tuple[int, int]:
    """Marked-path counts matching the valley-flip lattice's interval families.

    Left marks are north steps immediately preceded by at least `length`
    east steps; right marks are east steps immediately followed by at
    least `length` north steps.
    """
    if length < 1:
        raise ValueError("marking length must be >= 1")
    left = right = 0
    east_run = EAST * length
    north_run = NORTH * length
    for word in enumerate_words_above(nu_word):
        for i, ch in enumerate(word):
            if ch == NORTH and word[max(0, i - length) : i] == east_run and i >= length:
                left += 1
            if ch == EAST and word[i + 1 : i + 1 + length] == north_run:
                right += 1
    return left, right


# -- path-shape detectors for classification cross-checks ----------------


def dyck_left_form(bottom: str, top: str, length: int) -> bool:
    """Does some E^length N in `bottom` rewrite to N E^length giving `top`?"""
    pattern = EAST * length + NORTH
    replacement = NORTH + EAST * length
    for i in range(len(bottom) - length):
        if bottom[i : i + length + 1] == pattern:
            if bottom[:i] + replacement + bottom[i + length + 1 :] == top:
                return True
    return False


def dyck_right_form(bottom: str, top: str, length: int) -> bool:
    """Does some E N^length in `bottom` rewrite to N^length E giving `top`?"""
    pattern = EAST + NORTH * length
    replacement = NORTH * length + EAST
    for i in range(len(bottom) - length):
        if bottom[i : i + length + 1] == pattern:
            if bottom[:i] + replacement + bottom[i + length + 1 :] == top:
                return True
    return False


def _excursion_end(word: str, start: int, increments: tuple[int, ...]) -> int | None:
    """End index (exclusive) of the excursion of the north step at `start`."""
    seen = word[:start].count(NORTH)
    elevation = 0
    for j in range(start, len(word)):
        if word[j] == NORTH:
            elevation += increments[seen]
            seen += 1
        else:
            elevation -= 1
        if elevation == 0:
            return j + 1
    return None


def rotation_left_form(bottom: str, top: str, length: int, increments: tuple[int, ...]) -> bool:
    """Bottom A E^k B C with B an excursion, rewritten to A B E^k C."""
    k = length
    for i in range(len(bottom) - k):
        if bottom[i : i + k] != EAST * k or bottom[i + k] != NORTH:
            continue
        end = _excursion_end(bottom, i + k, increments)
        if end is None:
            continue
        candidate = bottom[:i] + bottom[i + k : end] + EAST * k + bottom[end:]
        if candidate == top:
            return True
    return False


def rotation_right_form(bottom: str, top: str, length: int, increments: tuple[int, ...]) -> bool:
    """Bottom A E B_1..B_k C with consecutive excursions, rewritten to A B_1..B_k E C."""
    k = length
    for i in range(len(bottom) - 1):
        if bottom[i] != EAST or bottom[i + 1] != NORTH:
            continue
        pos = i + 1
        ok = True
        for _ in range(k):
            if pos >= len(bottom) or bottom[pos] != NORTH:
                ok = False
                break
            end = _excursion_end(bottom, pos, increments)
            if end is None:
                ok = False
                break
            pos = end
        if not ok:
            continue
        candidate = bottom[:i] + bottom[i + 1 : pos] + EAST + bottom[pos:]
        if candidate == top:
            return True
    return False
