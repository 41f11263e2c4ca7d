"""Affine Weyl group calculus: products, lengths, descents and reduced words."""

from collections import deque
from collections.abc import Iterable

from twincity.errors import InvalidWindow, RankMismatch
from twincity.weyl.models import AffinePermutation


def multiply(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """Composition (u * v)(i) = u(v(i))."""
    if u.n != v.n:
        raise RankMismatch(f"Cannot compose ranks {u.n} and {v.n}")
    return u * v


def inverse(w: AffinePermutation) -> AffinePermutation:
    return w.inverse()


def length(w: AffinePermutation) -> int:
    return w.length


def simple_reflection(n: int, i: int) -> AffinePermutation:
    """s_i for 0 <= i <= n - 1; s_0 = [0, 2, ..., n - 1, n + 1]."""
    if not 0 <= i < n:
        raise InvalidWindow(f"Simple reflection index {i} out of range for n = {n}")
    window = list(range(1, n + 1))
    if i == 0:
        window[0], window[-1] = 0, n + 1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return AffinePermutation(n, tuple(window))


def right_descents(w: AffinePermutation) -> list[int]:
    """Indices i with l(w s_i) < l(w), i.e. w(i) > w(i + 1)."""
    return [i for i in range(w.n) if w(i) > w(i + 1)]


def left_descents(w: AffinePermutation) -> list[int]:
    """Indices i with l(s_i w) < l(w)."""
    return right_descents(w.inverse())


def reduced_word(w: AffinePermutation) -> list[int]:
    """Reduced word by repeatedly stripping the smallest right descent."""
    word: list[int] = []
    current = w
    while not current.is_identity():
        i = right_descents(current)[0]
        current = current * simple_reflection(w.n, i)
        word.insert(0, i)
    return word


def from_word(n: int, word: Iterable[int]) -> AffinePermutation:
    """Product s_{i1} s_{i2} ... of the listed generators."""
    result = AffinePermutation.identity(n)
    for i in word:
        result = result * simple_reflection(n, i)
    return result


def elements_up_to_length(n: int, max_length: int) -> dict[AffinePermutation, int]:
    """All elements of length <= max_length with their word length, by breadth-first search."""
    generators = [simple_reflection(n, i) for i in range(n)]
    start = AffinePermutation.identity(n)
    distances = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        depth = distances[current]
        if depth == max_length:
            continue
        for s in generators:
            neighbour = current * s
            if neighbour not in distances:
                distances[neighbour] = depth + 1
                queue.append(neighbour)
    return distances


def word_length_bfs(w: AffinePermutation, limit: int) -> int | None:
    """Word length by exhaustive search, None when it exceeds ``limit``."""
    return elements_up_to_length(w.n, limit).get(w)


def finite_part(w: AffinePermutation) -> tuple[int, ...]:
    """The permutation of residues, as 1-based images of 1..n."""
    return tuple((v - 1) % w.n + 1 for v in w.window)


def translation_part(w: AffinePermutation) -> tuple[int, ...]:
    """Exponents k_j with w(j) = pi(j) + n k_j."""
    return tuple((v - p) // w.n for v, p in zip(w.window, finite_part(w), strict=True))


def longest_finite_element(n: int) -> AffinePermutation:
    """Longest element of the finite Weyl group S_n, the reversal [n, ..., 1]."""
    return AffinePermutation(n, tuple(range(n, 0, -1)))
