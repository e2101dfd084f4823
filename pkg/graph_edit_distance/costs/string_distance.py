"""Unit-cost string edit distance."""

from typing import List


def string_edit_distance(s1: str, s2: str) -> int:
    """
    Levenshtein distance with unit substitution, deletion and insertion costs.

    Args:
        s1: First string
        s2: Second string

    Returns:
        Length of a shortest edit sequence turning s1 into s2
    """
    if len(s1) < len(s2):
        s1, s2 = s2, s1
    if not s2:
        return len(s1)

    previous: List[int] = list(range(len(s2) + 1))
    for i, c1 in enumerate(s1, 1):
        current = [i]
        for j, c2 in enumerate(s2, 1):
            current.append(min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (c1 != c2),
            ))
        previous = current
    return previous[-1]
