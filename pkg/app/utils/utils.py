import re
from fractions import Fraction
from typing import Union

from app.exceptions import Degree, format_degree
from app.utils.regex import REGEX_DEGREE_KEY, REGEX_GENERATOR, REGEX_RATIONAL, REGEX_WINDOW


def parse_rational(value: Union[int, str]) -> Fraction:
    """
    Parse an exact rational from a decimal integer or a `p/q` literal.

    Args:
        value (Union[int, str]): The literal. Booleans and floats are rejected.

    Returns:
        Fraction: The value in canonical form.

    Raises:
        ValueError: If the literal is malformed or has a zero denominator.
    """
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"Expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)

    match = re.match(REGEX_RATIONAL, value.strip())
    if not match:
        raise ValueError(f"Malformed rational {value!r}")
    denominator = int(match.group("denominator") or 1)
    if denominator == 0:
        raise ValueError(f"Zero denominator in {value!r}")
    return Fraction(int(match.group("numerator")), denominator)


def render_rational(value: Fraction) -> str:
    """
    Canonical rendering of a rational: `1/2`, `-3`, `0`.

    Args:
        value (Fraction): The value.

    Returns:
        str: Lowest terms, no denominator for integers.
    """
    return str(Fraction(value))


def parse_degree_key(key: str) -> tuple[int, int]:
    """
    Parse an `"i,j"` map key. Only canonical integers are accepted, so each degree has exactly one key.

    Raises:
        ValueError: If the key is not two comma-separated canonical integers.
    """
    match = re.match(REGEX_DEGREE_KEY, key)
    if not match:
        raise ValueError(f"Malformed degree key {key!r}")
    return int(match.group("i")), int(match.group("j"))


def render_degree_key(degree: tuple[int, int]) -> str:
    """Render a degree pair as an `"i,j"` map key."""
    return "{},{}".format(*degree)


def parse_window_flag(text: str) -> tuple[int, ...]:
    """
    Parse a `--window a,b[,c,d]` flag into two or four integers.

    Raises:
        ValueError: If the flag does not match.
    """
    match = re.match(REGEX_WINDOW, text.replace(" ", ""))
    if not match:
        raise ValueError(f"Malformed window {text!r}, expected 'a,b' or 'a,b,c,d'")
    values = [match.group(name) for name in ("alpha", "beta", "gamma", "delta")]
    return tuple(int(v) for v in values if v is not None)


def parse_generators_flag(text: str) -> dict[Degree, int]:
    """
    Parse a `--gens "(d1);(d2);..."` flag into generator multiplicities.

    Each item is a degree in parentheses, `(3)` or `(1,2)`, optionally followed by `*k`; repeated degrees add up.

    Raises:
        ValueError: If an item does not match.
    """
    result: dict[Degree, int] = {}
    for item in filter(None, (part.strip() for part in text.replace(" ", "").split(";"))):
        match = re.match(REGEX_GENERATOR, item)
        if not match:
            raise ValueError(f"Malformed generator {item!r}, expected '(i)' or '(i,j)' with optional '*k'")
        coordinates = [int(c) for c in match.group("degree").split(",")]
        degree: Degree = coordinates[0] if len(coordinates) == 1 else (coordinates[0], coordinates[1])
        result[degree] = result.get(degree, 0) + int(match.group("multiplicity") or 1)
    return result


def describe_counts(counts: dict[Degree, int]) -> str:
    """Render a degree-to-count table as `0:1 1:1` / `(0,0):1 (1,1):1`."""
    return " ".join(f"{format_degree(degree)}:{count}" for degree, count in counts.items())
