from fractions import Fraction

from errors import InvalidInputError


def normalize_rational(num: int, den: int) -> Fraction:
    """Canonical reduced form with positive denominator; zero is 0/1."""
    if den == 0:
        raise InvalidInputError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (surrounding whitespace allowed)."""
    cleaned = str(text).strip()
    parts = cleaned.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return normalize_rational(int(parts[0]), int(parts[1]))
    except ValueError:
        pass
    raise InvalidInputError(f"not a rational: {text!r}")


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
