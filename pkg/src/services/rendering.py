"""
Number formats of the BN/MB comparison table

Ratios render to a fixed number of significant digits and large counts to a
mantissa/exponent form with a three-digit exponent ("1.867660E+031"). Both
round half-even on the exact value.
"""
from decimal import ROUND_HALF_EVEN, Context, Decimal

from ..core.errors import DomainError
from .counting import ExactRatio


def group_digits(value: int) -> str:
    """Comma-grouped integer (29,281)"""
    return f"{value:,}"


def render_exact(value: int, grouped: bool = False) -> str:
    return group_digits(value) if grouped else str(value)


def render_decimal(r: ExactRatio, sig_digits: int, grouped: bool = False) -> str:
    """
    Decimal rendering with sig_digits significant digits

    Exact integers render with a trailing ".0"; inexact quotients keep every
    significant digit, trailing zeros included. An inexact quotient whose
    rounding reaches the units digit switches to scientific form, so it never
    reads as an exact integer.
    """
    if sig_digits < 1:
        raise DomainError(f"sig_digits must be >= 1, got {sig_digits}", sig_digits=sig_digits)

    spec = ",f" if grouped else "f"
    whole, remainder = divmod(r.numerator, r.denominator)
    if remainder == 0:
        return f"{format(whole, ',' if grouped else 'd')}.0"

    context = Context(prec=sig_digits, rounding=ROUND_HALF_EVEN)
    quotient = context.divide(Decimal(r.numerator), Decimal(r.denominator))
    if quotient.as_tuple().exponent >= 0:
        return _scientific(quotient, sig_digits - 1)
    return format(quotient, spec)


def _scientific(rounded: Decimal, decimal_places: int) -> str:
    digits = "".join(map(str, rounded.as_tuple().digits)).ljust(decimal_places + 1, "0")
    mantissa = f"{digits[0]}.{digits[1:]}" if decimal_places else digits[0]
    return f"{mantissa}E{rounded.adjusted():+04d}"


def _scientific_context(decimal_places: int) -> Context:
    if decimal_places < 0:
        raise DomainError(f"decimal_places must be >= 0, got {decimal_places}")
    return Context(prec=decimal_places + 1, rounding=ROUND_HALF_EVEN)


def render_scientific(v: int, decimal_places: int) -> str:
    """One integer digit, decimal_places fraction digits, capital E, signed 3-digit exponent"""
    if v < 1:
        raise DomainError(f"scientific rendering needs v >= 1, got {v}", v=v)
    context = _scientific_context(decimal_places)
    return _scientific(context.plus(Decimal(v)), decimal_places)


def render_scientific_ratio(r: ExactRatio, decimal_places: int) -> str:
    if r.numerator == 0:
        raise DomainError("scientific rendering needs a positive ratio")
    context = _scientific_context(decimal_places)
    return _scientific(
        context.divide(Decimal(r.numerator), Decimal(r.denominator)), decimal_places
    )


def render_count(v: int, mode: str, grouped: bool = False, decimal_places: int = 6) -> str:
    """Render a count as exact digits or in scientific form"""
    if mode == "scientific":
        return render_scientific(v, decimal_places)
    return render_exact(v, grouped)
