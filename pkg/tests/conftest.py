from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rationals(bound: int = 9):
    """Small rationals p/q with |p| <= bound, 1 <= q <= bound."""
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def non_integer_rationals(bound: int = 9):
    return rationals(bound).filter(lambda x: x.denominator != 1)
