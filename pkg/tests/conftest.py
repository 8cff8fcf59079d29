from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def small_fractions(lo=-6, hi=6, max_den=6):
    return st.builds(Fraction, st.integers(lo * max_den, hi * max_den), st.integers(1, max_den))


def fraction_lists(min_size=1, max_size=8):
    return st.lists(small_fractions(), min_size=min_size, max_size=max_size)
