import os

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def close(x, y, rel=1e-12, abs_=0.0):
    x, y = complex(x), complex(y)
    return abs(x - y) <= max(rel * max(abs(x), abs(y)), abs_)
