import os
import random

import hypothesis
from hypothesis import strategies as st

from cofin.corpus import random_filter, random_ideal
from cofin.emonoid import EMap
from cofin.upset import UpSet, normalize

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=1000, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

bits = lambda n: st.text(alphabet="01", min_size=n, max_size=n)


@st.composite
def upsets(draw, max_threshold=6, max_period=6):
    t = draw(st.integers(0, max_threshold))
    p = draw(st.integers(1, max_period))
    return normalize(t, p, draw(bits(t)), draw(bits(p)))


@st.composite
def infinite_upsets(draw, **kw):
    a = draw(upsets(**kw))
    if a.is_finite:
        a = a | UpSet.residue(draw(st.integers(1, 4)), draw(st.integers(0, 6)))
    return a


@st.composite
def split_upsets(draw):
    a = draw(infinite_upsets())
    if a.is_cofinite:
        a = a & UpSet.residue(draw(st.integers(2, 4)), draw(st.integers(0, 3)))
    return a


emaps = infinite_upsets().map(EMap)
finite_sets = st.frozensets(st.integers(0, 12), max_size=5).map(UpSet.finite)

# ideals and filters come from the seeded corpus generators, driven by hypothesis seeds
ideals = st.integers(0, 2**32).map(lambda s: random_ideal(random.Random(s)))
filters = st.integers(0, 2**32).map(lambda s: random_filter(random.Random(s)))
