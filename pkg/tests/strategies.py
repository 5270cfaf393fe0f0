from __future__ import annotations

from hypothesis import strategies as st

from src.cyclosynth.dyadic import Dyadic
from src.cyclosynth.ring import CycloElem, Degree

SMALL = st.integers(min_value=-6, max_value=6)


def dyadics(max_exp: int = 4) -> st.SearchStrategy[Dyadic]:
    return st.builds(Dyadic, st.integers(min_value=-40, max_value=40), st.integers(min_value=0, max_value=max_exp))


def integral_elems(n: int) -> st.SearchStrategy[CycloElem]:
    deg = Degree(n)
    return st.lists(SMALL, min_size=deg.totient, max_size=deg.totient).map(lambda cs: CycloElem(deg, tuple(cs)))


def elems(n: int) -> st.SearchStrategy[CycloElem]:
    deg = Degree(n)
    return st.lists(dyadics(3), min_size=deg.totient, max_size=deg.totient).map(
        lambda cs: CycloElem.from_coeffs(deg, cs)
    )
