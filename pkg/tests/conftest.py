from pathlib import Path

import pytest
from hypothesis import strategies as st

from ltphodge.motive import EPolynomial

GOLDEN = Path(__file__).parent / "golden"

# Small sparse polynomials with signed coefficients; big enough to exercise
# carries between terms, small enough to keep products cheap.
coeffs = st.integers(min_value=-50, max_value=50)
monomials = st.tuples(st.integers(0, 4), st.integers(0, 4))
e_polys = st.dictionaries(monomials, coeffs, max_size=6).map(EPolynomial.from_terms)


@st.composite
def symmetric_e_polys(draw):
    terms = draw(st.dictionaries(monomials, coeffs, max_size=5))
    sym = {}
    for (p, q), c in terms.items():
        sym[(p, q)] = c
        sym[(q, p)] = c
    return EPolynomial.from_terms(sym)


@pytest.fixture
def golden():
    return GOLDEN
