import pytest

import diffop_oracle
from qlorentz.algebras import get_algebra, nonrelativistic_algebra, relativistic_algebra
from qlorentz.errors import UnknownIdentityError
from qlorentz.exprlang import parse, render
from qlorentz.identities import (
    Identity,
    builtin_expressions,
    check,
    get_identity,
    registry,
    verify_all,
    verify_identity,
)
from qlorentz.opalg import adjoint, brackets, equals, normalize

NAMES = ["eq4", "eq6", "eq7", "eq8", "velocity", "eq9", "a2", "a5", "a6", "a7",
         "b2", "b3", "eq18", "eq19"]


def test_registry_order_and_size():
    assert list(registry()) == NAMES


@pytest.mark.parametrize("name", NAMES)
def test_identity_passes(name):
    report = verify_identity(name)
    assert report.passed, report.line()
    assert report.residual == "0"


@pytest.mark.parametrize("name", NAMES)
def test_identity_holds_in_differential_realization(name):
    ident = get_identity(name)
    assert diffop_oracle.is_zero(ident.lhs - ident.rhs)


def test_mutated_eq9_reports_residual():
    ident = get_identity("eq9")
    rel = relativistic_algebra()
    wrong = parse("c^2*t^2 - x^2 + hbar^2*c^2*H^-2/2", rel)
    report = check(Identity("eq9-mutant", "rel", ident.lhs, wrong, "test"))
    assert report.status == "fail"
    # hand subtraction: 1/4 - 1/2 = -1/4
    assert report.residual == "-1/4*hbar^2*c^2*H^-2"


def test_unknown_name():
    with pytest.raises(UnknownIdentityError):
        verify_identity("eq99")


def test_verify_all_is_deterministic():
    first = [r.line() for r in verify_all()]
    second = [r.line() for r in verify_all()]
    assert first == second
    assert len(first) == 14


def test_filter_by_algebra():
    assert [r.name for r in verify_all("nonrel")] == ["eq19"]
    assert len(verify_all("rel")) == 13


class TestBuiltins:
    def test_quantized_and_simplified_forms_agree(self):
        b = builtin_expressions()
        rel = relativistic_algebra()
        assert equals(b["xprime3"], b["xprime5"], rel)
        assert equals(b["tprime3"], b["tprime5"], rel)

    def test_boosted_x_is_sym_over_mc2_minus_tp_over_m(self):
        rel = relativistic_algebra()
        h, x = parse("H", rel), parse("x", rel)
        formal = brackets(h, x, "sym", rel) / parse("m*c^2", rel) - parse("t*p/m", rel)
        assert equals(builtin_expressions()["xprime5"], formal, rel)

    def test_arrival_time_is_m_sym(self):
        nonrel = nonrelativistic_algebra()
        pinv, x = parse("p^-1", nonrel), parse("x", nonrel)
        assert equals(builtin_expressions()["Tnon"], parse("m", nonrel) * brackets(pinv, x, "sym", nonrel), nonrel)

    def test_inverse_free_hamiltonian(self):
        nonrel = nonrelativistic_algebra()
        hinv = builtin_expressions()["HnonInv"]
        hnon = parse("p^2/(2*m)", nonrel)
        assert render(normalize(hinv * hnon, nonrel)) == "1"

    @pytest.mark.parametrize("name, alg", [("xprime5", "rel"), ("tprime5", "rel"), ("Tnon", "nonrel"),
                                           ("xprime3", "rel"), ("tprime3", "rel")])
    def test_self_adjoint(self, name, alg):
        spec = get_algebra(alg)
        e = builtin_expressions()[name]
        assert adjoint(e, spec) == normalize(e, spec)

    def test_eq9_from_quantized_forms(self):
        rel = relativistic_algebra()
        b = builtin_expressions()
        xp, tp = b["xprime3"], b["tprime3"]
        lhs = parse("c^2", rel) * tp * tp - xp * xp
        rhs = parse("c^2*t^2 - x^2 + hbar^2*c^2*H^-2/4", rel)
        assert equals(lhs, rhs, rel)

    def test_boosted_coordinates_do_not_commute(self):
        rel = relativistic_algebra()
        b = builtin_expressions()
        out = brackets(b["xprime5"], b["tprime5"], "comm", rel)
        assert render(out) == "-i*hbar*x*H^-1 + 1/2*hbar^2*c^2*p*H^-3"
