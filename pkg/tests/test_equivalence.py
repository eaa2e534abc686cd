from fractions import Fraction

import pytest

from prodcheck.algebras import resolve_builtin
from prodcheck.engine import apply, basis_vector
from prodcheck.equivalence.functors import (
    ca_round_trip, check_vpa_morphism, is_ca_morphism, is_vpa_morphism, phi, psi, round_trip,
)
from prodcheck.equivalence.splitting import augment, split_unit, wedge_of_ca
from prodcheck.exceptions import IsoCheckFailure, MissingRole, NotIdempotent, SuiteFailure
from prodcheck.models.algebra_model import Role
from prodcheck.tensor import (
    RationalTensor, t_add, t_compose, t_identity, t_scale, t_swap, t_tensor, t_zero,
)
from tests.conftest import CA_BUILTINS, VPA_BUILTINS

CA_WITH_SPLIT = CA_BUILTINS + ["complex:+", "quaternion:+-", "octonion:+--"]


@pytest.mark.parametrize("name, rank", [("real", 0), ("complex", 1), ("quaternion", 3), ("octonion", 7)])
def test_split_rank(name, rank):
    assert split_unit(resolve_builtin(name)).rank == rank


@pytest.mark.parametrize("name", CA_WITH_SPLIT)
def test_direct_sum_laws(name):
    s = split_unit(resolve_builtin(name))
    n, r = s.e.cod[0], s.rank
    assert t_compose(s.p, s.e).scalar() == 1
    assert t_compose(s.q, s.i) == t_identity(r)
    assert t_compose(s.p, s.i) == t_zero((r,), ())
    assert t_compose(s.q, s.e) == t_zero((), (r,))
    assert t_add(t_compose(s.e, s.p), t_compose(s.i, s.q)) == t_identity(n)
    assert s.idem == t_compose(s.i, s.q)


def test_split_needs_a_unit_of_norm_one(quaternion):
    e = quaternion.tensors["e"]
    doubled = quaternion.model_copy(update={"tensors": quaternion.tensors | {"e": t_scale(2, e)}})
    with pytest.raises(NotIdempotent):
        split_unit(doubled)


def test_split_needs_a_multiplication(quaternion):
    roles = {r: g for r, g in quaternion.roles.items() if r is not Role.m}
    with pytest.raises(MissingRole):
        split_unit(quaternion.model_copy(update={"roles": roles}))


def test_wedge_of_ca(quaternion):
    w = wedge_of_ca(quaternion)
    i, j, k = (basis_vector(4, n) for n in (1, 2, 3))
    assert apply(w, [i, j]) == k
    assert t_compose(w, t_swap(4, 4)) == t_scale(-1, w)
    assert wedge_of_ca(resolve_builtin("real")) == t_zero((1, 1), (1,))


def test_augment_adds_the_splitting(quaternion):
    aug = augment(quaternion)
    assert aug.objects["V"] == 3
    assert aug.has_roles(Role.p, Role.q, Role.i)
    assert aug.role_decl(Role.i).dom == ("V",)


def test_phi_of_quaternions_is_cross3(quaternion, cross3):
    image = phi(quaternion)
    assert image.objects == {"V": 3}
    for role in (Role.cup, Role.cap, Role.wedge):
        assert image.role_tensor(role) == cross3.role_tensor(role)


def test_phi_of_complex_is_cross1():
    image = phi(resolve_builtin("complex"))
    assert image.role_tensor(Role.wedge) == resolve_builtin("cross1").role_tensor(Role.wedge)


def test_phi_of_octonions_has_dimension_seven(octonion, cross7):
    image = phi(octonion)
    assert image.objects["V"] == 7
    assert image.role_tensor(Role.wedge) == cross7.role_tensor(Role.wedge)


def test_psi_of_cross3_is_the_quaternion_table(cross3, quaternion):
    rebuilt = psi(cross3)
    assert rebuilt.role_tensor(Role.m) == quaternion.role_tensor(Role.m)
    assert rebuilt.role_tensor(Role.cup) == quaternion.role_tensor(Role.cup)
    assert rebuilt.role_tensor(Role.e) == quaternion.role_tensor(Role.e)
    i, j, k = (basis_vector(4, n) for n in (1, 2, 3))
    assert apply(rebuilt.role_tensor(Role.m), [i, j]) == k


@pytest.mark.parametrize("vpa, ca", [("cross0", "real"), ("cross1", "complex"), ("cross7", "octonion")])
def test_psi_rebuilds_the_classical_algebras(vpa, ca):
    assert psi(resolve_builtin(vpa)).role_tensor(Role.m) == resolve_builtin(ca).role_tensor(Role.m)


def test_psi_refuses_a_non_vpa(catalog):
    with pytest.raises(SuiteFailure) as err:
        psi(resolve_builtin("zerowedge2"), catalog, check=True)
    assert "wedge-strange" in err.value.failed_ids


@pytest.mark.parametrize("name", VPA_BUILTINS)
def test_round_trip_is_the_identity(name):
    model = resolve_builtin(name)
    h = round_trip(model)
    n = model.objects["V"]
    assert h == t_identity(n)


@pytest.mark.parametrize("name", CA_WITH_SPLIT)
def test_ca_round_trip_is_a_ca_morphism(name):
    model = resolve_builtin(name)
    f = ca_round_trip(model)
    assert is_ca_morphism(f, model, psi(phi(model)))


def test_morphism_checks_reject_a_scaling(cross3):
    doubled = t_scale(2, t_identity(3))
    assert is_vpa_morphism(t_identity(3), cross3, cross3)
    assert not is_vpa_morphism(doubled, cross3, cross3)
    with pytest.raises(IsoCheckFailure):
        check_vpa_morphism(doubled, cross3, cross3)


def test_sign_flip_is_not_a_vpa_morphism(cross3):
    flip = t_scale(-1, t_identity(3))
    # preserves the inner product but reverses the cross product
    assert not is_vpa_morphism(flip, cross3, cross3)


def test_ca_morphism_requires_the_unit(quaternion):
    assert is_ca_morphism(t_identity(4), quaternion, quaternion)
    zero = RationalTensor((4,), (4,))
    assert not is_ca_morphism(zero, quaternion, quaternion)


def test_phi_transports_cup_to_the_vector_part(quaternion):
    s = split_unit(quaternion)
    cup_v = phi(quaternion, s).role_tensor(Role.cup)
    assert cup_v == t_compose(quaternion.role_tensor(Role.cup), t_tensor(s.i, s.i))
    assert cup_v[0, 0] == Fraction(1)
