import itertools
import random

import pytest

from hermdig.codec import canonical_code
from hermdig.digraphs import random_digraph
from hermdig.errors import (
    DigonInCutError,
    InadmissiblePartitionError,
    InvalidPartitionError,
    InvalidVertexSetError,
    NonDigonInCutError,
    UnderlyingNotCycleError,
)
from hermdig.families import directed_cycle, family
from hermdig.hermitian import hermitian_char_poly
from hermdig.models.digraph import Digraph, PairState
from hermdig.models.structures import CycleForm, Phase, QuaternaryPartition
from hermdig.switching import (
    bridge_digon_replace,
    cycle_form_candidates,
    cycle_normal_form,
    digon_cut_replace,
    four_way_by_rules,
    four_way_switch,
    is_admissible,
    kn_cospectral_class,
    local_reversal,
    replay_witness,
)


def test_local_reversal_preserves_spectrum():
    X = directed_cycle(5)
    Y = local_reversal(X, [0, 2])
    assert Y != X
    assert hermitian_char_poly(Y) == hermitian_char_poly(X)
    assert local_reversal(Y, [0, 2]) == X


def test_local_reversal_rejects_digons_in_cut():
    with pytest.raises(DigonInCutError) as info:
        local_reversal(family("K3prime"), [1])
    assert info.value.pairs == [(0, 1)]


def test_digon_cut_replace():
    X = family("K", 3)
    Y = digon_cut_replace(X, [2])
    assert Y.arcs() == [(0, 1), (0, 2), (1, 0), (1, 2)]
    assert hermitian_char_poly(Y) == hermitian_char_poly(X)
    with pytest.raises(NonDigonInCutError):
        digon_cut_replace(directed_cycle(3), [0])


def test_vertex_sets_are_checked():
    with pytest.raises(InvalidVertexSetError):
        local_reversal(directed_cycle(3), [5])


def test_four_way_agrees_with_rule_list():
    rng = random.Random(5)
    checked = 0
    while checked < 200:
        X = random_digraph(rng.randint(2, 7), rng)
        P = QuaternaryPartition(tuple(rng.choice(list(Phase)) for _ in range(X.n)))
        try:
            Y = four_way_switch(X, P)
        except InadmissiblePartitionError:
            with pytest.raises(InadmissiblePartitionError):
                four_way_by_rules(X, P)
            continue
        assert four_way_by_rules(X, P) == Y
        assert hermitian_char_poly(Y) == hermitian_char_poly(X)
        checked += 1


def test_four_way_uniform_partition_is_identity(random_digraphs):
    for X in random_digraphs:
        assert four_way_switch(X, QuaternaryPartition.uniform(X.n, Phase.I)) == X


def test_four_way_inadmissible_digon():
    K2 = family("K", 2)
    assert not is_admissible(K2, QuaternaryPartition.parse("1,-1"))
    assert is_admissible(K2, QuaternaryPartition.parse("1,i"))
    assert four_way_switch(K2, QuaternaryPartition.parse("1,i")).arcs() == [(0, 1)]
    with pytest.raises(InvalidPartitionError):
        four_way_switch(K2, QuaternaryPartition.parse("1,i,1"))


def test_complete_graph_class():
    for n in range(1, 7):
        members = kn_cospectral_class(n)
        assert len(members) == n
        assert len({canonical_code(X) for X in members}) == n
        assert len({hermitian_char_poly(X) for X in members}) == 1


def test_bridge_digon_replace():
    P3 = family("P", 3)
    Y = bridge_digon_replace(P3, 0, 1)
    assert Y.state(0, 1) == PairState.FWD
    assert Y.is_digon(1, 2)
    assert hermitian_char_poly(Y) == hermitian_char_poly(P3)
    with pytest.raises(InvalidVertexSetError):
        bridge_digon_replace(family("K", 3), 0, 1)
    with pytest.raises(NonDigonInCutError):
        bridge_digon_replace(directed_cycle(3), 0, 1)


def _cycle_digraphs(n: int):
    edges = [(k, (k + 1) % n) for k in range(n)]
    for states in itertools.product((PairState.FWD, PairState.BWD, PairState.DIGON), repeat=n):
        yield Digraph.from_states(n, dict(zip(edges, states)))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cycle_normal_form(n):
    candidates = dict(cycle_form_candidates(n))
    for X in _cycle_digraphs(n):
        form = cycle_normal_form(X)
        assert replay_witness(X, form.witness) == form.representative
        assert hermitian_char_poly(form.representative) == hermitian_char_poly(X)
        assert hermitian_char_poly(candidates[form.tag]) == hermitian_char_poly(X)


def test_directed_six_cycle_needs_its_own_tag():
    assert cycle_normal_form(directed_cycle(6)).tag == CycleForm.D
    assert cycle_normal_form(family("C", 5)).tag == CycleForm.C


def test_cycle_normal_form_requires_a_cycle():
    with pytest.raises(UnderlyingNotCycleError):
        cycle_normal_form(family("P", 4))
