import dataclasses

import pytest

from qchroma import colouring as col
from qchroma.grassmann import (GrassmannParams, adjacent, decode_subspace,
                               dualize, enumerate_subspaces)
from qchroma.matq import gaussian_binomial, intersection_dim


def test_regimes_partition_valid_parameters():
    assert col.regime_of(GrassmannParams(2, 4, 2, 1)) == "direct"
    assert col.regime_of(GrassmannParams(2, 5, 3, 2)) == "dual"
    assert col.regime_of(GrassmannParams(2, 5, 3, 1)) == "complete"
    for n in range(3, 9):
        for m in range(2, n):
            for t in range(1, m):
                p = GrassmannParams(2, n, m, t)
                r = col.regime_of(p)
                if n >= 2 * m:
                    assert r == "direct"
                elif n - 2 * m + t >= 1:
                    assert r == "dual"
                else:
                    assert r == "complete"


def test_make_context_direct():
    ctx = col.make_context(GrassmannParams(2, 4, 2, 1))
    assert ctx.regime == "direct"
    assert (ctx.code.q, ctx.code.m, ctx.code.h, ctx.code.d) == (2, 2, 2, 2)
    assert ctx.johnson.n == 4 and ctx.johnson.m == 2 and ctx.johnson.t == 1
    assert ctx.coset_block == 4
    assert set(ctx.class_of_idvec.values()) == set(range(ctx.johnson.palette))


def test_make_context_dual_and_complete():
    ctx = col.make_context(GrassmannParams(2, 5, 3, 2))
    assert ctx.regime == "dual"
    assert ctx.inner.params == GrassmannParams(2, 5, 2, 1)
    assert (ctx.code.m, ctx.code.h, ctx.code.d) == (2, 3, 2)
    ctx = col.make_context(GrassmannParams(2, 5, 3, 1))
    assert ctx.regime == "complete" and ctx.code is None


def test_colour_ids_are_packed_below_the_bound():
    ctx = col.make_context(GrassmannParams(2, 4, 2, 1))
    bound = ctx.johnson.palette * 4
    for S in enumerate_subspaces(2, 4, 2):
        c = col.colour_subspace(ctx, S)
        assert 0 <= c < bound
        # decodable: class and coset parts recover the ingredients
        from qchroma.rankmetric import coset_index, unlift
        u, A = unlift(S)
        assert c // 4 == ctx.class_of_idvec[u]
        assert c % 4 == coset_index(ctx.code, A)


def test_colour_subspace_validates_membership():
    ctx = col.make_context(GrassmannParams(2, 4, 2, 1))
    alien = next(iter(enumerate_subspaces(2, 5, 2)))
    with pytest.raises(ValueError):
        col.colour_subspace(ctx, alien)


def test_same_colour_same_idvec_means_same_coset_family():
    ctx = col.make_context(GrassmannParams(2, 4, 2, 1))
    verts = list(enumerate_subspaces(2, 4, 2))
    for i, S in enumerate(verts):
        for T in verts[i + 1:]:
            if S.idvec == T.idvec and \
                    col.colour_subspace(ctx, S) == col.colour_subspace(ctx, T):
                assert intersection_dim(S.basis, T.basis) <= 0


def test_full_colouring_direct_certificate():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 4, 2, 1)))
    assert len(cert.colours) == 35
    assert cert.proper is True and cert.pairs_checked == 595
    assert cert.palette_used <= 12
    assert cert.bounds == {"lower": 7, "theorem_upper": 12, "trivial_upper": 19}
    assert cert.code_params["distance_verified"] is True
    # family sizes per identifying vector sum to q^(free cells of that idvec)
    from qchroma.grassmann import free_cells
    for key, fam in cert.family_sizes.items():
        idvec = tuple(int(ch) for ch in key)
        assert sum(fam.values()) == 2 ** len(free_cells(idvec))
        assert all(size <= 4 for size in fam.values())  # never beyond |C|
    total = sum(s for fam in cert.family_sizes.values() for s in fam.values())
    assert total == 35


def test_full_colouring_dual_certificate():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 5, 3, 2)))
    assert cert.regime == "dual"
    assert len(cert.colours) == 155 and cert.proper is True
    assert cert.palette_used <= cert.bounds["theorem_upper"]
    assert cert.bounds["lower"] == 15  # [4,1]_2 beats [3,1]_2


def test_full_colouring_complete_regime():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 5, 3, 1)))
    assert cert.regime == "complete"
    assert cert.palette_used == 155 == cert.bounds["lower"] == cert.bounds["theorem_upper"]
    assert cert.johnson_method is None and cert.code_params is None
    # all colours distinct
    assert len({c for _, c in cert.colours}) == 155


def test_dual_colouring_consistent_with_pullback():
    params = GrassmannParams(2, 5, 3, 2)
    ctx = col.make_context(params)
    for S in enumerate_subspaces(2, 5, 3):
        assert col.colour_subspace(ctx, S) == \
            col.colour_subspace(ctx.inner, dualize(S))


def test_vertex_cap():
    with pytest.raises(ValueError):
        col.full_colouring(col.make_context(GrassmannParams(2, 6, 3, 1)),
                           vertex_cap=100)


def test_bounds_report_examples():
    rep = col.bounds_report(GrassmannParams(2, 4, 2, 1))
    assert (rep["lower"], rep["theorem_upper"], rep["trivial_upper"]) == (7, 12, 19)
    # known exact value for J_q(4,2): the lower bound matches [3,1]_q
    for q in (2, 3, 4, 5):
        rep = col.bounds_report(GrassmannParams(q, 4, 2, 1))
        assert rep["lower"] == gaussian_binomial(3, 1, q)
    rep = col.bounds_report(GrassmannParams(2, 6, 3, 1))
    assert rep["lower"] == 155 and rep["theorem_upper"] == 640


def test_bounds_report_gs_method():
    rep = col.bounds_report(GrassmannParams(2, 4, 2, 1), "gs")
    assert rep["theorem_upper"] == rep["johnson_palette"] * 4
    assert rep["johnson_palette"] <= 6


def test_certificate_json_roundtrip_and_determinism():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 4, 2, 1)))
    js = col.certificate_to_json(cert)
    again = col.certificate_from_json(js)
    assert col.certificate_to_json(again) == js
    assert again.bounds == cert.bounds
    assert again.colours == cert.colours
    # integers inside the document are decimal strings
    import json
    doc = json.loads(js)
    assert doc["params"]["q"] == "2"
    assert doc["bounds"]["lower"] == "7"
    assert doc["colours"][0]["colour"].isdigit()
    assert doc["verified"]["proper"] is True


def test_verify_properness_detects_tampering():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 4, 2, 1)))
    entries = list(cert.colours)
    s0 = decode_subspace(entries[0][0])
    victim = None
    for k, c in entries[1:]:
        if c != entries[0][1] and adjacent(s0, decode_subspace(k), 1):
            victim = k
            break
    tampered = tuple((k, entries[0][1]) if k == victim else (k, c)
                     for k, c in entries)
    bad = dataclasses.replace(cert, colours=tampered)
    rep = col.verify_properness(bad)
    assert rep.coverage_ok and not rep.proper
    assert rep.counterexample is not None


def test_verify_properness_detects_missing_and_unexpected():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 4, 2, 1)))
    rep = col.verify_properness(dataclasses.replace(cert, colours=cert.colours[1:]))
    assert not rep.coverage_ok and len(rep.missing) == 1
    alien = (("q=2;n=4;m=2;rows=[[1,0,0,0],[0,0,0,0]]", 0),) + cert.colours[1:]
    rep = col.verify_properness(dataclasses.replace(cert, colours=alien))
    assert not rep.coverage_ok
    assert rep.missing and rep.unexpected


def test_verify_properness_accepts_intact_certificate():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 4, 2, 1)))
    rep = col.verify_properness(cert)
    assert rep.proper and rep.coverage_ok and rep.pairs_checked == 595


def test_unverified_certificate_roundtrips_and_can_be_checked_later():
    cert = col.full_colouring(col.make_context(GrassmannParams(2, 4, 2, 1)),
                              verify=False)
    assert cert.proper is None and cert.pairs_checked == 0
    again = col.certificate_from_json(col.certificate_to_json(cert))
    assert again.proper is None
    rep = col.verify_properness(again)
    assert rep.proper and rep.pairs_checked == 595


def test_colour_zero_fibre_is_the_base_coset_family():
    # vertices whose non-pivot block is a codeword, with identifying vector
    # in Johnson class 0, all land in colour 0
    from qchroma.rankmetric import coset_index, unlift
    ctx = col.make_context(GrassmannParams(2, 4, 2, 1))
    hits = 0
    for S in enumerate_subspaces(2, 4, 2):
        u, A = unlift(S)
        if ctx.class_of_idvec[u] == 0 and coset_index(ctx.code, A) == 0:
            assert col.colour_subspace(ctx, S) == 0
            hits += 1
    assert hits > 0
