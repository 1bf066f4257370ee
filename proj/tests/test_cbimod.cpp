#include <doctest.h>

#include "coiso/cbimodule.hpp"
#include "coiso/fixtures.hpp"
#include "coiso/random_instances.hpp"

using namespace coiso;

namespace {

Vec<Rat> e(std::size_t n, std::size_t i) {
    Vec<Rat> v(n);
    v[i] = Rat(1);
    return v;
}

Triple<Rat> t2_dirac() {
    return dirac_triple(fixtures::t2<Rat>(), Subspace<Rat>::span(3, {e(3, 1)}));
}

Triple<Rat> m2_dirac() {
    return dirac_triple(fixtures::m2<Rat>(), fixtures::j_col<Rat>());
}

}  // namespace

TEST_CASE("identity bimodules validate; a truncated 0-part fails absorption") {
    auto d = m2_dirac();
    auto id = identity_cbim(d);
    CHECK(validate_cbim(id).ok());

    auto broken = id;
    broken.zero = Subspace<Rat>::zero(id.nmod.dim);
    auto rep = validate_cbim(broken);
    CHECK_FALSE(rep.ok());
    bool absorb_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "B_0 · E_N ⊆ E_0" && !c.pass) absorb_failed = true;
    CHECK(absorb_failed);

    CHECK(validate_chom(chom_zero(id, id), id, id).ok());
}

TEST_CASE("tensor with the identity bimodule is isomorphic to the module itself") {
    auto a = t2_dirac();
    auto id = identity_cbim(a);
    auto t = ctensor(id, id);
    CHECK(validate_cbim(t.bim).ok());

    auto lu = cleft_unitor(t);
    CHECK(validate_chom(lu, t.bim, id).ok());
    REQUIRE(inverse(lu.tot).has_value());
    REQUIRE(inverse(lu.n).has_value());
    CHECK(inverse(lu.n)->rows() == id.nmod.dim);

    // the unitor identifies the 0-parts exactly
    Subspace<Rat> mapped = image(lu.n, t.bim.zero);
    CHECK(mapped == id.zero);
}

TEST_CASE("tensor with a zero bimodule is zero") {
    auto a = t2_dirac();
    auto z = zero_cbim(a, a);
    auto t = ctensor(identity_cbim(a), z);
    CHECK(t.bim.tot.dim == 0);
    CHECK(t.bim.nmod.dim == 0);
    CHECK(validate_cbim(t.bim).ok());
}

TEST_CASE("tensor of morphisms: identities, zeros, functoriality") {
    Rng rng(5);
    auto b = random_triple<Rat>(rng, 3);
    auto a = random_triple<Rat>(rng, 3);
    auto c = random_triple<Rat>(rng, 3);
    auto f = random_cbim(rng, b, a, 3);
    auto g = random_cbim(rng, c, b, 3);
    REQUIRE(validate_cbim(f).ok());
    REQUIRE(validate_cbim(g).ok());
    auto t = ctensor(g, f);
    CHECK(validate_cbim(t.bim).ok());

    CHECK(ctensor_hom(chom_id(g), chom_id(f), t, t) == chom_id(t.bim));
    auto z = ctensor_hom(chom_zero(g, g), chom_id(f), t, t);
    CHECK(z.tot.is_zero());
    CHECK(z.n.is_zero());

    // functoriality on endomorphisms: (ψ∘ψ')⊗(φ∘φ') = (ψ⊗φ)∘(ψ'⊗φ')
    auto psi = random_chom(rng, g, g);
    auto psi2 = random_chom(rng, g, g);
    auto phi = random_chom(rng, f, f);
    auto phi2 = random_chom(rng, f, f);
    auto lhs = ctensor_hom(compose(psi, psi2), compose(phi, phi2), t, t);
    auto rhs = compose(ctensor_hom(psi, phi, t, t), ctensor_hom(psi2, phi2, t, t));
    CHECK(lhs == rhs);

    // interchange: (ψ⊗id)∘(id⊗φ) = ψ⊗φ
    auto w1 = whisker_right(psi, f, t, t);
    auto w2 = whisker_left(g, phi, t, t);
    CHECK(compose(w1, w2) == ctensor_hom(psi, phi, t, t));
}

TEST_CASE("associator on identity bimodules is invertible and valid") {
    auto a = t2_dirac();
    auto id = identity_cbim(a);
    auto gf = ctensor(id, id);
    auto fe = ctensor(id, id);
    auto gf_e = ctensor(gf.bim, id);
    auto g_fe = ctensor(id, fe.bim);
    auto asso = casso_fwd(gf_e, gf, g_fe, fe);
    auto back = casso_bwd(gf_e, gf, g_fe, fe);
    CHECK(compose(asso, back) == chom_id(g_fe.bim));
    CHECK(compose(back, asso) == chom_id(gf_e.bim));
    CHECK(validate_chom(asso, gf_e.bim, g_fe.bim).ok());
}

TEST_CASE("unitors are natural in the module argument") {
    Rng rng(11);
    auto b = random_triple<Rat>(rng, 3);
    auto a = random_triple<Rat>(rng, 3);
    auto f = random_cbim(rng, b, a, 3);
    auto idb = identity_cbim(b);
    auto t = ctensor(idb, f);
    auto phi = random_chom(rng, f, f);
    auto lhs = compose(phi, cleft_unitor(t));
    auto rhs = compose(cleft_unitor(t), ctensor_hom(chom_id(idb), phi, t, t));
    CHECK(lhs == rhs);

    auto ida = identity_cbim(a);
    auto t2 = ctensor(f, ida);
    auto lhs2 = compose(phi, cright_unitor(t2));
    auto rhs2 = compose(cright_unitor(t2), ctensor_hom(phi, chom_id(ida), t2, t2));
    CHECK(lhs2 == rhs2);
}

TEST_CASE("pentagon and triangle on identity tuples") {
    auto a = t2_dirac();
    auto id = identity_cbim(a);
    CHECK(pentagon_check(id, id, id, id));
    CHECK(triangle_check(id, id));
}

TEST_CASE("pentagon and triangle on seeded random composable tuples") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Rng rng(seed);
        auto chain = random_chain<Rat>(rng, 4, 3, 3);
        const auto& b = chain.bims;
        CHECK(pentagon_check(b[3], b[2], b[1], b[0]));
        CHECK(triangle_check(b[1], b[0]));
    }
}

TEST_CASE("reduction of bimodules on the pinned examples") {
    auto d = m2_dirac();
    auto red = reduce_cbim(identity_cbim(d));
    CHECK(red.bim.dim == 1);
    CHECK(red.lred.alg.dim() == 1);
    CHECK(validate_bimodule(red.bim).ok());

    auto z = reduce_cbim(zero_cbim(d, d));
    CHECK(z.bim.dim == 0);

    auto t = t2_dirac();
    auto mi = red_mult_iso(identity_cbim(t), identity_cbim(t));
    CHECK(mi.wd.ok());
    CHECK(mi.map.rows() == 2);  // the reduced algebra has dimension 2
}

TEST_CASE("reduction multiplication iso is natural and well-defined on random instances") {
    for (std::uint64_t seed = 20; seed < 24; ++seed) {
        Rng rng(seed);
        auto chain = random_chain<Rat>(rng, 2, 3, 3);
        const auto& f = chain.bims[1];  // over (C, B)
        const auto& eb = chain.bims[0]; // over (B, A)
        auto mi = red_mult_iso(f, eb);
        CHECK(mi.wd.ok());

        // naturality in both arguments
        auto psi = random_chom(rng, f, f);
        auto phi = random_chom(rng, eb, eb);
        auto red_psi = reduce_chom(psi, mi.red_f, mi.red_f);
        auto red_phi = reduce_chom(phi, mi.red_e, mi.red_e);
        auto dom_map = tensor_hom(red_psi, red_phi, mi.dom, mi.dom);
        auto psi_phi = ctensor_hom(psi, phi, mi.fe, mi.fe);
        auto cod_map = reduce_chom(psi_phi, mi.red_fe, mi.red_fe);
        CHECK(cod_map * mi.map == mi.map * dom_map);
    }
}

TEST_CASE("dropping the F_0 ⊗ E_N summand breaks well-definedness of the mult iso") {
    // C has full 0-part, B has zero 0-part: the dropped summand cannot be
    // recovered from F_N ⊗ E_0
    auto k = Algebra<Rat>::field();
    auto c = trivial_triple(k);
    auto b = unred_triple(k);
    auto a = unred_triple(k);
    Rng rng(0);
    auto f = random_cbim(rng, c, b, 1);
    auto eb = random_cbim(rng, b, a, 1);
    REQUIRE(f.zero.dim() == 1);   // C_0 · F_N is everything
    REQUIRE(eb.zero.dim() == 0);

    CHECK(red_mult_iso(f, eb).wd.ok());
    auto broken = red_mult_iso(f, eb, TensorZeroPart::drop_left_zero);
    CHECK_FALSE(broken.wd.ok());
    bool kill_failed = false;
    for (const auto& ch : broken.wd.checks)
        if (ch.name == "kills F_0 ⊗ E_N" && !ch.pass) kill_failed = true;
    CHECK(kill_failed);
}

TEST_CASE("embedding a triple morphism") {
    auto a = t2_dirac();
    auto id_hom = TripleHom<Rat>::id(a);
    auto l = embed_cbim(id_hom);
    CHECK(validate_cbim(l).ok());
    // the identity morphism embeds as the identity bimodule
    auto idb = identity_cbim(a);
    CHECK(l.tot == idb.tot);
    CHECK(l.nmod == idb.nmod);
    CHECK(l.zero == idb.zero);
    CHECK(l.iota == idb.iota);

    // multiplication iso on (id, id) equals the left unitor
    auto t = ctensor(l, l);
    auto m = embed_mult_iso(id_hom, id_hom, t);
    CHECK(m == cleft_unitor(t));

    // a genuine quotient morphism embeds as a valid bimodule
    auto t2 = fixtures::t2<Rat>();
    auto q = quotient_algebra(t2, Subspace<Rat>::span(3, {e(3, 1)}));
    auto target = unred_triple(q.alg);
    TripleHom<Rat> hom{a, target, q.proj};
    REQUIRE(validate_triple_hom(hom).ok());
    auto l2 = embed_cbim(hom);
    CHECK(validate_cbim(l2).ok());
}

TEST_CASE("embedding multiplication iso is invertible and component-preserving") {
    auto t2 = fixtures::t2<Rat>();
    auto a = t2_dirac();
    auto q = quotient_algebra(t2, Subspace<Rat>::span(3, {e(3, 1)}));
    auto mid = unred_triple(q.alg);
    TripleHom<Rat> phi{a, mid, q.proj};
    auto q2 = quotient_algebra(q.alg, Subspace<Rat>::span(2, {e(2, 0)}));
    auto top = unred_triple(q2.alg);
    TripleHom<Rat> psi{mid, top, q2.proj};
    REQUIRE(validate_triple_hom(phi).ok());
    REQUIRE(validate_triple_hom(psi).ok());

    auto lpsi = embed_cbim(psi);
    auto lphi = embed_cbim(phi);
    auto t = ctensor(lpsi, lphi);
    auto m = embed_mult_iso(psi, phi, t);
    auto lcomp = embed_cbim(compose(psi, phi));
    CHECK(validate_chom(m, t.bim, lcomp).ok());
    REQUIRE(inverse(m.tot).has_value());
    REQUIRE(inverse(m.n).has_value());
}

TEST_CASE("component projections strip exactly and commute with tensor") {
    Rng rng(33);
    auto b = random_triple<Rat>(rng, 3);
    auto a = random_triple<Rat>(rng, 3);
    auto c = random_triple<Rat>(rng, 3);
    auto f = random_cbim(rng, c, b, 3);
    auto eb = random_cbim(rng, b, a, 3);
    auto t = ctensor(f, eb);
    // by construction the components of the tensor are the balanced tensors
    // of the components, on the same canonical bases
    CHECK(project_tot(t.bim) == balanced_tensor(project_tot(f), project_tot(eb)).bim);
    CHECK(project_n(t.bim) == balanced_tensor(project_n(f), project_n(eb)).bim);

    auto z = zero_cbim(b, a);
    CHECK(project_tot(z).dim == 0);
    auto id = identity_cbim(a);
    CHECK(project_tot(id) == PlainBimodule<Rat>::regular(a.tot));
}

TEST_CASE("random bimodules are deterministic in the seed and always valid") {
    Rng r1(0), r2(0);
    auto b1 = random_triple<Rat>(r1, 4);
    auto a1 = random_triple<Rat>(r1, 4);
    auto e1 = random_cbim(r1, b1, a1, 4);
    Rng r3(0);
    auto b2 = random_triple<Rat>(r3, 4);
    auto a2 = random_triple<Rat>(r3, 4);
    auto e2 = random_cbim(r3, b2, a2, 4);
    CHECK(e1.nmod.dim == e2.nmod.dim);
    CHECK(e1.iota == e2.iota);
    CHECK(e1.zero == e2.zero);

    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Rng rng(seed);
        auto b = random_triple<Rat>(rng, 4);
        auto a = random_triple<Rat>(rng, 4);
        auto e = random_cbim(rng, b, a, 4);
        CHECK(validate_triple(b).ok());
        CHECK(validate_triple(a).ok());
        CHECK(validate_cbim(e).ok());
    }
}
