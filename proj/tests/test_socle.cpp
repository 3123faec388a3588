#include <doctest.h>

#include <algorithm>

#include "avsocle/socle.hpp"

using namespace avsocle;

TEST_CASE("delta_vector") {
  CHECK(delta_vector(1, 1, Composition{{1}}, DeltaConvention::printed) == std::vector<Rat>{Rat(1)});
  CHECK(delta_vector(1, 1, Composition{{1}}, DeltaConvention::calibrated) ==
        std::vector<Rat>{Rat(1, 2)});
  CHECK(delta_vector(2, 2, Composition{{1, 1}}, DeltaConvention::calibrated) ==
        std::vector<Rat>{Rat(3, 2), Rat(1, 2)});
  CHECK_THROWS_AS(delta_vector(1, 1, Composition{{2}}, DeltaConvention::calibrated), invalid_input);
}

TEST_CASE("rho_shift") {
  CHECK(rho_shift(1, 1, 1, Rat(0), Rat(0)) == std::make_pair(Rat(1, 2), Rat(1, 2)));
  CHECK(rho_shift(1, 2, 2, Rat(0), Rat(0)) == std::make_pair(Rat(3, 2), Rat(1, 2)));
  CHECK(rho_shift(2, 3, 2, Rat(1), Rat(-1)) == std::make_pair(Rat(5, 2), Rat(1, 2)));
  CHECK_THROWS_AS(rho_shift(3, 2, 2, Rat(0), Rat(0)), invalid_input);
}

TEST_CASE("merge_parameters") {
  DPSParam p1(1, 1, Composition{{1}}, {Rat(3, 2)}, Rat(0), {Rat(-3, 2)});
  MergedData m1 = merge_parameters(p1);
  CHECK(m1.c == std::vector<long long>{0, 1, 1});
  CHECK(m1.hvec == std::vector<Rat>{Rat(0), Rat(3, 2), Rat(-3, 2)});

  DPSParam p2(2, 1, Composition{{1}}, {Rat(2)}, Rat(0), {Rat(-1)});
  MergedData m2 = merge_parameters(p2);
  CHECK(m2.c == std::vector<long long>{1, 1, 1});
  CHECK(m2.hvec == std::vector<Rat>{Rat(0), Rat(2), Rat(-1)});

  // Each v_j stays attached to its own block size k_j.
  DPSParam p3(2, 2, Composition{{1, 1}}, {Rat(5, 2), Rat(1, 2)}, Rat(7), {Rat(-3, 2), Rat(-1, 2)});
  MergedData m3 = merge_parameters(p3);
  CHECK(m3.c == std::vector<long long>{0, 1, 1, 1, 1});
  CHECK(m3.hvec == std::vector<Rat>{Rat(7), Rat(1, 2), Rat(-1, 2), Rat(5, 2), Rat(-3, 2)});

  DPSParam bad(1, 1, Composition{{1}}, {Rat(1, 3)}, Rat(0), {Rat(-1, 3)});
  CHECK_THROWS_AS(merge_parameters(bad), unsupported_parameter);
}

TEST_CASE("character_weight") {
  DPSParam p1(1, 1, Composition{{1}}, {Rat(2)}, Rat(5), {Rat(-2)});
  CHECK(character_weight(p1, DeltaConvention::printed) == std::vector<Rat>{Rat(2), Rat(-2)});

  DPSParam p2(2, 1, Composition{{1}}, {Rat(2)}, Rat(0), {Rat(-1)});
  CHECK(character_weight(p2) == std::vector<Rat>{Rat(2), Rat(0), Rat(-1)});

  DPSParam p3(1, 1, Composition{{1}}, {Rat(0)}, Rat(0), {Rat(0)});
  CHECK(character_weight(p3, DeltaConvention::printed) == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("weyl_orbit_equal") {
  CHECK(weyl_orbit_equal({Rat(1), Rat(0), Rat(-1)}, {Rat(-1), Rat(0), Rat(1)}));
  CHECK_FALSE(weyl_orbit_equal({Rat(1), Rat(1)}, {Rat(1), Rat(0)}));
  CHECK(weyl_orbit_equal({Rat(0)}, {Rat(0)}));
  CHECK_THROWS_AS(weyl_orbit_equal({Rat(0)}, {Rat(0), Rat(0)}), invalid_input);
}

TEST_CASE("sorting_permutations") {
  MergedData md1{{1, 1, 1}, {Rat(0), Rat(2), Rat(-2)}};
  auto taus1 = sorting_permutations(md1);
  REQUIRE(taus1.size() == 1);
  CHECK(taus1[0] == Permutation({2, 1, 3}));

  MergedData md2{{1, 1, 1}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(sorting_permutations(md2).size() == 6);

  MergedData md3{{1, 1, 1}, {Rat(1), Rat(1), Rat(0)}};
  auto taus3 = sorting_permutations(md3);
  REQUIRE(taus3.size() == 2);
  CHECK(taus3[0] == Permutation({1, 2, 3}));
  CHECK(taus3[1] == Permutation({2, 1, 3}));

  MergedData big{std::vector<long long>(11, 1), std::vector<Rat>(11, Rat(0))};
  CHECK_THROWS_AS(sorting_permutations(big), limit_exceeded);
}

TEST_CASE("dfm_labels") {
  MergedData md{{1, 3}, {Rat(5), Rat(0)}};
  CHECK(dfm_labels(md, Permutation::identity(2)) == std::vector<Rat>{Rat(7, 2), Rat(1, 2)});

  MergedData merged{{0, 1, 1}, {Rat(0), Rat(3, 2), Rat(-3, 2)}};
  CHECK(dfm_labels(merged, Permutation({2, 1, 3})) == std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
  CHECK_THROWS_AS(dfm_labels(merged, Permutation({3, 1, 2})), invalid_input);

  MergedData constant{{2, 2, 2}, {Rat(3), Rat(3), Rat(3)}};
  CHECK(dfm_labels(constant, Permutation::identity(3)) ==
        std::vector<Rat>{Rat(1), Rat(3), Rat(5)});
}

TEST_CASE("top_constituents") {
  DPSParam p1(1, 1, Composition{{1}}, {Rat(3, 2)}, Rat(0), {Rat(-3, 2)});
  auto cons1 = top_constituents(p1);
  REQUIRE(cons1.size() == 2);
  CHECK(cons1[0].pair == SignedPair({0, 1}, {1, 0}));
  CHECK(cons1[1].pair == SignedPair({1, 0}, {0, 1}));
  for (const auto& con : cons1) CHECK(con.h == std::vector<Rat>{Rat(1), Rat(-1)});
  CHECK(cons1[0].diagram.to_string() == "-+");
  CHECK(cons1[1].diagram.to_string() == "+-");

  DPSParam p2(2, 1, Composition{{1}}, {Rat(2)}, Rat(0), {Rat(-1)});
  auto cons2 = top_constituents(p2);
  REQUIRE(cons2.size() == 1);
  CHECK(cons2[0].pair == SignedPair({1, 0, 1}, {0, 1, 0}));
  CHECK(cons2[0].h == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(cons2[0].diagram.to_string() == "+-+");

  // kappa = (): the module is already the inducing character.
  DPSParam p3(2, 0, Composition{}, {}, Rat(4), {});
  auto cons3 = top_constituents(p3);
  REQUIRE(cons3.size() == 1);
  CHECK(cons3[0].pair == SignedPair({2}, {0}));
  CHECK(cons3[0].h == std::vector<Rat>{Rat(4)});
  CHECK(cons3[0].diagram.to_string() == "+/+");

  DPSParam wide(5, 5, Composition{{1, 1, 1, 1, 1}},
                {Rat(9, 2), Rat(7, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)}, Rat(0),
                {Rat(-9, 2), Rat(-7, 2), Rat(-5, 2), Rat(-3, 2), Rat(-1, 2)});
  CHECK_THROWS_AS(top_constituents(wide), limit_exceeded);
}

TEST_CASE("top_constituents is tau independent across ties") {
  DPSParam p(2, 2, Composition{{1, 1}}, {Rat(3, 2), Rat(1, 2)}, Rat(0), {Rat(-1, 2), Rat(1, 2)});
  MergedData md = merge_parameters(p);
  auto taus = sorting_permutations(md);
  REQUIRE(taus.size() > 1);
  auto key = [](const Constituent& con) {
    std::vector<std::string> blocks;
    for (std::size_t i = 0; i < con.pair.length(); ++i)
      blocks.push_back(std::to_string(con.pair.m_parts[i]) + "," +
                       std::to_string(con.pair.n_parts[i]) + ":" + con.h[i].to_string());
    std::sort(blocks.begin(), blocks.end());
    std::string out = con.diagram.to_string() + "|";
    for (const auto& b : blocks) out += b + ";";
    return out;
  };
  std::vector<std::string> reference;
  for (const auto& tau : taus) {
    std::vector<std::string> keys;
    for (const auto& con : top_constituents(p, tau)) keys.push_back(key(con));
    std::sort(keys.begin(), keys.end());
    if (reference.empty())
      reference = keys;
    else
      CHECK(keys == reference);
  }
}

TEST_CASE("socle_u examples") {
  SocleReport r1 = socle_u(1, 1, Composition{{1}}, {1}, 0, {-1});
  CHECK(r1.group == "U(1,1)");
  REQUIRE(r1.constituents.size() == 2);
  CHECK(r1.constituents[0].pair == SignedPair({0, 1}, {1, 0}));
  CHECK(r1.constituents[1].pair == SignedPair({1, 0}, {0, 1}));
  for (const auto& con : r1.constituents) CHECK(con.h == std::vector<Rat>{Rat(1), Rat(-1)});
  CHECK(r1.gk_dim == 1);
  REQUIRE(r1.verma_embedding.has_value());
  CHECK(r1.verma_embedding->source_weight == std::vector<Rat>{Rat(-3, 2), Rat(3, 2)});
  CHECK(r1.verma_embedding->target_weight == std::vector<Rat>{Rat(3, 2), Rat(-3, 2)});
  CHECK(weyl_orbit_equal(r1.verma_embedding->source_weight, r1.verma_embedding->target_weight));

  SocleReport r2 = socle_u(2, 1, Composition{{1}}, {0}, 0, {0});
  REQUIRE(r2.constituents.size() == 1);
  CHECK(r2.constituents[0].pair == SignedPair({1, 0, 1}, {0, 1, 0}));
  CHECK(r2.constituents[0].h == std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
  CHECK(r2.gk_dim == 3);

  SocleReport r3 = socle_u(2, 2, Composition{{1, 1}}, {0, 0}, 0, {0, 0});
  REQUIRE(r3.constituents.size() == 2);
  CHECK(r3.constituents[0].diagram.to_string() == "-+-+");
  CHECK(r3.constituents[1].diagram.to_string() == "+-+-");
  for (const auto& con : r3.constituents)
    CHECK(con.h == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(r3.gk_dim == 6);

  CHECK_THROWS_AS(socle_u(1, 1, Composition{{1}}, {-1}, 0, {1}), hypothesis_not_met);
  CHECK_THROWS_AS(socle_u(1, 1, Composition{{2}}, {0}, 0, {0}), invalid_input);
  CHECK_THROWS_AS(socle_u(1, 1, Composition{{1}}, {0, 0}, 0, {0, 0}), invalid_input);
}

TEST_CASE("h is ignored when m = n = k") {
  // The middle block is empty, so the decomposition must not depend on h,
  // and h need not even be integral.
  DPSParam p1(1, 1, Composition{{1}}, {Rat(3, 2)}, Rat(1, 3), {Rat(-3, 2)});
  DPSParam p2(1, 1, Composition{{1}}, {Rat(3, 2)}, Rat(7), {Rat(-3, 2)});
  auto c1 = top_constituents(p1);
  auto c2 = top_constituents(p2);
  REQUIRE(c1.size() == c2.size());
  for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i] == c2[i]);

  SocleReport s1 = socle_u(1, 1, Composition{{1}}, {2}, 0, {-2});
  SocleReport s2 = socle_u(1, 1, Composition{{1}}, {2}, 1, {-2});
  REQUIRE(s1.constituents.size() == s2.constituents.size());
  for (std::size_t i = 0; i < s1.constituents.size(); ++i) {
    CHECK(s1.constituents[i].pair == s2.constituents[i].pair);
    CHECK(s1.constituents[i].h == s2.constituents[i].h);
  }
}

TEST_CASE("socle constituents appear in the top stratum with the same labels") {
  Composition kappa{{1}};
  auto delta = delta_vector(2, 1, kappa, DeltaConvention::calibrated);
  SocleReport socle = socle_u(2, 1, kappa, {2}, 1, {0});
  DPSParam p(2, 1, kappa, {Rat(2) + delta[0]}, Rat(1), {Rat(0) - delta[0]});
  auto tops = top_constituents(p);
  REQUIRE(tops.size() == socle.constituents.size());
  for (std::size_t i = 0; i < tops.size(); ++i) CHECK(tops[i] == socle.constituents[i]);
}

TEST_CASE("calibrated shift round-trips exactly, printed leaves an offset") {
  Composition kappa{{1}};
  std::vector<long long> u{1}, v{-1};

  auto cal = delta_vector(1, 1, kappa, DeltaConvention::calibrated);
  DPSParam shifted(1, 1, kappa, {Rat(u[0]) + cal[0]}, Rat(0), {Rat(v[0]) - cal[0]});
  auto cons = top_constituents(shifted);
  for (const auto& con : cons) CHECK(con.h == std::vector<Rat>{Rat(1), Rat(-1)});

  auto pri = delta_vector(1, 1, kappa, DeltaConvention::printed);
  DPSParam off(1, 1, kappa, {Rat(u[0]) + pri[0]}, Rat(0), {Rat(v[0]) - pri[0]});
  auto offset_cons = top_constituents(off, std::nullopt, DeltaConvention::printed);
  for (const auto& con : offset_cons) {
    CHECK(con.h != std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK_FALSE(con.h[0].is_integer());
  }

  // Both conventions give Weyl-conjugate Verma weight labels.
  for (auto conv : {DeltaConvention::calibrated, DeltaConvention::printed}) {
    SocleReport rep = socle_u(2, 1, kappa, {1}, 0, {-1}, conv);
    CHECK(weyl_orbit_equal(rep.verma_embedding->source_weight,
                           rep.verma_embedding->target_weight));
  }
}

TEST_CASE("good_orbits") {
  CHECK(good_orbits(1, 1, Composition{{1}}).size() == 2);
  auto trivial = good_orbits(2, 0, Composition{});
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == SignedPair({2}, {0}));
  CHECK(good_orbits(2, 1, Composition{{1}}).size() == 1);
  CHECK_THROWS_AS(good_orbits(1, 1, Composition{{2}}), invalid_input);
}

TEST_CASE("complex_socle") {
  SocleReport r1 = complex_socle(Composition{{1, 1}});
  CHECK(r1.group == "GL(2,C)");
  CHECK(r1.gk_dim == 2);
  REQUIRE(r1.labels.size() == 1);
  CHECK(r1.labels[0] == "A_O0");
  REQUIRE(r1.verma_embedding.has_value());
  CHECK(r1.verma_embedding->source_weight == std::vector<Rat>{Rat(-2)});
  CHECK(r1.verma_embedding->target_weight == std::vector<Rat>{Rat(0)});
  CHECK(std::get<ComplexExtras>(r1.extras).assumption_a);

  SocleReport r2 = complex_socle(Composition{{2, 1}});
  CHECK_FALSE(std::get<ComplexExtras>(r2.extras).assumption_a);
  CHECK(r2.labels.empty());
  CHECK_FALSE(r2.verma_embedding.has_value());

  SocleReport r3 = complex_socle(Composition{{2, 1, 2}});
  CHECK(r3.gk_dim == 16);
  CHECK(std::get<ComplexExtras>(r3.extras).assumption_a);
}

TEST_CASE("quaternionic_socle") {
  SocleReport r1 = quaternionic_socle(2, Composition{{1, 1}});
  const auto& e1 = std::get<SpehExtras>(r1.extras);
  CHECK(e1.d == std::vector<long long>{2});
  CHECK(e1.c_prime == std::vector<long long>{1, 1});
  REQUIRE(e1.speh.size() == 1);
  CHECK(e1.speh[0].d == 2);
  CHECK(e1.speh[0].parameter == 0);
  REQUIRE(e1.exponents.size() == 1);
  CHECK(e1.exponents[0] == std::make_pair(Rat(1), Rat(-1)));
  CHECK(r1.labels.size() == 1);

  SocleReport r2 = quaternionic_socle(3, Composition{{1, 1, 1}});
  const auto& e2 = std::get<SpehExtras>(r2.extras);
  CHECK(e2.d == std::vector<long long>{2, 1});
  CHECK(e2.d_star == std::vector<long long>{2, 3});
  CHECK(e2.c_prime == std::vector<long long>{1, 1, 1});
  REQUIRE(e2.speh.size() == 1);
  CHECK(e2.speh[0].d == 2);
  CHECK(e2.speh[0].parameter == 2);
  CHECK(e2.exponents[0] == std::make_pair(Rat(3), Rat(-3)));

  SocleReport r3 = quaternionic_socle(2, Composition{{2}});
  const auto& e3 = std::get<SpehExtras>(r3.extras);
  CHECK(e3.d == std::vector<long long>{2});
  CHECK(e3.speh.empty());
  CHECK(e3.exponents.empty());
  CHECK(r3.gk_dim == 0);

  CHECK_THROWS_AS(quaternionic_socle(3, Composition{{2, 1}}), hypothesis_not_met);
  CHECK_THROWS_AS(quaternionic_socle(2, Composition{{1, 1, 1}}), invalid_input);
}

TEST_CASE("real_gl_socle") {
  SocleReport r1 = real_gl_socle(2, Composition{{1, 1}});
  const auto& e1 = std::get<SpehExtras>(r1.extras);
  CHECK(e1.sign_twist_exists);
  CHECK(e1.structural);
  CHECK(r1.labels.size() == 1);
  CHECK(r1.gk_dim == 1);

  SocleReport r2 = real_gl_socle(3, Composition{{1, 1, 1}});
  CHECK(r2.labels.size() == 1);

  CHECK_THROWS_AS(real_gl_socle(3, Composition{{2, 1}}), hypothesis_not_met);
}
