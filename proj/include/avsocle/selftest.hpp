#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "avsocle/diagrams.hpp"
#include "avsocle/ranges.hpp"
#include "avsocle/report.hpp"
#include "avsocle/socle.hpp"
#include "avsocle/theta_orbits.hpp"
#include "avsocle/weyl.hpp"

// Exhaustive desk-scale verification of the library's structural identities:
// every equivalence and bijection the computations rely on is re-derived here
// through an independent route (brute-force enumeration, permutation algebra,
// shuffled representatives) and compared. `selftest` on the CLI runs this.

namespace avsocle {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace selftest_detail {

inline std::vector<std::vector<long long>> compositions_of(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = 1; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

inline std::vector<std::vector<long long>> partitions_of(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long left, long long maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Brute-force oracle for signed-diagram classes: assign a leading sign to
// every row independently, then deduplicate by the sorted row multiset.
inline std::map<long long, std::set<std::vector<std::string>>> brute_force_signed(
    const YoungDiagram& y) {
  std::map<long long, std::set<std::vector<std::string>>> by_plus_count;
  std::size_t nrows = y.rows().size();
  for (unsigned long mask = 0; mask < (1UL << nrows); ++mask) {
    std::vector<std::string> rows;
    long long plus = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
      char lead = (mask >> i) & 1 ? '+' : '-';
      std::string row = detail::alternating_row(y.rows()[i], lead);
      for (char ch : row) plus += (ch == '+');
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    by_plus_count[plus].insert(std::move(rows));
  }
  return by_plus_count;
}

// Sign-adding pass over an arbitrary (not necessarily canonical)
// representative: rows are grouped by length, longer groups first, and the
// scanning order inside each group is the caller's shuffle. The result must
// not depend on that order.
inline SignedYoungDiagram associated_diagram_shuffled(const SignedPair& pair, std::mt19937& rng) {
  std::vector<std::string> rows;
  if (pair.length() == 0) return SignedYoungDiagram();
  for (long long i = 0; i < pair.m_parts[0]; ++i) rows.emplace_back("+");
  for (long long i = 0; i < pair.n_parts[0]; ++i) rows.emplace_back("-");
  std::shuffle(rows.begin(), rows.end(), rng);
  for (std::size_t step = 1; step < pair.length(); ++step) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t j = i + 1;
      while (j < rows.size() && rows[j].size() == rows[i].size()) ++j;
      std::shuffle(rows.begin() + i, rows.begin() + j, rng);
      i = j;
    }
    long long p = pair.m_parts[step], q = pair.n_parts[step];
    for (auto& row : rows) {
      char want = row.back() == '+' ? '-' : '+';
      if (want == '+' && p > 0) {
        row += '+';
        --p;
      } else if (want == '-' && q > 0) {
        row += '-';
        --q;
      }
    }
    for (; p > 0; --p) rows.emplace_back("+");
    for (; q > 0; --q) rows.emplace_back("-");
  }
  return SignedYoungDiagram(std::move(rows));
}

inline std::string describe(const SignedPair& pair) { return pair.to_string(); }

// Nonincreasing integer chains of the given length with entries in [lo, hi].
inline std::vector<std::vector<long long>> nonincreasing_chains(std::size_t length, long long lo,
                                                                long long hi) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, std::size_t i, long long cap) -> void {
    if (i == length) {
      out.push_back(cur);
      return;
    }
    for (long long v = cap; v >= lo; --v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, hi);
  return out;
}

}  // namespace selftest_detail

inline std::vector<CheckResult> run_selftest(long long max_size = 8) {
  namespace sd = selftest_detail;
  std::vector<CheckResult> results;

  auto add = [&](const std::string& name, auto&& fn) {
    CheckResult r{name, true, ""};
    try {
      std::string err = fn();
      if (!err.empty()) {
        r.passed = false;
        r.detail = err;
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  const long long topN = std::max<long long>(1, max_size);
  const long long socle_small = std::min<long long>(5, topN);

  add("weyl.palindrome-involution-equivalence", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        Composition c{std::vector<long long>(parts)};
        AssumptionA rec = assumption_a(c);
        bool oracle = is_involution(longest_element(n) * parabolic_longest(c));
        if (rec.involution != oracle || rec.palindrome != rec.involution ||
            rec.duflo != rec.involution || rec.assumption_a != rec.palindrome)
          return "mismatch at c=" + c.to_string();
      }
    return "";
  });

  add("weyl.longest-elements-are-involutions", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n) {
      if (!is_involution(longest_element(n))) return "w0 not an involution at N=" + std::to_string(n);
      for (const auto& parts : sd::compositions_of(n))
        if (!is_involution(parabolic_longest(Composition{std::vector<long long>(parts)})))
          return "w_c not an involution";
    }
    return "";
  });

  add("weyl.parabolic-degenerate-cases", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n) {
      if (parabolic_longest(Composition{{n}}) != longest_element(n)) return "single block != w0";
      std::vector<long long> ones(static_cast<std::size_t>(n), 1);
      if (parabolic_longest(Composition{std::move(ones)}) != Permutation::identity(static_cast<int>(n)))
        return "all-ones block != identity";
    }
    return "";
  });

  add("diagrams.richardson-dimension-identity", [&]() -> std::string {
    for (long long n = 1; n <= topN + 2; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        long long cross = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (std::size_t j = i + 1; j < parts.size(); ++j) cross += parts[i] * parts[j];
        Composition c{std::vector<long long>(parts)};
        if (orbit_dimension(young_from_composition(c)) != 2 * cross)
          return "dimension identity failed at c=" + c.to_string();
      }
    return "";
  });

  add("diagrams.signed-enumeration-vs-brute-force", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n)
      for (const auto& rows : sd::partitions_of(n)) {
        YoungDiagram y{std::vector<long long>(rows)};
        auto oracle = sd::brute_force_signed(y);
        long long mult_product = 1;
        {
          long long run = 1;
          for (std::size_t i = 1; i <= rows.size(); ++i) {
            if (i < rows.size() && rows[i] == rows[i - 1]) {
              ++run;
            } else {
              mult_product *= run + 1;
              run = 1;
            }
          }
        }
        long long total_classes = 0;
        for (long long m = 0; m <= n; ++m) {
          auto fast = enumerate_signed(y, m, n - m);
          auto swapped = enumerate_signed(y, n - m, m);
          if (fast.size() != swapped.size()) return "signature swap count mismatch";
          total_classes += static_cast<long long>(fast.size());
          std::set<std::vector<std::string>> got;
          for (const auto& t : fast) {
            auto r = t.rows();
            std::sort(r.begin(), r.end());
            got.insert(std::move(r));
          }
          const auto& want = oracle[m];
          if (got != want)
            return "class set mismatch at Y=" + y.to_string() + " m=" + std::to_string(m);
        }
        if (total_classes != mult_product)
          return "class count product formula failed at Y=" + y.to_string();
      }
    return "";
  });

  add("diagrams.canonicalize-idempotent-and-class-constant", [&]() -> std::string {
    std::mt19937 rng(0x5eed);
    for (long long n = 1; n <= topN; ++n)
      for (const auto& rows : sd::partitions_of(n)) {
        YoungDiagram y{std::vector<long long>(rows)};
        for (long long m = 0; m <= n; ++m)
          for (const auto& t : enumerate_signed(y, m, n - m)) {
            if (canonicalize(t) != t) return "canonicalize not idempotent";
            std::vector<std::string> shuffled = t.rows();
            for (int rep = 0; rep < 3; ++rep) {
              std::shuffle(shuffled.begin(), shuffled.end(), rng);
              if (canonicalize(shuffled) != t) return "canonicalize not constant on a class";
            }
          }
      }
    return "";
  });

  add("theta.normal-pairs-biject-onto-signed-diagrams", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        Composition c{std::vector<long long>(parts)};
        for (long long m = 0; m <= n; ++m) {
          auto table = normal_pair_diagrams(m, n - m, c);  // verifies injective + onto
          if (table.size() != enumerate_signed(young_from_composition(c), m, n - m).size())
            return "cardinality mismatch at c=" + c.to_string();
        }
      }
    return "";
  });

  add("theta.diagram-shuffle-invariance", [&]() -> std::string {
    std::mt19937 rng(0xd1a6);
    long long bound = std::min<long long>(topN, 7);
    for (long long n = 1; n <= bound; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        Composition c{std::vector<long long>(parts)};
        for (long long m = 0; m <= n; ++m)
          for (const auto& pair : enumerate_pairs(m, n - m, c)) {
            SignedYoungDiagram expect = associated_diagram(pair);
            for (int rep = 0; rep < 3; ++rep)
              if (sd::associated_diagram_shuffled(pair, rng) != expect)
                return "shuffled recomputation differs at " + sd::describe(pair);
          }
      }
    return "";
  });

  add("theta.signature-and-sign-swap", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        Composition c{std::vector<long long>(parts)};
        for (long long m = 0; m <= n; ++m)
          for (const auto& pair : enumerate_pairs(m, n - m, c)) {
            SignedYoungDiagram d = associated_diagram(pair);
            if (d.signature() != std::make_pair(pair.total_m(), pair.total_n()))
              return "signature mismatch at " + sd::describe(pair);
            SignedPair sw = pair.swapped();
            if (associated_diagram(sw) != d.flipped()) return "sign swap diagram mismatch";
            if (is_normal(sw) != is_normal(pair)) return "sign swap normality mismatch";
          }
      }
    return "";
  });

  add("theta.normal-gk-identities", [&]() -> std::string {
    for (long long n = 1; n <= topN; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        Composition c{std::vector<long long>(parts)};
        for (long long m = 0; m <= n; ++m)
          for (const auto& pair : normal_pairs(m, n - m, c)) {
            long long gk = gk_dimension(pair);
            long long sq = 0;
            for (long long b : pair.blocks()) sq += b * b;
            if (gk != (n * n - sq) / 2) return "gk != (N^2 - sum c_i^2)/2 at " + sd::describe(pair);
            if (gk != nilrad_dimension(pair)) return "gk != nilradical dim at " + sd::describe(pair);
          }
      }
    return "";
  });

  add("ranges.nesting-shift-reversal", [&]() -> std::string {
    std::mt19937 rng(0x0a11);
    std::uniform_int_distribution<int> len_dist(1, 5);
    std::uniform_int_distribution<long long> block_dist(0, 3);
    std::uniform_int_distribution<long long> h2_dist(-20, 20);
    for (int trial = 0; trial < 10000; ++trial) {
      int len = len_dist(rng);
      std::vector<long long> mp(len), np(len);
      for (int i = 0; i < len; ++i) {
        do {
          mp[i] = block_dist(rng);
          np[i] = block_dist(rng);
        } while (mp[i] + np[i] == 0);
      }
      std::vector<Rat> h(len);
      for (int i = 0; i < len; ++i) h[i] = Rat(h2_dist(rng), 2);
      DFMParam param{SignedPair(mp, np), h};
      RangeFlags flags = range_flags(param);
      if (flags.good && !flags.weakly_fair) return "good without weakly_fair";
      if (flags.weakly_fair && !flags.mediocre) return "weakly_fair without mediocre";

      Rat offset(h2_dist(rng), 2);
      std::vector<Rat> shifted = h;
      for (auto& x : shifted) x += offset;
      RangeFlags fs = range_flags({param.pair, shifted});
      if (fs.good != flags.good || fs.weakly_fair != flags.weakly_fair ||
          fs.mediocre != flags.mediocre)
        return "shift invariance failed";

      std::vector<long long> rm(mp.rbegin(), mp.rend()), rn(np.rbegin(), np.rend());
      std::vector<Rat> rh;
      for (auto it = h.rbegin(); it != h.rend(); ++it) rh.push_back(-*it);
      RangeFlags fr = range_flags({SignedPair(rm, rn), rh});
      if (fr.good != flags.good || fr.weakly_fair != flags.weakly_fair ||
          fr.mediocre != flags.mediocre)
        return "reversal duality failed";
    }
    return "";
  });

  // Every integral principal-series parameter with m+n <= socle_small and
  // entries bounded by 4, decomposed through every sorting permutation.
  add("socle.tau-independence", [&]() -> std::string {
    for (long long m = 0; m <= socle_small; ++m)
      for (long long n = 0; m + n <= socle_small; ++n) {
        long long kmax = std::min(m, n);
        for (long long k = 1; k <= kmax; ++k)
          for (const auto& kparts : sd::compositions_of(k)) {
            Composition kappa{std::vector<long long>(kparts)};
            auto delta = delta_vector(m, n, kappa, DeltaConvention::calibrated);
            std::size_t s = kappa.size();
            std::vector<std::vector<Rat>> uchoices(s), vchoices(s);
            for (std::size_t i = 0; i < s; ++i) {
              for (long long t = -9; t <= 9; ++t) {
                Rat u = delta[i] + Rat(t);
                if (u >= Rat(-4) && u <= Rat(4)) uchoices[i].push_back(u);
                Rat v = -delta[i] + Rat(t);
                if (v >= Rat(-4) && v <= Rat(4)) vchoices[i].push_back(v);
              }
            }
            std::vector<std::size_t> pick(2 * s + 1, 0);
            auto rec = [&](auto&& self, std::size_t slot) -> void {
              if (slot == 2 * s + 1) {
                std::vector<Rat> u(s), v(s);
                for (std::size_t i = 0; i < s; ++i) {
                  u[i] = uchoices[i][pick[i]];
                  v[i] = vchoices[i][pick[s + i]];
                }
                long long h = static_cast<long long>(pick[2 * s]) - 4;
                DPSParam p(m, n, kappa, u, Rat(h), v);
                MergedData md = merge_parameters(p);
                // Constituents are modules; across sorting permutations they
                // are identified by their associated-variety diagrams. The
                // (pair, label) coordinates legitimately differ when tied
                // blocks of different sizes are swapped.
                std::vector<long long> blocks;
                for (long long c_i : md.c)
                  if (c_i != 0) blocks.push_back(c_i);
                std::sort(blocks.rbegin(), blocks.rend());
                std::vector<std::string> expected;
                for (const auto& t :
                     enumerate_signed(young_from_composition(Composition{std::move(blocks)}), m, n))
                  expected.push_back(t.to_string());
                std::sort(expected.begin(), expected.end());
                for (const auto& tau : sorting_permutations(md)) {
                  std::vector<std::string> diagrams;
                  for (const auto& con : top_constituents(p, tau))
                    diagrams.push_back(con.diagram.to_string());
                  std::sort(diagrams.begin(), diagrams.end());
                  if (std::adjacent_find(diagrams.begin(), diagrams.end()) != diagrams.end())
                    throw std::runtime_error("repeated constituent diagram at m=" +
                                             std::to_string(m) + " n=" + std::to_string(n));
                  if (diagrams != expected)
                    throw std::runtime_error("tau-dependent decomposition at m=" + std::to_string(m) +
                                             " n=" + std::to_string(n) + " kappa=" + kappa.to_string());
                }
                return;
              }
              std::size_t count = slot < s            ? uchoices[slot].size()
                                  : slot < 2 * s      ? vchoices[slot - s].size()
                                                      : 9;
              for (std::size_t i = 0; i < count; ++i) {
                pick[slot] = i;
                self(self, slot + 1);
              }
            };
            rec(rec, 0);
          }
      }
    return "";
  });

  // Integer socle labels survive the round trip through the calibrated shift
  // and the top-stratum decomposition; the socle is contained in it.
  add("socle.delta-round-trip", [&]() -> std::string {
    for (long long m = 0; m <= socle_small; ++m)
      for (long long n = 0; m + n <= socle_small; ++n) {
        if (m + n == 0) continue;
        for (long long k = 0; k <= std::min(m, n); ++k) {
          std::vector<std::vector<long long>> kappas =
              k == 0 ? std::vector<std::vector<long long>>{{}} : sd::compositions_of(k);
          for (const auto& kparts : kappas) {
            Composition kappa{std::vector<long long>(kparts)};
            std::size_t s = kappa.size();
            auto delta = delta_vector(m, n, kappa, DeltaConvention::calibrated);
            for (const auto& chain : sd::nonincreasing_chains(2 * s + 1, -4, 4)) {
              std::vector<long long> u(chain.begin(), chain.begin() + s);
              long long h = chain[s];
              std::vector<long long> v(s);
              for (std::size_t i = 0; i < s; ++i) v[i] = chain[2 * s - i];
              SocleReport report = socle_u(m, n, kappa, u, h, v);

              std::vector<Rat> uu(s), vv(s);
              for (std::size_t i = 0; i < s; ++i) {
                uu[i] = Rat(u[i]) + delta[i];
                vv[i] = Rat(v[i]) - delta[i];
              }
              auto tops = top_constituents(DPSParam(m, n, kappa, uu, Rat(h), vv));
              if (tops.size() != report.constituents.size())
                return "socle / top stratum size mismatch";
              for (std::size_t i = 0; i < tops.size(); ++i)
                if (!(tops[i] == report.constituents[i]))
                  return "socle label mismatch at m=" + std::to_string(m) +
                         " n=" + std::to_string(n) + " kappa=" + kappa.to_string();

              for (const auto& con : report.constituents) {
                if (classify_range({con.pair, con.h}) != RangeLabel::good)
                  return "socle constituent not in the good range";
              }
              if (!weyl_orbit_equal(report.verma_embedding->source_weight,
                                    report.verma_embedding->target_weight))
                return "verma weights not Weyl-conjugate";
            }
          }
        }
      }
    return "";
  });

  add("socle.constituent-count-and-gk", [&]() -> std::string {
    for (long long m = 0; m <= topN; ++m)
      for (long long n = 0; m + n <= topN; ++n) {
        if (m + n == 0) continue;
        for (long long k = 0; k <= std::min(m, n); ++k) {
          std::vector<std::vector<long long>> kappas =
              k == 0 ? std::vector<std::vector<long long>>{{}} : sd::compositions_of(k);
          for (const auto& kparts : kappas) {
            Composition kappa{std::vector<long long>(kparts)};
            std::vector<long long> u(kappa.size(), 0), v(kappa.size(), 0);
            SocleReport report = socle_u(m, n, kappa, u, 0, v);
            std::vector<long long> blocks;
            for (long long c_i : socle_composition(m, n, kappa))
              if (c_i != 0) blocks.push_back(c_i);
            Composition cc{std::vector<long long>(blocks)};
            if (report.constituents.size() != enumerate_signed(young_from_composition(cc), m, n).size())
              return "constituent count != signed diagram count";
            long long cross = 0;
            for (std::size_t i = 0; i < blocks.size(); ++i)
              for (std::size_t j = i + 1; j < blocks.size(); ++j) cross += blocks[i] * blocks[j];
            if (report.gk_dim != cross) return "gk != nilradical dimension";
            if (2 * report.gk_dim != orbit_dimension(young_from_composition(cc)))
              return "gk != half the Richardson orbit dimension";
            auto good = good_orbits(m, n, kappa);
            if (good.size() != report.constituents.size()) return "good orbit count mismatch";
            for (std::size_t i = 0; i < good.size(); ++i)
              if (!(good[i] == report.constituents[i].pair)) return "good orbit pair mismatch";
          }
        }
      }
    return "";
  });

  add("socle.quaternionic-structure", [&]() -> std::string {
    long long bound = std::min<long long>(topN, 6);
    for (long long n = 1; n <= bound; ++n)
      for (const auto& parts : sd::compositions_of(n)) {
        Composition c{std::vector<long long>(parts)};
        if (!c.is_palindrome()) continue;
        SocleReport report = quaternionic_socle(n, c);
        const auto& extras = std::get<SpehExtras>(report.extras);
        for (std::size_t i = 0; i < extras.exponents.size(); ++i) {
          const auto& [e, me] = extras.exponents[i];
          if (me != -e) return "exponent pair not antisymmetric";
          if (i && !(extras.exponents[i - 1].first > e)) return "exponents not strictly decreasing";
        }
        if (!weyl_orbit_equal(report.verma_embedding->source_weight,
                              report.verma_embedding->target_weight))
          return "quaternionic verma weights not Weyl-conjugate";
        SocleReport real = real_gl_socle(n, c);
        if (!std::get<SpehExtras>(real.extras).sign_twist_exists) return "real twist flag missing";
      }
    Composition c11{{1, 1}};
    SocleReport rep = quaternionic_socle(2, c11);
    const auto& extras = std::get<SpehExtras>(rep.extras);
    if (extras.speh.size() != 1 || extras.speh[0].d != 2 || extras.speh[0].parameter != 0)
      return "expected the single Speh factor A_2(0) for c=(1,1)";
    if (extras.exponents[0] != std::make_pair(Rat(1), Rat(-1)))
      return "expected exponents (1,-1) for c=(1,1)";
    return "";
  });

  add("report.json-round-trip", [&]() -> std::string {
    std::vector<Json> docs;
    docs.push_back(to_json(socle_u(2, 1, Composition{{1}}, {0}, 0, {0})));
    docs.push_back(to_json(complex_socle(Composition{{2, 1, 2}})));
    docs.push_back(to_json(quaternionic_socle(3, Composition{{1, 1, 1}})));
    docs.push_back(to_json(real_gl_socle(2, Composition{{1, 1}})));
    DFMParam param{SignedPair({1, 1}, {1, 1}), {Rat(0), Rat(2)}};
    docs.push_back(to_json(range_flags(param), param));
    docs.push_back(to_json(normal_pair_diagrams(1, 1, Composition{{1, 1}})));
    for (const auto& doc : docs) {
      std::string once = doc.dump(2);
      std::string twice = Json::parse(once).dump(2);
      if (once != twice) return "json round trip not byte-identical";
    }
    return "";
  });

  return results;
}

}  // namespace avsocle
