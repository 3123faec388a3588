#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "avsocle/diagrams.hpp"
#include "avsocle/errors.hpp"
#include "avsocle/ranges.hpp"
#include "avsocle/rational.hpp"
#include "avsocle/theta_orbits.hpp"
#include "avsocle/weyl.hpp"

namespace avsocle {

// Two conventions for the half-integral shift vector attached to (m, n, kappa).
// The printed form is (m+n-k*_{i-1})/2; the calibrated form subtracts k*_i as
// well, which is the one that makes induction parameters and derived-functor
// height labels round-trip exactly. Calibrated is the default everywhere.
enum class DeltaConvention { printed, calibrated };

inline const char* to_string(DeltaConvention conv) {
  return conv == DeltaConvention::printed ? "printed" : "calibrated";
}

inline DeltaConvention parse_convention(const std::string& text) {
  if (text == "printed") return DeltaConvention::printed;
  if (text == "calibrated") return DeltaConvention::calibrated;
  throw invalid_input("convention must be printed or calibrated");
}

inline std::vector<Rat> delta_vector(long long m, long long n, const Composition& kappa,
                                     DeltaConvention conv) {
  if (m < 0 || n < 0 || kappa.total() > std::min(m, n))
    throw invalid_input("kappa must sum to at most min(m,n)");
  std::vector<Rat> delta;
  delta.reserve(kappa.size());
  long long kstar = 0;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    long long num = m + n - kstar;
    kstar += kappa[i];
    if (conv == DeltaConvention::calibrated) num -= kstar;
    delta.emplace_back(num, 2);
  }
  return delta;
}

/// Unnormalized parameter of the normalized induction step nI^k[mu,nu]
/// on U(m,n): (mu + (m'+n'+k)/2, nu + (m'-n'+k)/2) with m' = m-k, n' = n-k.
inline std::pair<Rat, Rat> rho_shift(long long k, long long m, long long n, const Rat& mu,
                                     const Rat& nu) {
  if (k < 0 || k > std::min(m, n)) throw invalid_input("rho_shift needs 0 <= k <= min(m,n)");
  long long mp = m - k, np = n - k;
  return {mu + Rat(mp + np + k, 2), nu + Rat(mp - np + k, 2)};
}

/// Parameter of the degenerate principal series nI^kappa_{m,n}[u; h; v]:
/// the iterated normalized induction from the character with determinant
/// exponents (u_i, v_i) on the GL(k_i) factors and h on U(m-k, n-k).
struct DPSParam {
  long long m = 0;
  long long n = 0;
  Composition kappa;
  std::vector<Rat> u;
  Rat h;
  std::vector<Rat> v;

  DPSParam() = default;
  DPSParam(long long m_, long long n_, Composition kappa_, std::vector<Rat> u_, Rat h_,
           std::vector<Rat> v_)
      : m(m_), n(n_), kappa(std::move(kappa_)), u(std::move(u_)), h(h_), v(std::move(v_)) {
    if (m < 0 || n < 0) throw invalid_input("m, n must be >= 0");
    if (kappa.total() > std::min(m, n)) throw invalid_input("kappa must sum to at most min(m,n)");
    if (u.size() != kappa.size() || v.size() != kappa.size())
      throw invalid_input("u and v must have one entry per kappa part");
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!(u[i] + v[i]).is_integer()) throw invalid_input("u_i + v_i must be an integer");
  }

  long long k() const { return kappa.total(); }
  std::size_t s() const { return kappa.size(); }
};

/// Block sizes of the real parabolic attached to (m, n, kappa):
/// (k_1, ..., k_s, m+n-2k, k_s, ..., k_1). The middle entry may be zero.
inline std::vector<long long> socle_composition(long long m, long long n,
                                                const Composition& kappa) {
  if (m < 0 || n < 0 || kappa.total() > std::min(m, n))
    throw invalid_input("kappa must sum to at most min(m,n)");
  std::vector<long long> c;
  c.reserve(2 * kappa.size() + 1);
  for (std::size_t i = 0; i < kappa.size(); ++i) c.push_back(kappa[i]);
  c.push_back(m + n - 2 * kappa.total());
  for (std::size_t i = kappa.size(); i-- > 0;) c.push_back(kappa[i]);
  return c;
}

/// Block sizes with one value per block, possibly with zero blocks.
/// merge_parameters produces the layout (m+n-2k, k_s, k_s, ..., k_1, k_1)
/// pairing each u_j and v_j with its own block size k_j.
struct MergedData {
  std::vector<long long> c;
  std::vector<Rat> hvec;
};

namespace detail {

inline void check_integral_character(const DPSParam& p, DeltaConvention conv) {
  auto delta = delta_vector(p.m, p.n, p.kappa, conv);
  for (std::size_t i = 0; i < p.u.size(); ++i) {
    if (!(p.u[i] - delta[i]).is_integer() || !(p.v[i] + delta[i]).is_integer())
      throw unsupported_parameter("parameter has non-integral infinitesimal character");
  }
  bool h_ignored = (p.m == p.n && p.k() == p.m);
  if (!h_ignored && !p.h.is_integer())
    throw unsupported_parameter("parameter has non-integral infinitesimal character");
}

}  // namespace detail

inline MergedData merge_parameters(const DPSParam& p, DeltaConvention conv = DeltaConvention::calibrated) {
  detail::check_integral_character(p, conv);
  std::size_t s = p.s();
  MergedData md;
  md.c.reserve(2 * s + 1);
  md.hvec.reserve(2 * s + 1);
  md.c.push_back(p.m + p.n - 2 * p.k());
  md.hvec.push_back(p.h);
  for (std::size_t i = 1; i <= s; ++i) {
    md.c.push_back(p.kappa[s - i]);
    md.c.push_back(p.kappa[s - i]);
    md.hvec.push_back(p.u[s - i]);
    md.hvec.push_back(p.v[s - i]);
  }
  return md;
}

namespace detail {

// Coordinates on e_1..e_{m+n}: a_i on the i-th leading block of size k_i,
// mid on the m+n-2k middle slots, b_i on the i-th trailing block of size k_i
// counted from the right end.
inline std::vector<Rat> xi_coordinates(long long m, long long n, const Composition& kappa,
                                       const std::vector<Rat>& a, const Rat& mid,
                                       const std::vector<Rat>& b) {
  long long total = m + n;
  std::vector<Rat> w(static_cast<std::size_t>(total), mid);
  long long kstar = 0;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    for (long long j = 0; j < kappa[i]; ++j) {
      w[static_cast<std::size_t>(kstar + j)] = a[i];
      w[static_cast<std::size_t>(total - kstar - kappa[i] + j)] = b[i];
    }
    kstar += kappa[i];
  }
  return w;
}

}  // namespace detail

/// Weight of the inducing character on e_1..e_{m+n}.
inline std::vector<Rat> character_weight(const DPSParam& p,
                                         DeltaConvention conv = DeltaConvention::calibrated) {
  detail::check_integral_character(p, conv);
  return detail::xi_coordinates(p.m, p.n, p.kappa, p.u, p.h, p.v);
}

/// Type-A Weyl orbits of weights are multisets of coordinates.
inline bool weyl_orbit_equal(std::vector<Rat> a, std::vector<Rat> b) {
  if (a.size() != b.size()) throw invalid_input("weight length mismatch");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// The permutations tau with hvec[tau(1)] >= ... >= hvec[tau(L)], in
/// lexicographic order of one-line notation. Their number is the product of
/// factorials of tie multiplicities; merged lengths above max_len are refused.
inline std::vector<Permutation> sorting_permutations(const MergedData& md,
                                                     std::size_t max_len = 9) {
  if (md.c.size() != md.hvec.size()) throw invalid_input("merged data length mismatch");
  std::size_t len = md.hvec.size();
  if (len > max_len) throw limit_exceeded("merged parameter length exceeds the configured cap");

  std::vector<int> order(len);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return md.hvec[b - 1] < md.hvec[a - 1]; });

  // Tie groups occupy consecutive positions; enumerate each group's
  // arrangements with next_permutation, earlier groups varying slowest.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < len;) {
    std::size_t j = i + 1;
    while (j < len && md.hvec[order[j] - 1] == md.hvec[order[i] - 1]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [lo, hi] : groups) std::sort(order.begin() + lo, order.begin() + hi);

  std::vector<Permutation> out;
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      out.emplace_back(std::vector<int>(order));
      return;
    }
    auto [lo, hi] = groups[g];
    std::vector<int> arr(order.begin() + lo, order.begin() + hi);
    do {
      std::copy(arr.begin(), arr.end(), order.begin() + lo);
      self(self, g + 1);
    } while (std::next_permutation(arr.begin(), arr.end()));
  };
  rec(rec, 0);
  return out;
}

/// Lexicographically least sorting permutation (stable sort by value).
inline Permutation least_sorting_permutation(const MergedData& md) {
  if (md.c.size() != md.hvec.size()) throw invalid_input("merged data length mismatch");
  std::vector<int> order(md.hvec.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return md.hvec[b - 1] < md.hvec[a - 1]; });
  return Permutation(std::move(order));
}

/// Derived-functor height labels of the sorted merged datum:
/// label_i = hvec[tau(i)] - (N - c[tau(i)])/2 + (c[tau(1)] + ... + c[tau(i-1)])
/// where N is the total size.
inline std::vector<Rat> dfm_labels(const MergedData& md, const Permutation& tau) {
  if (md.c.size() != md.hvec.size()) throw invalid_input("merged data length mismatch");
  if (static_cast<std::size_t>(tau.size()) != md.c.size())
    throw invalid_input("tau size must match merged data");
  long long total = std::accumulate(md.c.begin(), md.c.end(), 0LL);
  std::vector<Rat> labels;
  labels.reserve(md.c.size());
  long long before = 0;
  for (int i = 1; i <= tau.size(); ++i) {
    if (i > 1 && md.hvec[tau(i) - 1] > md.hvec[tau(i - 1) - 1])
      throw invalid_input("tau is not a sorting permutation");
    long long c_i = md.c[tau(i) - 1];
    labels.push_back(md.hvec[tau(i) - 1] - Rat(total - c_i, 2) + Rat(before));
    before += c_i;
  }
  return labels;
}

/// Irreducible constituent of maximal Gelfand-Kirillov dimension:
/// a normal pair, its height labels, and its associated-variety diagram.
struct Constituent {
  SignedPair pair;
  std::vector<Rat> h;
  SignedYoungDiagram diagram;

  bool operator==(const Constituent&) const = default;
};

/// The multiset of maximal-GK-dimension constituents of the degenerate
/// principal series (each occurs with multiplicity one). tau defaults to the
/// lexicographically least sorting permutation; any sorting permutation gives
/// the same multiset.
inline std::vector<Constituent> top_constituents(const DPSParam& p,
                                                 const std::optional<Permutation>& tau = std::nullopt,
                                                 DeltaConvention conv = DeltaConvention::calibrated,
                                                 std::size_t max_s = 4) {
  if (p.s() > max_s) throw limit_exceeded("kappa length exceeds the configured cap");
  MergedData md = merge_parameters(p, conv);
  Permutation t = tau ? *tau : least_sorting_permutation(md);
  std::vector<Rat> labels = dfm_labels(md, t);

  std::vector<long long> blocks;
  std::vector<Rat> heights;
  for (int i = 1; i <= t.size(); ++i) {
    long long c_i = md.c[t(i) - 1];
    if (c_i == 0) continue;
    blocks.push_back(c_i);
    heights.push_back(labels[i - 1]);
  }

  std::vector<Constituent> out;
  for (auto& pair : normal_pairs(p.m, p.n, Composition(std::move(blocks)))) {
    SignedYoungDiagram d = associated_diagram(pair);
    out.push_back({std::move(pair), heights, std::move(d)});
  }
  return out;
}

struct VermaEmbedding {
  std::vector<Rat> source_weight;
  std::vector<Rat> target_weight;
};

struct ComplexExtras {
  bool palindrome = false;
  bool involution = false;
  bool duflo = false;
  bool assumption_a = false;
  std::vector<std::string> isomorphic_to;
};

struct SpehFactor {
  long long d = 0;
  long long parameter = 0;  // A_d(parameter)
};

struct SpehExtras {
  std::vector<long long> d;
  std::vector<long long> d_star;
  std::vector<long long> c_prime;
  std::vector<SpehFactor> speh;
  std::vector<std::pair<Rat, Rat>> exponents;
  bool sign_twist_exists = false;
  bool structural = false;
  std::string note;
};

/// Socle description of a degenerate principal series attached to the
/// canonical bundle. U(m,n) reports carry structured constituents; the GL
/// family reports carry a single labeled constituent plus group extras.
struct SocleReport {
  std::string group;
  std::vector<Constituent> constituents;
  std::vector<std::string> labels;
  long long gk_dim = 0;
  std::optional<VermaEmbedding> verma_embedding;
  std::variant<std::monostate, ComplexExtras, SpehExtras> extras;
};

/// Socle of nI^kappa_{m,n}[u + delta; h; v - delta] for integer parameters
/// with u_1 >= ... >= u_s >= h >= v_s >= ... >= v_1: one constituent per
/// normal pair over the parabolic's block sizes, all with height labels
/// (u_1, ..., u_s, h, v_s, ..., v_1) after zero blocks are dropped.
/// The stated ordering is a theorem hypothesis and is enforced.
inline SocleReport socle_u(long long m, long long n, const Composition& kappa,
                           const std::vector<long long>& u, long long h,
                           const std::vector<long long>& v,
                           DeltaConvention conv = DeltaConvention::calibrated) {
  if (m < 0 || n < 0 || kappa.total() > std::min(m, n))
    throw invalid_input("kappa must sum to at most min(m,n)");
  if (u.size() != kappa.size() || v.size() != kappa.size())
    throw invalid_input("u and v must have one entry per kappa part");
  std::size_t s = kappa.size();
  std::vector<long long> chain;
  chain.insert(chain.end(), u.begin(), u.end());
  chain.push_back(h);
  for (std::size_t i = s; i-- > 0;) chain.push_back(v[i]);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] < chain[i + 1])
      throw hypothesis_not_met("parameters must satisfy u_1 >= ... >= u_s >= h >= v_s >= ... >= v_1");

  std::vector<long long> c = socle_composition(m, n, kappa);
  std::vector<long long> blocks;
  std::vector<Rat> heights;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    blocks.push_back(c[i]);
    heights.emplace_back(chain[i]);
  }

  SocleReport report;
  report.group = "U(" + std::to_string(m) + "," + std::to_string(n) + ")";
  Composition cc{std::vector<long long>(blocks)};
  for (auto& pair : normal_pairs(m, n, cc)) {
    SignedYoungDiagram d = associated_diagram(pair);
    report.constituents.push_back({std::move(pair), heights, std::move(d)});
  }
  report.gk_dim = orbit_dimension(young_from_composition(cc)) / 2;

  auto delta = delta_vector(m, n, kappa, conv);
  std::vector<Rat> u_plus(s), v_minus(s);
  for (std::size_t i = 0; i < s; ++i) {
    u_plus[i] = Rat(u[i]) + delta[i];
    v_minus[i] = Rat(v[i]) - delta[i];
  }
  auto negate = [](std::vector<Rat> w) {
    for (auto& x : w) x = -x;
    return w;
  };
  VermaEmbedding verma;
  verma.source_weight = negate(detail::xi_coordinates(m, n, kappa, u_plus, Rat(h), v_minus));
  verma.target_weight = negate(detail::xi_coordinates(m, n, kappa, v_minus, Rat(h), u_plus));
  report.verma_embedding = std::move(verma);
  return report;
}

/// The normal pairs over the block sizes of the parabolic attached to
/// (m, n, kappa): exactly the good open orbits, i.e. those whose modules
/// attain the full flag-variety dimension.
inline std::vector<SignedPair> good_orbits(long long m, long long n, const Composition& kappa) {
  std::vector<long long> blocks;
  for (long long c_i : socle_composition(m, n, kappa))
    if (c_i != 0) blocks.push_back(c_i);
  return normal_pairs(m, n, Composition(std::move(blocks)));
}

/// GL(N,C) socle of the canonical-bundle principal series for the block
/// parabolic attached to c. When the palindrome condition holds the socle is
/// the single derived functor module of the open orbit, paired with the
/// embedding uM_p(-2) into uM_p(0); otherwise no socle claim is made.
inline SocleReport complex_socle(const Composition& c) {
  AssumptionA rec = assumption_a(c);
  SocleReport report;
  report.group = "GL(" + std::to_string(c.total()) + ",C)";
  report.gk_dim = orbit_dimension(young_from_composition(c));
  ComplexExtras extras{rec.palindrome, rec.involution, rec.duflo, rec.assumption_a, {}};
  if (rec.assumption_a) {
    report.labels.push_back("A_O0");
    extras.isomorphic_to = {"uInd(chi_{2,0})", "uInd(chi_{0,2})"};
    report.verma_embedding = VermaEmbedding{{Rat(-2)}, {Rat(0)}};
  }
  report.extras = std::move(extras);
  return report;
}

namespace detail {

inline SocleReport split_rank_one_socle(long long rank, const Composition& c, bool quaternionic) {
  if (c.total() != rank) throw invalid_input("composition must sum to the rank");
  if (c.size() == 0) throw invalid_input("composition must be non-empty");
  if (!c.is_palindrome()) throw hypothesis_not_met("composition must be palindromic");

  std::size_t s = c.size();
  SpehExtras extras;
  for (std::size_t i = 0; i < s / 2; ++i) extras.d.push_back(2 * c[i]);
  if (s % 2 == 1) extras.d.push_back(c[s / 2]);
  long long acc = 0;
  for (long long d : extras.d) extras.d_star.push_back(acc += d);
  for (std::size_t i = 0; i < s / 2; ++i) {
    extras.c_prime.push_back(c[i]);
    extras.c_prime.push_back(c[i]);
  }
  if (s % 2 == 1) extras.c_prime.push_back(c[s / 2]);
  for (std::size_t i = 0; i < s / 2; ++i) {
    long long param = 2 * rank - 2 * extras.d_star[i];
    extras.speh.push_back({extras.d[i], param});
    Rat e = Rat(param) + Rat(extras.d[i], 2);
    extras.exponents.emplace_back(e, -e);
  }
  extras.sign_twist_exists = !quaternionic;
  extras.structural = !quaternionic;
  if (!quaternionic)
    extras.note = "the twisting character exists but is not pinned down; Speh data mirror the quaternionic form";

  SocleReport report;
  report.group = "GL(" + std::to_string(rank) + (quaternionic ? ",H)" : ",R)");
  report.labels.push_back("A_O(" + c.to_string() + ")");
  long long pairs_dim = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) pairs_dim += c[i] * c[j];
  report.gk_dim = quaternionic ? 4 * pairs_dim : pairs_dim;

  // Weight labels over the c' blocks: each exponent pair on its two blocks,
  // zero on the middle block for odd s; source and target swap the pair.
  std::vector<Rat> source, target;
  for (std::size_t i = 0; i < s / 2; ++i) {
    const Rat& e = extras.exponents[i].first;
    for (long long j = 0; j < c[i]; ++j) source.push_back(-e), target.push_back(e);
    for (long long j = 0; j < c[i]; ++j) source.push_back(e), target.push_back(-e);
  }
  if (s % 2 == 1)
    for (long long j = 0; j < c[s / 2]; ++j) source.push_back(Rat(0)), target.push_back(Rat(0));
  report.verma_embedding = VermaEmbedding{std::move(source), std::move(target)};
  report.extras = std::move(extras);
  return report;
}

}  // namespace detail

/// GL(nq,H) socle for the block parabolic attached to a palindromic c:
/// the single module A_O(c), realized through quaternionic Speh factors
/// A_{d_i}(2nq - 2d*_i) on the doubled blocks d_i = 2c_i.
inline SocleReport quaternionic_socle(long long nq, const Composition& c) {
  return detail::split_rank_one_socle(nq, c, true);
}

/// GL(nr,R) socle for the block parabolic attached to a palindromic c.
/// A twist by a character trivial on the identity component is required;
/// only its existence is reported.
inline SocleReport real_gl_socle(long long nr, const Composition& c) {
  return detail::split_rank_one_socle(nr, c, false);
}

}  // namespace avsocle
