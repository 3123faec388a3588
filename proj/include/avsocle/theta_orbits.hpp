#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "avsocle/diagrams.hpp"
#include "avsocle/errors.hpp"
#include "avsocle/rational.hpp"
#include "avsocle/weyl.hpp"

namespace avsocle {

/// Signature datum ((m_1..m_l),(n_1..n_l)) of a theta-stable parabolic of
/// U(m,n): block j of the flag has m_j plus-directions and n_j minus-directions.
/// The empty pair is the unique datum for U(0,0).
struct SignedPair {
  std::vector<long long> m_parts;
  std::vector<long long> n_parts;

  SignedPair() = default;
  SignedPair(std::vector<long long> m, std::vector<long long> n)
      : m_parts(std::move(m)), n_parts(std::move(n)) {
    if (m_parts.size() != n_parts.size()) throw invalid_input("signed pair parts length mismatch");
    for (std::size_t j = 0; j < m_parts.size(); ++j) {
      if (m_parts[j] < 0 || n_parts[j] < 0) throw invalid_input("signed pair parts must be >= 0");
      if (m_parts[j] + n_parts[j] == 0) throw invalid_input("signed pair blocks must satisfy m_j+n_j > 0");
    }
  }

  std::size_t length() const { return m_parts.size(); }
  std::vector<long long> blocks() const {
    std::vector<long long> b(m_parts.size());
    for (std::size_t j = 0; j < m_parts.size(); ++j) b[j] = m_parts[j] + n_parts[j];
    return b;
  }
  long long total_m() const { return std::accumulate(m_parts.begin(), m_parts.end(), 0LL); }
  long long total_n() const { return std::accumulate(n_parts.begin(), n_parts.end(), 0LL); }

  SignedPair swapped() const { return {std::vector<long long>(n_parts), std::vector<long long>(m_parts)}; }

  bool operator==(const SignedPair&) const = default;
  bool operator<(const SignedPair& o) const {
    return m_parts != o.m_parts ? m_parts < o.m_parts : n_parts < o.n_parts;
  }

  /// "m=1,0,1 n=0,1,0"
  std::string to_string() const {
    auto join = [](const std::vector<long long>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
      }
      return s;
    };
    return "m=" + join(m_parts) + " n=" + join(n_parts);
  }

  static SignedPair parse(const std::string& text) {
    auto tokens = detail::split(text, ' ');
    std::vector<long long> m, n;
    bool saw_m = false, saw_n = false;
    for (const auto& tok : tokens) {
      if (tok.empty()) continue;
      std::vector<long long>* dest = nullptr;
      if (tok.rfind("m=", 0) == 0) {
        dest = &m;
        saw_m = true;
      } else if (tok.rfind("n=", 0) == 0) {
        dest = &n;
        saw_n = true;
      } else {
        throw invalid_input("signed pair text must look like \"m=1,0 n=0,1\"");
      }
      std::string body = tok.substr(2);
      if (body.empty()) continue;
      for (const auto& part : detail::split(body, ',')) dest->push_back(detail::parse_ll(part));
    }
    if (!saw_m || !saw_n) throw invalid_input("signed pair text must carry m= and n=");
    return SignedPair(std::move(m), std::move(n));
  }
};

/// Derived-functor-module parameter: a signed pair with one height per block.
/// Heights are integers when the parameter labels an actual module; rational
/// slack exists only in intermediate computations.
struct DFMParam {
  SignedPair pair;
  std::vector<Rat> h;
};

/// All ((m_i),(n_i)) with m_i+n_i = c_i, sum m_i = m, sum n_i = n,
/// in ascending lexicographic order of the m-parts.
inline std::vector<SignedPair> enumerate_pairs(long long m, long long n, const Composition& c) {
  if (m < 0 || n < 0 || c.total() != m + n) throw invalid_input("composition must sum to m+n");
  std::vector<SignedPair> out;
  std::vector<long long> mp(c.size());
  auto rec = [&](auto&& self, std::size_t i, long long m_left) -> void {
    if (i == c.size()) {
      if (m_left != 0) return;
      std::vector<long long> np(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) np[j] = c[j] - mp[j];
      out.emplace_back(std::vector<long long>(mp), std::move(np));
      return;
    }
    long long rest = 0;
    for (std::size_t j = i + 1; j < c.size(); ++j) rest += c[j];
    long long lo = std::max(0LL, m_left - rest);
    long long hi = std::min(c[i], m_left);
    for (long long v = lo; v <= hi; ++v) {
      mp[i] = v;
      self(self, i + 1, m_left - v);
    }
  };
  if (c.size() == 0) {
    out.emplace_back();
  } else {
    rec(rec, 0, m);
  }
  return out;
}

/// Complex dimension of the nilradical of the block parabolic with block
/// sizes m_i+n_i: sum over i<j of products.
inline long long nilrad_dimension(const SignedPair& pair) {
  auto b = pair.blocks();
  long long dim = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) dim += b[i] * b[j];
  return dim;
}

/// One step of the sign-adding algorithm: append p pluses and q minuses to
/// the row-ends of T, scanning rows from the top of the canonical order.
/// Each row can absorb at most one sign and only the sign that keeps it
/// alternating; whatever remains opens new singleton rows at the bottom.
inline SignedYoungDiagram add_signs(const SignedYoungDiagram& t, long long p, long long q) {
  if (p < 0 || q < 0) throw invalid_input("sign counts must be >= 0");
  std::vector<std::string> rows = t.rows();
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
  return SignedYoungDiagram(std::move(rows));
}

/// Signed diagram of the associated variety of the derived functor modules
/// attached to the pair: start from the zero-orbit diagram of the first block
/// (m_1 + n_1 singleton rows) and absorb the remaining blocks one at a time.
/// The result does not depend on the height parameter.
inline SignedYoungDiagram associated_diagram(const SignedPair& pair) {
  if (pair.length() == 0) return SignedYoungDiagram();
  std::vector<std::string> base;
  for (long long i = 0; i < pair.m_parts[0]; ++i) base.emplace_back("+");
  for (long long i = 0; i < pair.n_parts[0]; ++i) base.emplace_back("-");
  SignedYoungDiagram t(std::move(base));
  for (std::size_t i = 1; i < pair.length(); ++i) t = add_signs(t, pair.m_parts[i], pair.n_parts[i]);
  return t;
}

/// A pair is normal when its modules attain the full Richardson-orbit
/// dimension, i.e. the built diagram has the Richardson shape Y(m+n).
inline bool is_normal(const SignedPair& pair) {
  std::vector<long long> b = pair.blocks();
  return associated_diagram(pair).shape() == young_from_composition(Composition(std::move(b)));
}

/// The normal pairs among enumerate_pairs(m, n, c), in the same order.
inline std::vector<SignedPair> normal_pairs(long long m, long long n, const Composition& c) {
  std::vector<SignedPair> out;
  for (auto& pair : enumerate_pairs(m, n, c))
    if (is_normal(pair)) out.push_back(std::move(pair));
  return out;
}

struct PairDiagram {
  SignedPair pair;
  SignedYoungDiagram diagram;
};

/// The map pair -> associated diagram restricted to the normal pairs.
/// It is a bijection onto the signed diagrams of shape Y(c) and signature
/// (m,n); that is re-verified on every call since both sides are cheap.
inline std::vector<PairDiagram> normal_pair_diagrams(long long m, long long n,
                                                     const Composition& c) {
  std::vector<PairDiagram> out;
  for (auto& pair : normal_pairs(m, n, c)) {
    SignedYoungDiagram d = associated_diagram(pair);
    out.push_back({std::move(pair), std::move(d)});
  }
  std::vector<SignedYoungDiagram> image;
  image.reserve(out.size());
  for (const auto& pd : out) image.push_back(pd.diagram);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    throw std::logic_error("normal pair map failed to be injective");
  if (image != enumerate_signed(young_from_composition(c), m, n))
    throw std::logic_error("normal pair map failed to be onto");
  return out;
}

/// Gelfand-Kirillov dimension of the pair's modules: half the dimension of
/// the nilpotent orbit carrying the associated variety.
inline long long gk_dimension(const SignedPair& pair) {
  long long dim = orbit_dimension(associated_diagram(pair).shape());
  if (dim % 2 != 0) throw std::logic_error("orbit dimension must be even");
  return dim / 2;
}

}  // namespace avsocle
