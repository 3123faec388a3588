#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "avsocle/errors.hpp"
#include "avsocle/weyl.hpp"

namespace avsocle {

/// Young diagram stored by rows (weakly decreasing positive lengths).
/// Rows are the Jordan type of the nilpotent orbit the diagram labels;
/// column data is computed on demand.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<long long> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 1) throw invalid_input("young diagram rows must be >= 1");
      if (i && rows_[i] > rows_[i - 1]) throw invalid_input("young diagram rows must weakly decrease");
    }
  }

  const std::vector<long long>& rows() const { return rows_; }
  long long boxes() const {
    long long b = 0;
    for (long long r : rows_) b += r;
    return b;
  }

  std::vector<long long> columns() const {
    std::vector<long long> cols;
    if (rows_.empty()) return cols;
    cols.resize(static_cast<std::size_t>(rows_[0]));
    for (long long r : rows_)
      for (long long j = 0; j < r; ++j) ++cols[j];
    return cols;
  }

  bool operator==(const YoungDiagram&) const = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(rows_[i]);
    }
    return out;
  }

  static YoungDiagram parse(const std::string& text) {
    if (text.empty()) return YoungDiagram();
    std::vector<long long> rows;
    for (const auto& part : detail::split(text, ',')) rows.push_back(detail::parse_ll(part));
    return YoungDiagram(std::move(rows));
  }

 private:
  std::vector<long long> rows_;
};

/// Diagram whose columns are the parts of c sorted decreasingly;
/// equivalently row i has length #{j : c_j >= i}.
inline YoungDiagram young_from_composition(const Composition& c) {
  if (c.size() == 0) return YoungDiagram();
  long long maxpart = *std::max_element(c.parts().begin(), c.parts().end());
  std::vector<long long> rows(static_cast<std::size_t>(maxpart), 0);
  for (long long part : c.parts())
    for (long long i = 0; i < part; ++i) ++rows[i];
  return YoungDiagram(std::move(rows));
}

/// Complex dimension of the nilpotent GL(N,C)-orbit with Jordan type Y:
/// N^2 - sum of squared column lengths.
inline long long orbit_dimension(const YoungDiagram& y) {
  long long n = y.boxes();
  long long dim = n * n;
  for (long long t : y.columns()) dim -= t * t;
  return dim;
}

namespace detail {

inline void check_alternating(const std::string& row) {
  if (row.empty()) throw invalid_input("signed row must be non-empty");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != '+' && row[i] != '-') throw invalid_input("signed row characters must be + or -");
    if (i && row[i] == row[i - 1]) throw invalid_input("signs must alternate within a row");
  }
}

// Canonical order: longer rows first, and '+'-leading before '-'-leading
// among rows of equal length. An alternating row is determined by its
// length and leading sign, so this comparison is total on classes.
inline bool canonical_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a[0] == '+' && b[0] == '-';
}

inline std::string alternating_row(long long length, char lead) {
  std::string row;
  row.reserve(static_cast<std::size_t>(length));
  for (long long i = 0; i < length; ++i) row += (i % 2 == 0) ? lead : (lead == '+' ? '-' : '+');
  return row;
}

}  // namespace detail

/// Signed Young diagram up to interchange of equal-length rows. A value of
/// this class is the equivalence class: rows are validated to alternate and
/// stored in canonical order (length descending, '+' before '-').
class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;
  explicit SignedYoungDiagram(std::vector<std::string> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_) detail::check_alternating(row);
    std::stable_sort(rows_.begin(), rows_.end(), detail::canonical_less);
  }

  const std::vector<std::string>& rows() const { return rows_; }

  YoungDiagram shape() const {
    std::vector<long long> lens;
    lens.reserve(rows_.size());
    for (const auto& row : rows_) lens.push_back(static_cast<long long>(row.size()));
    return YoungDiagram(std::move(lens));
  }

  /// (number of pluses, number of minuses)
  std::pair<long long, long long> signature() const {
    long long plus = 0, minus = 0;
    for (const auto& row : rows_)
      for (char ch : row) (ch == '+' ? plus : minus)++;
    return {plus, minus};
  }

  SignedYoungDiagram flipped() const {
    std::vector<std::string> rows = rows_;
    for (auto& row : rows)
      for (auto& ch : row) ch = (ch == '+') ? '-' : '+';
    return SignedYoungDiagram(std::move(rows));
  }

  bool operator==(const SignedYoungDiagram&) const = default;
  bool operator<(const SignedYoungDiagram& o) const { return rows_ < o.rows_; }

  /// Rows joined by '/', e.g. "+-+/-".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += "/";
      out += rows_[i];
    }
    return out;
  }

  static SignedYoungDiagram parse(const std::string& text) {
    if (text.empty()) return SignedYoungDiagram();
    return SignedYoungDiagram(detail::split(text, '/'));
  }

 private:
  std::vector<std::string> rows_;
};

/// Canonical representative of the class with the given rows. Idempotent.
inline SignedYoungDiagram canonicalize(const std::vector<std::string>& rows) {
  return SignedYoungDiagram(rows);
}
inline SignedYoungDiagram canonicalize(const SignedYoungDiagram& t) { return t; }

/// All classes of signed Young diagrams of shape y and signature (m,n),
/// sorted. Rows of equal length differ only by leading sign, so the classes
/// are enumerated by choosing, per length group, how many rows lead with '+'.
inline std::vector<SignedYoungDiagram> enumerate_signed(const YoungDiagram& y, long long m,
                                                        long long n) {
  if (m < 0 || n < 0 || m + n != y.boxes())
    throw invalid_input("signature must be non-negative and fill the diagram");

  struct Group {
    long long length = 0;
    long long count = 0;
  };
  std::vector<Group> groups;
  for (long long len : y.rows()) {
    if (!groups.empty() && groups.back().length == len)
      ++groups.back().count;
    else
      groups.push_back({len, 1});
  }

  std::vector<SignedYoungDiagram> out;
  std::vector<long long> plus_leads(groups.size(), 0);

  auto plus_count = [](long long length, char lead) {
    return lead == '+' ? (length + 1) / 2 : length / 2;
  };

  // DFS over per-group counts of '+'-leading rows.
  auto rec = [&](auto&& self, std::size_t g, long long plus_so_far) -> void {
    if (g == groups.size()) {
      if (plus_so_far != m) return;
      std::vector<std::string> rows;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (long long r = 0; r < plus_leads[i]; ++r)
          rows.push_back(detail::alternating_row(groups[i].length, '+'));
        for (long long r = plus_leads[i]; r < groups[i].count; ++r)
          rows.push_back(detail::alternating_row(groups[i].length, '-'));
      }
      out.emplace_back(std::move(rows));
      return;
    }
    for (long long p = 0; p <= groups[g].count; ++p) {
      long long plus = plus_so_far + p * plus_count(groups[g].length, '+') +
                       (groups[g].count - p) * plus_count(groups[g].length, '-');
      if (g + 1 == groups.size() && plus != m) continue;
      plus_leads[g] = p;
      self(self, g + 1, plus);
    }
  };
  if (groups.empty()) {
    if (m == 0 && n == 0) out.emplace_back();
  } else {
    rec(rec, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace avsocle
