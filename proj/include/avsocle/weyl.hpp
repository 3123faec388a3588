#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "avsocle/errors.hpp"

namespace avsocle {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline long long parse_ll(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw invalid_input("bad integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw invalid_input("bad integer: " + s);
  }
}

}  // namespace detail

/// Element of a symmetric group in one-line notation: images_[i-1] = image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
        throw invalid_input("not a permutation of 1..N");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (p * q)(i) = p(q(i)): the right factor acts first.
  Permutation operator*(const Permutation& q) const {
    if (size() != q.size()) throw invalid_input("permutation size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(q(i));
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
  }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// Bracketed one-line form, e.g. "[3,2,1]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(images_[i]);
    }
    return out + "]";
  }

  static Permutation parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw invalid_input("permutation text must look like [3,2,1]");
    std::vector<int> im;
    for (const auto& part : detail::split(text.substr(1, text.size() - 2), ','))
      im.push_back(static_cast<int>(detail::parse_ll(part)));
    return Permutation(std::move(im));
  }

 private:
  std::vector<int> images_;
};

inline bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

/// Ordered sequence of positive block sizes. The empty composition is allowed
/// (it denotes the trivial parabolic datum); operations that need a positive
/// total check it themselves.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (long long p : parts_)
      if (p < 1) throw invalid_input("composition parts must be >= 1");
  }

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  long long operator[](std::size_t i) const { return parts_[i]; }
  long long total() const { return std::accumulate(parts_.begin(), parts_.end(), 0LL); }

  bool is_palindrome() const {
    std::size_t s = parts_.size();
    for (std::size_t i = 0; i < s / 2; ++i)
      if (parts_[i] != parts_[s - i - 1]) return false;
    return true;
  }

  bool operator==(const Composition&) const = default;

  /// Comma-separated, e.g. "2,1,2".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  static Composition parse(const std::string& text) {
    if (text.empty() || text == "-") return Composition();
    std::vector<long long> parts;
    for (const auto& part : detail::split(text, ',')) parts.push_back(detail::parse_ll(part));
    return Composition(std::move(parts));
  }

 private:
  std::vector<long long> parts_;
};

/// w0 of the symmetric group on N letters: i -> N+1-i.
inline Permutation longest_element(long long n) {
  if (n < 1) throw invalid_input("longest_element needs N >= 1");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i) im[i - 1] = static_cast<int>(n + 1 - i);
  return Permutation(std::move(im));
}

/// Longest element of the parabolic subgroup attached to c: each block of
/// consecutive letters of size c_i is reversed.
inline Permutation parabolic_longest(const Composition& c) {
  std::vector<int> im(static_cast<std::size_t>(c.total()));
  long long offset = 0;
  for (std::size_t b = 0; b < c.size(); ++b) {
    for (long long j = 1; j <= c[b]; ++j) im[offset + j - 1] = static_cast<int>(offset + c[b] + 1 - j);
    offset += c[b];
  }
  return Permutation(std::move(im));
}

struct AssumptionA {
  bool palindrome = false;
  bool involution = false;
  bool duflo = false;
  bool assumption_a = false;
};

/// The open-orbit condition for the block parabolic of GL(N) attached to c.
/// Palindromy of c and the involution test for w0*w_c are computed
/// independently; their equivalence is a theorem exercised by the test suite.
/// In type A every involution is a Duflo involution, so the duflo flag simply
/// repeats the involution test; no other type is supported.
inline AssumptionA assumption_a(const Composition& c) {
  if (c.total() < 1) throw invalid_input("assumption_a needs a non-empty composition");
  AssumptionA rec;
  rec.palindrome = c.is_palindrome();
  rec.involution = is_involution(longest_element(c.total()) * parabolic_longest(c));
  rec.duflo = rec.involution;
  rec.assumption_a = rec.palindrome;
  return rec;
}

}  // namespace avsocle
