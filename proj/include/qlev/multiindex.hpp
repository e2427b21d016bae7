#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace qlev {

// Multi-index in N^d with the entrywise partial order. Comparison for map
// keys is graded lexicographic so that canonical term orders are stable.
struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e(std::move(entries)) {}

  static MultiIndex zeros(int d) { return MultiIndex(std::vector<int>(d, 0)); }
  static MultiIndex unit(int d, int i, int v = 1) {
    MultiIndex k = zeros(d);
    k.e[i] = v;
    return k;
  }

  int dim() const { return static_cast<int>(e.size()); }
  int total() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_zero() const {
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
  }
  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }

  bool operator==(const MultiIndex& o) const { return e == o.e; }
  bool operator!=(const MultiIndex& o) const { return e != o.e; }
  bool operator<(const MultiIndex& o) const {
    int ta = total(), tb = o.total();
    if (ta != tb) return ta < tb;
    return e < o.e;
  }
};

inline bool leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

inline MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

// All k' with 0 <= k' <= k entrywise, in graded-lex order.
inline std::vector<MultiIndex> multi_range(const MultiIndex& k) {
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zeros(k.dim());
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < k.dim() && cur[i] == k[i]) {
      cur[i] = 0;
      ++i;
    }
    if (i == k.dim()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All k in N^d with |k| == total, graded-lex order.
inline std::vector<MultiIndex> multi_of_total(int d, int total) {
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zeros(d);
  // enumerate compositions of `total` into d parts
  std::vector<int> c(d, 0);
  c[0] = total;
  if (d == 0) {
    if (total == 0) out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(MultiIndex(c));
    // next composition
    int i = 0;
    while (i < d - 1 && c[i] == 0) ++i;
    if (i == d - 1) break;
    int v = c[i];
    c[i] = 0;
    c[i + 1] += 1;
    c[0] = v - 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(const MultiIndex& k) {
  std::string s = "(";
  for (int i = 0; i < k.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i]);
  }
  return s + ")";
}

}  // namespace qlev
