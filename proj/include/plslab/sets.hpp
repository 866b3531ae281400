#pragma once

#include <algorithm>
#include <vector>

namespace plslab {

// Ground-set elements are small non-negative ints (0-based internally; the
// text format is 1-based).  Element sets are sorted, duplicate-free vectors;
// every constructor below maintains that invariant so comparisons and set
// algebra stay linear.
using Element = int;
using ElemSet = std::vector<Element>;

inline ElemSet make_set(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const ElemSet& s, Element e) {
  return std::binary_search(s.begin(), s.end(), e);
}

inline bool sets_intersect(const ElemSet& a, const ElemSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

inline int intersection_size(const ElemSet& a, const ElemSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  int n = 0;
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

inline bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace plslab
