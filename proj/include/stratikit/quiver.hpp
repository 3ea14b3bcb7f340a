#pragma once

#include <string>
#include <vector>

#include "stratikit/algebra.hpp"

namespace stratikit {

struct QuiverArrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;

  std::size_t arrow_index(const std::string& label) const;
};

/// One term c * (a_1 a_2 ... a_r) of a relation, arrows composed left to right.
template <class K>
struct RelationTerm {
  typename K::Elem coef;
  std::vector<std::string> path;
};

template <class K>
using Relation = std::vector<RelationTerm<K>>;

/// Bound quiver algebra KQ/I. The ideal is generated by the relations, whose
/// terms must be parallel paths of length at least two. Paths of length up to
/// max_len are explored; if long paths are not all in I by then the ideal is
/// reported NotAdmissible.
template <class K>
AlgebraPtr<K> compile_bqa(const Quiver& q, const std::vector<Relation<K>>& relations, const K& field,
                          std::size_t max_len = 30);

}  // namespace stratikit
