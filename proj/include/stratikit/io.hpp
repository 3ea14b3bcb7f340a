#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stratikit/verify.hpp"

namespace stratikit {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// "Q" or {"p": prime}.
struct FieldSpec {
  bool rational = false;
  std::uint64_t p = 32003;

  std::string name() const { return rational ? "Q" : "F_" + std::to_string(p); }
  Json to_json() const;
  static FieldSpec from_json(const Json& j);
  /// "Q", "32003" or "F_32003".
  static FieldSpec parse(const std::string& s);
};

FieldSpec field_spec(const PrimeField& k);
FieldSpec field_spec(const RationalField& k);

/// An algebra read from a description, with its stratifying order and
/// optional centraliser metadata.
template <class K>
struct LoadedAlgebra {
  std::string label;
  AlgebraPtr<K> algebra;
  std::vector<std::size_t> order;
  std::optional<JordanType> jordan;
};

/// Field declared by a description, without building the algebra.
FieldSpec document_field(const Json& doc);

/// Two layouts, both with "schema": 1 and "field":
///   quiver: "vertices" (labels), "arrows" ([label, source, target]),
///           "relations" (lists of [coefficient, [arrow labels]]);
///   table:  "basis", "unit", "products" ([a, b, c, coefficient] meaning
///           basis[a] basis[b] has coefficient at basis[c]), "idempotents",
///           optional "arrows" ([label, source, target, vector]).
/// Optional in both: "label", "order" (vertex permutation), "jordan" ({n, parts}).
/// Unknown fields are rejected.
template <class K>
LoadedAlgebra<K> algebra_from_json(const Json& doc, const K& k);

/// Canonical table layout: basis sorted by label, products row-major.
template <class K>
Json algebra_to_json(const LoadedAlgebra<K>& a);

template <class K>
Json matrix_json(const Matrix<K>& m);

/// Module over a given algebra: {"schema": 1, "dimension": d, "actions":
/// {generator label: d x d matrix}} with one entry per idempotent ("e" + vertex
/// label) and arrow. Actions are checked against the algebra's relations.
template <class K>
Module<K> module_from_json(const Json& doc, const AlgebraPtr<K>& a);
template <class K>
Json module_to_json(const Module<K>& m);

Json transcript_to_json(const Transcript& t);

}  // namespace stratikit
