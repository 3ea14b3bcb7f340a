#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stratikit/families.hpp"

namespace stratikit {

enum class PropertyId { Main, FrobEndo, GpFilt, PfinCap, Mazov, DomdimT, RingelGigs, SelfDualCent };

PropertyId parse_property_id(const std::string& s);
const char* property_name(PropertyId p);
std::vector<PropertyId> all_properties();

enum class Status { Pass, Fail, HypothesisNotMet, Inconclusive };
const char* status_name(Status s);

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Transcript {
  std::string property;
  std::string input;
  Status status = Status::Pass;
  std::vector<Check> hypotheses;
  std::vector<Check> steps;
  /// Witness matrices as rows of exact scalars, included on request.
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> witnesses;
};

template <class K>
struct VerifyInput {
  std::string label;
  AlgebraPtr<K> algebra;
  std::vector<std::size_t> order;
  std::optional<JordanType> jordan;
};

struct VerifyOptions {
  std::size_t cutoff = kDefaultCutoff;
  std::uint64_t seed = 0;
  bool witnesses = false;
};

template <class K>
Transcript verify(PropertyId p, const VerifyInput<K>& in, const VerifyOptions& opt);

/// Simples, proper standards and radicals of projectives, with their first three syzygies.
template <class K>
std::vector<std::pair<std::string, Module<K>>> sampling_set(const StratifiedData<K>& s);

/// Omega^k(M), the k-th syzygy.
template <class K>
Module<K> syzygy(const Module<K>& m, std::size_t k);
/// Omega^(-k)(M), the k-th cosyzygy, via the opposite algebra.
template <class K>
Module<K> cosyzygy(const Module<K>& m, std::size_t k);

/// End_U(U + Omega^d(M)) in basic form, for U and the generator N = U + M of a gendo-symmetric algebra.
template <class K>
AlgebraPtr<K> syzygy_endomorphism_algebra(const GendoData<K>& g, std::size_t d, Rng& rng);

}  // namespace stratikit
