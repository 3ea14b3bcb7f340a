#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stratikit/io.hpp"

namespace stratikit {

/// Named examples (Schur and Brauer blocks up to 3) and every centraliser
/// algebra with n <= max_n.
struct CatalogueEntry {
  std::string label;
  std::optional<ExampleSpec> example;
  std::optional<JordanType> jordan;
};

std::vector<CatalogueEntry> suite_catalogue(std::size_t max_n = 5);

template <class K>
LoadedAlgebra<K> build_entry(const CatalogueEntry& e, const K& k);

/// Observed value for each key of an example manifest.
template <class K>
std::map<std::string, std::string> observe_manifest(const NamedExample<K>& ex, Rng& rng,
                                                    std::size_t cutoff = kDefaultCutoff);

struct ManifestRow {
  std::string input, key, expected, observed;
  bool ok() const { return expected == observed; }
};

struct VerdictRow {
  std::string input, property;
  Status status = Status::Pass;
};

struct SuiteReport {
  FieldSpec field;
  std::uint64_t seed = 0;
  std::size_t cutoff = kDefaultCutoff;
  std::vector<ManifestRow> manifest;
  std::vector<VerdictRow> verdicts;

  bool any_fail() const;
  bool any_inconclusive() const;
};

/// Manifest checks on the named examples, then every property on every
/// catalogue entry. Entries run in parallel; each verification gets its own
/// seed derived from the run seed, so the report does not depend on scheduling.
template <class K>
SuiteReport run_suite(const K& k, std::uint64_t seed, std::size_t cutoff = kDefaultCutoff, std::size_t max_n = 5);

Json suite_to_json(const SuiteReport& r);

/// Seed for one verification inside a run.
std::uint64_t derived_seed(std::uint64_t seed, const std::string& input, const std::string& property);

}  // namespace stratikit
