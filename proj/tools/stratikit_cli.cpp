#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "stratikit/suite.hpp"

using namespace stratikit;

namespace {

enum Exit { kPass = 0, kPropertyFail = 1, kUsage = 2, kInconclusive = 3 };

struct Config {
  std::string field;
  std::size_t cutoff = kDefaultCutoff;
  std::optional<std::uint64_t> seed;
  bool witnesses = false;
  std::string output;

  // Family parameters, shared by `family` and family:<name> inputs.
  std::size_t n = 0, m = 0;
  std::string parts, partition, matrix, example_id;

  std::uint64_t effective_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("STRATIKIT_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "STRATIKIT_SEED must be a non-negative integer");
      }
    }
    return 0;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& t : split(s, ',')) {
    try {
      out.push_back(std::stoul(t));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "expected a comma-separated list of numbers, got '" + s + "'");
    }
  }
  return out;
}

/// Where an algebra comes from: a JSON document (file or stdin), a named example, or a family.
struct InputSpec {
  std::string text;
  std::optional<Json> doc;
};

InputSpec read_input(const std::string& text) {
  InputSpec in{text.empty() ? "-" : text, std::nullopt};
  if (in.text.rfind("example:", 0) == 0 || in.text.rfind("family:", 0) == 0) return in;
  std::string body;
  if (in.text == "-") {
    body.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(in.text);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open '" + in.text + "'");
    body.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    in.doc = Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return in;
}

FieldSpec resolve_field(const Config& cfg, const InputSpec* in) {
  if (!cfg.field.empty()) return FieldSpec::parse(cfg.field);
  if (in && in->doc) return document_field(*in->doc);
  return FieldSpec{};
}

template <class K>
JordanType jordan_from_config(const Config& cfg, const K& k) {
  if (!cfg.matrix.empty()) {
    std::vector<Vec<K>> rows;
    for (const auto& r : split(cfg.matrix, ';')) {
      Vec<K> row;
      for (const auto& x : split(r, ',')) row.push_back(k.parse(x));
      rows.push_back(row);
    }
    if (rows.empty()) throw Error(ErrorKind::InvalidInput, "empty matrix");
    for (const auto& r : rows)
      if (r.size() != rows.size()) throw Error(ErrorKind::InvalidInput, "matrix must be square");
    return jordan_type_of(Matrix<K>::from_rows(k, rows, rows.size()));
  }
  if (!cfg.partition.empty()) return JordanType::from_partition(parse_sizes(cfg.partition));
  if (cfg.n == 0) throw Error(ErrorKind::InvalidInput, "cent needs --n with --parts, --partition, or --matrix");
  JordanType j{cfg.n, parse_sizes(cfg.parts)};
  j.validate();
  return j;
}

template <class K>
LoadedAlgebra<K> family_algebra(const std::string& name, const Config& cfg, const K& k) {
  LoadedAlgebra<K> la;
  if (name == "cent") {
    const auto j = jordan_from_config(cfg, k);
    auto c = centraliser_algebra(j, k);
    la = {"cent" + j.to_string(), c.algebra, c.order, j};
  } else if (name == "schur") {
    if (cfg.m == 0) throw Error(ErrorKind::InvalidInput, "schur needs --m >= 1");
    auto ex = named_example(ExampleSpec{ExampleId::SchurA, cfg.m}, k);
    la = {"example:schur-A(" + std::to_string(cfg.m) + ")", ex.algebra, ex.order, std::nullopt};
  } else if (name == "example") {
    const auto spec = parse_example_id(cfg.example_id);
    auto ex = named_example(spec, k);
    la = {"example:" + example_name(spec), ex.algebra, ex.order, std::nullopt};
    if (spec.id == ExampleId::Cent31) la.jordan = JordanType{3, {1}};
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown family '" + name + "' (cent, schur, example)");
  }
  return la;
}

template <class K>
LoadedAlgebra<K> load(const InputSpec& in, const Config& cfg, const K& k) {
  if (in.doc) {
    auto la = algebra_from_json(*in.doc, k);
    if (la.label.empty()) la.label = in.text;
    return la;
  }
  if (in.text.rfind("example:", 0) == 0) {
    Config c = cfg;
    c.example_id = in.text.substr(8);
    return family_algebra("example", c, k);
  }
  return family_algebra(in.text.substr(7), cfg, k);
}

std::vector<std::size_t> parse_order(const std::string& s, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& t : split(s, ',')) {
    auto it = std::find(labels.begin(), labels.end(), t);
    if (it != labels.end()) {
      out.push_back(static_cast<std::size_t>(it - labels.begin()));
      continue;
    }
    std::size_t v = 0;
    try {
      v = std::stoul(t);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "unknown vertex '" + t + "' in order");
    }
    if (v < 1 || v > labels.size()) throw Error(ErrorKind::InvalidInput, "vertex out of range in order");
    out.push_back(v - 1);
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != labels.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidInput, "order must list every vertex once");
  return out;
}

Json header(const std::string& command, const Config& cfg, const FieldSpec& f, const std::string& input) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["field"] = f.to_json();
  j["seed"] = cfg.effective_seed();
  j["cutoff"] = cfg.cutoff;
  if (!input.empty()) j["input"] = input;
  return j;
}

Json dims_json(const DimensionReport& d) { return d.finite() ? Json(*d.value) : Json(d.to_string()); }

template <class K>
Json dimension_vectors(const std::vector<Module<K>>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.dimension_vector());
  return out;
}

template <class K>
Json labels_of(const AlgebraPtr<K>& a, const std::vector<std::size_t>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(a->vertex_labels()[v]);
  return out;
}

template <class K>
Json classification_json(const ClassificationReport<K>& c, const AlgebraPtr<K>& a) {
  return Json{{"selfinjective", c.selfinjective},
              {"frobenius", verdict_name(c.frobenius)},
              {"symmetric", verdict_name(c.symmetric)},
              {"gendo_symmetric", verdict_name(c.gendo_symmetric)},
              {"minimal_auslander_gorenstein", c.minimal_auslander_gorenstein},
              {"projective_injective", labels_of(a, c.projective_injective)}};
}

void emit(const Json& j, const Config& cfg) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + cfg.output + "'");
    f << text;
  }
}

template <class K>
int cmd_info(const LoadedAlgebra<K>& la, const Config& cfg) {
  Rng rng(cfg.effective_seed());
  const auto& a = la.algebra;
  const auto c = classify(a, rng, cfg.cutoff);
  Json j = header("info", cfg, field_spec(a->field()), la.label);
  j["dim"] = a->dim();
  j["vertices"] = a->vertex_labels();
  j["cartan"] = a->cartan();
  j["radical_layers"] = radical_top_socle(regular_module(a)).radical_layers;
  j["global_dim"] = dims_json(c.global);
  j["gorenstein_dim"] = dims_json(c.gorenstein.dim);
  j["injective_dim_right"] = dims_json(c.gorenstein.right);
  j["injective_dim_left"] = dims_json(c.gorenstein.left);
  j["dominant_dim"] = dims_json(c.dominant);
  // equal to the Gorenstein dimension when that is finite; not attempted otherwise
  j["finitistic_dim"] = c.gorenstein.dim.finite() ? dims_json(c.gorenstein.dim) : Json("not computed");
  j["classification"] = classification_json(c, a);
  j["flags"] = classification_flags(a, rng, cfg.cutoff);
  emit(j, cfg);
  return kPass;
}

template <class K>
int cmd_stratify(LoadedAlgebra<K> la, const Config& cfg, const std::string& order, bool all_orders) {
  if (!order.empty()) la.order = parse_order(order, la.algebra->vertex_labels());
  const auto s = standard_family(la.algebra, la.order);
  Json j = header("stratify", cfg, field_spec(la.algebra->field()), la.label);
  j["order"] = labels_of(la.algebra, la.order);
  j["standardly_stratified"] = s.verdict.standardly;
  j["properly_stratified"] = s.verdict.properly;
  j["failing_layer"] = s.verdict.failing_layer ? Json(*s.verdict.failing_layer + 1) : Json(nullptr);
  j["failing_layer_op"] = s.verdict.failing_layer_op ? Json(*s.verdict.failing_layer_op + 1) : Json(nullptr);
  j["vertices_in_order"] = s.algebra->vertex_labels();
  j["delta"] = dimension_vectors(s.delta);
  j["proper_delta"] = dimension_vectors(s.proper_delta);
  j["nabla"] = dimension_vectors(s.nabla);
  j["proper_nabla"] = dimension_vectors(s.proper_nabla);
  if (all_orders) {
    Json orders = Json::array();
    for (const auto& ov : find_stratifying_orders(la.algebra))
      orders.push_back({{"order", labels_of(la.algebra, ov.order)},
                        {"standardly", ov.verdict.standardly},
                        {"properly", ov.verdict.properly}});
    j["all_orders"] = orders;
  }
  emit(j, cfg);
  return kPass;
}

template <class K>
int cmd_tilting(const LoadedAlgebra<K>& la, const Config& cfg) {
  Rng rng(cfg.effective_seed());
  const auto s = standard_family(la.algebra, la.order);
  if (!s.verdict.properly) throw Error(ErrorKind::PreconditionUnverified, "the algebra is not properly stratified in the given order");
  const auto t = characteristic_tilting(s, rng, cfg.cutoff);
  const auto iso = is_isomorphic(t.basic_tilting(s.algebra), t.basic_cotilting(s.algebra), rng);
  const auto g = gorenstein_dim(s.algebra, cfg.cutoff);
  Json j = header("tilting", cfg, field_spec(la.algebra->field()), la.label);
  j["order"] = labels_of(la.algebra, la.order);
  Json ts = Json::array(), cs = Json::array();
  for (std::size_t i = 0; i < t.tilting.size(); ++i) {
    ts.push_back({{"vertex", s.algebra->vertex_labels()[i]},
                  {"dim", t.tilting[i].dim()},
                  {"dimension_vector", t.tilting[i].dimension_vector()}});
    cs.push_back({{"vertex", s.algebra->vertex_labels()[i]},
                  {"dim", t.cotilting[i].dim()},
                  {"dimension_vector", t.cotilting[i].dimension_vector()}});
  }
  j["tilting"] = ts;
  j["cotilting"] = cs;
  j["pd_T"] = dims_json(t.pd);
  j["T_isomorphic_C"] = verdict_name(iso.verdict);
  j["gorenstein_dim"] = dims_json(g.dim);
  const bool consistent = iso.verdict != Verdict::Inconclusive && g.dim.finite() == (iso.verdict == Verdict::Yes);
  j["gorenstein_cross_check"] = iso.verdict == Verdict::Inconclusive ? Json("inconclusive") : Json(consistent);
  if (cfg.witnesses && iso.witness) j["witness"] = matrix_json(*iso.witness);
  emit(j, cfg);
  if (iso.verdict == Verdict::Inconclusive) return kInconclusive;
  return consistent ? kPass : kPropertyFail;
}

template <class K>
int cmd_ringel_dual(const LoadedAlgebra<K>& la, const Config& cfg, bool emit_algebra, const std::string& dual_order) {
  Rng rng(cfg.effective_seed());
  const auto s = standard_family(la.algebra, la.order);
  if (!s.verdict.properly) throw Error(ErrorKind::PreconditionUnverified, "the algebra is not properly stratified in the given order");
  const auto t = characteristic_tilting(s, rng, cfg.cutoff);
  LoadedAlgebra<K> dual;
  dual.label = "ringel-dual(" + la.label + ")";
  std::optional<std::vector<std::size_t>> ord;
  if (!dual_order.empty()) {
    std::vector<std::string> positions;
    for (std::size_t i = 1; i <= s.size(); ++i) positions.push_back(std::to_string(i));
    ord = parse_order(dual_order, positions);
  }
  dual.algebra = ringel_dual(s, t, ord);
  dual.order.resize(dual.algebra->num_vertices());
  std::iota(dual.order.begin(), dual.order.end(), 0);
  if (emit_algebra) {
    emit(algebra_to_json(dual), cfg);
    return kPass;
  }
  const auto inv = invariant_isomorphic(s.algebra, dual.algebra, rng, cfg.cutoff);
  Json j = header("ringel-dual", cfg, field_spec(la.algebra->field()), la.label);
  j["dim"] = dual.algebra->dim();
  j["cartan"] = dual.algebra->cartan();
  j["flags"] = classification_flags(dual.algebra, rng, cfg.cutoff);
  Json perm = Json::array();
  for (auto v : inv.permutation) perm.push_back(v + 1);
  j["invariant_isomorphic_to_input"] = {{"isomorphic", inv.isomorphic}, {"permutation", perm}, {"reason", inv.reason}};
  j["algebra"] = algebra_to_json(dual);
  emit(j, cfg);
  return kPass;
}

template <class K>
int cmd_verify(const LoadedAlgebra<K>& la, const Config& cfg, const std::string& property) {
  std::vector<PropertyId> props;
  if (property == "all") props = all_properties();
  else props.push_back(parse_property_id(property));
  Json j = header("verify", cfg, field_spec(la.algebra->field()), la.label);
  Json ts = Json::array();
  bool fail = false, inconclusive = false;
  for (auto p : props) {
    const VerifyInput<K> in{la.label, la.algebra, la.order, la.jordan};
    const auto t = verify(p, in, VerifyOptions{cfg.cutoff, cfg.effective_seed(), cfg.witnesses});
    ts.push_back(transcript_to_json(t));
    fail = fail || t.status == Status::Fail;
    inconclusive = inconclusive || t.status == Status::Inconclusive;
  }
  if (props.size() == 1) j["transcript"] = ts[0];
  else j["transcripts"] = ts;
  emit(j, cfg);
  if (fail) return kPropertyFail;
  return inconclusive ? kInconclusive : kPass;
}

template <class K>
int cmd_suite(const K& k, const Config& cfg, std::size_t max_n) {
  const auto r = run_suite(k, cfg.effective_seed(), cfg.cutoff, max_n);
  emit(suite_to_json(r), cfg);
  if (r.any_fail()) return kPropertyFail;
  return r.any_inconclusive() ? kInconclusive : kPass;
}

template <class F>
int with_field(const FieldSpec& f, F&& body) {
  if (f.rational) return body(RationalField{});
  return body(PrimeField(static_cast<std::uint32_t>(f.p)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratified algebras: standard modules, tilting, Ringel duals and property checks."};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--field", cfg.field, "Q, a prime, or F_<prime> (default: the input's field, else F_32003)");
  app.add_option("--cutoff", cfg.cutoff, "Bound for homological dimensions")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed (default: $STRATIKIT_SEED, else 0)");
  app.add_flag("--witnesses", cfg.witnesses, "Include witness matrices in reports");
  app.add_option("-o,--output", cfg.output, "Write the report to a file instead of stdout");
  app.add_option("--n", cfg.n, "cent: matrix size");
  app.add_option("--parts", cfg.parts, "cent: comma-separated summand lengths p_0 < ... < p_r");
  app.add_option("--partition", cfg.partition, "cent: Jordan block sizes, comma-separated");
  app.add_option("--matrix", cfg.matrix, "cent: nilpotent matrix, rows separated by ';', entries by ','");
  app.add_option("--m", cfg.m, "schur: number of simples");
  app.add_option("--id", cfg.example_id, "example: one of rad-square-zero-2v, recollement-3v, gigs-kxy, cent-3-1, schur-A(m), brauer-B(n)");

  const std::string input_help = "Algebra JSON file, '-' for stdin, example:<id>, or family:<cent|schur>";
  std::string input, order, dual_order, property, family;
  bool all_orders = false, emit_algebra = false;
  std::size_t max_n = 5;

  auto* info = app.add_subcommand("info", "Dimension, Cartan matrix, radical layers and classification");
  info->add_option("input", input, input_help);
  auto* stratify = app.add_subcommand("stratify", "Stratification verdict and standard modules for an order");
  stratify->add_option("input", input, input_help);
  stratify->add_option("--order", order, "Vertex order, comma-separated labels or 1-based numbers");
  stratify->add_flag("--all-orders", all_orders, "Also test every order (at most 7 vertices)");
  auto* tilting = app.add_subcommand("tilting", "Characteristic tilting and cotilting modules");
  tilting->add_option("input", input, input_help);
  auto* ringel = app.add_subcommand("ringel-dual", "Ringel dual and its comparison with the input");
  ringel->add_option("input", input, input_help);
  ringel->add_flag("--emit-algebra", emit_algebra, "Print only the dual algebra, as an input file");
  ringel->add_option("--dual-order", dual_order,
                     "Idempotent order of the dual as 1-based T(i) positions (default: reversed)");
  auto* verify_cmd = app.add_subcommand("verify", "Run a property check and print its transcript");
  verify_cmd->add_option("property", property, "MAIN, FROB_ENDO, GP_FILT, PFIN_CAP, MAZOV, DOMDIM_T, RINGEL_GIGS, SELF_DUAL_CENT or all")
      ->required();
  verify_cmd->add_option("input", input, input_help);
  auto* family_cmd = app.add_subcommand("family", "Emit the algebra JSON of a family member");
  family_cmd->add_option("name", family, "cent, schur or example")->required();
  auto* suite = app.add_subcommand("suite", "Manifest checks and every property on the catalogue");
  suite->add_option("--max-n", max_n, "Largest matrix size for centraliser algebras")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (suite->parsed()) return with_field(resolve_field(cfg, nullptr), [&](const auto& k) { return cmd_suite(k, cfg, max_n); });
    if (family_cmd->parsed()) {
      return with_field(resolve_field(cfg, nullptr), [&](const auto& k) {
        emit(algebra_to_json(family_algebra(family, cfg, k)), cfg);
        return static_cast<int>(kPass);
      });
    }
    const InputSpec in = read_input(input);
    return with_field(resolve_field(cfg, &in), [&](const auto& k) {
      const auto la = load(in, cfg, k);
      if (info->parsed()) return cmd_info(la, cfg);
      if (stratify->parsed()) return cmd_stratify(la, cfg, order, all_orders);
      if (tilting->parsed()) return cmd_tilting(la, cfg);
      if (ringel->parsed()) return cmd_ringel_dual(la, cfg, emit_algebra, dual_order);
      return cmd_verify(la, cfg, property);
    });
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
