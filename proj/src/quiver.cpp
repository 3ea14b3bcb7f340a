#include "stratikit/quiver.hpp"

#include <algorithm>
#include <map>

namespace stratikit {

std::size_t Quiver::arrow_index(const std::string& label) const {
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].label == label) return a;
  throw Error(ErrorKind::InvalidRelation, "unknown arrow '" + label + "'");
}

namespace {

struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;
  bool operator<(const Path& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (start != o.start) return start < o.start;
    return arrows < o.arrows;
  }
};

constexpr std::size_t kMaxPaths = 200000;

class PathSpace {
 public:
  PathSpace(const Quiver& q, std::size_t max_length) : q_(q) {
    for (std::size_t v = 0; v < q.vertices.size(); ++v) add({v, {}});
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      if (paths_[i].arrows.size() >= max_length) continue;
      const std::size_t e = end(paths_[i]);
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == e) {
          Path p = paths_[i];
          p.arrows.push_back(a);
          add(std::move(p));
          if (paths_.size() > kMaxPaths)
            throw Error(ErrorKind::NotAdmissible, "path space grows beyond " + std::to_string(kMaxPaths) + " paths");
        }
    }
  }

  std::size_t end(const Path& p) const { return p.arrows.empty() ? p.start : q_.arrows[p.arrows.back()].target; }
  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  std::size_t index(const Path& p) const { return index_.at(p); }
  bool has(const Path& p) const { return index_.count(p) > 0; }

 private:
  void add(Path p) {
    index_.emplace(p, paths_.size());
    paths_.push_back(std::move(p));
  }
  const Quiver& q_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
};

template <class K>
struct ParsedRelation {
  std::size_t start = 0, end = 0, min_len = 0, max_len = 0;
  std::vector<std::pair<typename K::Elem, std::vector<std::size_t>>> terms;
};

Path concat(const Path& a, const std::vector<std::size_t>& mid, const Path& b) {
  Path p{a.start, a.arrows};
  p.arrows.insert(p.arrows.end(), mid.begin(), mid.end());
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

// Calls f(p, r, q, term lengths) for every p r q whose length measure is within bound.
template <class K, class F>
void for_each_multiple(const PathSpace& ps, const std::vector<ParsedRelation<K>>& rels, std::size_t bound,
                       bool use_min, F&& f) {
  for (const auto& r : rels) {
    std::size_t rl = use_min ? r.min_len : r.max_len;
    if (rl > bound) continue;
    for (const auto& p : ps.paths()) {
      if (ps.end(p) != r.start || p.arrows.size() + rl > bound) continue;
      for (const auto& q : ps.paths()) {
        if (q.start != r.end || p.arrows.size() + rl + q.arrows.size() > bound) continue;
        f(p, r, q);
      }
    }
  }
}

}  // namespace

template <class K>
AlgebraPtr<K> compile_bqa(const Quiver& q, const std::vector<Relation<K>>& relations, const K& k,
                          std::size_t max_len) {
  const std::size_t n = q.vertices.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "quiver without vertices");
  for (const auto& a : q.arrows)
    if (a.source >= n || a.target >= n) throw Error(ErrorKind::InvalidInput, "arrow '" + a.label + "' has bad endpoints");

  std::vector<ParsedRelation<K>> rels;
  for (const auto& rel : relations) {
    ParsedRelation<K> pr;
    bool first = true;
    for (const auto& t : rel) {
      if (k.is_zero(t.coef)) continue;
      if (t.path.empty()) throw Error(ErrorKind::NotAdmissible, "relation term is a trivial path");
      std::vector<std::size_t> arr;
      for (const auto& l : t.path) arr.push_back(q.arrow_index(l));
      for (std::size_t i = 1; i < arr.size(); ++i)
        if (q.arrows[arr[i - 1]].target != q.arrows[arr[i]].source)
          throw Error(ErrorKind::InvalidRelation, "relation term is not a path");
      std::size_t s = q.arrows[arr.front()].source, e = q.arrows[arr.back()].target;
      if (first) {
        pr.start = s;
        pr.end = e;
        pr.min_len = pr.max_len = arr.size();
        first = false;
      } else if (s != pr.start || e != pr.end) {
        throw Error(ErrorKind::InvalidRelation, "relation terms are not parallel paths");
      }
      if (arr.size() < 2) throw Error(ErrorKind::NotAdmissible, "relation has a term of length below two");
      pr.min_len = std::min(pr.min_len, arr.size());
      pr.max_len = std::max(pr.max_len, arr.size());
      pr.terms.emplace_back(t.coef, std::move(arr));
    }
    if (first) throw Error(ErrorKind::InvalidRelation, "relation with no nonzero terms");
    rels.push_back(std::move(pr));
  }

  // Find L with every path of length L inside the ideal.
  std::size_t stable = 0;
  for (std::size_t len = 1; len <= max_len && stable == 0; ++len) {
    PathSpace ps(q, len);
    bool any_long = false;
    for (const auto& p : ps.paths()) any_long = any_long || p.arrows.size() == len;
    if (!any_long) {
      stable = len;
      break;
    }
    RowSpace<K> ideal(k, ps.size());
    for_each_multiple<K>(ps, rels, len, false, [&](const Path& p, const ParsedRelation<K>& r, const Path& s) {
      Vec<K> v(ps.size(), k.zero());
      for (const auto& [c, arr] : r.terms) {
        auto idx = ps.index(concat(p, arr, s));
        v[idx] = k.add(v[idx], c);
      }
      ideal.insert(v);
    });
    bool all_in = true;
    for (std::size_t i = 0; i < ps.size() && all_in; ++i)
      if (ps.paths()[i].arrows.size() == len) all_in = ideal.contains(unit_vec(k, ps.size(), i));
    if (all_in) stable = len;
  }
  if (stable == 0)
    throw Error(ErrorKind::NotAdmissible, "paths of length " + std::to_string(max_len) + " are not all in the ideal");

  // Paths of length >= stable vanish; reduce the rest modulo the truncated ideal.
  const std::size_t L = stable;
  PathSpace ps(q, L - 1);
  const std::size_t m = ps.size();
  // Column order puts long paths first so they become pivots.
  std::vector<std::size_t> col_of(m), path_of(m);
  {
    std::vector<std::size_t> ord(m);
    for (std::size_t i = 0; i < m; ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      const auto la = ps.paths()[a].arrows.size(), lb = ps.paths()[b].arrows.size();
      if (la != lb) return la > lb;
      return a > b;
    });
    for (std::size_t c = 0; c < m; ++c) {
      path_of[c] = ord[c];
      col_of[ord[c]] = c;
    }
  }
  RowSpace<K> ideal(k, m);
  for_each_multiple<K>(ps, rels, L - 1, true, [&](const Path& p, const ParsedRelation<K>& r, const Path& s) {
    Vec<K> v(m, k.zero());
    for (const auto& [c, arr] : r.terms) {
      if (p.arrows.size() + arr.size() + s.arrows.size() >= L) continue;
      auto col = col_of[ps.index(concat(p, arr, s))];
      v[col] = k.add(v[col], c);
    }
    ideal.insert(v);
  });
  std::vector<std::size_t> basis;  // path indices
  for (auto c : ideal.non_pivot_columns()) basis.push_back(path_of[c]);
  std::sort(basis.begin(), basis.end());  // PathSpace order: by length, then discovery
  std::vector<std::size_t> basis_pos(m, Word::kNone);
  for (std::size_t b = 0; b < basis.size(); ++b) basis_pos[basis[b]] = b;
  const std::size_t d = basis.size();

  auto normal_form = [&](const Path& p) {
    Vec<K> out(d, k.zero());
    if (p.arrows.size() >= L) return out;
    auto r = ideal.reduce(unit_vec(k, m, col_of[ps.index(p)]));
    for (std::size_t c = 0; c < m; ++c)
      if (!k.is_zero(r[c])) {
        auto b = basis_pos[path_of[c]];
        if (b == Word::kNone) throw Error(ErrorKind::InternalInconsistency, "normal form hits a pivot path");
        out[b] = r[c];
      }
    return out;
  };

  std::vector<std::string> labels;
  for (auto b : basis) {
    const Path& p = ps.paths()[b];
    if (p.arrows.empty()) {
      labels.push_back("e" + q.vertices[p.start]);
      continue;
    }
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + q.arrows[p.arrows[i]].label;
    labels.push_back(s);
  }
  Vec<K> unit(d, k.zero());
  std::vector<Vec<K>> idem;
  for (std::size_t v = 0; v < n; ++v) {
    idem.push_back(unit_vec(k, d, basis_pos[ps.index({v, {}})]));
    unit[basis_pos[ps.index({v, {}})]] = k.one();
  }
  auto table = AlgebraTable<K>::from_products(k, labels, unit, [&](std::size_t x, std::size_t y) {
    const Path& a = ps.paths()[basis[x]];
    const Path& b = ps.paths()[basis[y]];
    if (ps.end(a) != b.start) return Vec<K>(d, k.zero());
    return normal_form(concat(a, {}, b));
  });
  std::vector<Arrow<K>> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    Path p{q.arrows[a].source, {a}};
    if (L <= 1 || basis_pos[ps.index(p)] == Word::kNone)
      throw Error(ErrorKind::NotAdmissible, "arrow '" + q.arrows[a].label + "' lies in the ideal");
    arrows.push_back({q.arrows[a].label, q.arrows[a].source, q.arrows[a].target, normal_form(p)});
  }
  return AssocAlgebra<K>::create(std::move(table), std::move(idem), std::move(arrows), q.vertices);
}

template AlgebraPtr<PrimeField> compile_bqa<PrimeField>(const Quiver&, const std::vector<Relation<PrimeField>>&,
                                                        const PrimeField&, std::size_t);
template AlgebraPtr<RationalField> compile_bqa<RationalField>(const Quiver&,
                                                              const std::vector<Relation<RationalField>>&,
                                                              const RationalField&, std::size_t);

}  // namespace stratikit
