// order verbs: check-map, ad-embed, diagonal, box.

#include "verbs.hpp"

#include "omega/order.hpp"

namespace omegalab {

using namespace omega;

namespace {

// {"chain": n} or {"elements": [...], "leq": [[x, y], ...]}; the relation
// is closed reflexively and transitively before validation.
FinitePoset poset_of(const Json& j) {
  if (j.contains("chain")) return FinitePoset::chain(index_of(j.at("chain")));
  const std::vector<std::string> names = strings_of(need(j, "elements"));
  const std::size_t n = names.size();
  auto find = [&](const Json& x) {
    const std::string s = text_of(x);
    for (std::size_t k = 0; k < n; ++k)
      if (names[k] == s) return k;
    throw UsageError("unknown poset element " + s);
  };
  std::vector<char> rel(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) rel[x * n + x] = 1;
  if (j.contains("leq"))
    for (const auto& p : j.at("leq")) {
      if (!p.is_array() || p.size() != 2) throw UsageError("leq pairs are [x, y]");
      rel[find(p[0]) * n + find(p[1])] = 1;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (rel[x * n + k] && rel[k * n + y]) rel[x * n + y] = 1;
  try {
    return FinitePoset::from_predicate(names, [&](std::size_t x, std::size_t y) { return rel[x * n + y] != 0; });
  } catch (const OrderError& e) {
    throw UsageError(e.what());
  }
}

Json names_json(const FinitePoset& p, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(p.names()[i]);
  return out;
}

// Exit 1 unless the map is both monotone and cofinal.
Outcome check_map_verb(const Options& o) {
  const Json in = read_json(o);
  const FinitePoset d = poset_of(need(in, "domain")), e = poset_of(need(in, "target"));
  const Json& m = need(in, "map");
  PosetMap f(d.size());
  try {
    if (m.is_object()) {
      for (const auto& [k, v] : m.items()) f[d.index(k)] = e.index(text_of(v));
    } else {
      if (!m.is_array() || m.size() != d.size()) throw UsageError("map needs one target per domain element");
      for (std::size_t x = 0; x < d.size(); ++x)
        if (!m[x].is_null()) f[x] = e.index(text_of(m[x]));
    }
  } catch (const OrderError& err) {
    throw UsageError(err.what());
  }
  Outcome r;
  try {
    const MapVerdict mono = check_monotone(f, d, e), cof = check_cofinal(f, d, e);
    r.body["monotone"] = {{"holds", mono.holds}, {"witness", names_json(d, mono.witness)}};
    r.body["cofinal"] = {{"holds", cof.holds}, {"witness", names_json(e, cof.witness)}};
    if (!mono.holds || !cof.holds) r.code = kFailures;
  } catch (const PartialMap& err) {
    throw UsageError(err.what());
  }
  return r;
}

std::vector<Branch> branches_of(const Json& j) {
  std::vector<Branch> out;
  try {
    for (const auto& b : j) out.push_back(parse_branch(text_of(b)));
  } catch (const OrderError& e) {
    throw UsageError(e.what());
  }
  return out;
}

// Codes of the join for each listed subset, and the embedding audit over
// every ordered pair of them (all subsets when none are listed).
Outcome ad_embed_verb(const Options& o) {
  const Json in = read_json(o);
  const std::vector<Branch> family = branches_of(need(in, "branches"));
  std::vector<IndexSet> subsets;
  if (in.contains("subsets")) {
    for (const auto& s : in.at("subsets")) {
      IndexSet t;
      for (const auto& i : s) {
        t.insert(index_of(i));
        if (*t.rbegin() >= family.size()) throw UsageError("subset mentions an unknown branch");
      }
      subsets.push_back(std::move(t));
    }
  } else {
    if (family.size() > 10) throw UsageError("list \"subsets\" for families above 10 branches");
    for (std::size_t mask = 0; mask < (std::size_t{1} << family.size()); ++mask) {
      IndexSet t;
      for (std::size_t i = 0; i < family.size(); ++i)
        if (mask >> i & 1) t.insert(i);
      subsets.push_back(std::move(t));
    }
  }
  const std::size_t depth = disambiguation_depth(family);
  std::vector<AdJoin> joins;
  Outcome r;
  r.body["depth"] = depth;
  r.body["joins"] = Json::array();
  for (const auto& s : subsets) {
    joins.push_back(ad_join(family, s, depth));
    Json codes = Json::array();
    for (const auto& c : joins.back().codes()) codes.push_back(c.get_str());
    r.body["joins"].push_back({{"subset", s}, {"codes", codes}});
  }
  std::size_t checked = 0;
  Json bad = Json::array();
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      ++checked;
      if (branch_subset(family, subsets[a], subsets[b]) != joins[a].leq(joins[b]))
        bad.push_back({subsets[a], subsets[b]});
    }
  r.body["pairs_checked"] = checked;
  r.body["violations"] = bad;
  if (!bad.empty()) r.code = kFailures;
  return r;
}

FnSeq fnseq_of(const Json& j) {
  try {
    if (j.is_string()) return parse_fnseq(j.get<std::string>());
    if (j.is_object()) return FnSeq(need(j, "values").get<std::vector<unsigned long>>(), j.value("tail", 0ul));
    return FnSeq(j.get<std::vector<unsigned long>>());
  } catch (const OrderError& e) {
    throw UsageError(e.what());
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad sequence: ") + e.what());
  }
}

std::vector<FnSeq> family_of(const Json& j) {
  std::vector<FnSeq> out;
  for (const auto& f : j) out.push_back(fnseq_of(f));
  return out;
}

Outcome diagonal_verb(const Options& o) {
  const Json in = read_json(o);
  const std::vector<FnSeq> family = family_of(need(in, "family"));
  const FnSeq z = diagonal_witness(family);
  const bool ok = check_diagonal(z, family);
  Outcome r;
  r.body["witness"] = z.to_string();
  r.body["certificate_checked"] = ok;
  if (!ok) r.code = kFailures;
  return r;
}

Outcome box_verb(const Options& o) {
  const Json in = read_json(o);
  const std::vector<FnSeq> family = family_of(need(in, "family"));
  Outcome r;
  try {
    const BoxCertificate c = box_unbounded_cert(family, index_of(need(in, "beta")), need(in, "k").get<unsigned long>());
    r.body["beta"] = c.beta;
    r.body["k"] = c.k;
    r.body["members"] = c.members;
    r.body["bound"] = to_string(c.bound);
    if (in.contains("point")) {
      SparseVector x;
      for (const auto& [k, v] : in.at("point").items()) x[std::stoul(k)] = rational_of(v);
      Json inside = Json::array();
      for (auto m : c.members) inside.push_back(BoxNbhd(family[m]).contains(x));
      r.body["point_in_member_boxes"] = inside;
      const bool forced = certificate_forces(c, family, x);
      r.body["certificate_forces"] = forced;
      if (!forced) r.code = kFailures;
    }
  } catch (const OrderError& e) {
    throw UsageError(e.what());
  }
  return r;
}

}  // namespace

std::vector<Verb> order_verbs() {
  return {
      {"order", "check-map", "monotone and cofinal checks of {\"map\"} from \"domain\" to \"target\"", check_map_verb},
      {"order", "ad-embed", "join codes of branch subsets and the order-embedding audit", ad_embed_verb},
      {"order", "diagonal", "a sequence escaping every member of {\"family\"}", diagonal_verb},
      {"order", "box", "box certificate at {\"beta\", \"k\"}, optionally tested on \"point\"", box_verb},
  };
}

}  // namespace omegalab
