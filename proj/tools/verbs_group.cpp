// group verbs: sym-member, vphi, iofv, lemma-suite.

#include "verbs.hpp"

#include "omega/checks/group_lemmas.hpp"
#include "omega/group.hpp"

namespace omegalab {

using namespace omega;

namespace {

FreeGroup group_of(const Json& in) {
  if (in.contains("generators")) return FreeGroup(strings_of(in.at("generators")));
  return FreeGroup::standard(in.contains("rank") ? index_of(in.at("rank")) : 2);
}

Word word_of(const FreeGroup& g, const Json& j) {
  try {
    return g.parse(text_of(j));
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
}

SubsetSpec set_of(const FreeGroup& g, const Json& j) {
  SubsetSpec s;
  for (const auto& w : j) s.insert(word_of(g, w));
  return s;
}

Json words_json(const FreeGroup& g, const SubsetSpec& s) {
  Json out = Json::array();
  for (const auto& w : s) out.push_back(g.format(w));
  return out;
}

AbelianWord abelian_of(const FreeGroup& g, const Json& j) {
  if (!j.is_array() || j.size() != g.rank()) throw UsageError("abelian words are integer vectors of length rank");
  AbelianWord w;
  for (const auto& c : j) w.push_back(c.get<long>());
  return w;
}

Outcome sym_member_verb(const Options& o) {
  const Json in = read_json(o);
  const FreeGroup g = group_of(in);
  const Json& sets = need(in, "sets");
  const std::size_t horizon = in.contains("horizon") ? index_of(in.at("horizon")) : sets.size();
  Outcome r;
  if (in.value("abelian", false)) {
    std::vector<AbelianSet> vs;
    for (const auto& s : sets) {
      AbelianSet a;
      for (const auto& w : s) a.insert(abelian_of(g, w));
      vs.push_back(std::move(a));
    }
    const AbelianResult res = sin_base_member_abelian(abelian_of(g, need(in, "word")), vs, horizon);
    r.body["found"] = res.found;
    r.body["horizon"] = res.horizon;
    r.body["summands"] = Json::array();
    for (const auto& s : res.summands)
      r.body["summands"].push_back({{"set", s.index}, {"sign", s.sign}, {"element", format_abelian(g, s.element)}});
    return r;
  }
  const Word w = word_of(g, need(in, "word"));
  std::vector<SubsetSpec> bs;
  for (const auto& s : sets) bs.push_back(set_of(g, s));
  SymResult res;
  try {
    if (in.contains("support")) {
      res = sin_base_member(w, bs, horizon, set_of(g, in.at("support")));
    } else {
      res = sym_member(w, bs, horizon);
    }
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
  r.body["found"] = res.found;
  r.body["horizon"] = res.horizon;
  if (res.found) {
    r.body["factors"] = Json::array();
    for (std::size_t k = 0; k < res.factors.size(); ++k)
      r.body["factors"].push_back({{"set", res.order[k]}, {"word", g.format(res.factors[k])}});
    // The free-SIN answer uses conjugated sets, so only plain products are
    // re-checked here.
    if (!in.contains("support")) {
      const bool ok = check_certificate(w, bs, res);
      r.body["certificate_checked"] = ok;
      if (!ok) r.code = kFailures;
    }
  }
  return r;
}

PhiMap phi_of(const FreeGroup& g, const Json& j) {
  std::map<Word, SubsetSpec> exceptions;
  if (j.contains("exceptions"))
    for (const auto& [k, v] : j.at("exceptions").items()) exceptions[word_of(g, k)] = set_of(g, v);
  return PhiMap(set_of(g, need(j, "default")), std::move(exceptions));
}

Outcome vphi_verb(const Options& o) {
  const Json in = read_json(o);
  const FreeGroup g = group_of(in);
  PhiMap phi = phi_of(g, need(in, "phi"));
  if (in.contains("translate")) phi = phi.right_translate(word_of(g, in.at("translate")));
  Outcome r;
  r.body["members"] = words_json(g, v_phi(phi, set_of(g, need(in, "support"))));
  return r;
}

PairRelation relation_of(const Json& in) {
  if (in.contains("distance")) {
    std::vector<std::vector<Rational>> d;
    for (const auto& row : in.at("distance")) {
      d.emplace_back();
      for (const auto& x : row) d.back().push_back(rational_of(x));
    }
    for (const auto& row : d)
      if (row.size() != d.size()) throw UsageError("distance must be a square matrix");
    return threshold_relation(d, rational_of(need(in, "radius")));
  }
  PairRelation v;
  v.points = index_of(need(in, "points"));
  for (const auto& p : need(in, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw UsageError("pairs are [x, y]");
    v.pairs.emplace(index_of(p[0]), index_of(p[1]));
  }
  return v;
}

Outcome iofv_verb(const Options& o) {
  const Json in = read_json(o);
  const PairRelation v = relation_of(in);
  const FreeGroup g = in.contains("generators") ? FreeGroup(strings_of(in.at("generators"))) : FreeGroup::standard(v.points);
  if (g.rank() != v.points) throw UsageError("one generator per point is required");
  Outcome r;
  r.body["pairs"] = v.pairs.size();
  try {
    if (in.value("abelian", false)) {
      Json out = Json::array();
      for (const auto& w : i_of_entourage_abelian(v)) out.push_back(format_abelian(g, w));
      r.body["members"] = out;
    } else {
      r.body["members"] = words_json(g, i_of_entourage(v));
    }
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
  return r;
}

Outcome lemma_suite_verb(const Options& o) {
  checks::LemmaShape shape;
  shape.configs *= o.scale;
  const std::vector<std::string> names = o.args.empty() ? checks::lemma_names() : o.args;
  Outcome r;
  r.body["seed"] = o.seed;
  r.body["configs"] = shape.configs;
  r.body["lemmas"] = Json::object();
  for (const auto& name : names) {
    checks::SuiteReport rep;
    try {
      rep = checks::run_lemma(name, o.seed, shape);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Json j;
    j["cases"] = rep.cases;
    j["failure_count"] = rep.failure_count;
    j["failures"] = rep.failures;
    j["case_digest"] = checks::hex(rep.digest);
    r.body["lemmas"][name] = j;
    if (!rep.passed()) r.code = kFailures;
  }
  return r;
}

}  // namespace

std::vector<Verb> group_verbs() {
  return {
      {"group", "sym-member", "is {\"word\"} in the symmetric product of {\"sets\"} up to \"horizon\"", sym_member_verb},
      {"group", "vphi", "V_Phi for {\"phi\", \"support\"}", vphi_verb},
      {"group", "iofv", "i(V) for a relation {\"points\", \"pairs\"} or {\"distance\", \"radius\"}", iofv_verb},
      {"group", "lemma-suite", "containment lemma checks (optionally named)", lemma_suite_verb},
  };
}

}  // namespace omegalab
