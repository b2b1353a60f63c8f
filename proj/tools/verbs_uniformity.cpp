// uniformity verbs: u-alpha, cofinal-search, countable-base.

#include "verbs.hpp"

#include "omega/uniformity.hpp"

namespace omegalab {

using namespace omega;

namespace {

std::vector<std::vector<std::size_t>> index_lists(const Json& j) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : j) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(index_of(x));
  }
  return out;
}

// {"convergent": N, "compacts": ...}, {"fan": {"spokes", "n"}}, or an
// explicit {"names", "distance", "compacts", "limit_points"}.
MetricSpace space_of(const Json& j) {
  MetricSpace s;
  if (j.contains("convergent")) {
    s = convergent_sequence(index_of(j.at("convergent")));
    if (j.contains("compacts")) s.compacts = index_lists(j.at("compacts"));
  } else if (j.contains("fan")) {
    const Json& f = j.at("fan");
    s = metric_fan(index_of(need(f, "spokes")), index_of(need(f, "n")));
  } else {
    s.names = strings_of(need(j, "names"));
    for (const auto& row : need(j, "distance")) {
      s.d.emplace_back();
      for (const auto& x : row) s.d.back().push_back(rational_of(x));
    }
    s.compacts = index_lists(need(j, "compacts"));
    if (j.contains("limit_points"))
      for (const auto& p : j.at("limit_points")) s.limit_points.push_back(index_of(p));
  }
  try {
    s.validate();
  } catch (const UniformityError& e) {
    throw UsageError(e.what());
  }
  return s;
}

AlphaTruncation alpha_of(const Json& in) {
  AlphaTruncation a;
  a.values = need(in, "alpha").get<std::vector<unsigned long>>();
  if (in.contains("tail")) a.tail = in.at("tail").get<unsigned long>();
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const Json& j, std::size_t points) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw UsageError("pairs are [x, y]");
    out.emplace_back(index_of(p[0]), index_of(p[1]));
    if (out.back().first >= points || out.back().second >= points) throw UsageError("pair mentions an unknown point");
  }
  return out;
}

Json summary(const Entourage& e) {
  return {{"pair_count", e.pair_count()}, {"reflexive", e.reflexive()}, {"symmetric", e.symmetric()}};
}

Outcome u_alpha_verb(const Options& o) {
  const Json in = read_json(o);
  const MetricSpace s = space_of(need(in, "space"));
  const AlphaTruncation a = alpha_of(in);
  Outcome r;
  try {
    r.body["alpha"] = a.to_string();
    if (in.contains("pairs")) {
      r.body["members"] = Json::array();
      for (auto [x, y] : pairs_of(in.at("pairs"), s.size()))
        r.body["members"].push_back({{"x", s.names[x]}, {"y", s.names[y]}, {"member", u_alpha_member(s, a, x, y)}});
    } else {
      r.body["entourage"] = summary(u_alpha(s, a));
    }
  } catch (const UniformityError& e) {
    throw UsageError(e.what());
  }
  return r;
}

// Finding no alpha is a valid answer (failure up to the resolution); exit
// 1 only when the independent re-audit of a returned alpha fails.
Outcome cofinal_search_verb(const Options& o) {
  const Json in = read_json(o);
  const MetricSpace s = space_of(need(in, "space"));
  DiagonalNbhd nb;
  if (in.contains("radii")) {
    for (const auto& x : in.at("radii")) nb.radii.push_back(rational_of(x));
  } else {
    nb.radii.assign(s.size(), rational_of(need(in, "radius")));
  }
  if (nb.radii.size() != s.size()) throw UsageError("one radius per point is required");
  for (const auto& x : nb.radii)
    if (x <= 0) throw UsageError("radii must be positive");
  const unsigned long resolution = in.value("resolution", 64ul);
  const CofinalSearch res = base_cofinal_search(s, nb, resolution);
  Outcome r;
  r.body["found"] = res.alpha.has_value();
  r.body["resolution"] = res.resolution;
  Json slack = Json::array();
  for (const auto& x : res.slack) slack.push_back(to_string(x));
  r.body["slack"] = slack;
  if (res.alpha) {
    const Entourage target = nb.pairs(s);
    const Entourage u = u_alpha(s, *res.alpha);
    const bool audit = u.subset_of(target);
    r.body["alpha"] = res.alpha->values;
    r.body["audit"] = audit;
    r.body["entourage"] = summary(u);
    if (auto c = composition_search(s, *res.alpha)) r.body["composition_shift"] = *c;
    if (!audit) r.code = kFailures;
  }
  return r;
}

CountableSpace countable_of(const Json& j) {
  CountableSpace s;
  if (j.contains("convergent")) {
    s = convergent_countable(index_of(j.at("convergent")));
  } else {
    s.names = strings_of(need(j, "names"));
    for (const auto& chain : need(j, "bases")) {
      s.bases.emplace_back();
      for (const auto& set : chain) {
        std::set<std::size_t> b;
        for (const auto& x : set) b.insert(index_of(x));
        s.bases.back().push_back(std::move(b));
      }
    }
  }
  try {
    s.validate();
  } catch (const UniformityError& e) {
    throw UsageError(e.what());
  }
  return s;
}

Outcome countable_base_verb(const Options& o) {
  const Json in = read_json(o);
  const CountableSpace s = countable_of(need(in, "space"));
  const auto f = need(in, "f").get<std::vector<unsigned long>>();
  if (f.size() != s.size()) throw UsageError("f needs one entry per point");
  const Entourage e = countable_base(s, f);
  Outcome r;
  r.body["entourage"] = summary(e);
  if (in.contains("pairs")) {
    r.body["members"] = Json::array();
    for (auto [x, y] : pairs_of(in.at("pairs"), s.size()))
      r.body["members"].push_back({{"x", s.names[x]}, {"y", s.names[y]}, {"member", e.contains(x, y)}});
  }
  return r;
}

}  // namespace

std::vector<Verb> uniformity_verbs() {
  return {
      {"uniformity", "u-alpha", "membership in U_alpha for {\"space\", \"alpha\"} (listed \"pairs\" or a summary)", u_alpha_verb},
      {"uniformity", "cofinal-search", "alpha with U_alpha inside the radii neighbourhood {\"space\", \"radii\"|\"radius\"}", cofinal_search_verb},
      {"uniformity", "countable-base", "the entourage i(f) for {\"space\", \"f\"}", countable_base_verb},
  };
}

}  // namespace omegalab
