#include "omega/checks/group_lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace omega::checks {

namespace {

const FreeGroup& f2() {
  static const FreeGroup g = FreeGroup::standard(2);
  return g;
}

std::string fmt(const Word& w) { return f2().format(w); }

std::string repro(std::uint64_t seed, std::size_t config, const std::string& what) {
  return "seed=" + std::to_string(seed) + " config=" + std::to_string(config) + " " + what;
}

PhiMap unite(const PhiMap& a, const PhiMap& b) {
  SubsetSpec d = a.fallback();
  d.insert(b.fallback().begin(), b.fallback().end());
  std::map<Word, SubsetSpec> ex;
  for (const auto* m : {&a.exceptions(), &b.exceptions()})
    for (const auto& [g, _] : *m) {
      SubsetSpec s = a.at(g);
      s.insert(b.at(g).begin(), b.at(g).end());
      ex[g] = std::move(s);
    }
  return PhiMap(std::move(d), std::move(ex));
}

std::set<Word> random_support(Rng& rng) {
  std::set<Word> s{Word()};
  for (long k = rng.range(0, 2); k > 0; --k) s.insert(random_word(rng, 2, 1, 1));
  return s;
}

std::vector<SubsetSpec> v_sets(const std::vector<PhiMap>& phis, const std::set<Word>& support) {
  std::vector<SubsetSpec> out;
  for (const auto& p : phis) out.push_back(v_phi(p, support));
  return out;
}

}  // namespace

Word random_word(Rng& rng, std::size_t rank, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = static_cast<std::size_t>(rng.range(static_cast<long>(min_len), static_cast<long>(max_len)));
  Word w;
  while (w.length() < len) {
    const std::size_t c = rng.below(2 * rank);
    Word next = w * Word::generator(c / 2, c & 1 ? -1 : 1);
    if (next.length() > w.length()) w = std::move(next);
  }
  return w;
}

SubsetSpec random_subset(Rng& rng, std::size_t rank, std::size_t max_size, std::size_t max_len) {
  SubsetSpec s;
  const long size = rng.range(1, static_cast<long>(max_size));
  for (long k = 0; k < size; ++k) s.insert(random_word(rng, rank, 0, max_len));
  return s;
}

PhiMap random_phi(Rng& rng, const LemmaShape& shape) {
  SubsetSpec d = random_subset(rng, 2, shape.set_size, 2);
  std::map<Word, SubsetSpec> ex;
  for (long k = rng.range(0, 2); k > 0; --k) ex[random_word(rng, 2, 0, 1)] = random_subset(rng, 2, shape.set_size, 2);
  return PhiMap(std::move(d), std::move(ex));
}

std::vector<PhiMap> random_decreasing_phis(Rng& rng, std::size_t count, const LemmaShape& shape) {
  LemmaShape small = shape;
  small.set_size = 1;
  std::vector<PhiMap> out(count);
  if (count == 0) return out;
  out[count - 1] = random_phi(rng, shape);
  for (std::size_t n = count - 1; n-- > 0;) out[n] = rng.coin() ? out[n + 1] : unite(out[n + 1], random_phi(rng, small));
  return out;
}

// w in sym<V_Phi_n> iff w^-1 is, at every horizon.
SuiteReport lemma_symmetry(std::uint64_t seed, const LemmaShape& shape) {
  SuiteReport rep = make_report("lemma-symmetry", seed);
  Rng master(seed);
  for (std::size_t c = 0; c < shape.configs; ++c) {
    Rng rng = master.fork(c);
    const std::size_t n = static_cast<std::size_t>(rng.range(1, static_cast<long>(shape.max_factors)));
    std::vector<PhiMap> phis;
    for (std::size_t k = 0; k < n; ++k) phis.push_back(random_phi(rng, shape));
    const auto support = random_support(rng);
    const auto vs = v_sets(phis, support);
    const SubsetSpec members = sym_set(vs, n, shape.max_len);
    bool ok = true;
    std::string bad;
    for (const auto& w : members)
      if (!members.count(w.inverse())) {
        ok = false;
        bad = fmt(w);
        break;
      }
    // The enumerated truncation agrees with the direct search.
    for (int k = 0; k < 8 && ok; ++k) {
      Word w = random_word(rng, 2, 0, shape.max_len);
      if (sym_member(w, vs, n).found != (members.count(w) > 0)) {
        ok = false;
        bad = "enumeration/search mismatch at " + fmt(w);
      }
    }
    rep.check(ok, "N=" + std::to_string(n) + " members=" + std::to_string(members.size()),
              repro(seed, c, "symmetry fails: " + bad));
  }
  return rep;
}

// u, v in sym<V_Phi_2n>_{n<=N}  =>  uv in sym<V_Phi_n>_{n<=2N}.
SuiteReport lemma_squaring(std::uint64_t seed, const LemmaShape& shape) {
  SuiteReport rep = make_report("lemma-squaring", seed);
  Rng master(seed);
  std::size_t pairs = 0, by_lookup = 0;
  for (std::size_t c = 0; c < shape.configs; ++c) {
    Rng rng = master.fork(c);
    const std::size_t n = static_cast<std::size_t>(rng.range(1, static_cast<long>(shape.max_factors / 2)));
    const auto phis = random_decreasing_phis(rng, 2 * n, shape);
    const auto support = random_support(rng);
    const auto all = v_sets(phis, support);  // V_Phi_1 .. V_Phi_2N
    std::vector<SubsetSpec> evens;
    for (std::size_t k = 1; k <= n; ++k) evens.push_back(all[2 * k - 1]);
    const SubsetSpec us = sym_set(evens, n, shape.max_len);
    const SubsetSpec target = sym_set(all, 2 * n, shape.max_len);

    std::map<Word, SymResult> certs;
    for (const auto& u : us) certs[u] = sym_member(u, evens, n);
    bool ok = true;
    std::string bad;
    for (const auto& u : us) {
      for (const auto& v : us) {
        const Word uv = u * v;
        ++pairs;
        if (uv.length() <= shape.max_len) {
          ++by_lookup;
          if (!target.count(uv)) {
            ok = false;
            bad = fmt(u) + " * " + fmt(v);
          }
          continue;
        }
        // Longer products: place the factor from V_Phi_2j into slot s <= 2j
        // (deadline order) and check the resulting factorization exactly.
        const SymResult& cu = certs.at(u);
        const SymResult& cv = certs.at(v);
        std::vector<std::pair<std::size_t, std::size_t>> deadline;  // (j, position in uv)
        for (std::size_t k = 0; k < cu.n; ++k) deadline.push_back({cu.order[k], k});
        for (std::size_t k = 0; k < cv.n; ++k) deadline.push_back({cv.order[k], cu.n + k});
        std::stable_sort(deadline.begin(), deadline.end());
        SymResult cert;
        cert.found = true;
        cert.horizon = 2 * n;
        cert.n = deadline.size();
        cert.order.assign(cert.n, 0);
        for (std::size_t s = 0; s < deadline.size(); ++s) cert.order[deadline[s].second] = s + 1;
        cert.factors = cu.factors;
        cert.factors.insert(cert.factors.end(), cv.factors.begin(), cv.factors.end());
        if (!check_certificate(uv, all, cert)) {
          ok = false;
          bad = fmt(u) + " * " + fmt(v) + " (certificate)";
        }
      }
      if (!ok) break;
    }
    rep.check(ok, "N=" + std::to_string(n) + " members=" + std::to_string(us.size()) + " target=" + std::to_string(target.size()),
              repro(seed, c, "squaring fails: " + bad));
  }
  rep.fact("pairs", std::to_string(pairs));
  rep.fact("pairs_by_lookup", std::to_string(by_lookup));
  return rep;
}

// h^-1 sym<V_{Phi^h_n}> h within sym<V_{Phi_n}>, supports S and S h.
SuiteReport lemma_conjugation(std::uint64_t seed, const LemmaShape& shape) {
  SuiteReport rep = make_report("lemma-conjugation", seed);
  Rng master(seed);
  std::size_t words = 0;
  for (std::size_t c = 0; c < shape.configs; ++c) {
    Rng rng = master.fork(c);
    const std::size_t n = static_cast<std::size_t>(rng.range(1, static_cast<long>(shape.max_factors)));
    std::vector<PhiMap> phis, shifted;
    const Word h = random_word(rng, 2, 1, 2);
    for (std::size_t k = 0; k < n; ++k) {
      phis.push_back(random_phi(rng, shape));
      shifted.push_back(phis.back().right_translate(h));
    }
    const auto support = random_support(rng);
    std::set<Word> moved;
    for (const auto& g : support) moved.insert(g * h);
    const auto a = v_sets(shifted, support);
    const auto b = v_sets(phis, moved);
    const SubsetSpec members = sym_set(a, n, shape.max_len);
    bool ok = true;
    std::string bad;
    for (const auto& w : members) {
      ++words;
      const Word x = w.conjugated_by(h);
      SymResult r = sym_member(x, b, n);
      if (!r.found || !check_certificate(x, b, r)) {
        ok = false;
        bad = "h=" + fmt(h) + " w=" + fmt(w);
        break;
      }
    }
    rep.check(ok, "N=" + std::to_string(n) + " h=" + fmt(h) + " members=" + std::to_string(members.size()),
              repro(seed, c, "conjugation fails: " + bad));
  }
  rep.fact("words", std::to_string(words));
  return rep;
}

// Chains with V_n^-1 = V_n and V_{n+1}^2 within V_n: sym<V_n>_{n=k+2..N}
// lies in V_k.  V_N..V_{k+1} are explicit; V_k = V_{k+1}^2 u E u E^-1 is
// tested implicitly.
SuiteReport lemma_birkhoff_kakutani(std::uint64_t seed, const LemmaShape& shape) {
  SuiteReport rep = make_report("lemma-birkhoff-kakutani", seed);
  Rng master(seed);
  for (std::size_t c = 0; c < shape.configs; ++c) {
    Rng rng = master.fork(c);
    // Levels k+1..N explicit with N - k in 2..max_factors; take k = 1.
    const std::size_t depth = static_cast<std::size_t>(rng.range(2, static_cast<long>(std::max<std::size_t>(2, shape.max_factors))));
    auto symmetric_extra = [&](std::size_t max_size) {
      SubsetSpec e;
      for (long k = rng.range(0, static_cast<long>(max_size)); k > 0; --k) {
        Word w = random_word(rng, 2, 1, 2);
        e.insert(w);
        e.insert(w.inverse());
      }
      return e;
    };
    // levels[i] is V_{k+1+i}, i = 0..depth-1; the last one is V_N.
    std::vector<SubsetSpec> levels(depth);
    {
      SubsetSpec top{Word()};
      Word g = random_word(rng, 2, 1, 1);
      top.insert(g);
      top.insert(g.inverse());
      levels[depth - 1] = top;
    }
    for (std::size_t i = depth - 1; i-- > 0;) {
      SubsetSpec next = product_set({levels[i + 1], levels[i + 1]});
      SubsetSpec e = symmetric_extra(1);
      next.insert(e.begin(), e.end());
      levels[i] = std::move(next);
    }
    const SubsetSpec extra_k = symmetric_extra(2);
    const SubsetSpec& vk1 = levels[0];
    auto in_vk = [&](const Word& w) {
      if (extra_k.count(w)) return true;
      for (const auto& a : vk1)
        if (vk1.count(a.inverse() * w)) return true;
      return false;
    };

    // Hypotheses, verified on the explicit levels.
    bool hyp = true;
    for (std::size_t i = 0; i < depth && hyp; ++i) {
      hyp = is_symmetric(levels[i]) && levels[i].count(Word());
      if (hyp && i + 1 < depth) {
        const SubsetSpec sq = product_set({levels[i + 1], levels[i + 1]});
        hyp = std::includes(levels[i].begin(), levels[i].end(), sq.begin(), sq.end());
      }
    }
    if (!hyp) {
      rep.fail(repro(seed, c, "chain hypotheses do not hold"));
      continue;
    }

    std::vector<SubsetSpec> tail(levels.begin() + 1, levels.end());  // V_{k+2}..V_N
    const SubsetSpec members = sym_set(tail, tail.size(), shape.max_len);
    bool ok = true;
    std::string bad;
    for (const auto& w : members)
      if (!in_vk(w)) {
        ok = false;
        bad = fmt(w);
        break;
      }
    rep.check(ok, "depth=" + std::to_string(depth) + " |V_k+1|=" + std::to_string(vk1.size()) + " members=" + std::to_string(members.size()),
              repro(seed, c, "containment fails at " + bad));
  }
  return rep;
}

// f <= g pointwise  =>  V(f) within V(g), for V(f) = U_n V_n(f_n).
SuiteReport lemma_intersection_filter(std::uint64_t seed, const LemmaShape& shape) {
  SuiteReport rep = make_report("lemma-intersection-filter", seed);
  Rng master(seed);
  const std::vector<Word> pool = f2().words_up_to(2);
  for (std::size_t c = 0; c < shape.configs; ++c) {
    Rng rng = master.fork(c);
    const std::size_t filters = static_cast<std::size_t>(rng.range(1, 4));
    const std::size_t width = 3;
    std::vector<ChainFilter> fs;
    for (std::size_t n = 0; n < filters; ++n) {
      ChainFilter f;
      f.coordinate = rng.below(width);
      SubsetSpec cur{pool[rng.below(pool.size())]};
      for (long k = rng.range(1, 5); k > 0; --k) {
        f.chain.push_back(cur);
        cur.insert(pool[rng.below(pool.size())]);
      }
      f.validate();
      fs.push_back(std::move(f));
    }
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      std::vector<std::vector<unsigned>> f(filters), g(filters);
      for (std::size_t n = 0; n < filters; ++n)
        for (std::size_t j = 0; j < width; ++j) {
          f[n].push_back(static_cast<unsigned>(rng.below(6)));
          g[n].push_back(f[n][j] + static_cast<unsigned>(rng.below(3)));
        }
      const SubsetSpec vf = intersection_base(fs, f);
      const SubsetSpec vg = intersection_base(fs, g);
      ok = std::includes(vg.begin(), vg.end(), vf.begin(), vf.end());
      // V(f) belongs to every filter: it contains V_n(f_n).
      for (std::size_t n = 0; n < filters && ok; ++n) {
        const SubsetSpec part = fs[n].at(f[n]);
        ok = std::includes(vf.begin(), vf.end(), part.begin(), part.end());
      }
    }
    rep.check(ok, "filters=" + std::to_string(filters), repro(seed, c, "intersection base is not monotone"));
  }
  return rep;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = {"symmetry", "squaring", "conjugation", "birkhoff-kakutani",
                                                 "intersection-filter"};
  return names;
}

SuiteReport run_lemma(const std::string& name, std::uint64_t seed, const LemmaShape& shape) {
  if (name == "symmetry") return lemma_symmetry(seed, shape);
  if (name == "squaring") return lemma_squaring(seed, shape);
  if (name == "conjugation") return lemma_conjugation(seed, shape);
  if (name == "birkhoff-kakutani") return lemma_birkhoff_kakutani(seed, shape);
  if (name == "intersection-filter") return lemma_intersection_filter(seed, shape);
  throw std::invalid_argument("unknown lemma '" + name + "'");
}

}  // namespace omega::checks
