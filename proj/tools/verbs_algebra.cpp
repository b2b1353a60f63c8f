// field, matrix and rp verbs.

#include "verbs.hpp"

#include "omega/field.hpp"
#include "omega/matrix.hpp"
#include "omega/reduced_power.hpp"

#include <sstream>

namespace omegalab {

using namespace omega;

namespace {

std::string order_symbol(std::strong_ordering c) { return c < 0 ? "<" : c > 0 ? ">" : "="; }

FieldElement field_of(const std::string& text) {
  try {
    return parse_field(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad field expression: ") + e.what());
  }
}

Json describe(const std::string& input, const FieldElement& x) {
  Json j;
  j["input"] = input;
  j["canonical"] = x.to_string();
  j["sign"] = x.sign();
  j["height"] = x.height();
  j["infinitesimal"] = x.is_infinitesimal();
  if (!x.is_zero()) {
    const LeadingTerm lt = x.leading_term();
    j["leading_term"] = {{"exponents", lt.exponents}, {"coefficient", to_string(lt.coefficient)}};
  }
  return j;
}

std::vector<std::string> expressions(const Options& o) {
  if (!o.args.empty()) return o.args;
  std::vector<std::string> out;
  std::istringstream in(read_text(o));
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

Outcome field_eval(const Options& o) {
  Outcome r;
  r.body["values"] = Json::array();
  for (const auto& e : expressions(o)) r.body["values"].push_back(describe(e, field_of(e)));
  return r;
}

Outcome field_compare(const Options& o) {
  const auto e = expressions(o);
  if (e.size() != 2) throw UsageError("field compare takes exactly two expressions");
  const FieldElement a = field_of(e[0]), b = field_of(e[1]);
  Outcome r;
  r.body["a"] = a.to_string();
  r.body["b"] = b.to_string();
  r.body["order"] = order_symbol(compare(a, b));
  r.body["difference"] = (a - b).to_string();
  return r;
}

Matrix matrix_of(const Json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("a matrix is a nonempty array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    rows.push_back(strings_of(row));
    if (rows.back().size() != j.size()) throw UsageError("matrices must be square");
  }
  try {
    return parse_matrix(rows);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad matrix entry: ") + e.what());
  }
}

FieldElement eps_of(const Json& in) {
  FieldElement eps = field_of(text_of(need(in, "eps")));
  if (eps.sign() <= 0) throw UsageError("eps must be positive");
  return eps;
}

Outcome matrix_det(const Options& o) {
  const Json in = read_json(o);
  Outcome r;
  r.body["determinant"] = determinant(matrix_of(need(in, "matrix"))).to_string();
  return r;
}

Outcome matrix_inverse(const Options& o) {
  const Json in = read_json(o);
  const Matrix a = matrix_of(need(in, "matrix"));
  Outcome r;
  try {
    const Matrix inv = mat_inv(a);
    const bool ok = mat_mul(a, inv) == Matrix::identity(a.dim()) && mat_mul(inv, a) == Matrix::identity(a.dim());
    r.body["inverse"] = to_strings(inv);
    r.body["verified"] = ok;
    if (!ok) r.code = kFailures;
  } catch (const SingularMatrix&) {
    r.body["singular"] = true;
  }
  return r;
}

Outcome matrix_ball(const Options& o) {
  const Json in = read_json(o);
  Outcome r;
  r.body["member"] = ball_member(matrix_of(need(in, "matrix")), eps_of(in));
  return r;
}

// delta for (eps, n); every listed pair with both factors in B_delta must
// have its product in B_eps.
Outcome matrix_shrink(const Options& o) {
  const Json in = read_json(o);
  const FieldElement eps = eps_of(in);
  const std::size_t n = index_of(need(in, "n"));
  if (n == 0) throw UsageError("n must be positive");
  const FieldElement delta = shrink_radius(eps, n);
  Outcome r;
  r.body["delta"] = delta.to_string();
  r.body["pairs"] = Json::array();
  if (in.contains("pairs")) {
    for (const auto& p : in.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw UsageError("each pair is [A, B]");
      const Matrix a = matrix_of(p[0]), b = matrix_of(p[1]);
      if (a.dim() != n || b.dim() != n) throw UsageError("pair matrices must be n x n");
      const bool in_a = ball_member(a, delta), in_b = ball_member(b, delta);
      const bool prod = ball_member(mat_mul(a, b), eps);
      r.body["pairs"].push_back({{"a_in_delta", in_a}, {"b_in_delta", in_b}, {"product_in_eps", prod}});
      if (in_a && in_b && !prod) r.code = kFailures;
    }
  }
  return r;
}

EventualSeq seq_of(const Json& j) {
  try {
    if (!j.is_object()) return EventualSeq(rational_of(j));
    std::vector<std::string> prefix;
    if (j.contains("prefix")) prefix = strings_of(j.at("prefix"));
    return parse_eventual(prefix, text_of(need(j, "tail")));
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad sequence: ") + e.what());
  } catch (const MalformedTail& e) {
    throw UsageError(std::string("bad sequence: ") + e.what());
  }
}

Json seq_json(const EventualSeq& x) {
  Json p = Json::array();
  for (const auto& v : x.prefix()) p.push_back(to_string(v));
  return {{"prefix", p}, {"tail", x.tail().to_string()}};
}

Ball ball_of(const Json& j) { return Ball{seq_of(need(j, "center")), seq_of(need(j, "radius"))}; }

Json cert_json(const Certificate& c) {
  return {{"instance", c.instance}, {"distance", seq_json(c.distance)}, {"bound", seq_json(c.bound)},
          {"holds_from", c.holds_from}};
}

Outcome rp_compare(const Options& o) {
  const Json in = read_json(o);
  const EventualSeq x = seq_of(need(in, "x")), y = seq_of(need(in, "y"));
  Outcome r;
  r.body["order"] = order_symbol(compare_ev(x, y));
  r.body["star_metric"] = seq_json(star_metric(x, y));
  return r;
}

Outcome rp_interleave(const Options& o) {
  const Json in = read_json(o);
  std::vector<Ball> balls;
  for (const auto& b : need(in, "instances")) balls.push_back(ball_of(b));
  std::vector<std::size_t> cuts;
  if (in.contains("cuts"))
    for (const auto& c : in.at("cuts")) cuts.push_back(index_of(c));
  InterleaveResult res;
  try {
    res = interleave(balls, cuts);
  } catch (const NestingError& e) {
    throw UsageError(e.what());
  }
  Outcome r;
  r.body["h"] = seq_json(res.h);
  r.body["certificates"] = Json::array();
  for (const auto& c : res.certificates) r.body["certificates"].push_back(cert_json(c));
  return r;
}

Outcome rp_baire(const Options& o) {
  const Json in = read_json(o);
  const Ball open = ball_of(need(in, "open"));
  std::vector<Ball> forbidden;
  if (in.contains("forbidden"))
    for (const auto& b : in.at("forbidden")) forbidden.push_back(ball_of(b));
  Outcome r;
  try {
    const BaireResult res = baire_witness(open, forbidden);
    r.body["h"] = seq_json(res.h);
    r.body["inside"] = cert_json(res.inside);
    r.body["avoids"] = Json::array();
    for (const auto& c : res.avoids) r.body["avoids"].push_back(cert_json(c));
  } catch (const InfeasibleAvoidance& e) {
    r.body["infeasible"] = e.what();
    r.code = kFailures;
  }
  return r;
}

}  // namespace

std::vector<Verb> algebra_verbs() {
  return {
      {"field", "eval", "canonical form, sign and leading term of each expression (arguments or input lines)", field_eval},
      {"field", "compare", "order of two expressions", field_compare},
      {"matrix", "det", "determinant of {\"matrix\"}", matrix_det},
      {"matrix", "inverse", "exact inverse of {\"matrix\"}, checked both ways", matrix_inverse},
      {"matrix", "ball", "is {\"matrix\"} within {\"eps\"} of the identity", matrix_ball},
      {"matrix", "shrink", "delta for {\"eps\", \"n\"}, auditing optional \"pairs\"", matrix_shrink},
      {"rp", "compare", "order and star metric of {\"x\", \"y\"}", rp_compare},
      {"rp", "interleave", "interleaved point of nested {\"instances\"} at {\"cuts\"}", rp_interleave},
      {"rp", "baire", "point of {\"open\"} avoiding the {\"forbidden\"} balls", rp_baire},
  };
}

}  // namespace omegalab
