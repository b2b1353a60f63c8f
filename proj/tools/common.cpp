#include "common.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace omegalab {

std::string read_text(const Options& o) {
  if (o.in.empty() || o.in == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(o.in);
  if (!f) throw UsageError("cannot read " + o.in);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const Options& o) {
  const std::string text = read_text(o);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("input is not JSON: ") + e.what());
  }
}

const Json& need(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError("input needs \"" + key + "\"");
  return j.at(key);
}

omega::Rational rational_of(const Json& j) {
  try {
    if (j.is_number_integer()) return omega::Rational(j.get<long>());
    if (j.is_string()) return omega::parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad rational: ") + e.what());
  }
  throw UsageError("expected a rational (integer or \"p/q\"), got " + j.dump());
}

std::string text_of(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::vector<std::string> strings_of(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an array, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(text_of(x));
  return out;
}

std::size_t index_of(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    throw UsageError("expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text) || !f.flush()) throw std::runtime_error("cannot write " + path);
}

namespace {

void print_lines(const Json& j, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && !value.empty()) {
      print_lines(value, name);
    } else {
      std::cout << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

void emit(const Outcome& r, const Options& o) {
  if (o.json) {
    std::cout << r.body.dump(2) << "\n";
  } else {
    print_lines(r.body, "");
  }
  if (!o.out.empty()) write_file(o.out, r.body.dump(2) + "\n");
}

}  // namespace omegalab
