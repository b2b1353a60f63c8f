#pragma once

// Shared plumbing for the omegalab verbs: global flags, JSON input, and
// result emission.

#include "omega/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegalab {

using Json = nlohmann::ordered_json;

// Malformed input or unusable arguments; reported with exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum Exit : int { kPass = 0, kFailures = 1, kUsage = 2 };

struct Options {
  std::uint64_t seed = 1;
  unsigned scale = 1;
  bool json = false;
  bool timing = false;
  std::string out;   // file for the JSON result; empty means none
  std::string in;    // input file; empty or "-" means stdin
  std::vector<std::string> args;  // positional arguments of the verb
};

struct Outcome {
  Json body = Json::object();
  int code = kPass;
};

using Handler = std::function<Outcome(const Options&)>;

// Whole input (file or stdin) parsed as JSON.
Json read_json(const Options& o);
// Whole input as text.
std::string read_text(const Options& o);

// JSON value at key, or a UsageError naming the key.
const Json& need(const Json& j, const std::string& key);
omega::Rational rational_of(const Json& j);  // number or "p/q" string
std::string text_of(const Json& j);          // string, or a number dumped
std::vector<std::string> strings_of(const Json& j);
std::size_t index_of(const Json& j);

// Prints the outcome (JSON with --json, "key: value" lines otherwise) and
// writes the JSON to --out when given.
void emit(const Outcome& r, const Options& o);
void write_file(const std::string& path, const std::string& text);

}  // namespace omegalab
