#pragma once

#include "common.hpp"

#include <string>
#include <vector>

namespace omegalab {

struct Verb {
  std::string group;  // first-level command
  std::string name;
  std::string summary;
  Handler run;
};

std::vector<Verb> algebra_verbs();     // field, matrix, rp
std::vector<Verb> group_verbs();       // group
std::vector<Verb> order_verbs();       // order
std::vector<Verb> uniformity_verbs();  // uniformity

}  // namespace omegalab
