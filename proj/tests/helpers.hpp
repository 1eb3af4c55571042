#pragma once

#include <string>

#include "pfsm/operator.hpp"
#include "pfsm/parse.hpp"

namespace testing {

inline pfsm::Scalar S(const std::string& text) { return pfsm::parse_scalar(text, pfsm::NumberMode::Exact); }

inline pfsm::Potential P(const std::string& text) {
  std::vector<pfsm::Scalar> v;
  for (const auto& t : pfsm::split_top_level(text)) v.push_back(S(t));
  return pfsm::Potential(v);
}

inline pfsm::Mat2 M(const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
  return {S(a), S(b), S(c), S(d)};
}

}  // namespace testing
