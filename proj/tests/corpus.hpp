#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotcert/template.hpp"

namespace kc::corpus {

struct Instance {
  std::string name;
  Template t;
  BraidPlacement pi;
  bool knitted = true;
};

// six showcase words, one per bound regime
const std::vector<std::string>& showcase_words();
// the layered 7-strand word, r = (-1,-1,1,-1,-1,-1)
std::string layered_word();

std::vector<std::pair<std::string, BraidWord>> torus_words();
// seeded, locally twisted in both modes, at most max_crossings letters
std::vector<Instance> random_lt(int count, std::uint64_t seed, int max_crossings = 18);
BraidWord random_word(std::uint64_t seed, int max_strands, int max_len);

Instance closure(const std::string& name, const BraidWord& w);
// showcase + torus + random locally twisted closures
std::vector<Instance> golden();

// C inside A inside B, two C-A arcs, three A-B arcs, two small circles
// between A and B hanging off A; not knitted
Instance trap_standin();
// circles P, Q side by side inside O, one arc each to O
Instance two_pocket(const BraidWord& left, const BraidWord& right);
// random 3-circle templates (valid ones only)
std::vector<Instance> random_three_circle(int count, std::uint64_t seed);

}  // namespace kc::corpus
