#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kc {

struct Letter {
  int index = 1;  // σ_index
  int sign = 1;   // +1 or -1
  bool operator==(const Letter&) const = default;
};

struct BraidWord {
  std::vector<Letter> letters;
  int strands = 2;

  BraidWord() = default;
  BraidWord(std::vector<Letter> l, int n);

  // "1 -2 3"; strands defaults to max|k|+1 (at least 1)
  static BraidWord parse(std::string_view text, std::optional<int> strands = std::nullopt);
  std::string str() const;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int writhe() const;
  bool operator==(const BraidWord&) const = default;
};

using SignPattern = std::vector<int>;  // r_1..r_{n-1}, stored 0-based

// image[p-1] = end position of the strand starting at p
struct Permutation {
  std::vector<int> image;
  bool operator==(const Permutation&) const = default;
  bool is_identity() const;
};

enum class TwistMode { plus, minus, both };

BraidWord half_twist_word(int i, int j, int sign, int strands = 0);
Permutation permutation_of(const BraidWord& w);
bool represents_half_twist(const BraidWord& w, int i, int j, int sign);

struct LayerDecomposition {
  std::vector<int> breakpoints;      // i_1 = 1 < ... < i_m = n
  std::vector<BraidWord> layers;     // layer k uses σ_{i_k} .. σ_{i_{k+1}-1}
  std::vector<std::vector<int>> positions;  // letter positions in w, per layer
};

bool is_r_homogeneous(const BraidWord& w, const SignPattern& r);
std::vector<int> layer_breakpoints(const SignPattern& r, int strands);
LayerDecomposition uniform_layers(const BraidWord& w, const SignPattern& r);

struct LayerSplit {
  int lo = 1, hi = 2;   // strand interval [lo, hi]
  int sign = 1;         // r on this layer
  bool checked = false; // whether the mode required a Δ split here
  int prefix_end = 0;   // v1 = layer[0, prefix_end)
  int suffix_begin = 0; // v3 = layer[suffix_begin, len)
};

struct TwistVerdict {
  bool ok = false;
  SignPattern r;
  std::vector<LayerSplit> splits;
};

TwistVerdict locally_twisted_check(const BraidWord& w, TwistMode mode);

struct FragmentForms {
  BraidWord prefix_form;   // u1 · σ1⁻¹…σ_{n-1}⁻¹ · u2
  BraidWord suffix_form;   // u3 · σ_{n-1}⁻¹…σ1⁻¹ · u4
  std::size_t visited = 0;
};

FragmentForms fragment_witness(const BraidWord& u, std::size_t cap = 1000000);

BraidWord random_locally_twisted_word(const SignPattern& r, int budget, std::uint64_t seed);

BraidWord mirror(const BraidWord& w);
BraidWord reversed(const BraidWord& w);
// σ_i -> σ_{n-i}
BraidWord flipped(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
// far-commutation representative: stable bubble of commuting neighbours by index
BraidWord far_commutation_normal(const BraidWord& w);

}  // namespace kc
