#include "knotcert/braid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_set>

#include "knotcert/errors.hpp"

namespace kc {

BraidWord::BraidWord(std::vector<Letter> l, int n) : letters(std::move(l)), strands(n) {
  if (n < 1) throw InputError("braid word needs at least one strand");
  for (const auto& x : letters) {
    if (x.index < 1 || x.index > n - 1)
      throw InputError("letter index " + std::to_string(x.index) + " outside 1.." + std::to_string(n - 1));
    if (x.sign != 1 && x.sign != -1) throw InputError("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> out;
  std::string tok;
  int top = 0;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("not an integer: '" + tok + "'");
    if (v == 0) throw InputError("letter 0 is not a generator");
    if (v > 1000000 || v < -1000000) throw InputError("generator index too large");
    int k = static_cast<int>(v);
    out.push_back({std::abs(k), k > 0 ? 1 : -1});
    top = std::max(top, std::abs(k));
  }
  int n = strands.value_or(top + 1);
  if (n < top + 1) throw InputError("strand count " + std::to_string(n) + " too small for σ" + std::to_string(top));
  return BraidWord(std::move(out), n);
}

std::string BraidWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters[i].index * letters[i].sign);
  }
  return s;
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& x : letters) w += x.sign;
  return w;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i) + 1) return false;
  return true;
}

BraidWord half_twist_word(int i, int j, int sign, int strands) {
  if (i < 1 || i >= j) throw InputError("invalid interval [" + std::to_string(i) + "," + std::to_string(j) + "]");
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  std::vector<Letter> l;
  for (int top = j - 1; top >= i; --top)
    for (int k = i; k <= top; ++k) l.push_back({k, sign});
  return BraidWord(std::move(l), std::max(strands, j));
}

Permutation permutation_of(const BraidWord& w) {
  int n = w.strands;
  std::vector<int> at(n);  // at[pos] = strand
  for (int p = 0; p < n; ++p) at[p] = p;
  for (const auto& x : w.letters) std::swap(at[x.index - 1], at[x.index]);
  Permutation p;
  p.image.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) p.image[at[pos]] = pos + 1;
  return p;
}

namespace {

bool half_twist_unchecked(const std::vector<Letter>& l, std::size_t from, std::size_t to, int i, int j) {
  std::size_t need = static_cast<std::size_t>((j - i + 1) * (j - i) / 2);
  if (to - from != need) return false;
  std::vector<int> at(j - i + 1);
  for (int p = 0; p <= j - i; ++p) at[p] = p;
  for (std::size_t k = from; k < to; ++k) std::swap(at[l[k].index - i], at[l[k].index - i + 1]);
  for (int p = 0; p <= j - i; ++p)
    if (at[p] != j - i - p) return false;
  return true;
}

}  // namespace

bool represents_half_twist(const BraidWord& w, int i, int j, int sign) {
  if (i < 1 || i >= j) throw InputError("invalid interval");
  for (const auto& x : w.letters) {
    if (x.sign != sign) throw InputError("letter sign differs from the requested half twist sign");
    if (x.index < i || x.index > j - 1) throw InputError("letter outside the half twist interval");
  }
  return half_twist_unchecked(w.letters, 0, w.letters.size(), i, j);
}

bool is_r_homogeneous(const BraidWord& w, const SignPattern& r) {
  for (const auto& x : w.letters) {
    if (x.index - 1 >= static_cast<int>(r.size())) return false;
    if (r[x.index - 1] != x.sign) return false;
  }
  return true;
}

std::vector<int> layer_breakpoints(const SignPattern& r, int strands) {
  std::vector<int> b{1};
  for (int j = 2; j <= strands - 1; ++j)
    if (r[j - 2] != r[j - 1]) b.push_back(j);
  if (strands > 1) b.push_back(strands);
  return b;
}

LayerDecomposition uniform_layers(const BraidWord& w, const SignPattern& r) {
  if (static_cast<int>(r.size()) != std::max(w.strands - 1, 0))
    throw InputError("sign pattern length must be n-1");
  if (!is_r_homogeneous(w, r)) throw InputError("word is not r-homogeneous");
  LayerDecomposition d;
  d.breakpoints = layer_breakpoints(r, w.strands);
  int m = static_cast<int>(d.breakpoints.size()) - 1;
  std::vector<std::vector<Letter>> parts(std::max(m, 0));
  d.positions.assign(std::max(m, 0), {});
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    int idx = w.letters[p].index;
    int k = static_cast<int>(std::upper_bound(d.breakpoints.begin(), d.breakpoints.end(), idx) - d.breakpoints.begin()) - 1;
    parts[k].push_back(w.letters[p]);
    d.positions[k].push_back(static_cast<int>(p));
  }
  for (auto& p : parts) d.layers.emplace_back(std::move(p), w.strands);
  return d;
}

TwistVerdict locally_twisted_check(const BraidWord& w, TwistMode mode) {
  int n = w.strands;
  TwistVerdict out;
  if (n < 2) return out;
  std::vector<int> forced(n - 1, 0);
  for (const auto& x : w.letters) {
    int& f = forced[x.index - 1];
    if (f == 0) f = x.sign;
    else if (f != x.sign) return out;
  }
  std::vector<int> free_idx;
  for (int i = 0; i < n - 1; ++i)
    if (forced[i] == 0) free_idx.push_back(i);
  if (free_idx.size() > 24) throw ResourceError("too many free sign positions");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_idx.size()); ++mask) {
    SignPattern r = forced;
    for (std::size_t b = 0; b < free_idx.size(); ++b) r[free_idx[b]] = (mask >> b & 1) ? -1 : 1;
    auto dec = uniform_layers(w, r);
    std::vector<LayerSplit> splits;
    bool good = true;
    for (std::size_t k = 0; k + 1 < dec.breakpoints.size() && good; ++k) {
      LayerSplit s;
      s.lo = dec.breakpoints[k];
      s.hi = dec.breakpoints[k + 1];
      s.sign = r[s.lo - 1];
      s.checked = mode == TwistMode::both || (mode == TwistMode::plus && s.sign > 0) ||
                  (mode == TwistMode::minus && s.sign < 0);
      const auto& l = dec.layers[k].letters;
      std::size_t d = static_cast<std::size_t>((s.hi - s.lo + 1) * (s.hi - s.lo) / 2);
      s.prefix_end = static_cast<int>(std::min(d, l.size()));
      s.suffix_begin = static_cast<int>(l.size() >= d ? l.size() - d : 0);
      if (s.checked) {
        good = l.size() >= 2 * d && half_twist_unchecked(l, 0, d, s.lo, s.hi) &&
               half_twist_unchecked(l, l.size() - d, l.size(), s.lo, s.hi);
      }
      splits.push_back(s);
    }
    if (good) {
      out.ok = true;
      out.r = r;
      out.splits = std::move(splits);
      return out;
    }
  }
  return out;
}

namespace {

int find_run(const std::vector<int8_t>& u, int n, bool ascending) {
  int len = n - 1;
  for (int p = 0; p + len <= static_cast<int>(u.size()); ++p) {
    bool run = true;
    for (int k = 0; k < len && run; ++k) run = u[p + k] == (ascending ? k + 1 : n - 1 - k);
    if (!run) continue;
    // ascending: u1 in {2..n-1}, u2 in {1..n-2}; descending: u3 in {1..n-2}, u4 in {2..n-1}
    int lo_before = ascending ? 2 : 1, hi_before = ascending ? n - 1 : n - 2;
    int lo_after = ascending ? 1 : 2, hi_after = ascending ? n - 2 : n - 1;
    bool ok = true;
    for (int k = 0; k < p && ok; ++k) ok = u[k] >= lo_before && u[k] <= hi_before;
    for (int k = p + len; k < static_cast<int>(u.size()) && ok; ++k) ok = u[k] >= lo_after && u[k] <= hi_after;
    if (ok) return p;
  }
  return -1;
}

BraidWord negative_word(const std::vector<int8_t>& u, int n) {
  std::vector<Letter> l;
  for (auto i : u) l.push_back({i, -1});
  return BraidWord(std::move(l), n);
}

}  // namespace

FragmentForms fragment_witness(const BraidWord& u, std::size_t cap) {
  int n = u.strands;
  for (const auto& x : u.letters)
    if (x.sign != -1) throw InputError("fragment witness needs an all-negative word");
  if (n < 2 || !represents_half_twist(u, 1, n, -1)) throw InputError("word does not represent the inverse half twist");
  std::vector<int8_t> start;
  for (const auto& x : u.letters) start.push_back(static_cast<int8_t>(x.index));
  auto key = [](const std::vector<int8_t>& v) { return std::string(v.begin(), v.end()); };
  std::unordered_set<std::string> seen{key(start)};
  std::deque<std::vector<int8_t>> queue{start};
  FragmentForms out;
  bool have_pre = false, have_suf = false;
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    ++out.visited;
    if (!have_pre && find_run(cur, n, true) >= 0) {
      out.prefix_form = negative_word(cur, n);
      have_pre = true;
    }
    if (!have_suf && find_run(cur, n, false) >= 0) {
      out.suffix_form = negative_word(cur, n);
      have_suf = true;
    }
    if (have_pre && have_suf) return out;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (std::abs(cur[k] - cur[k + 1]) < 2) continue;
      auto nxt = cur;
      std::swap(nxt[k], nxt[k + 1]);
      if (seen.insert(key(nxt)).second) {
        if (seen.size() > cap) throw ResourceError("far-commutation search cap exceeded");
        queue.push_back(std::move(nxt));
      }
    }
  }
  throw InvariantError("no fragment form in the far-commutativity class");
}

BraidWord random_locally_twisted_word(const SignPattern& r, int budget, std::uint64_t seed) {
  int n = static_cast<int>(r.size()) + 1;
  auto bp = layer_breakpoints(r, n);
  int m = static_cast<int>(bp.size()) - 1;
  int need = 0;
  for (int k = 0; k < m; ++k) need += (bp[k + 1] - bp[k] + 1) * (bp[k + 1] - bp[k]);
  if (budget < need) throw InputError("budget " + std::to_string(budget) + " below the two half twists per layer (" + std::to_string(need) + ")");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Letter>> middle(m);
  for (int extra = budget - need; extra > 0; --extra) {
    int k = static_cast<int>(rng() % m);
    int span = bp[k + 1] - bp[k];
    int idx = bp[k] + static_cast<int>(rng() % span);
    middle[k].push_back({idx, r[bp[k] - 1]});
  }
  std::vector<std::deque<Letter>> queues(m);
  for (int k = 0; k < m; ++k) {
    int s = r[bp[k] - 1];
    auto d = half_twist_word(bp[k], bp[k + 1], s, n).letters;
    queues[k].insert(queues[k].end(), d.begin(), d.end());
    queues[k].insert(queues[k].end(), middle[k].begin(), middle[k].end());
    queues[k].insert(queues[k].end(), d.begin(), d.end());
  }
  std::vector<Letter> out;
  for (;;) {
    std::vector<int> live;
    for (int k = 0; k < m; ++k)
      if (!queues[k].empty()) live.push_back(k);
    if (live.empty()) break;
    int k = live[rng() % live.size()];
    out.push_back(queues[k].front());
    queues[k].pop_front();
  }
  return BraidWord(std::move(out), n);
}

BraidWord mirror(const BraidWord& w) {
  auto l = w.letters;
  for (auto& x : l) x.sign = -x.sign;
  return BraidWord(std::move(l), w.strands);
}

BraidWord reversed(const BraidWord& w) {
  auto l = w.letters;
  std::reverse(l.begin(), l.end());
  return BraidWord(std::move(l), w.strands);
}

BraidWord flipped(const BraidWord& w) {
  auto l = w.letters;
  for (auto& x : l) x.index = w.strands - x.index;
  return BraidWord(std::move(l), w.strands);
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  auto l = a.letters;
  l.insert(l.end(), b.letters.begin(), b.letters.end());
  return BraidWord(std::move(l), std::max(a.strands, b.strands));
}

BraidWord far_commutation_normal(const BraidWord& w) {
  auto l = w.letters;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k + 1 < l.size(); ++k) {
      if (std::abs(l[k].index - l[k + 1].index) >= 2 && l[k].index > l[k + 1].index) {
        std::swap(l[k], l[k + 1]);
        moved = true;
      }
    }
  }
  return BraidWord(std::move(l), w.strands);
}

}  // namespace kc
