#include <string>

#include "knotcert/errors.hpp"
#include "knotcert/skein.hpp"
#include "util.hpp"

namespace kc {

// Kauffman bracket state sum; A-smoothing joins slots (0,1) and (2,3)
Laurent1 jones_oracle(const Diagram& d, int cap) {
  const int X = d.num_crossings(), H = 2 * d.num_edges();
  if (X > cap) throw ResourceError("jones oracle: " + std::to_string(X) + " crossings exceed the cap");
  if (H == 0) return Laurent1::monomial(1, 0);
  // loop factor d = -A^2 - A^-2, exponents in A
  Laurent1 loop = Laurent1::monomial(-1, 2) + Laurent1::monomial(-1, -2);
  std::vector<Laurent1> loop_pow{Laurent1::monomial(1, 0)};
  for (int k = 1; k <= X + d.num_edges(); ++k) loop_pow.push_back(loop_pow.back() * loop);
  Laurent1 bracket;
  for (std::uint32_t mask = 0; mask < (1u << X); ++mask) {
    UnionFind uf(H);
    for (int e = 0; e < d.num_edges(); ++e) uf.unite(2 * e, 2 * e + 1);
    int a = 0;
    for (int c = 0; c < X; ++c) {
      const auto& s = d.crossings[c].slot;
      if (mask >> c & 1) {
        uf.unite(s[1], s[2]), uf.unite(s[3], s[0]);
      } else {
        uf.unite(s[0], s[1]), uf.unite(s[2], s[3]);
        ++a;
      }
    }
    int loops = 0;
    for (int h = 0; h < H; ++h) loops += uf.find(h) == h;
    bracket += Laurent1::monomial(1, a - (X - a)) * loop_pow[loops - 1];
  }
  // V = (-A^3)^{-w} <D>, then A = q^{-1/2}
  int w = d.writhe();
  Laurent1 norm = Laurent1::monomial((w & 1) ? -1 : 1, -3 * w);
  Laurent1 va = norm * bracket;
  Laurent1 out;
  for (auto [k, c] : va.terms()) {
    if (k & 1) throw InvariantError("jones oracle: odd power of A");
    out.add_term(c, -k / 2);
  }
  return out;
}

}  // namespace kc
