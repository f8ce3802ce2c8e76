#include "nlbox/relabel.hpp"

namespace nlbox {

Relabelling Relabelling::to_scope(PRScope scope) {
  Relabelling r;
  r.a_offset = {scope.mu3, static_cast<Bit>(scope.mu1 ^ scope.mu3)};
  r.b_offset = {0, scope.mu2};
  return r;
}

Relabelling Relabelling::compose(const Relabelling& first,
                                 const Relabelling& second) {
  // second(first(P))(a,b|x,y)
  //   = P(a ^ o2[x] ^ o1[x ^ f2], ... | x ^ f2 ^ f1, ...)
  Relabelling r;
  r.flip_x = first.flip_x ^ second.flip_x;
  r.flip_y = first.flip_y ^ second.flip_y;
  for (int v = 0; v < 2; ++v) {
    r.a_offset[v] = second.a_offset[v] ^ first.a_offset[v ^ second.flip_x];
    r.b_offset[v] = second.b_offset[v] ^ first.b_offset[v ^ second.flip_y];
  }
  return r;
}

Relabelling Relabelling::inverse() const {
  Relabelling r;
  r.flip_x = flip_x;
  r.flip_y = flip_y;
  for (int v = 0; v < 2; ++v) {
    r.a_offset[v] = a_offset[v ^ flip_x];
    r.b_offset[v] = b_offset[v ^ flip_y];
  }
  return r;
}

std::vector<Relabelling> all_relabellings() {
  std::vector<Relabelling> out;
  out.reserve(64);
  for (int code = 0; code < 64; ++code) {
    Relabelling r;
    r.flip_x = code & 1;
    r.flip_y = (code >> 1) & 1;
    r.a_offset = {static_cast<Bit>((code >> 2) & 1), static_cast<Bit>((code >> 3) & 1)};
    r.b_offset = {static_cast<Bit>((code >> 4) & 1), static_cast<Bit>((code >> 5) & 1)};
    out.push_back(r);
  }
  return out;
}

CorrelationBox apply_relabelling(const CorrelationBox& box,
                                 const Relabelling& r) {
  CorrelationBox::Table t{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          t[box_index(x, y, a, b)] =
              box.p(x ^ r.flip_x, y ^ r.flip_y, a ^ r.a_offset[x], b ^ r.b_offset[y]);
  return CorrelationBox::from_table(t);
}

DeterministicStrategy apply_relabelling(const DeterministicStrategy& s,
                                        const Relabelling& r) {
  DeterministicStrategy::Outputs a{}, b{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto i = static_cast<std::size_t>(2 * x + y);
      a[i] = s.a(x ^ r.flip_x, y ^ r.flip_y) ^ r.a_offset[x];
      b[i] = s.b(x ^ r.flip_x, y ^ r.flip_y) ^ r.b_offset[y];
    }
  }
  return DeterministicStrategy::from_outputs(a, b);
}

}  // namespace nlbox
