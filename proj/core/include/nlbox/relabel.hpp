#pragma once

#include <array>
#include <vector>

#include "nlbox/box.hpp"
#include "nlbox/strategy.hpp"

namespace nlbox {

/// Reversible local operation on a box. A party receiving input x feeds
/// x xor flip_x to the underlying box and outputs a xor a_offset[x]; Bob
/// does the same with flip_y and b_offset[y]. So
///   Q(a,b|x,y) = P(a xor a_offset[x], b xor b_offset[y] | x xor flip_x, y xor flip_y).
struct Relabelling {
  Bit flip_x = 0;
  Bit flip_y = 0;
  std::array<Bit, 2> a_offset{0, 0};
  std::array<Bit, 2> b_offset{0, 0};

  static Relabelling identity() { return {}; }

  /// Relabelling that maps the scope-(0,0,0) relation onto `scope`
  /// (a -> a xor mu1*x xor mu3, b -> b xor mu2*y).
  static Relabelling to_scope(PRScope scope);

  /// Equivalent to applying `first` and then `second`.
  static Relabelling compose(const Relabelling& first,
                             const Relabelling& second);

  Relabelling inverse() const;

  friend bool operator==(const Relabelling&, const Relabelling&) = default;
};

/// All 64 relabellings (2 input flips x 4 offset maps, per party).
std::vector<Relabelling> all_relabellings();

CorrelationBox apply_relabelling(const CorrelationBox& box,
                                 const Relabelling& r);
DeterministicStrategy apply_relabelling(const DeterministicStrategy& s,
                                        const Relabelling& r);

}  // namespace nlbox
