#pragma once

// Arithmetic in the generalized quaternion group
//
//   Q_4m = < x, y | x^2m = 1, x^m = y^2, y^-1 x y = x^-1 >
//
// Every element is stored in the canonical form x^k y^e with 0 <= k < 2m and
// e in {0, 1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rq {

inline constexpr std::int64_t kMaxOrderParam = std::int64_t{1} << 20;

// The parameter m of Q_4m (group order 4m).
class OrderParam {
 public:
  explicit OrderParam(std::int64_t m);

  int value() const { return m_; }
  int cyclic_order() const { return 2 * m_; }
  int group_order() const { return 4 * m_; }
  bool is_odd() const { return (m_ & 1) != 0; }

  friend bool operator==(OrderParam, OrderParam) = default;

 private:
  int m_;
};

struct Element {
  int k = 0;  // exponent of x, in [0, 2m)
  int e = 0;  // 0 for <x>, 1 for the coset <x>y

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kIdentity{0, 0};

Element make_element(std::int64_t k, int e, OrderParam m);
bool is_canonical(Element g, OrderParam m);

Element multiply(Element a, Element b, OrderParam m);
Element inverse(Element g, OrderParam m);

// Dense index in [0, 4m): e * 2m + k.
inline std::size_t index_of(Element g, OrderParam m) {
  return static_cast<std::size_t>(g.e) * static_cast<std::size_t>(m.cyclic_order()) +
         static_cast<std::size_t>(g.k);
}
Element element_at(std::size_t index, OrderParam m);

std::vector<Element> all_elements(OrderParam m);

// Classes in the order C(1), C(x^1) .. C(x^(m-1)), C(x^m), C(y), C(xy).
// For m = 1 the group is cyclic of order 4 and x = x^m.
std::vector<std::vector<Element>> conjugacy_classes(OrderParam m);

// True iff the subgroup generated by `subset` is the whole group.
bool generates(std::span<const Element> subset, OrderParam m);

std::string to_string(Element g);

}  // namespace rq
