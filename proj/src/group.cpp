#include "rq/group.hpp"

#include <stdexcept>

namespace rq {

namespace {

int reduce(std::int64_t k, int modulus) {
  std::int64_t r = k % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

}  // namespace

OrderParam::OrderParam(std::int64_t m) {
  if (m < 1 || m > kMaxOrderParam) {
    throw std::invalid_argument("order parameter m must lie in [1, 2^20], got " +
                                std::to_string(m));
  }
  m_ = static_cast<int>(m);
}

Element make_element(std::int64_t k, int e, OrderParam m) {
  if (e != 0 && e != 1) throw std::invalid_argument("coset flag must be 0 or 1");
  return Element{reduce(k, m.cyclic_order()), e};
}

bool is_canonical(Element g, OrderParam m) {
  return g.k >= 0 && g.k < m.cyclic_order() && (g.e == 0 || g.e == 1);
}

Element multiply(Element a, Element b, OrderParam m) {
  const int n = m.cyclic_order();
  if (a.e == 0) return Element{reduce(std::int64_t{a.k} + b.k, n), b.e};
  // y x^b = x^-b y, and y^2 = x^m.
  if (b.e == 0) return Element{reduce(std::int64_t{a.k} - b.k, n), 1};
  return Element{reduce(std::int64_t{a.k} - b.k + m.value(), n), 0};
}

Element inverse(Element g, OrderParam m) {
  const int n = m.cyclic_order();
  if (g.e == 0) return Element{reduce(-std::int64_t{g.k}, n), 0};
  return Element{reduce(std::int64_t{g.k} + m.value(), n), 1};
}

Element element_at(std::size_t index, OrderParam m) {
  const auto n = static_cast<std::size_t>(m.cyclic_order());
  if (index >= 2 * n) throw std::out_of_range("element index out of range");
  return Element{static_cast<int>(index % n), static_cast<int>(index / n)};
}

std::vector<Element> all_elements(OrderParam m) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(m.group_order()));
  for (int e = 0; e < 2; ++e)
    for (int k = 0; k < m.cyclic_order(); ++k) out.push_back(Element{k, e});
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(OrderParam m) {
  const int mm = m.value();
  std::vector<std::vector<Element>> classes;
  classes.push_back({kIdentity});
  for (int k = 1; k <= mm - 1; ++k) classes.push_back({Element{k, 0}, Element{2 * mm - k, 0}});
  classes.push_back({Element{mm, 0}});
  std::vector<Element> even, odd;
  for (int k = 0; k < mm; ++k) {
    even.push_back(Element{2 * k, 1});
    odd.push_back(Element{2 * k + 1, 1});
  }
  classes.push_back(std::move(even));
  classes.push_back(std::move(odd));
  return classes;
}

bool generates(std::span<const Element> subset, OrderParam m) {
  const auto order = static_cast<std::size_t>(m.group_order());
  std::vector<bool> seen(order, false);
  std::vector<Element> frontier{kIdentity};
  seen[index_of(kIdentity, m)] = true;
  std::size_t reached = 1;
  while (!frontier.empty() && reached < order) {
    Element g = frontier.back();
    frontier.pop_back();
    for (Element s : subset) {
      Element h = multiply(g, s, m);
      auto idx = index_of(h, m);
      if (!seen[idx]) {
        seen[idx] = true;
        ++reached;
        frontier.push_back(h);
      }
    }
  }
  return reached == order;
}

std::string to_string(Element g) {
  std::string s;
  if (g.k == 0 && g.e == 0) return "1";
  if (g.k == 1) s = "x";
  else if (g.k > 1) s = "x^" + std::to_string(g.k);
  if (g.e == 1) s += "y";
  return s;
}

}  // namespace rq
