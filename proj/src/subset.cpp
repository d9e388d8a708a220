#include "rq/subset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace rq {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("subset literal: bad integer for " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_int(token, what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CayleySubset::CayleySubset(OrderParam m)
    : m_(m),
      pairs_(static_cast<std::size_t>(m.value()), false),
      ypairs_(static_cast<std::size_t>(m.value()), false) {}

CayleySubset CayleySubset::from_masks(OrderParam m, std::uint64_t pair_mask, int delta,
                                      std::uint64_t ypair_mask) {
  if (m.value() > 64) throw std::invalid_argument("from_masks requires m <= 64");
  if ((pair_mask & ~low_bits(m.value() - 1)) != 0 || (ypair_mask & ~low_bits(m.value())) != 0) {
    throw std::invalid_argument("subset mask has bits beyond m");
  }
  CayleySubset s(m);
  for (int k1 = 1; k1 < m.value(); ++k1) s.pairs_[k1] = ((pair_mask >> (k1 - 1)) & 1) != 0;
  for (int k2 = 0; k2 < m.value(); ++k2) s.ypairs_[k2] = ((ypair_mask >> k2) & 1) != 0;
  s.set_delta(delta);
  return s;
}

CayleySubset CayleySubset::complete(OrderParam m) {
  CayleySubset s(m);
  for (int k1 = 1; k1 < m.value(); ++k1) s.pairs_[k1] = true;
  std::fill(s.ypairs_.begin(), s.ypairs_.end(), true);
  s.delta_ = 1;
  return s;
}

CayleySubset CayleySubset::parse(std::string_view literal) {
  std::optional<int> m_value, delta;
  std::optional<std::vector<int>> pairs, ypairs;
  std::size_t start = 0;
  while (start <= literal.size()) {
    auto semi = literal.find(';', start);
    auto field = literal.substr(start, semi == std::string_view::npos ? literal.npos : semi - start);
    auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("subset literal: field without '=': '" + std::string(field) + "'");
    }
    auto key = field.substr(0, eq);
    auto value = field.substr(eq + 1);
    auto once = [&](bool seen) {
      if (seen) throw std::invalid_argument("subset literal: duplicate field " + std::string(key));
    };
    if (key == "m") {
      once(m_value.has_value());
      m_value = parse_int(value, key);
    } else if (key == "pairs") {
      once(pairs.has_value());
      pairs = parse_list(value, key);
    } else if (key == "delta") {
      once(delta.has_value());
      delta = parse_int(value, key);
    } else if (key == "ypairs") {
      once(ypairs.has_value());
      ypairs = parse_list(value, key);
    } else {
      throw std::invalid_argument("subset literal: unknown field '" + std::string(key) + "'");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (!m_value || !pairs || !delta || !ypairs) {
    throw std::invalid_argument("subset literal needs m, pairs, delta and ypairs");
  }
  CayleySubset s{OrderParam(*m_value)};
  for (int k1 : *pairs) {
    if (k1 < 1 || k1 > s.m() - 1) {
      throw std::invalid_argument("subset literal: pair index " + std::to_string(k1) +
                                  " outside [1, m-1]");
    }
    if (s.pairs_[k1]) throw std::invalid_argument("subset literal: repeated pair index " + std::to_string(k1));
    s.pairs_[k1] = true;
  }
  for (int k2 : *ypairs) {
    if (k2 < 0 || k2 > s.m() - 1) {
      throw std::invalid_argument("subset literal: ypair index " + std::to_string(k2) +
                                  " outside [0, m-1]");
    }
    if (s.ypairs_[k2]) throw std::invalid_argument("subset literal: repeated ypair index " + std::to_string(k2));
    s.ypairs_[k2] = true;
  }
  s.set_delta(*delta);
  return s;
}

std::string CayleySubset::to_literal() const {
  std::string out = "m=" + std::to_string(m()) + ";pairs=";
  bool first = true;
  for (int k1 = 1; k1 < m(); ++k1) {
    if (!pairs_[k1]) continue;
    if (!first) out += ',';
    out += std::to_string(k1);
    first = false;
  }
  out += ";delta=" + std::to_string(delta_) + ";ypairs=";
  first = true;
  for (int k2 = 0; k2 < m(); ++k2) {
    if (!ypairs_[k2]) continue;
    if (!first) out += ',';
    out += std::to_string(k2);
    first = false;
  }
  return out;
}

bool CayleySubset::has_pair(int k1) const {
  return k1 >= 1 && k1 < m() && pairs_[k1];
}

bool CayleySubset::has_ypair(int k2) const {
  return k2 >= 0 && k2 < m() && ypairs_[k2];
}

void CayleySubset::set_pair(int k1, bool on) {
  if (k1 < 1 || k1 >= m()) throw std::out_of_range("pair index outside [1, m-1]");
  pairs_[k1] = on;
}

void CayleySubset::set_ypair(int k2, bool on) {
  if (k2 < 0 || k2 >= m()) throw std::out_of_range("ypair index outside [0, m-1]");
  ypairs_[k2] = on;
}

void CayleySubset::set_delta(int delta) {
  if (delta != 0 && delta != 1) throw std::invalid_argument("delta must be 0 or 1");
  delta_ = delta;
}

int CayleySubset::pair_count() const {
  return static_cast<int>(std::count(pairs_.begin(), pairs_.end(), true));
}

int CayleySubset::ypair_count() const {
  return static_cast<int>(std::count(ypairs_.begin(), ypairs_.end(), true));
}

std::vector<Element> CayleySubset::elements() const {
  const int mm = m();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int k1 = 1; k1 < mm; ++k1) {
    if (!pairs_[k1]) continue;
    out.push_back(Element{k1, 0});
    out.push_back(Element{2 * mm - k1, 0});
  }
  if (delta_ == 1) out.push_back(Element{mm, 0});
  for (int k2 = 0; k2 < mm; ++k2) {
    if (!ypairs_[k2]) continue;
    out.push_back(Element{k2, 1});
    out.push_back(Element{mm + k2, 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CovalencyProfile CayleySubset::profile() const {
  CovalencyProfile p;
  p.delta = delta_;
  p.l1 = 2 * m() - (2 * pair_count() + delta_);
  p.l2 = 2 * m() - 2 * ypair_count();
  p.l = p.l1 + p.l2;
  return p;
}

SigmaCounts CayleySubset::sigma_counts() const {
  SigmaCounts s;
  for (int k1 = 1; k1 < m(); ++k1) {
    if (!pairs_[k1]) continue;
    (k1 % 2 == 0 ? s.even1 : s.odd1) += 1;
  }
  for (int k2 = 0; k2 < m(); ++k2) {
    if (!ypairs_[k2]) continue;
    (k2 % 2 == 0 ? s.even2 : s.odd2) += 1;
  }
  return s;
}

bool CayleySubset::generates() const {
  auto els = elements();
  if (els.empty()) return m_.group_order() == 1;
  return rq::generates(els, m_);
}

bool CayleySubset::in_family(Family family) const {
  if (family == Family::kSPrime && profile().l2 == 0) return false;
  return generates();
}

bool admissible_split(OrderParam m, int l1, int l2, Family family) {
  const int n = m.cyclic_order();
  if (l1 <= 0 || l1 > n) return false;
  if (l2 < 0 || l2 >= n || l2 % 2 != 0) return false;
  if (family == Family::kSPrime && l2 == 0) return false;
  return true;
}

CayleySubset extremal_subset(OrderParam m, int l1, int l2) {
  if (!admissible_split(m, l1, l2, Family::kS)) {
    throw std::invalid_argument("extremal_subset: (" + std::to_string(l1) + ", " +
                                std::to_string(l2) + ") is not an admissible split");
  }
  const int delta = (l1 + l2) & 1;
  const int half_window = (l1 - 2 + delta) / 2;
  if (half_window > m.value() - 1 || l2 / 2 > m.value()) {
    throw std::invalid_argument("extremal_subset: removal windows do not fit in the group");
  }
  CayleySubset s = CayleySubset::complete(m);
  for (int k1 = 1; k1 <= half_window; ++k1) s.set_pair(k1, false);
  if (delta == 0) s.set_delta(0);
  for (int k2 = 0; k2 < l2 / 2; ++k2) s.set_ypair(k2, false);
  return s;
}

std::uint64_t next_same_popcount(std::uint64_t mask) {
  const std::uint64_t lowest = mask & (~mask + 1);
  const std::uint64_t ripple = mask + lowest;
  return ripple | (((ripple ^ mask) >> 2) / lowest);
}

FamilyStream::FamilyStream(OrderParam m, int l, Family family)
    : m_(m),
      l_(l),
      family_(family),
      pair_limit_(std::uint64_t{1} << (m.value() - 1)),
      ypair_limit_(std::uint64_t{1} << m.value()) {
  if (m.value() > 32) throw std::invalid_argument("family enumeration requires m <= 32");
  if (l < 1 || l >= m.group_order()) done_ = true;
}

bool FamilyStream::advance_outer() {
  const int mm = m_.value();
  while (true) {
    if (delta_ == 1) {
      delta_ = 0;
      ++pair_mask_;
    } else {
      ++delta_;
    }
    if (pair_mask_ >= pair_limit_) return false;
    const int pc = std::popcount(pair_mask_);
    const int l1 = 2 * mm - 2 * pc - delta_;
    const int l2 = l_ - l1;
    if (!admissible_split(m_, l1, l2, family_)) continue;
    const int ypc = (2 * mm - l2) / 2;
    ypair_mask_ = ypc == 0 ? 0 : (std::uint64_t{1} << ypc) - 1;
    return true;
  }
}

std::optional<CayleySubset> FamilyStream::next() {
  while (!done_) {
    if (!inner_active_) {
      if (!advance_outer()) {
        done_ = true;
        break;
      }
      inner_active_ = true;
    } else {
      if (ypair_mask_ == 0) {
        inner_active_ = false;
        continue;
      }
      ypair_mask_ = next_same_popcount(ypair_mask_);
      if (ypair_mask_ >= ypair_limit_) {
        inner_active_ = false;
        continue;
      }
    }
    auto s = CayleySubset::from_masks(m_, pair_mask_, delta_, ypair_mask_);
    if (s.generates()) return s;
  }
  return std::nullopt;
}

std::vector<CayleySubset> enumerate_family(OrderParam m, int l, Family family) {
  std::vector<CayleySubset> out;
  FamilyStream stream(m, l, family);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace rq
