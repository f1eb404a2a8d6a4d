#include "srcomb/index_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace srcomb {

std::string MonoidCheckResult::describe() const {
  switch (verdict) {
    case Verdict::yes:
      return "yes";
    case Verdict::yes_up_to_bound:
      return "yes up to bound " + std::to_string(bound);
    case Verdict::no:
      if (one_missing) return "no: 1 is not in S";
      if (witness)
        return "no: " + std::to_string(witness->first) + " + " +
               std::to_string(witness->second) + " - 1 is not in S";
      return "no";
  }
  return "no";
}

IndexSet IndexSet::up_to(long m) {
  if (m < 1) throw std::invalid_argument("IndexSet::up_to: m must be >= 1");
  return IndexSet(Family::up_to, m);
}

IndexSet IndexSet::at_least(long m) {
  if (m < 1) throw std::invalid_argument("IndexSet::at_least: m must be >= 1");
  return IndexSet(Family::at_least, m);
}

IndexSet IndexSet::congruence(long q) {
  if (q < 1) throw std::invalid_argument("IndexSet::congruence: q must be >= 1");
  return IndexSet(Family::congruence, q);
}

IndexSet IndexSet::explicit_set(std::vector<long> elements) {
  if (elements.empty()) throw std::invalid_argument("IndexSet: explicit set must be nonempty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.front() < 1)
    throw std::invalid_argument("IndexSet: explicit set elements must be >= 1");
  IndexSet s(Family::explicit_set, 0);
  s.elements_ = std::move(elements);
  return s;
}

bool IndexSet::base_contains(long s) const {
  switch (family_) {
    case Family::explicit_set:
      return std::binary_search(elements_.begin(), elements_.end(), s);
    case Family::up_to:
      return s >= 1 && s <= param_;
    case Family::at_least:
      return s >= param_;
    case Family::all:
      return s >= 1;
    case Family::congruence:
      return s >= 1 && (s - 1) % param_ == 0;
    case Family::odd:
      return s >= 1 && s % 2 == 1;
    case Family::even:
      return s >= 2 && s % 2 == 0;
  }
  return false;
}

bool IndexSet::contains(long s) const {
  if (s < 0) return false;
  if (std::binary_search(removed_.begin(), removed_.end(), s)) return false;
  if (family_ == Family::explicit_set)
    return std::binary_search(elements_.begin(), elements_.end(), s);
  return base_contains(s - offset_);
}

std::vector<long> IndexSet::elements_up_to(long n) const {
  std::vector<long> out;
  for (long s = 0; s <= n; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

bool IndexSet::is_finite() const {
  return family_ == Family::explicit_set || family_ == Family::up_to;
}

// Smallest member without the s >= 0 clamp of contains(); negative values
// can arise transiently inside shifted() before validation.
std::optional<long> IndexSet::try_min() const {
  if (family_ == Family::explicit_set) {
    if (elements_.empty()) return std::nullopt;
    return elements_.front();
  }
  long base_min = 1;
  long gap = 1;
  switch (family_) {
    case Family::at_least:
      base_min = param_;
      break;
    case Family::even:
      base_min = 2;
      gap = 2;
      break;
    case Family::odd:
      gap = 2;
      break;
    case Family::congruence:
      gap = param_;
      break;
    default:
      break;
  }
  const long start = base_min + offset_;
  const long limit = start + gap * static_cast<long>(removed_.size() + 1);
  for (long s = start; s <= limit; ++s) {
    if (std::binary_search(removed_.begin(), removed_.end(), s)) continue;
    if (base_contains(s - offset_)) return s;
  }
  return std::nullopt;  // only reachable for finite up_to sets emptied by removals
}

bool IndexSet::is_empty() const { return !try_min().has_value(); }

long IndexSet::min_element() const {
  const auto m = try_min();
  if (!m) throw std::domain_error("IndexSet::min_element: set is empty");
  return *m;
}

IndexSet IndexSet::remove(long u) const {
  if (!contains(u))
    throw std::invalid_argument("IndexSet::remove: " + std::to_string(u) + " is not a member");
  IndexSet s = *this;
  if (family_ == Family::explicit_set) {
    s.elements_.erase(std::find(s.elements_.begin(), s.elements_.end(), u));
  } else {
    s.removed_.insert(std::upper_bound(s.removed_.begin(), s.removed_.end(), u), u);
  }
  return s;
}

IndexSet IndexSet::shifted(long a, bool allow_zero) const {
  IndexSet s = *this;
  if (family_ == Family::explicit_set) {
    for (auto& e : s.elements_) e += a;
  } else {
    s.offset_ += a;
  }
  for (auto& e : s.removed_) e += a;
  const long floor = allow_zero ? 0 : 1;
  const auto min = s.try_min();
  if (min && *min < floor)
    throw std::invalid_argument("IndexSet::shifted: shift by " + std::to_string(a) +
                                " produces elements below " + std::to_string(floor));
  return s;
}

IndexSet IndexSet::without_zero() const {
  if (!contains(0)) return *this;
  return remove(0);
}

MonoidCheckResult IndexSet::plus_one_monoid_check(long bound) const {
  if (bound < 2) throw std::invalid_argument("plus_one_monoid_check: bound must be >= 2");
  MonoidCheckResult res;
  if (!contains(1)) {
    res.verdict = MonoidCheckResult::Verdict::no;
    res.one_missing = true;
    return res;
  }
  if (is_plain_family()) {
    switch (family_) {
      case Family::all:
      case Family::odd:
      case Family::congruence:
        // closed under s1 + s2 - 1 for every pair
        res.verdict = MonoidCheckResult::Verdict::yes;
        return res;
      case Family::at_least:
        if (param_ == 1) {  // same set as `all`
          res.verdict = MonoidCheckResult::Verdict::yes;
          return res;
        }
        break;
      default:
        break;
    }
  }
  const auto elems = elements_up_to(bound);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      const long sum = elems[i] + elems[j] - 1;
      if (sum > bound) break;
      if (!contains(sum)) {
        res.verdict = MonoidCheckResult::Verdict::no;
        res.witness = std::make_pair(elems[i], elems[j]);
        return res;
      }
    }
  }
  res.verdict = MonoidCheckResult::Verdict::yes_up_to_bound;
  res.bound = bound;
  return res;
}

EgfSeries IndexSet::block_egf(std::size_t order) const {
  EgfSeries s(order);
  std::vector<Rational> t(order + 1);
  for (long e : elements_up_to(static_cast<long>(order)))
    t[static_cast<std::size_t>(e)] = inverse_factorial(static_cast<unsigned long>(e));
  return EgfSeries::from_taylor(std::move(t));
}

EgfSeries IndexSet::component_egf(std::size_t order) const {
  std::vector<Rational> t(order + 1);
  for (long e : elements_up_to(static_cast<long>(order) + 1)) {
    if (e < 1)
      throw std::invalid_argument("IndexSet::component_egf: set contains " + std::to_string(e));
    t[static_cast<std::size_t>(e - 1)] = inverse_factorial(static_cast<unsigned long>(e - 1));
  }
  return EgfSeries::from_taylor(std::move(t));
}

EgfSeries IndexSet::cycle_gf(std::size_t order) const {
  std::vector<Rational> t(order + 1);
  for (long e : elements_up_to(static_cast<long>(order))) {
    if (e < 1)
      throw std::invalid_argument("IndexSet::cycle_gf: set contains " + std::to_string(e));
    t[static_cast<std::size_t>(e)] = Rational(1, e);
  }
  return EgfSeries::from_taylor(std::move(t));
}

EgfSeries IndexSet::alternating_cycle_gf(std::size_t order) const {
  std::vector<Rational> t(order + 1);
  for (long e : elements_up_to(static_cast<long>(order))) {
    if (e < 1)
      throw std::invalid_argument("IndexSet::alternating_cycle_gf: set contains " +
                                  std::to_string(e));
    t[static_cast<std::size_t>(e)] = (e % 2 == 1) ? Rational(1, e) : Rational(-1, e);
  }
  return EgfSeries::from_taylor(std::move(t));
}

EgfSeries IndexSet::shifted_power_sum(std::size_t order) const {
  std::vector<Rational> t(order + 1);
  for (long e : elements_up_to(static_cast<long>(order) + 1)) {
    if (e < 1)
      throw std::invalid_argument("IndexSet::shifted_power_sum: set contains " +
                                  std::to_string(e));
    t[static_cast<std::size_t>(e - 1)] = Rational(1);
  }
  return EgfSeries::from_taylor(std::move(t));
}

namespace {

std::string strip_ws(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

long parse_positive(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string("IndexSet::parse: bad ") + what + " '" + s + "'");
  long v = std::stol(s);
  if (v < 1) throw std::invalid_argument(std::string("IndexSet::parse: ") + what + " must be >= 1");
  return v;
}

}  // namespace

IndexSet IndexSet::parse(std::string_view text) {
  const std::string s = strip_ws(text);
  if (s == "all") return all();
  if (s == "odd") return odd();
  if (s == "even") return even();
  if (s.rfind("mod", 0) == 0) return congruence(parse_positive(s.substr(3), "modulus"));
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw std::invalid_argument("IndexSet::parse: unterminated '{'");
    std::vector<long> elems;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
      elems.push_back(parse_positive(item, "element"));
    return explicit_set(std::move(elems));
  }
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const std::string lo = s.substr(0, dots);
    const std::string hi = s.substr(dots + 2);
    if (hi.empty()) return at_least(parse_positive(lo, "lower bound"));
    if (lo != "1")
      throw std::invalid_argument("IndexSet::parse: ranges must start at 1 (got '" + lo + "')");
    return up_to(parse_positive(hi, "upper bound"));
  }
  throw std::invalid_argument("IndexSet::parse: unrecognized set '" + std::string(text) + "'");
}

std::string IndexSet::to_string() const {
  if (is_plain_family()) {
    switch (family_) {
      case Family::all:
        return "all";
      case Family::odd:
        return "odd";
      case Family::even:
        return "even";
      case Family::up_to:
        return "1.." + std::to_string(param_);
      case Family::at_least:
        return std::to_string(param_) + "..";
      case Family::congruence:
        return "mod " + std::to_string(param_);
      case Family::explicit_set:
        break;
    }
  }
  // Explicit sets, and modified sets (shifted or with removals) that have
  // no grammar form; the latter are rendered up to a display bound.
  std::string out = "{";
  bool first = true;
  const auto elems =
      family_ == Family::explicit_set ? elements_ : elements_up_to(48);
  for (long e : elems) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  if (!is_finite()) out += ",...";
  out += "}";
  return out;
}

}  // namespace srcomb
